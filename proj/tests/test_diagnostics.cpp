#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "undet/diagnostics.hpp"
#include "undet/problems.hpp"
#include "undet/rng.hpp"

using namespace undet;

namespace {

Problem affine_problem(std::uint64_t seed) {
  Rng64 rng(seed);
  const Matrix h = rng.normal_matrix(2, 4);
  const Vector b = rng.normal_vector(2);
  auto residual = [h, b](const Vector& x) { return h * x - b; };
  auto jacobian = [h](const Vector&) { return h; };
  return smooth_problem(residual, jacobian, 4, 2, "affine");
}

// Quadratic sequence s_{k+1} = s_k^2, stopped before underflow.
std::vector<double> quadratic_series(double s0) {
  std::vector<double> series;
  for (double s = s0; s > 1e-200; s *= s) series.push_back(s);
  return series;
}

}  // namespace

TEST_CASE("linearization gap vanishes for affine maps") {
  const Problem problem = affine_problem(0xAF);
  Rng64 rng(0xAF0);
  for (int k = 0; k < 10; ++k) {
    const Vector x = rng.normal_vector(4);
    const Vector y = rng.normal_vector(4);
    CHECK(nd_residual(problem, x, y) <= 1e-12);
  }
}

TEST_CASE("linearization gap scales with the curvature on the circle product") {
  const Problem problem = p1();
  const Vector zero{2.0, 0.0};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // Along d = (1,1)/sqrt(2) the local Hessian form gives a gap of about
  // 11 * delta near (2, 0).
  const double delta = 1e-3;
  const Vector x{zero[0] + delta * inv_sqrt2, zero[1] + delta * inv_sqrt2};
  CHECK(nd_residual(problem, x, zero) ==
        doctest::Approx(11.0 * delta).epsilon(0.02));

  double previous = 1e300;
  for (const double d : {1e-2, 1e-3, 1e-4}) {
    const Vector xd{zero[0] + d * inv_sqrt2, zero[1] + d * inv_sqrt2};
    const double ratio = nd_residual(problem, xd, zero);
    CHECK(ratio < previous);
    previous = ratio;
  }
}

TEST_CASE("coincident points are rejected") {
  const Problem problem = p1();
  const Vector zero{2.0, 0.0};
  CHECK_THROWS_AS(nd_residual(problem, zero, zero), ZeroSeparationError);
}

TEST_CASE("branch-stable segment of the complementarity toy is affine") {
  const auto [problem, start] = lcp_toy(6, 9);
  const Vector& zero = *problem.known_zero;
  Rng64 rng(0x5E6);
  Vector d = rng.normal_vector(zero.dim());
  d = (1.0 / norm(d)) * d;
  const Vector x = zero + 1e-2 * d;
  CHECK(nd_residual(problem, x, zero) <= 1e-10);
}

TEST_CASE("direction scans at certified zeros") {
  SUBCASE("circle product: ratios decay linearly with the radius") {
    const NdScan scan = nd_scan(p1(), Vector{2.0, 0.0}, 64,
                                default_scan_radii());
    REQUIRE(scan.radii.size() == 6);
    REQUIRE(scan.worst_ratio.size() == 6);
    CHECK(scan.radii.front() == 1e-1);
    CHECK(scan.radii.back() == 1e-6);
    CHECK(scan.worst_ratio.back() <= 1e-4);
    CHECK(scan.worst_ratio.back() <= scan.worst_ratio.front());
    const double decay = scan.worst_ratio.back() / scan.worst_ratio.front();
    CHECK(decay > 0.5e-5);
    CHECK(decay < 1.5e-5);
  }
  SUBCASE("paraboloid pair: quadratic map scans below 1e-5") {
    const NdScan scan = nd_scan(p2(), Vector{0.0, 0.0, 0.0}, 64,
                                default_scan_radii());
    CHECK(scan.worst_ratio.back() <= 1e-5);
    CHECK(scan.worst_ratio.back() <= scan.worst_ratio.front());
  }
  SUBCASE("scan is deterministic") {
    const NdScan a = nd_scan(p1(), Vector{2.0, 0.0}, 64, default_scan_radii());
    const NdScan b = nd_scan(p1(), Vector{2.0, 0.0}, 64, default_scan_radii());
    CHECK(a.worst_ratio == b.worst_ratio);
  }
}

TEST_CASE("scan preconditions") {
  CHECK_THROWS_AS(nd_scan(p1(), Vector{1.0, 1.0}, 8, default_scan_radii()),
                  std::invalid_argument);
  CHECK_THROWS_AS(nd_scan(p1(), Vector{2.0, 0.0}, 8, {1e-3, 1e-2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(nd_scan(p1(), Vector{2.0, 0.0}, 8, {1e-3, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(nd_scan(p1(), Vector{2.0, 0.0}, 0, default_scan_radii()),
                  std::invalid_argument);
}

TEST_CASE("order estimation on synthetic series") {
  SUBCASE("quadratic") {
    const auto series = quadratic_series(0.5);
    REQUIRE(series.size() >= 5);
    const RateEstimate rate = estimate_order(series, 1e-210);
    CHECK(std::abs(rate.order - 2.0) <= 1e-9);
    CHECK(rate.points_used == series.size() - 1);
    CHECK(rate.c_sequence.size() == series.size() - 1);
  }
  SUBCASE("superlinear with exponent 1.5") {
    std::vector<double> series;
    for (double s = 0.5; s > 1e-150; s = std::pow(s, 1.5)) series.push_back(s);
    const RateEstimate rate = estimate_order(series, 1e-160);
    CHECK(std::abs(rate.order - 1.5) <= 1e-6);
  }
  SUBCASE("linear with ratio one half") {
    std::vector<double> series;
    for (double s = 1.0; s > 1e-12; s *= 0.5) series.push_back(s);
    const RateEstimate rate = estimate_order(series, 1e-13);
    CHECK(std::abs(rate.order - 1.0) <= 1e-6);
    for (const double c : rate.c_sequence) {
      CHECK(c == doctest::Approx(0.5).epsilon(1e-12));
    }
  }
  SUBCASE("floor excludes roundoff-regime points") {
    std::vector<double> series = quadratic_series(0.5);
    series.push_back(1e-15);
    series.push_back(8e-16);  // fake roundoff plateau
    const RateEstimate rate = estimate_order(series, 1e-13);
    CHECK(std::abs(rate.order - 2.0) <= 0.05);
  }
}

TEST_CASE("order estimation failure modes") {
  CHECK_THROWS_AS(estimate_order({1.0, 0.5}, 1e-16), InsufficientDataError);
  CHECK_THROWS_AS(estimate_order({1e-20, 1e-21, 1e-22}, 1e-16),
                  InsufficientDataError);
  CHECK_THROWS_AS(estimate_order({0.5, 0.5, 0.5, 0.5}, 1e-16),
                  InsufficientDataError);
  CHECK_THROWS_AS(estimate_order({}, 1e-16), InsufficientDataError);
}

TEST_CASE("tail fit isolates the asymptotic regime") {
  // Slow head followed by an exactly quadratic tail.
  std::vector<double> series{0.9, 0.8, 0.7, 0.6};
  for (const double s : quadratic_series(0.5)) series.push_back(s);

  const RateEstimate tail = tail_order(series, 1e-210, 5);
  CHECK(std::abs(tail.order - 2.0) <= 1e-9);
  CHECK(tail.points_used == 4);

  // With ~150 decades of quadratic tail the head pairs carry no weight.
  const RateEstimate full = estimate_order(series, 1e-210);
  CHECK(std::abs(full.order - 2.0) <= 0.01);

  const RateEstimate shorter = tail_order(series, 1e-210, 3);
  CHECK(shorter.points_used == 2);

  // A short run is different: the approach phase drags a whole-series fit
  // well below the true rate, which only the last usable points exhibit.
  const std::vector<double> run{8.4, 0.8, 0.025, 3.4e-4, 9.2e-8, 8.6e-15};
  const RateEstimate whole = estimate_order(run, 1e-13);
  CHECK(whole.order < 1.8);
  const RateEstimate last3 = tail_order(run, 1e-13, 3);
  CHECK(last3.order >= 1.8);
  CHECK(last3.points_used == 2);
}
