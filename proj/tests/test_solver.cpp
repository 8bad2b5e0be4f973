#include <cmath>
#include <limits>

#include <doctest.h>

#include "undet/problems.hpp"
#include "undet/solver.hpp"

using namespace undet;

namespace {

double circle_distance(const Vector& x) {
  const double r = norm(x);
  return std::min(std::abs(r - 1.0), std::abs(r - 2.0));
}

Problem single_circle() {
  auto residual = [](const Vector& x) {
    return Vector{x[0] * x[0] + x[1] * x[1] - 1.0};
  };
  auto jacobian = [](const Vector& x) {
    Matrix j(1, 2);
    j(0, 0) = 2.0 * x[0];
    j(0, 1) = 2.0 * x[1];
    return j;
  };
  return smooth_problem(residual, jacobian, 2, 1, "circle");
}

}  // namespace

TEST_CASE("forced first steps") {
  SUBCASE("single circle from (2, 0)") {
    const Vector next =
        newton_step(single_circle(), Vector{2.0, 0.0}, StepRule::ProjectCurrent);
    CHECK(next[0] == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(next[1] == 0.0);
  }
  SUBCASE("circle product from (3, 4)") {
    const Vector next =
        newton_step(p1(), Vector{3.0, 4.0}, StepRule::ProjectCurrent);
    CHECK(next[0] == doctest::Approx(2.328).epsilon(1e-13));
    CHECK(next[1] == doctest::Approx(3.104).epsilon(1e-13));
    // (3, 4) lies in the row space of the differential there, so the
    // minimum-norm rule lands on the same point.
    const Vector polyak =
        newton_step(p1(), Vector{3.0, 4.0}, StepRule::PolyakTremba);
    CHECK(norm(next - polyak) <= 1e-12);
  }
  SUBCASE("paraboloid pair from (1, 1, 1)") {
    const Vector next =
        newton_step(p2(), Vector{1.0, 1.0, 1.0}, StepRule::ProjectCurrent);
    CHECK(next[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(next[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(next[2]) <= 1e-12);
  }
}

TEST_CASE("both rules are fixed at a zero") {
  const Problem problem = p1();
  const Vector zero{2.0, 0.0};
  const Vector projected = newton_step(problem, zero, StepRule::ProjectCurrent);
  CHECK(projected == zero);

  // The minimum-norm point of the affine set through a zero keeps the
  // linearization at zero.
  const Vector min_norm = newton_step(problem, zero, StepRule::PolyakTremba);
  const Matrix h = problem.differential(zero);
  CHECK(norm(h * (min_norm - zero)) <= 1e-12);
}

TEST_CASE("step rules differ but share the affine set") {
  const auto [problem, start] = sigmoid_problem(12, 5, 3);
  const Vector project = newton_step(problem, start, StepRule::ProjectCurrent);
  const Vector polyak = newton_step(problem, start, StepRule::PolyakTremba);
  CHECK(norm(project - polyak) > 1e-8);

  const Vector g = problem.residual(start);
  const Matrix h = problem.differential(start);
  const double scale = 1e-9 * (1.0 + norm(g));
  CHECK(norm(g + h * (project - start)) <= scale);
  CHECK(norm(g + h * (polyak - start)) <= scale);

  // Projection minimizes the step; the alternate rule minimizes the norm of
  // the new iterate.
  CHECK(norm(project - start) <= norm(polyak - start) + 1e-12);
  CHECK(norm(polyak) <= norm(project) + 1e-12);

  // Step-size identity for the projection rule.
  const Vector pinv_g = apply_pinv(h, g);
  CHECK(std::abs(norm(project - start) - norm(pinv_g)) <= 1e-12);
}

TEST_CASE("solve stops immediately on a converged start") {
  const Problem problem = p1();
  const SolveTrace trace =
      solve(problem, Vector{2.0, 0.0}, StepRule::ProjectCurrent);
  CHECK(trace.status == SolveStatus::ResidualConverged);
  CHECK(trace.iterates.size() == 1);
  CHECK(trace.residual_norms.size() == 1);
  CHECK(trace.step_norms.empty());
  CHECK(trace.residual_norms[0] == 0.0);
  REQUIRE(trace.dist_to_known_zero.has_value());
  CHECK(trace.dist_to_known_zero->size() == 1);
  CHECK((*trace.dist_to_known_zero)[0] == 0.0);
}

TEST_CASE("circle product run from (3, 4)") {
  const Problem problem = p1();
  const Vector x0{3.0, 4.0};
  const SolveTrace trace = solve(problem, x0, StepRule::ProjectCurrent);

  CHECK(trace.status == SolveStatus::ResidualConverged);
  CHECK(trace.iterates.size() <= 25);
  CHECK(trace.residual_norms.back() <= 1e-12);
  CHECK(circle_distance(trace.iterates.back()) <= 1e-6);

  // Trace bookkeeping: recorded norms match recomputation, steps match the
  // iterate differences, and every step stays on its affine set.
  for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
    CHECK(trace.residual_norms[k] ==
          norm(problem.residual(trace.iterates[k])));
  }
  for (std::size_t k = 0; k + 1 < trace.iterates.size(); ++k) {
    const Vector& x = trace.iterates[k];
    const Vector& next = trace.iterates[k + 1];
    CHECK(norm(next - x) == trace.step_norms[k]);
    const Vector g = problem.residual(x);
    const Matrix h = problem.differential(x);
    CHECK(norm(g + h * (next - x)) <= 1e-9 * (1.0 + norm(g)));
  }

  REQUIRE(trace.dist_to_known_zero.has_value());
  CHECK(trace.dist_to_known_zero->size() == trace.iterates.size());

  const SolveTrace again = solve(problem, x0, StepRule::ProjectCurrent);
  CHECK(again.iterates.size() == trace.iterates.size());
  for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
    CHECK(again.iterates[k] == trace.iterates[k]);
  }
}

TEST_CASE("paraboloid pair stalls instead of converging") {
  const SolveTrace trace =
      solve(p2(), Vector{1.0, 1.0, 1.0}, StepRule::ProjectCurrent);

  REQUIRE(trace.iterates.size() >= 2);
  const Vector& first = trace.iterates[1];
  CHECK(first[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(first[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(first[2]) <= 1e-12);

  const bool stalled = trace.status == SolveStatus::MaxIterations ||
                       trace.status == SolveStatus::RankDeficientAbort;
  CHECK(stalled);
  CHECK(trace.residual_norms.back() > 1e-12);
  for (std::size_t k = 0; k + 1 < std::min<std::size_t>(trace.residual_norms.size(), 10);
       ++k) {
    CHECK(trace.residual_norms[k + 1] <= trace.residual_norms[k]);
  }
}

TEST_CASE("rank deficiency at the start aborts with a one-point trace") {
  auto residual = [](const Vector& x) {
    const double s = x[0] + x[1] + x[2];
    return Vector{s, s};
  };
  auto jacobian = [](const Vector&) {
    return Matrix{{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}};
  };
  const Problem degenerate = smooth_problem(residual, jacobian, 3, 2, "flat");
  const SolveTrace trace =
      solve(degenerate, Vector{1.0, 2.0, 3.0}, StepRule::ProjectCurrent);
  CHECK(trace.status == SolveStatus::RankDeficientAbort);
  CHECK(trace.iterates.size() == 1);
  CHECK(trace.step_norms.empty());
}

TEST_CASE("non-finite residual ends the run as a budget failure") {
  auto residual = [](const Vector&) {
    return Vector{std::numeric_limits<double>::quiet_NaN()};
  };
  auto jacobian = [](const Vector&) { return Matrix{{1.0, 0.0}}; };
  Problem bad;
  bad.unknowns = 2;
  bad.equations = 1;
  bad.residual = residual;
  bad.differential = jacobian;
  bad.name = "nan";
  const SolveTrace trace = solve(bad, Vector{0.0, 0.0}, StepRule::ProjectCurrent);
  CHECK(trace.status == SolveStatus::MaxIterations);
  CHECK(trace.iterates.size() == 1);
}

TEST_CASE("distance series under the analytic circle oracle") {
  CHECK(circle_distance(Vector{3.0, 0.0}) == doctest::Approx(1.0));
  CHECK(circle_distance(Vector{2.0, 0.0}) == 0.0);

  const SolveTrace trace =
      solve(p1(), Vector{3.0, 4.0}, StepRule::ProjectCurrent);
  const auto distances = distance_series(trace, circle_distance);
  REQUIRE(distances.size() == trace.iterates.size());
  for (std::size_t k = 0; k + 1 < distances.size(); ++k) {
    CHECK(distances[k + 1] <= distances[k]);
  }
  CHECK(distances.back() <= 1e-8);
}

TEST_CASE("status names") {
  CHECK(to_string(SolveStatus::ResidualConverged) == "ResidualConverged");
  CHECK(to_string(SolveStatus::StepConverged) == "StepConverged");
  CHECK(to_string(SolveStatus::MaxIterations) == "MaxIterations");
  CHECK(to_string(SolveStatus::RankDeficientAbort) == "RankDeficientAbort");
}
