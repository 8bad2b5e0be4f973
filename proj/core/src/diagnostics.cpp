#include "undet/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "undet/rng.hpp"

namespace undet {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

double nd_residual(const Problem& problem, const Vector& x,
                   const Vector& xbar) {
  require(x.dim() == problem.unknowns && xbar.dim() == problem.unknowns,
          "nd_residual: point dimension mismatch");
  const Vector offset = x - xbar;
  const double separation = norm(offset);
  if (separation < 1e-15) {
    throw ZeroSeparationError("nd_residual: points coincide");
  }
  const Vector diff =
      problem.residual(x) - problem.residual(xbar) -
      problem.differential(x) * offset;
  return norm(diff) / separation;
}

NdScan nd_scan(const Problem& problem, const Vector& xbar,
               std::size_t directions, const std::vector<double>& radii,
               std::uint64_t seed) {
  require(directions >= 1, "nd_scan: need at least one direction");
  require(!radii.empty(), "nd_scan: need at least one radius");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    require(radii[i] > 0.0, "nd_scan: radii must be positive");
    if (i > 0) require(radii[i] < radii[i - 1], "nd_scan: radii must decrease");
  }
  require(norm(problem.residual(xbar)) <= 1e-10,
          "nd_scan: xbar is not a certified zero");

  Rng64 rng(seed);
  std::vector<Vector> unit_dirs;
  unit_dirs.reserve(directions);
  while (unit_dirs.size() < directions) {
    const Vector d = rng.normal_vector(problem.unknowns);
    const double length = norm(d);
    if (length > 1e-12) unit_dirs.push_back((1.0 / length) * d);
  }

  NdScan scan;
  scan.radii = radii;
  scan.worst_ratio.reserve(radii.size());
  for (const double radius : radii) {
    double worst = 0.0;
    for (const Vector& d : unit_dirs) {
      worst = std::max(worst, nd_residual(problem, xbar + radius * d, xbar));
    }
    scan.worst_ratio.push_back(worst);
  }
  return scan;
}

std::vector<double> default_scan_radii() {
  return {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
}

RateEstimate estimate_order(const std::vector<double>& series, double floor) {
  require(floor > 0.0, "estimate_order: floor must be positive");
  if (series.size() < 2) {
    throw InsufficientDataError("estimate_order: need at least two values");
  }
  for (const double s : series) {
    require(s > 0.0, "estimate_order: series values must be positive");
  }

  RateEstimate estimate;
  estimate.c_sequence.reserve(series.size() - 1);
  for (std::size_t k = 0; k + 1 < series.size(); ++k) {
    estimate.c_sequence.push_back(series[k + 1] / series[k]);
  }

  std::vector<double> u;
  std::vector<double> v;
  for (std::size_t k = 0; k + 1 < series.size(); ++k) {
    if (series[k] > floor && series[k + 1] > floor) {
      u.push_back(std::log(series[k]));
      v.push_back(std::log(series[k + 1]));
    }
  }
  if (u.size() < 2) {
    throw InsufficientDataError("estimate_order: fewer than two usable pairs");
  }

  double mean_u = 0.0;
  double mean_v = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    mean_u += u[k];
    mean_v += v[k];
  }
  mean_u /= static_cast<double>(u.size());
  mean_v /= static_cast<double>(u.size());

  double cov = 0.0;
  double var = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cov += (u[k] - mean_u) * (v[k] - mean_v);
    var += (u[k] - mean_u) * (u[k] - mean_u);
  }
  if (var < 1e-30) {
    throw InsufficientDataError("estimate_order: degenerate fit");
  }

  estimate.order = cov / var;
  estimate.points_used = u.size();
  return estimate;
}

RateEstimate tail_order(const std::vector<double>& series, double floor,
                        std::size_t max_points) {
  require(max_points >= 2, "tail_order: need at least two points");
  std::vector<double> usable;
  for (const double s : series) {
    if (s > floor) usable.push_back(s);
  }
  if (usable.size() > max_points) {
    usable.erase(usable.begin(),
                 usable.end() - static_cast<std::ptrdiff_t>(max_points));
  }
  if (usable.size() < 2) {
    throw InsufficientDataError("tail_order: fewer than two usable values");
  }
  return estimate_order(usable, floor);
}

}  // namespace undet
