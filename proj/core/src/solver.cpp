#include "undet/solver.hpp"

#include <cmath>

namespace undet {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

Vector step_from(const Matrix& h, const Vector& g, const Vector& x,
                 StepRule rule, double pivot_tol) {
  const GramFactor factor = gram_factorization(h, pivot_tol);
  if (rule == StepRule::ProjectCurrent) {
    return x - apply_pinv(h, factor, g);
  }
  return apply_pinv(h, factor, h * x - g);
}

void check_shapes(const Problem& problem, const Vector& x) {
  require(problem.unknowns >= problem.equations && problem.equations >= 1,
          "solver: need 1 <= equations <= unknowns");
  require(x.dim() == problem.unknowns, "solver: point dimension mismatch");
  require(static_cast<bool>(problem.residual) &&
              static_cast<bool>(problem.differential),
          "solver: residual and differential must be callable");
}

}  // namespace

Vector newton_step(const Problem& problem, const Vector& x, StepRule rule,
                   double pivot_tol) {
  check_shapes(problem, x);
  return step_from(problem.differential(x), problem.residual(x), x, rule,
                   pivot_tol);
}

SolveTrace solve(const Problem& problem, const Vector& x0, StepRule rule,
                 const SolveConfig& config) {
  check_shapes(problem, x0);
  require(config.residual_tol > 0.0 && config.step_tol > 0.0 &&
              config.pivot_tol > 0.0 && config.max_iter >= 1,
          "solver: config values must be positive");

  SolveTrace trace;
  const bool track = problem.known_zero.has_value();
  if (track) trace.dist_to_known_zero.emplace();
  auto record = [&](const Vector& x, double residual) {
    trace.iterates.push_back(x);
    trace.residual_norms.push_back(residual);
    if (track) {
      trace.dist_to_known_zero->push_back(norm(x - *problem.known_zero));
    }
  };

  Vector x = x0;
  Vector g = problem.residual(x);
  double residual = norm(g);
  record(x, residual);
  if (!std::isfinite(residual)) {
    trace.status = SolveStatus::MaxIterations;
    return trace;
  }
  if (residual <= config.residual_tol) {
    trace.status = SolveStatus::ResidualConverged;
    return trace;
  }

  while (trace.step_norms.size() < config.max_iter) {
    Vector next;
    try {
      next = step_from(problem.differential(x), g, x, rule, config.pivot_tol);
    } catch (const RankDeficientError&) {
      trace.status = SolveStatus::RankDeficientAbort;
      return trace;
    }
    const double step = norm(next - x);
    x = next;
    g = problem.residual(x);
    residual = norm(g);
    trace.step_norms.push_back(step);
    record(x, residual);

    if (!std::isfinite(residual) || !std::isfinite(step)) {
      trace.status = SolveStatus::MaxIterations;
      return trace;
    }
    if (residual <= config.residual_tol) {
      trace.status = SolveStatus::ResidualConverged;
      return trace;
    }
    if (step <= config.step_tol) {
      trace.status = SolveStatus::StepConverged;
      return trace;
    }
  }
  trace.status = SolveStatus::MaxIterations;
  return trace;
}

std::vector<double> distance_series(
    const SolveTrace& trace,
    const std::function<double(const Vector&)>& distance) {
  require(static_cast<bool>(distance), "distance_series: callable required");
  std::vector<double> out;
  out.reserve(trace.iterates.size());
  for (const Vector& x : trace.iterates) out.push_back(distance(x));
  return out;
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::ResidualConverged: return "ResidualConverged";
    case SolveStatus::StepConverged: return "StepConverged";
    case SolveStatus::MaxIterations: return "MaxIterations";
    case SolveStatus::RankDeficientAbort: return "RankDeficientAbort";
  }
  return "Unknown";
}

}  // namespace undet
