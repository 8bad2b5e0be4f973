#pragma once

/** @file
 *  The projection Newton iteration for under-determined systems. Each step
 *  projects onto the affine set {y : G(x) + H(x)(y - x) = 0}, either from
 *  the current iterate or from the origin. Runs never throw out of the
 *  iteration; every failure mode is a status.
 */

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "undet/model.hpp"

namespace undet {

enum class StepRule {
  ProjectCurrent,  // x+ = x - pinv(H) G(x)
  PolyakTremba,    // x+ = -pinv(H) (G(x) - H x)
};

struct SolveConfig {
  double residual_tol = 1e-12;
  double step_tol = 1e-14;
  std::size_t max_iter = 50;
  double pivot_tol = 1e-12;
};

enum class SolveStatus {
  ResidualConverged,
  StepConverged,
  MaxIterations,
  RankDeficientAbort,
};

// Full iteration history. residual_norms has one entry per iterate;
// step_norms has one fewer. dist_to_known_zero is present exactly when the
// problem carries a known zero.
struct SolveTrace {
  std::vector<Vector> iterates;
  std::vector<double> residual_norms;
  std::vector<double> step_norms;
  SolveStatus status = SolveStatus::MaxIterations;
  std::optional<std::vector<double>> dist_to_known_zero;
};

// One projection step at x under the chosen rule.
Vector newton_step(const Problem& problem, const Vector& x, StepRule rule,
                   double pivot_tol = kDefaultPivotTol);

// Iterates until the residual or step tolerance is met, the iteration budget
// runs out, or the differential loses row rank. A non-finite residual or
// step ends the run with MaxIterations.
SolveTrace solve(const Problem& problem, const Vector& x0, StepRule rule,
                 const SolveConfig& config = {});

// Distances of each iterate under a caller-supplied distance functional.
std::vector<double> distance_series(
    const SolveTrace& trace,
    const std::function<double(const Vector&)>& distance);

std::string_view to_string(SolveStatus status);

}  // namespace undet
