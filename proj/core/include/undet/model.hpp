#pragma once

/** @file
 *  Problem description consumed by the solver: a residual map together with
 *  a selected Newton differential, plus finite-difference reference
 *  Jacobians and the componentwise-min branch selection.
 */

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "undet/linalg.hpp"

namespace undet {

// Which argument of min(a_i, b_i) supplies the differential row at a tie.
enum class TieBreak { FirstArgument, SecondArgument };

struct BranchRule {
  TieBreak tie_break = TieBreak::FirstArgument;
};

// A system G(x) = 0 with unknowns >= equations. residual and differential
// must be pure functions of x; known_zero, when present, satisfies
// norm(residual(known_zero)) <= 1e-10.
struct Problem {
  std::size_t unknowns = 0;   // m
  std::size_t equations = 0;  // n
  std::function<Vector(const Vector&)> residual;
  std::function<Matrix(const Vector&)> differential;
  std::string name;
  std::optional<Vector> known_zero;
};

class NonFiniteResidualError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wraps a smooth map and its analytic Jacobian; validates shapes and the
// known zero.
Problem smooth_problem(std::function<Vector(const Vector&)> residual,
                       std::function<Matrix(const Vector&)> jacobian,
                       std::size_t unknowns, std::size_t equations,
                       std::string name,
                       std::optional<Vector> known_zero = {});

// Central differences with per-coordinate step sqrt(machine eps) * (1 + |x_j|).
// Raises NonFiniteResidualError when an evaluation is not finite.
Matrix fd_jacobian(const std::function<Vector(const Vector&)>& residual,
                   const Vector& x, std::size_t equations);

// Componentwise min(a, b) and the branch-selected differential rows.
std::pair<Vector, Matrix> min_residual_and_differential(
    const Vector& a, const Vector& b, const Matrix& ja, const Matrix& jb,
    const BranchRule& rule = {});

}  // namespace undet
