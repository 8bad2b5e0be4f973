#include "undet/model.hpp"

#include <cmath>
#include <limits>

namespace undet {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

Problem smooth_problem(std::function<Vector(const Vector&)> residual,
                       std::function<Matrix(const Vector&)> jacobian,
                       std::size_t unknowns, std::size_t equations,
                       std::string name, std::optional<Vector> known_zero) {
  require(static_cast<bool>(residual) && static_cast<bool>(jacobian),
          "smooth_problem: residual and jacobian must be callable");
  require(equations >= 1 && equations <= unknowns,
          "smooth_problem: need 1 <= equations <= unknowns");
  if (known_zero) {
    require(known_zero->dim() == unknowns,
            "smooth_problem: known_zero dimension mismatch");
    if (norm(residual(*known_zero)) > 1e-10) {
      throw std::invalid_argument("smooth_problem: known_zero is not a zero");
    }
  }
  Problem problem;
  problem.unknowns = unknowns;
  problem.equations = equations;
  problem.residual = std::move(residual);
  problem.differential = std::move(jacobian);
  problem.name = std::move(name);
  problem.known_zero = std::move(known_zero);
  return problem;
}

Matrix fd_jacobian(const std::function<Vector(const Vector&)>& residual,
                   const Vector& x, std::size_t equations) {
  require(static_cast<bool>(residual), "fd_jacobian: residual must be callable");
  const std::size_t m = x.dim();
  require(m >= 1, "fd_jacobian: empty point");
  const double root_eps = std::sqrt(std::numeric_limits<double>::epsilon());

  Matrix jac(equations, m);
  Vector forward = x;
  Vector backward = x;
  for (std::size_t j = 0; j < m; ++j) {
    const double h = root_eps * (1.0 + std::abs(x[j]));
    forward[j] = x[j] + h;
    backward[j] = x[j] - h;
    // The realized step forward[j] - backward[j] is used as the denominator
    // so that representation error of x[j] +/- h cancels out.
    const double span = forward[j] - backward[j];
    const Vector gf = residual(forward);
    const Vector gb = residual(backward);
    require(gf.dim() == equations && gb.dim() == equations,
            "fd_jacobian: residual dimension mismatch");
    if (!all_finite(gf) || !all_finite(gb)) {
      throw NonFiniteResidualError("fd_jacobian: non-finite residual sample");
    }
    for (std::size_t i = 0; i < equations; ++i) {
      jac(i, j) = (gf[i] - gb[i]) / span;
    }
    forward[j] = x[j];
    backward[j] = x[j];
  }
  return jac;
}

std::pair<Vector, Matrix> min_residual_and_differential(
    const Vector& a, const Vector& b, const Matrix& ja, const Matrix& jb,
    const BranchRule& rule) {
  const std::size_t n = a.dim();
  require(b.dim() == n, "min selection: branch value dimension mismatch");
  require(ja.rows() == n && jb.rows() == n && ja.cols() == jb.cols(),
          "min selection: differential shape mismatch");

  Vector value(n);
  Matrix rows(n, ja.cols());
  for (std::size_t i = 0; i < n; ++i) {
    const bool take_first =
        a[i] < b[i] ||
        (a[i] == b[i] && rule.tie_break == TieBreak::FirstArgument);
    value[i] = take_first ? a[i] : b[i];
    const Matrix& source = take_first ? ja : jb;
    for (std::size_t j = 0; j < source.cols(); ++j) rows(i, j) = source(i, j);
  }
  return {std::move(value), std::move(rows)};
}

}  // namespace undet
