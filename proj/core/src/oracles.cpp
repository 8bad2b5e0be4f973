#include "undet/oracles.hpp"

#include <cmath>
#include <utility>

namespace undet::oracles {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

// In-place LU with partial pivoting. Returns the permutation sign, fills
// perm with row swaps applied.
double lu_decompose(Matrix& a, std::vector<std::size_t>& perm) {
  const std::size_t n = a.rows();
  perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  double sign = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double candidate = std::abs(a(r, col));
      if (candidate > best) {
        best = candidate;
        pivot_row = r;
      }
    }
    if (best == 0.0 || !std::isfinite(best)) {
      throw std::runtime_error("lu_solve: singular system");
    }
    if (pivot_row != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(col, c), a(pivot_row, c));
      }
      std::swap(perm[col], perm[pivot_row]);
      sign = -sign;
    }
    const double pivot = a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / pivot;
      a(r, col) = factor;
      for (std::size_t c = col + 1; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
      }
    }
  }
  return sign;
}

}  // namespace

Vector lu_solve(Matrix a, Vector b) {
  const std::size_t n = a.rows();
  require(a.cols() == n, "lu_solve: matrix must be square");
  require(b.dim() == n, "lu_solve: rhs dimension mismatch");

  std::vector<std::size_t> perm;
  lu_decompose(a, perm);

  Vector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = b[perm[i]];
    for (std::size_t k = 0; k < i; ++k) sum -= a(i, k) * y[k];
    y[i] = sum;
  }
  Vector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double sum = y[ii];
    for (std::size_t k = ii + 1; k < n; ++k) sum -= a(ii, k) * x[k];
    x[ii] = sum / a(ii, ii);
  }
  return x;
}

double determinant(Matrix a) {
  const std::size_t n = a.rows();
  require(a.cols() == n, "determinant: matrix must be square");
  std::vector<std::size_t> perm;
  double det;
  try {
    det = lu_decompose(a, perm);
  } catch (const std::runtime_error&) {
    return 0.0;
  }
  for (std::size_t i = 0; i < n; ++i) det *= a(i, i);
  return det;
}

Vector kkt_project(const Vector& x, const Matrix& h, const Vector& b) {
  const std::size_t n = h.rows();
  const std::size_t m = h.cols();
  require(x.dim() == m, "kkt_project: point dimension mismatch");
  require(b.dim() == n, "kkt_project: rhs dimension mismatch");

  Matrix saddle(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i) saddle(i, i) = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      saddle(j, m + i) = h(i, j);
      saddle(m + i, j) = h(i, j);
    }
  }
  Vector rhs(m + n);
  for (std::size_t i = 0; i < m; ++i) rhs[i] = x[i];
  for (std::size_t i = 0; i < n; ++i) rhs[m + i] = b[i];

  const Vector solution = lu_solve(std::move(saddle), std::move(rhs));
  Vector y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = solution[i];
  return y;
}

}  // namespace undet::oracles
