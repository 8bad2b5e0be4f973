#include "undet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace undet {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Vector operator+(const Vector& a, const Vector& b) {
  require(a.dim() == b.dim(), "vector sum: dimension mismatch");
  Vector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require(a.dim() == b.dim(), "vector difference: dimension mismatch");
  Vector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator*(double s, const Vector& a) {
  Vector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = s * a[i];
  return out;
}

double dot(const Vector& a, const Vector& b) {
  require(a.dim() == b.dim(), "dot: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

bool all_finite(const Vector& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!std::isfinite(a[i])) return false;
  }
  return true;
}

Matrix identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix product: dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          "matrix difference: dimension mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& x) {
  require(a.cols() == x.dim(), "matrix-vector product: dimension mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * x[j];
    out[i] = sum;
  }
  return out;
}

Vector transpose_times(const Matrix& a, const Vector& x) {
  require(a.rows() == x.dim(), "transposed product: dimension mismatch");
  Vector out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double xi = x[i];
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += a(i, j) * xi;
  }
  return out;
}

double frobenius_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
  }
  return std::sqrt(sum);
}

bool all_finite(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!std::isfinite(a(i, j))) return false;
    }
  }
  return true;
}

RankDeficientError::RankDeficientError(const RankReport& report)
    : std::runtime_error("rank deficient: effective rank " +
                         std::to_string(report.effective_rank) +
                         ", limiting pivot " +
                         std::to_string(report.smallest_pivot)),
      report_(report) {}

GramFactor::GramFactor(Matrix lower, RankReport report)
    : lower_(std::move(lower)), report_(report) {}

Vector GramFactor::solve(const Vector& rhs) const {
  const std::size_t n = lower_.rows();
  require(rhs.dim() == n, "gram solve: dimension mismatch");
  Vector u(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = rhs[i];
    for (std::size_t k = 0; k < i; ++k) sum -= lower_(i, k) * u[k];
    u[i] = sum / lower_(i, i);
  }
  Vector w(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double sum = u[ii];
    for (std::size_t k = ii + 1; k < n; ++k) sum -= lower_(k, ii) * w[k];
    w[ii] = sum / lower_(ii, ii);
  }
  return w;
}

GramFactor gram_factorization(const Matrix& h, double pivot_tol) {
  const std::size_t n = h.rows();
  const std::size_t m = h.cols();
  require(n >= 1 && n <= m, "gram factorization: need 1 <= rows <= cols");
  require(pivot_tol > 0.0, "gram factorization: pivot_tol must be positive");

  Matrix gram(n, n);
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < m; ++k) sum += h(i, k) * h(j, k);
      gram(i, j) = sum;
      gram(j, i) = sum;
    }
    max_diag = std::max(max_diag, gram(i, i));
  }
  const double threshold = pivot_tol * max_diag;

  Matrix lower(n, n);
  double smallest = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = gram(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= lower(i, k) * lower(j, k);
      if (i == j) {
        // Written so that a NaN pivot also fails the rank test.
        if (!(sum > threshold)) {
          throw RankDeficientError({i, std::abs(sum), false});
        }
        smallest = (i == 0) ? sum : std::min(smallest, sum);
        lower(i, i) = std::sqrt(sum);
      } else {
        lower(i, j) = sum / lower(j, j);
      }
    }
  }
  return GramFactor(std::move(lower), {n, smallest, true});
}

Vector apply_pinv(const Matrix& h, const GramFactor& factor, const Vector& v) {
  require(factor.order() == h.rows(), "apply_pinv: factor does not match h");
  return transpose_times(h, factor.solve(v));
}

Vector apply_pinv(const Matrix& h, const Vector& v, double pivot_tol) {
  return apply_pinv(h, gram_factorization(h, pivot_tol), v);
}

Matrix materialize_pinv(const Matrix& h, double pivot_tol) {
  const GramFactor factor = gram_factorization(h, pivot_tol);
  const std::size_t n = h.rows();
  const std::size_t m = h.cols();
  Matrix out(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n);
    e[j] = 1.0;
    const Vector column = apply_pinv(h, factor, e);
    for (std::size_t i = 0; i < m; ++i) out(i, j) = column[i];
  }
  return out;
}

Vector project_affine(const Vector& x, const Matrix& h, const Vector& b,
                      double pivot_tol) {
  require(x.dim() == h.cols(), "project_affine: point dimension mismatch");
  require(b.dim() == h.rows(), "project_affine: rhs dimension mismatch");
  return x - apply_pinv(h, h * x - b, pivot_tol);
}

}  // namespace undet
