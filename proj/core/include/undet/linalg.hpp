#pragma once

/** @file
 *  Dense row-major vector/matrix types and the Gram-based pseudo-inverse
 *  kernels behind the projection step. For a full-row-rank H with n rows and
 *  m >= n columns the pseudo-inverse is applied as Ht (H Ht)^-1 v, where the
 *  symmetric factor of H Ht is computed once and reused for all right-hand
 *  sides of a step.
 */

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace undet {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim, double value = 0.0) : entries_(dim, value) {}
  Vector(std::initializer_list<double> values) : entries_(values) {}

  std::size_t dim() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  double& operator[](std::size_t i) { return entries_[i]; }

  bool operator==(const Vector&) const = default;

 private:
  std::vector<double> entries_;
};

// Row-major dense storage; shape is fixed at construction.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
      : rows_(rows), cols_(cols), entries_(rows * cols, value) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& a);
double dot(const Vector& a, const Vector& b);
double norm(const Vector& a);  // Euclidean
bool all_finite(const Vector& a);

Matrix identity(std::size_t n);
Matrix transpose(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);
// Ht x without materializing the transpose.
Vector transpose_times(const Matrix& a, const Vector& x);
double frobenius_norm(const Matrix& a);
bool all_finite(const Matrix& a);

// Rank outcome of the H Ht factorization. smallest_pivot is the magnitude of
// the limiting pivot: the smallest accepted one on success, the rejected one
// on failure. full_row_rank holds exactly when effective_rank == rows.
struct RankReport {
  std::size_t effective_rank = 0;
  double smallest_pivot = 0.0;
  bool full_row_rank = false;
};

class RankDeficientError : public std::runtime_error {
 public:
  explicit RankDeficientError(const RankReport& report);
  const RankReport& report() const { return report_; }

 private:
  RankReport report_;
};

inline constexpr double kDefaultPivotTol = 1e-12;

// Lower Cholesky factor of H Ht together with its rank report.
class GramFactor {
 public:
  std::size_t order() const { return lower_.rows(); }
  const RankReport& report() const { return report_; }

  // Solves (H Ht) w = rhs with the stored factor.
  Vector solve(const Vector& rhs) const;

 private:
  friend GramFactor gram_factorization(const Matrix& h, double pivot_tol);
  GramFactor(Matrix lower, RankReport report);

  Matrix lower_;
  RankReport report_;
};

// Factors H Ht for an n x m matrix with n <= m. A pivot at or below
// pivot_tol times the largest diagonal of H Ht raises RankDeficientError.
GramFactor gram_factorization(const Matrix& h, double pivot_tol = kDefaultPivotTol);

// Minimum-norm preimage Ht (H Ht)^-1 v.
Vector apply_pinv(const Matrix& h, const GramFactor& factor, const Vector& v);
Vector apply_pinv(const Matrix& h, const Vector& v, double pivot_tol = kDefaultPivotTol);

// Dense m x n pseudo-inverse, column by column from the shared factor.
Matrix materialize_pinv(const Matrix& h, double pivot_tol = kDefaultPivotTol);

// Euclidean projection of x onto {y : H y = b}.
Vector project_affine(const Vector& x, const Matrix& h, const Vector& b,
                      double pivot_tol = kDefaultPivotTol);

}  // namespace undet
