#pragma once

/** @file
 *  Deterministic random source shared by all seeded constructions. The
 *  stream is a splitmix64 counter; equal seeds give bit-equal streams.
 */

#include <cmath>
#include <cstdint>

#include "undet/linalg.hpp"

namespace undet {

class Rng64 {
 public:
  explicit Rng64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Top 53 bits of next() mapped into [0, 1); the truncation keeps the
  // upper bound strict, which plain division by 2^64 does not.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Box-Muller pairs; the second deviate is cached for the next call.
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
  }

  Vector normal_vector(std::size_t dim) {
    Vector out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = normal();
    return out;
  }

  // Filled row by row, left to right.
  Matrix normal_matrix(std::size_t rows, std::size_t cols) {
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = normal();
    }
    return out;
  }

 private:
  std::uint64_t state_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace undet
