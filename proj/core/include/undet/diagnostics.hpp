#pragma once

/** @file
 *  Empirical checks on traces and differentials: linearization-quality
 *  ratios around a zero and convergence-order estimation from residual
 *  series.
 */

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "undet/model.hpp"

namespace undet {

class ZeroSeparationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least-squares fit of log s_{k+1} against log s_k over consecutive pairs
// with both values above the floor. order is the fitted slope; c_sequence
// holds all consecutive ratios s_{k+1} / s_k; points_used counts the fitted
// pairs (at least 2, otherwise InsufficientDataError).
struct RateEstimate {
  double order = 0.0;
  std::vector<double> c_sequence;
  std::size_t points_used = 0;
};

struct NdScan {
  std::vector<double> radii;
  std::vector<double> worst_ratio;
};

inline constexpr std::uint64_t kNdScanSeed = 0x5CA7;

// norm(G(x) - G(xbar) - H(x)(x - xbar)) / norm(x - xbar), the quantity that
// must vanish as x approaches xbar for the differential selection to drive a
// locally superlinear iteration. The differential is taken at x, not xbar.
double nd_residual(const Problem& problem, const Vector& x, const Vector& xbar);

// Worst nd_residual over seeded unit directions at each radius. xbar must be
// a certified zero (residual norm <= 1e-10); radii must be positive and
// strictly decreasing.
NdScan nd_scan(const Problem& problem, const Vector& xbar,
               std::size_t directions, const std::vector<double>& radii,
               std::uint64_t seed = kNdScanSeed);

std::vector<double> default_scan_radii();  // 1e-1 down to 1e-6

RateEstimate estimate_order(const std::vector<double>& series, double floor);

// estimate_order restricted to the last max_points entries above the floor;
// the tail is where the asymptotic rate shows.
RateEstimate tail_order(const std::vector<double>& series, double floor,
                        std::size_t max_points = 5);

}  // namespace undet
