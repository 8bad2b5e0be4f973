#pragma once

/** @file
 *  Self-contained verification suites behind the `verify` command. Each
 *  check compares an implementation path against an independent oracle or a
 *  synthetic ground truth and reports pass/fail with a measured detail.
 */

#include <string>
#include <vector>

namespace undet::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Pseudo-inverse identity battery, projection against the saddle-system
// oracle, and step/projection equivalence across the benchmark set.
std::vector<CheckResult> linalg_suite();

// Linearization-quality scans at certified zeros of the smooth benchmarks
// and at a strict-complementarity zero of the complementarity toy.
std::vector<CheckResult> nd_suite();

// Convergence-order estimation on synthetic series of known order and on a
// solver trace with a pinned start.
std::vector<CheckResult> rates_suite();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace undet::verify
