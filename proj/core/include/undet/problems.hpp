#pragma once

/** @file
 *  Built-in benchmark problems. Every seeded construction is deterministic:
 *  equal (id, seed, dims) produce bit-equal data and starting points.
 */

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "undet/model.hpp"

namespace undet {

enum class BenchmarkId { Sigmoid, P1, P2, P3, P3b, P4, P4b, LcpToy };

// Sigmoid takes m unknowns and n equations; LcpToy takes n only and works on
// stacked unknowns of size 3n.
struct Dims {
  std::size_t m = 0;
  std::size_t n = 0;
};

struct BenchmarkInstance {
  Problem problem;
  Vector start;
};

// Feasible-by-construction sigmoid system phi(C x - b) = y with
// y = phi(C x* - b) for a drawn x*. Returns the problem and the start
// x* + 0.5 * (seeded normal perturbation); known_zero is x*.
std::pair<Problem, Vector> sigmoid_problem(std::size_t m, std::size_t n,
                                           std::uint64_t seed);

Problem p1();   // product of two circles, 2 unknowns, 1 equation
Problem p2();   // paraboloid pair with rank collapse at its only zero
Problem p3();   // four unit circles with three coupling rows, 8 x 7
Problem p3b();  // p3 without the last coupling row, 8 x 6
Problem p4();   // quadratic system, 8 unknowns, 5 equations
Problem p4b();  // p4 with x6 = 0.1 and x8 = 0 substituted, 6 x 5

// Complementarity toy on unknowns (x, y, z): rows A x + b - y + z followed by
// min(1 - x, y). The differential follows the componentwise-min selection
// with the default first-argument tie break. known_zero is a constructed
// strict-complementarity zero. Returns the problem and a seeded normal start.
std::pair<Problem, Vector> lcp_toy(std::size_t n, std::uint64_t seed);

bool requires_dims(BenchmarkId id);

// Fixed published starts: p1 (3,4); p2 (1,1,1); p3/p3b a 0.3-magnitude
// normalized seeded perturbation of the all-circles-at-angle-zero point;
// p4/p4b a seeded normal scaled by 0.5. Sigmoid and LcpToy delegate to their
// constructors and therefore need dims.
Vector default_start(BenchmarkId id, std::uint64_t seed,
                     std::optional<Dims> dims = {});

BenchmarkInstance make_instance(BenchmarkId id, std::uint64_t seed,
                                std::optional<Dims> dims = {});

std::optional<BenchmarkId> parse_benchmark_id(std::string_view token);
std::string_view benchmark_token(BenchmarkId id);

}  // namespace undet
