#include <benchmark/benchmark.h>

#include "undet/linalg.hpp"
#include "undet/problems.hpp"
#include "undet/rng.hpp"
#include "undet/solver.hpp"

namespace {

undet::Matrix seeded_wide(std::size_t rows, std::size_t cols) {
  undet::Rng64 rng(0xB35C);
  return rng.normal_matrix(rows, cols);
}

void BM_GramFactorization(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const undet::Matrix h = seeded_wide(n, n + 4);
  for (auto _ : state) {
    const undet::GramFactor factor = undet::gram_factorization(h);
    benchmark::DoNotOptimize(factor.report().smallest_pivot);
  }
}
BENCHMARK(BM_GramFactorization)->Arg(2)->Arg(6)->Arg(12)->Arg(24);

void BM_ApplyPinv(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const undet::Matrix h = seeded_wide(n, n + 4);
  undet::Rng64 rng(0xF1);
  const undet::Vector v = rng.normal_vector(n);
  const undet::GramFactor factor = undet::gram_factorization(h);
  for (auto _ : state) {
    const undet::Vector out = undet::apply_pinv(h, factor, v);
    benchmark::DoNotOptimize(out[0]);
  }
}
BENCHMARK(BM_ApplyPinv)->Arg(2)->Arg(6)->Arg(12)->Arg(24);

void BM_ProjectAffine(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const undet::Matrix h = seeded_wide(n, n + 4);
  undet::Rng64 rng(0xF2);
  const undet::Vector x = rng.normal_vector(n + 4);
  const undet::Vector b = rng.normal_vector(n);
  for (auto _ : state) {
    const undet::Vector out = undet::project_affine(x, h, b);
    benchmark::DoNotOptimize(out[0]);
  }
}
BENCHMARK(BM_ProjectAffine)->Arg(2)->Arg(6)->Arg(12)->Arg(24);

void BM_NewtonStepSigmoid(benchmark::State& state) {
  const auto [problem, start] = undet::sigmoid_problem(20, 10, 7);
  for (auto _ : state) {
    const undet::Vector next =
        undet::newton_step(problem, start, undet::StepRule::ProjectCurrent);
    benchmark::DoNotOptimize(next[0]);
  }
}
BENCHMARK(BM_NewtonStepSigmoid);

void BM_SolveSigmoid(benchmark::State& state) {
  const auto [problem, start] = undet::sigmoid_problem(20, 10, 7);
  for (auto _ : state) {
    const undet::SolveTrace trace =
        undet::solve(problem, start, undet::StepRule::ProjectCurrent);
    benchmark::DoNotOptimize(trace.residual_norms.back());
  }
}
BENCHMARK(BM_SolveSigmoid);

void BM_SolveComplementarity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto [problem, start] = undet::lcp_toy(n, 5);
  undet::SolveConfig config;
  config.residual_tol = 1e-10;
  config.max_iter = 25;
  for (auto _ : state) {
    const undet::SolveTrace trace =
        undet::solve(problem, start, undet::StepRule::ProjectCurrent, config);
    benchmark::DoNotOptimize(trace.residual_norms.back());
  }
}
BENCHMARK(BM_SolveComplementarity)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
