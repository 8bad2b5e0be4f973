// Command line front end: run a benchmark under one step rule, compare both
// rules from the same start, run the self-verification suites, or list the
// built-in benchmarks. Exit codes: 0 converged, 1 usage or verification
// failure, 2 iteration budget exhausted, 3 rank-deficient abort.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "undet/diagnostics.hpp"
#include "undet/problems.hpp"
#include "undet/report.hpp"
#include "undet/solver.hpp"
#include "undet/verify.hpp"

namespace {

int status_code(undet::SolveStatus status) {
  switch (status) {
    case undet::SolveStatus::ResidualConverged:
    case undet::SolveStatus::StepConverged:
      return 0;
    case undet::SolveStatus::MaxIterations:
      return 2;
    case undet::SolveStatus::RankDeficientAbort:
      return 3;
  }
  return 2;
}

std::optional<undet::Dims> parse_dims(const std::string& text) {
  if (text.empty()) return std::nullopt;
  undet::Dims dims;
  const auto sep = text.find('x');
  try {
    if (sep == std::string::npos) {
      dims.n = std::stoul(text);
    } else {
      dims.m = std::stoul(text.substr(0, sep));
      dims.n = std::stoul(text.substr(sep + 1));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return dims;
}

std::string fitted_order(const undet::SolveTrace& trace) {
  try {
    const auto rate = undet::tail_order(trace.residual_norms, 1e-13, 3);
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", rate.order);
    return buffer;
  } catch (const undet::InsufficientDataError&) {
    return "n/a";
  }
}

void print_summary(const undet::Problem& problem, const char* rule,
                   const undet::SolveTrace& trace) {
  std::printf("benchmark: %s\n", problem.name.c_str());
  std::printf("rule: %s\n", rule);
  std::printf("status: %s\n",
              std::string(undet::to_string(trace.status)).c_str());
  std::printf("iterations: %zu\n", trace.step_norms.size());
  std::printf("final residual: %.3e\n", trace.residual_norms.back());
  std::printf("fitted order: %s\n", fitted_order(trace).c_str());
  if (trace.dist_to_known_zero) {
    std::printf("final distance to known zero: %.3e\n",
                trace.dist_to_known_zero->back());
  }
}

void write_pair(const std::filesystem::path& dir, const std::string& stem,
                const std::string& csv, const std::string& svg) {
  namespace fs = std::filesystem;
  if (!dir.empty()) fs::create_directories(dir);
  const fs::path csv_path = dir / (stem + ".csv");
  const fs::path svg_path = dir / (stem + ".svg");
  undet::report::write_file(csv_path, csv);
  undet::report::write_file(svg_path, svg);
  std::printf("wrote: %s\n", csv_path.string().c_str());
  std::printf("wrote: %s\n", svg_path.string().c_str());
}

struct RunOptions {
  std::string benchmark;
  std::string rule = "project";
  std::uint64_t seed = 1;
  std::string dims;
  std::size_t max_iter = undet::SolveConfig{}.max_iter;
  double residual_tol = undet::SolveConfig{}.residual_tol;
  std::string out = ".";
};

void add_common_flags(CLI::App* cmd, RunOptions& opt, bool with_rule) {
  cmd->add_option("--benchmark", opt.benchmark, "benchmark token; see list")
      ->required();
  if (with_rule) {
    cmd->add_option("--rule", opt.rule, "step rule: project or polyak")
        ->check(CLI::IsMember({"project", "polyak"}));
  }
  cmd->add_option("--seed", opt.seed, "seed for benchmark construction");
  cmd->add_option("--dims", opt.dims,
                  "MxN for sigmoid (unknowns x equations), N for lcp");
  cmd->add_option("--max-iter", opt.max_iter, "iteration budget");
  cmd->add_option("--residual-tol", opt.residual_tol,
                  "residual norm stopping tolerance");
  cmd->add_option("--out", opt.out, "output directory for csv and svg");
}

int make_benchmark(const RunOptions& opt, undet::BenchmarkInstance& instance,
                   undet::BenchmarkId& id) {
  const auto parsed = undet::parse_benchmark_id(opt.benchmark);
  if (!parsed) {
    std::fprintf(stderr,
                 "unknown benchmark '%s'; run the list command for the "
                 "available tokens\n",
                 opt.benchmark.c_str());
    return 1;
  }
  id = *parsed;
  std::optional<undet::Dims> dims;
  if (!opt.dims.empty()) {
    dims = parse_dims(opt.dims);
    if (!dims) {
      std::fprintf(stderr, "could not parse --dims '%s' (expected MxN or N)\n",
                   opt.dims.c_str());
      return 1;
    }
  }
  try {
    instance = undet::make_instance(id, opt.seed, dims);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }
  return 0;
}

int cmd_run(const RunOptions& opt) {
  undet::BenchmarkInstance instance;
  undet::BenchmarkId id;
  if (const int rc = make_benchmark(opt, instance, id); rc != 0) return rc;

  const auto rule = opt.rule == "polyak" ? undet::StepRule::PolyakTremba
                                         : undet::StepRule::ProjectCurrent;
  undet::SolveConfig config;
  config.max_iter = opt.max_iter;
  config.residual_tol = opt.residual_tol;
  const auto trace = undet::solve(instance.problem, instance.start, rule,
                                  config);
  print_summary(instance.problem, opt.rule.c_str(), trace);

  const std::string stem = std::string(undet::benchmark_token(id)) + "_" +
                           opt.rule + "_" + std::to_string(opt.seed);
  write_pair(opt.out, stem, undet::report::trace_csv(trace),
             undet::report::trace_svg(trace, instance.problem.name));
  return status_code(trace.status);
}

int cmd_compare(const RunOptions& opt) {
  undet::BenchmarkInstance instance;
  undet::BenchmarkId id;
  if (const int rc = make_benchmark(opt, instance, id); rc != 0) return rc;

  undet::SolveConfig config;
  config.max_iter = opt.max_iter;
  config.residual_tol = opt.residual_tol;
  const auto project = undet::solve(instance.problem, instance.start,
                                    undet::StepRule::ProjectCurrent, config);
  const auto polyak = undet::solve(instance.problem, instance.start,
                                   undet::StepRule::PolyakTremba, config);
  print_summary(instance.problem, "project", project);
  std::printf("\n");
  print_summary(instance.problem, "polyak", polyak);

  const std::string stem = std::string(undet::benchmark_token(id)) +
                           "_compare_" + std::to_string(opt.seed);
  write_pair(opt.out, stem, undet::report::compare_csv(project, polyak),
             undet::report::compare_svg(project, polyak,
                                        instance.problem.name));
  return std::max(status_code(project.status), status_code(polyak.status));
}

int cmd_verify(const std::string& suite) {
  std::vector<undet::verify::CheckResult> results;
  if (suite == "linalg" || suite == "all") {
    const auto batch = undet::verify::linalg_suite();
    results.insert(results.end(), batch.begin(), batch.end());
  }
  if (suite == "nd" || suite == "all") {
    const auto batch = undet::verify::nd_suite();
    results.insert(results.end(), batch.begin(), batch.end());
  }
  if (suite == "rates" || suite == "all") {
    const auto batch = undet::verify::rates_suite();
    results.insert(results.end(), batch.begin(), batch.end());
  }
  if (results.empty()) {
    std::fprintf(stderr,
                 "unknown suite '%s' (expected linalg, nd, rates, or all)\n",
                 suite.c_str());
    return 1;
  }
  for (const auto& check : results) {
    if (check.passed) {
      std::printf("PASS %s (%s)\n", check.name.c_str(), check.detail.c_str());
    } else {
      std::printf("FAIL %s: %s\n", check.name.c_str(), check.detail.c_str());
    }
  }
  return undet::verify::all_passed(results) ? 0 : 1;
}

int cmd_list() {
  std::printf("sigmoid  requires --dims MxN; smooth, feasible by "
              "construction, known zero\n");
  std::printf("p1       2 unknowns, 1 equation; product of two circles\n");
  std::printf("p2       3 unknowns, 2 equations; rank collapse at the only "
              "zero\n");
  std::printf("p3       8 unknowns, 7 equations; four circles with coupling "
              "rows\n");
  std::printf("p3b      8 unknowns, 6 equations; p3 without its last row\n");
  std::printf("p4       8 unknowns, 5 equations; quadratic, zero at the "
              "origin\n");
  std::printf("p4b      6 unknowns, 5 equations; p4 with two coordinates "
              "fixed\n");
  std::printf("lcp      requires --dims N; 3N unknowns, 2N equations, "
              "piecewise affine\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"projection Newton solver for under-determined systems"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "solve one benchmark under one rule");
  add_common_flags(run, run_opt, true);

  RunOptions compare_opt;
  auto* compare = app.add_subcommand(
      "compare", "solve one benchmark under both rules from the same start");
  add_common_flags(compare, compare_opt, false);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run self-verification suites");
  verify->add_option("suite", suite, "linalg, nd, rates, or all");

  auto* list = app.add_subcommand("list", "list benchmark tokens");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) return cmd_run(run_opt);
    if (compare->parsed()) return cmd_compare(compare_opt);
    if (verify->parsed()) return cmd_verify(suite);
    if (list->parsed()) return cmd_list();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
