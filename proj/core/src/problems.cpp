#include "undet/problems.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "undet/rng.hpp"

namespace undet {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

// phi(t) = t / (1 + e^-|t|); strictly increasing, phi'(0) = 1/2.
double phi(double t) { return t / (1.0 + std::exp(-std::abs(t))); }

double phi_prime(double t) {
  const double e = std::exp(-std::abs(t));
  const double sign = t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0);
  const double denom = 1.0 + e;
  return (1.0 + e + t * sign * e) / (denom * denom);
}

Vector p3_residual_full(const Vector& x) {
  Vector g(7);
  g[0] = x[0] * x[0] + x[1] * x[1] - 1.0;
  g[1] = x[2] * x[2] + x[3] * x[3] - 1.0;
  g[2] = x[4] * x[4] + x[5] * x[5] - 1.0;
  g[3] = x[6] * x[6] + x[7] * x[7] - 1.0;
  g[4] = 0.004731 * x[0] * x[1] - 0.3578 * x[1] * x[2] - 0.1238 * x[0] -
         0.001637 * x[1] - 0.9338 * x[3] + x[6];
  g[5] = 0.2238 * x[0] * x[2] + 0.7623 * x[1] * x[2] + 0.2638 * x[0] -
         0.07745 * x[1] - 0.6734 * x[3] - 0.6022;
  g[6] = x[5] * x[7] + 0.3578 * x[0] + 0.004731 * x[1];
  return g;
}

Matrix p3_jacobian_full(const Vector& x) {
  Matrix j(7, 8);
  j(0, 0) = 2.0 * x[0];
  j(0, 1) = 2.0 * x[1];
  j(1, 2) = 2.0 * x[2];
  j(1, 3) = 2.0 * x[3];
  j(2, 4) = 2.0 * x[4];
  j(2, 5) = 2.0 * x[5];
  j(3, 6) = 2.0 * x[6];
  j(3, 7) = 2.0 * x[7];
  j(4, 0) = 0.004731 * x[1] - 0.1238;
  j(4, 1) = 0.004731 * x[0] - 0.3578 * x[2] - 0.001637;
  j(4, 2) = -0.3578 * x[1];
  j(4, 3) = -0.9338;
  j(4, 6) = 1.0;
  j(5, 0) = 0.2238 * x[2] + 0.2638;
  j(5, 1) = 0.7623 * x[2] - 0.07745;
  j(5, 2) = 0.2238 * x[0] + 0.7623 * x[1];
  j(5, 3) = -0.6734;
  j(6, 0) = 0.3578;
  j(6, 1) = 0.004731;
  j(6, 5) = x[7];
  j(6, 7) = x[5];
  return j;
}

Problem p3_variant(std::size_t equations, std::string name) {
  auto residual = [equations](const Vector& x) {
    const Vector full = p3_residual_full(x);
    Vector g(equations);
    for (std::size_t i = 0; i < equations; ++i) g[i] = full[i];
    return g;
  };
  auto jacobian = [equations](const Vector& x) {
    const Matrix full = p3_jacobian_full(x);
    Matrix j(equations, 8);
    for (std::size_t i = 0; i < equations; ++i) {
      for (std::size_t c = 0; c < 8; ++c) j(i, c) = full(i, c);
    }
    return j;
  };
  return smooth_problem(residual, jacobian, 8, equations, std::move(name));
}

Vector p4_residual_full(const Vector& x) {
  Vector g(5);
  g[0] = -3.933 * x[0] + 0.107 * x[1] + 0.126 * x[2] - 9.99 * x[4] -
         45.83 * x[6] - 7.64 * x[7] - 0.727 * x[1] * x[2] +
         8.39 * x[2] * x[3] - 684.4 * x[3] * x[4] + 63.5 * x[3] * x[6];
  g[1] = -0.987 * x[1] - 22.95 * x[3] - 28.37 * x[5] + 0.949 * x[0] * x[2] +
         0.173 * x[0] * x[4];
  g[2] = 0.002 * x[0] - 0.235 * x[2] + 5.67 * x[4] + 0.921 * x[6] -
         6.51 * x[7] - 0.716 * x[0] * x[1] - 1.578 * x[0] * x[3] +
         1.132 * x[3] * x[6];
  g[3] = x[0] - x[3] - 0.168 * x[5] - x[0] * x[1];
  g[4] = -x[2] - 0.196 * x[4] - 0.0071 * x[6] + x[0] * x[3];
  return g;
}

Matrix p4_jacobian_full(const Vector& x) {
  Matrix j(5, 8);
  j(0, 0) = -3.933;
  j(0, 1) = 0.107 - 0.727 * x[2];
  j(0, 2) = 0.126 - 0.727 * x[1] + 8.39 * x[3];
  j(0, 3) = 8.39 * x[2] - 684.4 * x[4] + 63.5 * x[6];
  j(0, 4) = -9.99 - 684.4 * x[3];
  j(0, 6) = -45.83 + 63.5 * x[3];
  j(0, 7) = -7.64;
  j(1, 0) = 0.949 * x[2] + 0.173 * x[4];
  j(1, 1) = -0.987;
  j(1, 2) = 0.949 * x[0];
  j(1, 3) = -22.95;
  j(1, 4) = 0.173 * x[0];
  j(1, 5) = -28.37;
  j(2, 0) = 0.002 - 0.716 * x[1] - 1.578 * x[3];
  j(2, 1) = -0.716 * x[0];
  j(2, 2) = -0.235;
  j(2, 3) = -1.578 * x[0] + 1.132 * x[6];
  j(2, 4) = 5.67;
  j(2, 6) = 0.921 + 1.132 * x[3];
  j(2, 7) = -6.51;
  j(3, 0) = 1.0 - x[1];
  j(3, 1) = -x[0];
  j(3, 3) = -1.0;
  j(3, 5) = -0.168;
  j(4, 0) = x[3];
  j(4, 2) = -1.0;
  j(4, 3) = x[0];
  j(4, 4) = -0.196;
  j(4, 6) = -0.0071;
  return j;
}

// p4b keeps unknowns (x1..x5, x7) and pins x6 = 0.1, x8 = 0.
Vector p4b_embed(const Vector& u) {
  Vector x(8);
  for (std::size_t i = 0; i < 5; ++i) x[i] = u[i];
  x[5] = 0.1;
  x[6] = u[5];
  x[7] = 0.0;
  return x;
}

}  // namespace

std::pair<Problem, Vector> sigmoid_problem(std::size_t m, std::size_t n,
                                           std::uint64_t seed) {
  require(n >= 1 && n < m, "sigmoid_problem: need 1 <= n < m");
  Rng64 rng(seed);
  const Matrix c = rng.normal_matrix(n, m);
  const Vector b = rng.normal_vector(n);
  const Vector xstar = rng.normal_vector(m);

  Vector y = c * xstar;
  for (std::size_t i = 0; i < n; ++i) y[i] = phi(y[i] - b[i]);

  auto residual = [c, b, y, n](const Vector& x) {
    Vector g = c * x;
    for (std::size_t i = 0; i < n; ++i) g[i] = phi(g[i] - b[i]) - y[i];
    return g;
  };
  auto jacobian = [c, b, n, m](const Vector& x) {
    const Vector t = c * x;
    Matrix j(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      const double scale = phi_prime(t[i] - b[i]);
      for (std::size_t col = 0; col < m; ++col) j(i, col) = scale * c(i, col);
    }
    return j;
  };

  const Vector start = xstar + 0.5 * rng.normal_vector(m);
  const std::string name = "sigmoid(m=" + std::to_string(m) +
                           ",n=" + std::to_string(n) +
                           ",seed=" + std::to_string(seed) + ")";
  return {smooth_problem(residual, jacobian, m, n, name, xstar), start};
}

Problem p1() {
  auto residual = [](const Vector& x) {
    const double r = x[0] * x[0] + x[1] * x[1];
    return Vector{(r - 4.0) * (r - 1.0)};
  };
  auto jacobian = [](const Vector& x) {
    const double r = x[0] * x[0] + x[1] * x[1];
    const double scale = 2.0 * (2.0 * r - 5.0);
    Matrix j(1, 2);
    j(0, 0) = scale * x[0];
    j(0, 1) = scale * x[1];
    return j;
  };
  return smooth_problem(residual, jacobian, 2, 1, "p1", Vector{2.0, 0.0});
}

Problem p2() {
  auto residual = [](const Vector& x) {
    const double r = x[0] * x[0] + x[1] * x[1];
    return Vector{r - x[2], r - 1.1 * x[2]};
  };
  auto jacobian = [](const Vector& x) {
    Matrix j(2, 3);
    j(0, 0) = 2.0 * x[0];
    j(0, 1) = 2.0 * x[1];
    j(0, 2) = -1.0;
    j(1, 0) = 2.0 * x[0];
    j(1, 1) = 2.0 * x[1];
    j(1, 2) = -1.1;
    return j;
  };
  return smooth_problem(residual, jacobian, 3, 2, "p2", Vector{0.0, 0.0, 0.0});
}

Problem p3() { return p3_variant(7, "p3"); }

Problem p3b() { return p3_variant(6, "p3b"); }

Problem p4() {
  return smooth_problem(p4_residual_full, p4_jacobian_full, 8, 5, "p4",
                        Vector(8, 0.0));
}

Problem p4b() {
  auto residual = [](const Vector& u) { return p4_residual_full(p4b_embed(u)); };
  auto jacobian = [](const Vector& u) {
    const Matrix full = p4_jacobian_full(p4b_embed(u));
    Matrix j(5, 6);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t c = 0; c < 5; ++c) j(i, c) = full(i, c);
      j(i, 5) = full(i, 6);
    }
    return j;
  };
  return smooth_problem(residual, jacobian, 6, 5, "p4b");
}

std::pair<Problem, Vector> lcp_toy(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "lcp_toy: need n >= 1");
  Rng64 rng(seed);
  const Matrix a = rng.normal_matrix(n, n);
  const Vector b = rng.normal_vector(n);
  const Vector start = rng.normal_vector(3 * n);

  auto split = [n](const Vector& v, std::size_t block) {
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = v[block * n + i];
    return out;
  };

  auto residual = [a, b, n, split](const Vector& v) {
    const Vector x = split(v, 0);
    const Vector y = split(v, 1);
    const Vector z = split(v, 2);
    const Vector top = a * x + b - y + z;
    Vector g(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = top[i];
      g[n + i] = std::min(1.0 - x[i], y[i]);
    }
    return g;
  };

  auto differential = [a, n, split](const Vector& v) {
    const Vector x = split(v, 0);
    const Vector y = split(v, 1);
    Vector first(n);
    Matrix ja(n, 3 * n);
    Matrix jb(n, 3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      first[i] = 1.0 - x[i];
      ja(i, i) = -1.0;
      jb(i, n + i) = 1.0;
    }
    const auto selected =
        min_residual_and_differential(first, y, ja, jb, BranchRule{});
    Matrix j(2 * n, 3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < n; ++c) j(i, c) = a(i, c);
      j(i, n + i) = -1.0;
      j(i, 2 * n + i) = 1.0;
      for (std::size_t c = 0; c < 3 * n; ++c) {
        j(n + i, c) = selected.second(i, c);
      }
    }
    return j;
  };

  // Strict-complementarity zero: alternate the active branch with margins of
  // at least 0.5 and pick z to cancel the affine rows.
  Vector zero(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 2 == 0) {
      zero[i] = 1.0;
      zero[n + i] = 0.5;
    } else {
      zero[i] = 0.2;
      zero[n + i] = 0.0;
    }
  }
  {
    const Vector x = split(zero, 0);
    const Vector ax = a * x;
    for (std::size_t i = 0; i < n; ++i) {
      zero[2 * n + i] = zero[n + i] - ax[i] - b[i];
    }
  }

  const std::string name =
      "lcp(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")";
  Problem problem;
  problem.unknowns = 3 * n;
  problem.equations = 2 * n;
  problem.residual = residual;
  problem.differential = differential;
  problem.name = name;
  problem.known_zero = zero;
  return {std::move(problem), start};
}

bool requires_dims(BenchmarkId id) {
  return id == BenchmarkId::Sigmoid || id == BenchmarkId::LcpToy;
}

Vector default_start(BenchmarkId id, std::uint64_t seed,
                     std::optional<Dims> dims) {
  if (requires_dims(id)) {
    require(dims.has_value(), "default_start: this benchmark needs dims");
    return make_instance(id, seed, dims).start;
  }
  require(!dims.has_value(), "default_start: fixed-size benchmark takes no dims");
  switch (id) {
    case BenchmarkId::P1:
      return Vector{3.0, 4.0};
    case BenchmarkId::P2:
      return Vector{1.0, 1.0, 1.0};
    case BenchmarkId::P3:
    case BenchmarkId::P3b: {
      // All four circle pairs at angle zero, nudged by a direction of
      // magnitude 0.3.
      Vector base{1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0};
      Rng64 rng(seed);
      Vector d = rng.normal_vector(8);
      return base + (0.3 / norm(d)) * d;
    }
    case BenchmarkId::P4:
      return 0.5 * Rng64(seed).normal_vector(8);
    case BenchmarkId::P4b:
      return 0.5 * Rng64(seed).normal_vector(6);
    default:
      throw std::invalid_argument("default_start: unknown benchmark");
  }
}

BenchmarkInstance make_instance(BenchmarkId id, std::uint64_t seed,
                                std::optional<Dims> dims) {
  switch (id) {
    case BenchmarkId::Sigmoid: {
      require(dims.has_value() && dims->m >= 2 && dims->n >= 1 &&
                  dims->n < dims->m,
              "make_instance: sigmoid needs dims m x n with n < m");
      auto [problem, start] = sigmoid_problem(dims->m, dims->n, seed);
      return {std::move(problem), std::move(start)};
    }
    case BenchmarkId::LcpToy: {
      require(dims.has_value() && dims->n >= 1,
              "make_instance: lcp needs dims n");
      auto [problem, start] = lcp_toy(dims->n, seed);
      return {std::move(problem), std::move(start)};
    }
    default: {
      require(!dims.has_value(),
              "make_instance: fixed-size benchmark takes no dims");
      Problem problem;
      switch (id) {
        case BenchmarkId::P1: problem = p1(); break;
        case BenchmarkId::P2: problem = p2(); break;
        case BenchmarkId::P3: problem = p3(); break;
        case BenchmarkId::P3b: problem = p3b(); break;
        case BenchmarkId::P4: problem = p4(); break;
        case BenchmarkId::P4b: problem = p4b(); break;
        default:
          throw std::invalid_argument("make_instance: unknown benchmark");
      }
      Vector start = default_start(id, seed);
      return {std::move(problem), std::move(start)};
    }
  }
}

std::optional<BenchmarkId> parse_benchmark_id(std::string_view token) {
  if (token == "sigmoid") return BenchmarkId::Sigmoid;
  if (token == "p1") return BenchmarkId::P1;
  if (token == "p2") return BenchmarkId::P2;
  if (token == "p3") return BenchmarkId::P3;
  if (token == "p3b") return BenchmarkId::P3b;
  if (token == "p4") return BenchmarkId::P4;
  if (token == "p4b") return BenchmarkId::P4b;
  if (token == "lcp") return BenchmarkId::LcpToy;
  return std::nullopt;
}

std::string_view benchmark_token(BenchmarkId id) {
  switch (id) {
    case BenchmarkId::Sigmoid: return "sigmoid";
    case BenchmarkId::P1: return "p1";
    case BenchmarkId::P2: return "p2";
    case BenchmarkId::P3: return "p3";
    case BenchmarkId::P3b: return "p3b";
    case BenchmarkId::P4: return "p4";
    case BenchmarkId::P4b: return "p4b";
    case BenchmarkId::LcpToy: return "lcp";
  }
  throw std::invalid_argument("benchmark_token: unknown benchmark");
}

}  // namespace undet
