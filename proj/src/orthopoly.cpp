#include "gtmod/orthopoly.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "gtmod/errors.hpp"
#include "gtmod/sampled_function.hpp"

namespace gtmod {

namespace {

constexpr double kDomainSlack = 1e-12;

void check_degree(int n) {
  if (n < 0) throw DomainError("Jacobi degree must be non-negative, got " + std::to_string(n));
}

void check_x(double x) {
  if (!(std::abs(x) <= 1.0 + kDomainSlack)) {
    throw DomainError("Jacobi argument outside [-1, 1]: " + std::to_string(x));
  }
}

}  // namespace

JacobiBasis::JacobiBasis(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("Jacobi exponents must exceed -1");
  }
}

double JacobiBasis::endpoint_value(int n) const {
  check_degree(n);
  double v = 1.0;
  for (int k = 1; k <= n; ++k) v *= (k + alpha_) / k;
  return v;
}

std::vector<double> JacobiBasis::eval_all(int n_max, double x) const {
  check_degree(n_max);
  check_x(x);
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 1.0);
  if (x == 1.0 || n_max == 0) return out;

  const double a = alpha_, b = beta_;
  // Classical values, normalised one degree at a time so that nothing
  // grows with n. c holds binom(k + a, k).
  double prev = 1.0;
  double cur = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
  double c = a + 1.0;
  out[1] = cur / c;
  for (int n = 1; n < n_max; ++n) {
    const double s = 2.0 * n + a + b;
    const double next = ((s + 1.0) * ((s + 2.0) * s * x + a * a - b * b) * cur -
                         2.0 * (n + a) * (n + b) * (s + 2.0) * prev) /
                        (2.0 * (n + 1) * (n + a + b + 1.0) * s);
    c *= (n + 1 + a) / (n + 1);
    out[static_cast<std::size_t>(n) + 1] = next / c;
    prev = cur;
    cur = next;
  }
  return out;
}

double JacobiBasis::eval(int n, double x) const {
  check_degree(n);
  check_x(x);
  if (x == 1.0 || n == 0) return 1.0;
  return eval_all(n, x).back();
}

JacobiBasis ultraspherical22() { return JacobiBasis(2.0, 2.0); }

double QuadratureRule::integrate(const std::function<double(double)>& g) const {
  double s = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) s += weights[j] * g(nodes[j]);
  return s;
}

QuadratureRule gauss_chebyshev(int m) {
  if (m < 1) throw PreconditionError("Gauss-Chebyshev rule needs M >= 1");
  QuadratureRule r{RuleKind::chebyshev_first_kind, {}, {}};
  r.nodes.resize(static_cast<std::size_t>(m));
  r.weights.assign(static_cast<std::size_t>(m), std::numbers::pi / m);
  // Ascending order: j = M..1. Mirror pairs are set explicitly so the rule
  // is exactly symmetric.
  for (int i = 0; i < m; ++i) {
    const int j = m - i;
    r.nodes[static_cast<std::size_t>(i)] = std::cos((2.0 * j - 1.0) * std::numbers::pi / (2.0 * m));
  }
  for (int i = 0; i < m / 2; ++i) {
    r.nodes[static_cast<std::size_t>(m - 1 - i)] = -r.nodes[static_cast<std::size_t>(i)];
  }
  if (m % 2) r.nodes[static_cast<std::size_t>(m / 2)] = 0.0;
  return r;
}

QuadratureRule gauss_legendre(int m) {
  if (m < 1) throw PreconditionError("Gauss-Legendre rule needs M >= 1");
  QuadratureRule r{RuleKind::legendre, {}, {}};
  const auto sz = static_cast<std::size_t>(m);
  r.nodes.resize(sz);
  r.weights.resize(sz);

  // Legendre P_m and its derivative by the three-term recurrence.
  auto legendre = [m](double x, double& dp) {
    double p0 = 1.0, p1 = x;
    if (m == 0) {
      dp = 0.0;
      return 1.0;
    }
    for (int k = 2; k <= m; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = m * (x * p1 - p0) / (x * x - 1.0);
    return p1;
  };

  const int half = (m + 1) / 2;
  for (int i = 1; i <= half; ++i) {
    // Root i counted from x = 1 downwards.
    double x = std::cos(std::numbers::pi * (i - 0.25) / (m + 0.5));
    double dp = 0.0;
    bool settled = false;
    for (int it = 0; it < 100; ++it) {
      const double p = legendre(x, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-14) {
        settled = true;
        break;
      }
    }
    if (!settled) {
      throw ConvergenceError("Gauss-Legendre root " + std::to_string(i) + " of " +
                             std::to_string(m) + " did not converge");
    }
    if (m % 2 == 1 && i == half) x = 0.0;
    legendre(x, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto hi = static_cast<std::size_t>(m - i);
    const auto lo = static_cast<std::size_t>(i - 1);
    r.nodes[hi] = x;
    r.weights[hi] = w;
    r.nodes[lo] = -x;
    r.weights[lo] = w;
  }
  return r;
}

namespace {

template <QuadratureRule (*Build)(int)>
const QuadratureRule& cached_rule(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const QuadratureRule>> rules;
  std::lock_guard lock(mu);
  auto& slot = rules[m];
  if (!slot) slot = std::make_unique<const QuadratureRule>(Build(m));
  return *slot;
}

}  // namespace

const QuadratureRule& cached_gauss_chebyshev(int m) { return cached_rule<gauss_chebyshev>(m); }
const QuadratureRule& cached_gauss_legendre(int m) { return cached_rule<gauss_legendre>(m); }

int default_coefficient_quad_size(int n_max) { return 2 * (n_max + 8); }

std::vector<double> fourier_jacobi_coeffs(const SampledFunction& f, int n_max, int m) {
  check_degree(n_max);
  const auto& rule = cached_gauss_legendre(m);
  const auto& fx = f.on_grid("gl:" + std::to_string(m), rule.nodes);
  const JacobiBasis basis = ultraspherical22();
  std::vector<double> a(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double x = rule.nodes[j];
    const double s = (1.0 - x) * (1.0 + x);
    const double wf = rule.weights[j] * fx[j] * s * s;
    const auto p = basis.eval_all(n_max, x);
    for (std::size_t n = 0; n < a.size(); ++n) a[n] += wf * p[n];
  }
  return a;
}

double fourier_jacobi_coeff(const SampledFunction& f, int n, int m) {
  return fourier_jacobi_coeffs(f, n, m).back();
}

}  // namespace gtmod
