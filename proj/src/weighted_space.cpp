#include "gtmod/weighted_space.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gtmod/errors.hpp"
#include "gtmod/orthopoly.hpp"

namespace gtmod {

double WeightedSpace::weight(double x) const {
  const double s = (1.0 - x) * (1.0 + x);
  if (alpha == 1.0) return s;
  return s <= 0.0 ? (alpha == 0.0 ? 1.0 : 0.0) : std::pow(s, alpha);
}

ParamVerdict validate_params(const WeightedSpace& space, std::optional<double> lambda) {
  ParamVerdict v;
  auto require = [&v](bool ok, const char* clause) {
    if (!ok) {
      v.valid = false;
      v.violated.emplace_back(clause);
    }
  };

  const double p = space.p;
  const double a = space.alpha;
  if (!(p >= 1.0)) {
    require(false, "p >= 1");
  } else if (p == 1.0) {
    require(a > 0.5, "alpha > 1/2");
    require(a <= 1.0, "alpha <= 1");
  } else if (p == kInfinity) {
    require(a >= 1.0, "alpha >= 1");
    require(a < 1.5, "alpha < 3/2");
  } else {
    require(a > 1.0 - 1.0 / (2.0 * p), "alpha > 1 - 1/(2p)");
    require(a < 1.5 - 1.0 / (2.0 * p), "alpha < 3/2 - 1/(2p)");
  }
  if (lambda) {
    require(*lambda > 0.0, "lambda > 0");
    require(*lambda < 2.0, "lambda < 2");
  }
  return v;
}

void require_valid(const WeightedSpace& space) {
  const auto v = validate_params(space);
  if (v.valid) return;
  std::ostringstream msg;
  msg << "space (p=" << space.p << ", alpha=" << space.alpha << ") violates";
  for (const auto& c : v.violated) msg << " [" << c << "]";
  throw PreconditionError(msg.str());
}

int default_norm_resolution(const WeightedSpace& space) {
  return space.uniform() ? kDefaultUniformResolution : kDefaultNormResolution;
}

std::vector<double> chebyshev_grid(int n) {
  if (n < 2) throw PreconditionError("Chebyshev grid needs at least two points");
  std::vector<double> g(static_cast<std::size_t>(n));
  const int last = n - 1;
  for (int k = 0; k < n; ++k) {
    g[static_cast<std::size_t>(k)] = -std::cos(std::numbers::pi * k / last);
  }
  // Exact endpoints and mirror symmetry.
  for (int k = 0; k <= last / 2; ++k) {
    g[static_cast<std::size_t>(last - k)] = -g[static_cast<std::size_t>(k)];
  }
  if (last % 2 == 0) g[static_cast<std::size_t>(last / 2)] = 0.0;
  g.front() = -1.0;
  g.back() = 1.0;
  return g;
}

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

namespace {

void check_finite(double value, double x) {
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "non-finite sample " << value << " at x = " << x;
    throw NonFiniteError(msg.str(), x);
  }
}

}  // namespace

double weighted_norm(const SampledFunction& f, const WeightedSpace& space,
                     const NormOptions& opts) {
  if (!(space.p >= 1.0)) throw PreconditionError("weighted_norm needs p >= 1");
  const int res = opts.resolution ? opts.resolution : default_norm_resolution(space);
  if (res < 16) throw PreconditionError("weighted_norm resolution must be at least 16");

  if (space.uniform()) {
    const auto grid = chebyshev_grid(res);
    double best = 0.0;
    for (double x : grid) {
      if (std::abs(x) > 1.0 - opts.interior_margin) continue;
      const double w = space.weight(x);
      if (w == 0.0) continue;
      const double v = f(x);
      check_finite(v, x);
      best = std::max(best, std::abs(v * w));
    }
    return best;
  }

  const auto& rule = cached_gauss_legendre(res);
  std::vector<double> terms(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double x = rule.nodes[j];
    const double v = f(x);
    check_finite(v, x);
    terms[j] = rule.weights[j] * std::pow(std::abs(v * space.weight(x)), space.p);
  }
  return std::pow(pairwise_sum(terms.data(), terms.size()), 1.0 / space.p);
}

double weighted_norm(const SampledFunction& f, const WeightedSpace& space, int resolution) {
  return weighted_norm(f, space, NormOptions{resolution, 0.0});
}

}  // namespace gtmod
