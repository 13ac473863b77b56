#pragma once

// Weighted spaces L_{p,alpha}: functions with f(x) (1-x^2)^alpha in L_p[-1,1].

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gtmod/sampled_function.hpp"

namespace gtmod {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct WeightedSpace {
  double p = 2.0;
  double alpha = 1.0;

  bool uniform() const noexcept { return p == kInfinity; }
  /// (1 - x^2)^alpha
  double weight(double x) const;
};

struct ParamVerdict {
  bool valid = true;
  /// Every violated clause, e.g. "alpha > 1/2" or "lambda < 2".
  std::vector<std::string> violated;

  explicit operator bool() const noexcept { return valid; }
};

/// Checks the admissible region
///   p = 1:        1/2 < alpha <= 1
///   1 < p < inf:  1 - 1/(2p) < alpha < 3/2 - 1/(2p)
///   p = inf:      1 <= alpha < 3/2
/// and, when lambda is given, 0 < lambda < 2.
ParamVerdict validate_params(const WeightedSpace& space,
                             std::optional<double> lambda = std::nullopt);

/// Throws PreconditionError listing the violated clauses.
void require_valid(const WeightedSpace& space);

inline constexpr int kDefaultNormResolution = 256;
inline constexpr int kDefaultUniformResolution = 4097;

int default_norm_resolution(const WeightedSpace& space);

/// Points cos(k pi / (n - 1)), k = 0..n-1, ascending, endpoints included.
std::vector<double> chebyshev_grid(int n);

struct NormOptions {
  int resolution = 0;  // 0 selects default_norm_resolution(space)
  /// Skip sample points with |x| > 1 - interior_margin (p = inf grid only).
  double interior_margin = 0.0;
};

/// ||f(x)(1-x^2)^alpha||_p. Gauss-Legendre with `resolution` nodes for
/// p < inf; max over a Chebyshev grid of `resolution` points for p = inf.
/// Throws NonFiniteError naming the first offending x.
double weighted_norm(const SampledFunction& f, const WeightedSpace& space,
                     const NormOptions& opts = {});
double weighted_norm(const SampledFunction& f, const WeightedSpace& space, int resolution);

/// Sum in a fixed pairwise tree, independent of evaluation order.
double pairwise_sum(const double* v, std::size_t n);

}  // namespace gtmod
