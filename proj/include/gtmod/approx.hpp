#pragma once

// Best approximation E_n(f) = inf ||f - P|| over polynomials P of degree
// <= n - 1 in L_{p,alpha}, with the norm discretised on a fixed grid.

#include <string>
#include <vector>

#include "gtmod/polynomial.hpp"
#include "gtmod/sampled_function.hpp"
#include "gtmod/weighted_space.hpp"

namespace gtmod {

enum class Solver { projection, exchange, irls };

std::string to_string(Solver s);

struct ApproxOptions {
  int legendre_grid = 1025;  // p < inf
  int uniform_grid = 4097;   // p = inf, Chebyshev distributed
  int exchange_max_iter = 100;
  int irls_max_iter = 200;
  double irls_clip = 1e-10;
  /// Target relative optimality gap for the iterative solvers.
  double target_gap = 1e-9;
};

struct BestApproxResult {
  int n = 0;
  double value = 0.0;             // discrete weighted norm of f - polynomial
  ChebyshevSeries polynomial;     // degree <= n - 1
  Solver solver = Solver::projection;
  int iterations = 0;
  double gap = 0.0;               // relative: (value - lower bound) / value
  bool converged = true;
  int grid_size = 0;

  // Exchange solver only: final reference and whether the weighted error
  // equioscillates on it (n + 1 alternating points within 1e-6 * value).
  std::vector<double> reference;
  bool equioscillation = false;

  double absolute_gap() const { return gap * value; }
};

/// Norm resolution that reproduces the solver's discrete norm through
/// weighted_norm (1025 for p < inf, 4097 for p = inf by default).
int approx_norm_resolution(const WeightedSpace& space, const ApproxOptions& opts = {});

/// Requires n >= 1 and a space accepted by validate_params.
BestApproxResult best_approx(const SampledFunction& f, int n, const WeightedSpace& space,
                             const ApproxOptions& opts = {});

struct ApproxSequence {
  std::vector<BestApproxResult> results;  // results[k] holds E_{k+1}
  /// nu with E_{nu+1} > E_nu + 1e-9, in ascending order.
  std::vector<int> monotonicity_violations;

  double e(int nu) const { return results.at(static_cast<std::size_t>(nu - 1)).value; }
  int n_max() const { return static_cast<int>(results.size()); }
};

ApproxSequence best_approx_sequence(const SampledFunction& f, int n_max,
                                    const WeightedSpace& space, const ApproxOptions& opts = {});

}  // namespace gtmod
