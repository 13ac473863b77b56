#pragma once

#include <vector>

#include "gtmod/sampled_function.hpp"
#include "gtmod/weighted_space.hpp"

namespace gtmod {

struct ModulusOptions {
  int t_grid = 33;         // odd, >= 3
  int quad_size = 0;       // 0: default_translation_quad_size(f)
  int norm_resolution = 0; // 0: default_norm_resolution(space)
};

struct ModulusReport {
  double delta = 0.0;
  double value = 0.0;
  double argmax_t = 0.0;
  int t_grid_size = 0;
  int norm_resolution = 0;
  int quad_size = 0;
};

/// omega(f, delta) = sup_{|t| <= delta} ||hat T_t f - f||, the sup taken over
/// a uniform grid on [-delta, delta] with both endpoints.
ModulusReport modulus_omega(const SampledFunction& f, double delta, const WeightedSpace& space,
                            const ModulusOptions& opts = {});

struct ModulusCurve {
  std::vector<ModulusReport> reports;
  /// Indices i with reports[i].value < reports[i-1].value - 1e-12.
  std::vector<int> monotonicity_violations;
};

/// deltas must be positive and ascending.
ModulusCurve modulus_curve(const SampledFunction& f, const std::vector<double>& deltas,
                           const WeightedSpace& space, const ModulusOptions& opts = {});

}  // namespace gtmod
