#include "gtmod/modulus.hpp"

#include <cmath>

#include "gtmod/errors.hpp"
#include "gtmod/translation.hpp"

namespace gtmod {

ModulusReport modulus_omega(const SampledFunction& f, double delta, const WeightedSpace& space,
                            const ModulusOptions& opts) {
  if (!(delta >= 0.0)) throw PreconditionError("modulus needs delta >= 0");
  if (opts.t_grid < 3 || opts.t_grid % 2 == 0) {
    throw PreconditionError("modulus t-grid must be odd and at least 3");
  }
  require_valid(space);

  ModulusReport rep;
  rep.delta = delta;
  rep.t_grid_size = opts.t_grid;
  rep.quad_size = opts.quad_size ? opts.quad_size : default_translation_quad_size(f);
  rep.norm_resolution = opts.norm_resolution ? opts.norm_resolution : default_norm_resolution(space);

  const Translator op{rep.quad_size};
  const NormOptions norm{rep.norm_resolution, kEdgeMargin};
  const int last = opts.t_grid - 1;
  for (int k = 0; k <= last; ++k) {
    const double t = delta * (2.0 * k - last) / last;
    // hat T_0 is the identity, so t = 0 contributes nothing.
    if (t == 0.0) continue;
    const SampledFunction diff([&](double x) { return op.trig(f, t, x) - f(x); }, "dT");
    const double v = weighted_norm(diff, space, norm);
    if (v > rep.value) {
      rep.value = v;
      rep.argmax_t = t;
    }
  }
  return rep;
}

ModulusCurve modulus_curve(const SampledFunction& f, const std::vector<double>& deltas,
                           const WeightedSpace& space, const ModulusOptions& opts) {
  ModulusCurve curve;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0) || (i && deltas[i] < deltas[i - 1])) {
      throw PreconditionError("modulus curve needs positive ascending deltas");
    }
    curve.reports.push_back(modulus_omega(f, deltas[i], space, opts));
    if (i && curve.reports[i].value < curve.reports[i - 1].value - 1e-12) {
      curve.monotonicity_violations.push_back(static_cast<int>(i));
    }
  }
  return curve;
}

}  // namespace gtmod
