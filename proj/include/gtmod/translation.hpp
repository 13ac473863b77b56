#pragma once

// Asymmetric generalised translation
//
//   T_y f(x) = 1/(pi (1-x^2)) * int_{-1}^{1} K(x,y,z) f(R) dz / sqrt(1-z^2),
//   R        = x y - z sqrt(1-x^2) sqrt(1-y^2),
//   K        = 1 - R^2 - 2(1-y^2)(1-z^2) + 4(1-x^2)(1-y^2)(1-z^2)^2,
//
// and its angular form with y = cos t, z = cos(phi). Jacobi polynomials
// P_n^(2,2) are eigenfunctions: T_y P_n = R_n(y) P_n.

#include <optional>
#include <string>
#include <vector>

#include "gtmod/orthopoly.hpp"
#include "gtmod/sampled_function.hpp"

namespace gtmod {

/// T_y is only sampled for |x| <= 1 - kEdgeMargin.
inline constexpr double kEdgeMargin = 1e-6;
inline constexpr int kBlackBoxQuadSize = 128;

/// 1 - x^2, the factor that recurs throughout the operator.
inline double one_minus_sq(double x) { return (1.0 - x) * (1.0 + x); }

/// K(x, y, z). Throws DomainError outside [-1,1]^3.
double kernel_eval(double x, double y, double z);

/// max(16, ceil((deg + 5) / 2)) for known polynomials, 128 otherwise.
int default_translation_quad_size(const SampledFunction& f);

/// Quadrature evaluation of T_y with a fixed Gauss-Chebyshev rule.
struct Translator {
  int quad_size = kBlackBoxQuadSize;
  /// Multiplies the 1/(pi (1-x^2)) prefactor. Anything other than 1 is a
  /// deliberately broken operator used to test the property checks.
  double prefactor_scale = 1.0;

  double operator()(const SampledFunction& f, double y, double x) const;
  /// Angular form: y = cos t, sqrt(1-y^2) = sin t, z_j = cos(phi_j).
  double trig(const SampledFunction& f, double t, double x) const;
};

/// T_y f(x) with an m-node Chebyshev rule. Exact for polynomial f of
/// degree n when m >= ceil((n+5)/2).
double translate(const SampledFunction& f, double y, double x, int m);

/// hat T_t f(x), equal to translate(f, cos t, x, m) up to roundoff.
double translate_trig(const SampledFunction& f, double t, double x, int m);

/// x -> T_y f(x) as a function (evaluation throws EdgeError near +-1).
SampledFunction translated(const SampledFunction& f, double y, int m);

// ---------------------------------------------------------------------------
// Multiplier R_n(y) = F_{n+s}(y) + 3/2 (1-y^2) G_{n+r}(y), where F and G are
// normalised Jacobi families and s, r are degree offsets. Which families and
// offsets are the right ones is settled by calibrate_multiplier against the
// coefficient ratio a_n(T_y P_n) / a_n(P_n).

struct JacobiFamily {
  double alpha = 2.0;
  double beta = 2.0;
  int degree_offset = 0;

  /// P_{n+offset}(y), zero when the shifted degree is negative.
  double eval(int n, double y) const;
  bool operator==(const JacobiFamily&) const = default;
};

struct MultiplierCandidate {
  JacobiFamily first;
  JacobiFamily second;

  double eval(int n, double y) const;
  std::string label() const;
  bool operator==(const MultiplierCandidate&) const = default;
};

struct Multiplier {
  MultiplierCandidate form;
  bool validated = false;
};

/// Throws PreconditionError for an unvalidated multiplier.
double multiplier_eval(const Multiplier& mult, int n, double y);

/// a_n(T_y P_n^(2,2)) / a_n(P_n^(2,2)) with m-point rules for both the
/// translation and the coefficient integral.
double fit_multiplier(int n, double y, int m);

std::vector<MultiplierCandidate> default_multiplier_candidates();

/// 17 points spread uniformly over [-1, 1].
std::vector<double> default_calibration_grid();

struct CandidateResidual {
  MultiplierCandidate candidate;
  /// residual[n][j] = |candidate(n, y_j) - fit_multiplier(n, y_j)|
  std::vector<std::vector<double>> residual;
  double max_residual = 0.0;
  bool matches = false;
};

struct Calibration {
  Multiplier multiplier;  // validated iff exactly one candidate matches
  int n_max = 0;
  std::vector<double> y_grid;
  double tolerance = 1e-8;
  std::vector<CandidateResidual> table;
};

Calibration calibrate_multiplier(const std::vector<MultiplierCandidate>& candidates,
                                 int n_max, const std::vector<double>& y_grid,
                                 double tolerance = 1e-8);

/// Calibrated once per process over the default candidates (n_max = 8).
const Calibration& default_calibration();
const Multiplier& default_multiplier();

}  // namespace gtmod
