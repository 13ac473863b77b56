#include "gtmod/translation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gtmod/errors.hpp"

namespace gtmod {

namespace {

constexpr double kCubeSlack = 1e-12;

void check_unit(double v, const char* name) {
  if (!(std::abs(v) <= 1.0 + kCubeSlack)) {
    std::ostringstream msg;
    msg << name << " = " << v << " outside [-1, 1]";
    throw DomainError(msg.str());
  }
}

double safe_sqrt(double v) { return v > 0.0 ? std::sqrt(v) : 0.0; }

void check_translation_args(int m, double x) {
  if (m < 1) throw PreconditionError("translation quadrature size must be >= 1");
  if (!(std::abs(x) <= 1.0 - kEdgeMargin)) {
    std::ostringstream msg;
    msg << "translation evaluated at x = " << x << ", within " << kEdgeMargin << " of the edge";
    throw EdgeError(msg.str());
  }
}

// (1/(pi (1-x^2))) sum_j w_j K f(R) given y-side factors sqrt(1-y^2) and 1-y^2.
double apply(const SampledFunction& f, double x, double y, double sy, double s_y,
             int m, double prefactor_scale) {
  const auto& rule = cached_gauss_chebyshev(m);
  const double s_x = one_minus_sq(x);
  const double sx = std::sqrt(s_x);
  double sum = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double z = rule.nodes[j];
    const double s_z = one_minus_sq(z);
    const double r = x * y - z * sx * sy;
    const double k = 1.0 - r * r - 2.0 * s_y * s_z + 4.0 * s_x * s_y * s_z * s_z;
    sum += rule.weights[j] * k * f(r);
  }
  return prefactor_scale * sum / (std::numbers::pi * s_x);
}

}  // namespace

double kernel_eval(double x, double y, double z) {
  check_unit(x, "x");
  check_unit(y, "y");
  check_unit(z, "z");
  const double s_x = one_minus_sq(x), s_y = one_minus_sq(y), s_z = one_minus_sq(z);
  const double r = x * y - z * safe_sqrt(s_x) * safe_sqrt(s_y);
  return 1.0 - r * r - 2.0 * s_y * s_z + 4.0 * s_x * s_y * s_z * s_z;
}

int default_translation_quad_size(const SampledFunction& f) {
  if (const auto d = f.polynomial_degree()) return std::max(16, (*d + 6) / 2);
  return kBlackBoxQuadSize;
}

double Translator::operator()(const SampledFunction& f, double y, double x) const {
  check_translation_args(quad_size, x);
  check_unit(y, "y");
  const double s_y = std::max(0.0, one_minus_sq(y));
  return apply(f, x, y, std::sqrt(s_y), s_y, quad_size, prefactor_scale);
}

double Translator::trig(const SampledFunction& f, double t, double x) const {
  check_translation_args(quad_size, x);
  const double st = std::sin(t);
  return apply(f, x, std::cos(t), st, st * st, quad_size, prefactor_scale);
}

double translate(const SampledFunction& f, double y, double x, int m) {
  return Translator{m}(f, y, x);
}

double translate_trig(const SampledFunction& f, double t, double x, int m) {
  return Translator{m}.trig(f, t, x);
}

SampledFunction translated(const SampledFunction& f, double y, int m) {
  return SampledFunction([f, y, m](double x) { return translate(f, y, x, m); },
                         "T[" + f.name() + "]", f.polynomial_degree());
}

// ---------------------------------------------------------------------------

double JacobiFamily::eval(int n, double y) const {
  const int deg = n + degree_offset;
  if (deg < 0) return 0.0;
  return JacobiBasis(alpha, beta).eval(deg, y);
}

double MultiplierCandidate::eval(int n, double y) const {
  return first.eval(n, y) + 1.5 * one_minus_sq(y) * second.eval(n, y);
}

std::string MultiplierCandidate::label() const {
  auto fam = [](const JacobiFamily& f) {
    std::ostringstream s;
    s << "P^(" << f.alpha << "," << f.beta << ")_{n";
    if (f.degree_offset > 0) s << "+" << f.degree_offset;
    if (f.degree_offset < 0) s << f.degree_offset;
    s << "}(y)";
    return s.str();
  };
  return fam(first) + " + 3/2 (1-y^2) " + fam(second);
}

double multiplier_eval(const Multiplier& mult, int n, double y) {
  if (!mult.validated) {
    throw PreconditionError("multiplier " + mult.form.label() + " has not been validated");
  }
  return mult.form.eval(n, y);
}

double fit_multiplier(int n, double y, int m) {
  if (n < 0) throw PreconditionError("fit_multiplier needs n >= 0");
  const JacobiBasis basis = ultraspherical22();
  const SampledFunction pn([basis, n](double x) { return basis.eval(n, x); },
                           "P" + std::to_string(n), n);
  const double den = fourier_jacobi_coeff(pn, n, m);
  if (std::abs(den) < 1e-14) {
    throw std::runtime_error("diagonal Fourier-Jacobi coefficient vanished; quadrature too coarse");
  }
  return fourier_jacobi_coeff(translated(pn, y, m), n, m) / den;
}

std::vector<MultiplierCandidate> default_multiplier_candidates() {
  const JacobiFamily x_side{2.0, 2.0, 0};
  return {
      {{1.0, 1.0, 0}, x_side}, {{2.0, 2.0, 0}, x_side}, {{3.0, 1.0, 0}, x_side},
      {{0.0, 0.0, 2}, x_side}, {{1.0, 1.0, 2}, x_side}, {{2.0, 2.0, 2}, x_side},
  };
}

std::vector<double> default_calibration_grid() {
  std::vector<double> g(17);
  for (int j = 0; j < 17; ++j) g[static_cast<std::size_t>(j)] = -1.0 + j / 8.0;
  return g;
}

Calibration calibrate_multiplier(const std::vector<MultiplierCandidate>& candidates, int n_max,
                                 const std::vector<double>& y_grid, double tolerance) {
  if (candidates.empty()) throw PreconditionError("calibration needs at least one candidate");
  if (n_max < 0) throw PreconditionError("calibration needs n_max >= 0");
  if (y_grid.empty()) throw PreconditionError("calibration needs a non-empty y grid");

  const int m = default_coefficient_quad_size(n_max);
  std::vector<std::vector<double>> oracle(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    for (double y : y_grid) oracle[static_cast<std::size_t>(n)].push_back(fit_multiplier(n, y, m));
  }

  Calibration cal;
  cal.n_max = n_max;
  cal.y_grid = y_grid;
  cal.tolerance = tolerance;
  int matches = 0;
  for (const auto& c : candidates) {
    CandidateResidual row{c, {}, 0.0, false};
    for (int n = 0; n <= n_max; ++n) {
      std::vector<double> res;
      for (std::size_t j = 0; j < y_grid.size(); ++j) {
        const double r = std::abs(c.eval(n, y_grid[j]) - oracle[static_cast<std::size_t>(n)][j]);
        res.push_back(r);
        row.max_residual = std::max(row.max_residual, r);
      }
      row.residual.push_back(std::move(res));
    }
    row.matches = row.max_residual <= tolerance;
    if (row.matches) {
      ++matches;
      cal.multiplier.form = c;
    }
    cal.table.push_back(std::move(row));
  }
  cal.multiplier.validated = matches == 1;
  if (matches != 1) cal.multiplier.form = candidates.front();
  return cal;
}

const Calibration& default_calibration() {
  static const Calibration cal =
      calibrate_multiplier(default_multiplier_candidates(), 8, default_calibration_grid());
  return cal;
}

const Multiplier& default_multiplier() { return default_calibration().multiplier; }

}  // namespace gtmod
