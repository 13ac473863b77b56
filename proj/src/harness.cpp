#include "gtmod/harness.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gtmod/errors.hpp"
#include "gtmod/orthopoly.hpp"
#include "gtmod/translation.hpp"

namespace gtmod {

namespace {

// Magnitudes below this are roundoff from quantities that vanish exactly.
constexpr double kRoundoffFloor = 1e-13;

std::vector<double> interior_grid(int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    g[static_cast<std::size_t>(i)] = -std::cos((2.0 * i + 1.0) * std::numbers::pi / (2.0 * n));
  }
  return g;
}

}  // namespace

SampledFunction random_polynomial(int degree, std::uint64_t seed) {
  if (degree < 0) throw PreconditionError("random polynomial degree must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (double& v : c) v = coeff(rng);
  return ChebyshevSeries(std::move(c)).as_function("randpoly");
}

SampledFunction make_test_function(const std::string& spec, std::uint64_t seed) {
  if (spec == "one") return SampledFunction([](double) { return 1.0; }, spec, 0);
  if (spec == "x") return SampledFunction([](double x) { return x; }, spec, 1);
  if (spec == "x2") return SampledFunction([](double x) { return x * x; }, spec, 2);
  if (spec == "abs") return SampledFunction([](double x) { return std::abs(x); }, spec);
  if (spec == "signpow15") {
    return SampledFunction([](double x) { return std::copysign(std::pow(std::abs(x), 1.5), x); }, spec);
  }
  if (spec == "abs_shift") return SampledFunction([](double x) { return std::abs(x - 0.25); }, spec);
  if (spec.rfind("randpoly:", 0) == 0) {
    return random_polynomial(std::stoi(spec.substr(9)), seed);
  }
  // Power-basis coefficients.
  std::vector<double> coeffs;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("unknown function: " + spec);
    coeffs.push_back(v);
  }
  if (coeffs.empty()) throw std::invalid_argument("unknown function: " + spec);
  return ChebyshevSeries::from_monomial(coeffs).as_function("poly");
}

// ---------------------------------------------------------------------------

bool Lemma1Report::all_passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

Lemma1Report verify_lemma1(const Lemma1Options& opts) {
  if (opts.n_max < 0 || opts.n_max > 20) throw PreconditionError("verify_lemma1 needs 0 <= n_max <= 20");
  const auto xs = interior_grid(opts.grid);
  const auto ys = interior_grid(opts.grid);
  const JacobiBasis basis = ultraspherical22();
  auto op_for = [&](const SampledFunction& f) {
    return Translator{default_translation_quad_size(f), opts.prefactor_scale};
  };

  Lemma1Report rep;
  auto record = [&rep](int idx, const char* name, double residual, double tol) {
    rep.properties.push_back({idx, name, residual, tol, std::isfinite(residual) && residual <= tol});
  };

  {  // 1. linearity in f
    const auto f = random_polynomial(opts.n_max, opts.seed);
    const auto g = random_polynomial(opts.n_max, opts.seed + 1);
    const double a = 1.7, b = -0.6;
    const auto h = linear_combination(a, f, b, g);
    const auto op = op_for(h);
    double res = 0.0;
    for (double x : xs) {
      for (double y : ys) res = std::max(res, std::abs(op(h, y, x) - (a * op(f, y, x) + b * op(g, y, x))));
    }
    record(1, "linearity", res, opts.tol_linearity);
  }

  {  // 2. T_1 f = f
    double res = 0.0;
    for (int d = 0; d <= opts.n_max; ++d) {
      const auto f = random_polynomial(d, opts.seed + 10 + static_cast<std::uint64_t>(d));
      const auto op = op_for(f);
      for (double x : xs) res = std::max(res, std::abs(op(f, 1.0, x) - f(x)));
    }
    record(2, "identity at y = 1", res, opts.tol_identity);
  }

  {  // 3. T_y P_n(x) = P_n(x) R_n(y): rank one with x-profile P_n
    double res = 0.0;
    const auto rows = static_cast<Eigen::Index>(xs.size());
    const auto cols = static_cast<Eigen::Index>(ys.size());
    for (int n = 0; n <= std::min(12, opts.n_max); ++n) {
      const SampledFunction p([basis, n](double x) { return basis.eval(n, x); }, "P", n);
      const auto op = op_for(p);
      Eigen::MatrixXd a(rows, cols);
      Eigen::VectorXd profile(rows);
      for (Eigen::Index i = 0; i < rows; ++i) {
        profile(i) = p(xs[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < cols; ++j) {
          a(i, j) = op(p, ys[static_cast<std::size_t>(j)], xs[static_cast<std::size_t>(i)]);
        }
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
      const auto s = svd.singularValues();
      const double ratio = s.size() > 1 && s(0) > 0.0 ? s(1) / s(0) : 0.0;
      Eigen::VectorXd u = svd.matrixU().col(0);
      profile.normalize();
      if (u.dot(profile) < 0.0) u = -u;
      res = std::max({res, ratio, (u - profile).norm()});
    }
    record(3, "rank-one eigenfunction factorisation", res, opts.tol_rank_one);
  }

  {  // 4. T_y 1 = 1
    const auto one = constant_function(1.0);
    const auto op = op_for(one);
    std::vector<double> yy = ys;
    yy.push_back(-1.0);
    yy.push_back(1.0);
    double res = 0.0;
    for (double x : xs) {
      for (double y : yy) res = std::max(res, std::abs(op(one, y, x) - 1.0));
    }
    record(4, "constant preservation", res, opts.tol_constant);
  }

  {  // 5. a_k(T_y f) = R_k(y) a_k(f)
    const int deg = std::min(opts.multiplier_degree, opts.n_max);
    const auto f = random_polynomial(deg, opts.seed + 99);
    const int m = default_coefficient_quad_size(deg);
    const auto af = fourier_jacobi_coeffs(f, deg, m);
    const auto op = op_for(f);
    const auto& mult = default_multiplier();
    double res = mult.validated ? 0.0 : kInfinity;
    const int ny = opts.multiplier_y_points;
    for (int j = 0; j < ny && mult.validated; ++j) {
      const double y = ny == 1 ? 0.0 : -1.0 + 2.0 * j / (ny - 1);
      const SampledFunction ty([&](double x) { return op(f, y, x); }, "Tf", deg);
      const auto at = fourier_jacobi_coeffs(ty, deg, m);
      for (int k = 0; k <= deg; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        res = std::max(res, std::abs(at[kk] - multiplier_eval(mult, k, y) * af[kk]));
      }
    }
    record(5, "coefficient multiplier", res, opts.tol_multiplier);
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<ConverseTableRow> converse_table(const SampledFunction& f, const std::vector<int>& n_list,
                                             const WeightedSpace& space,
                                             const ExperimentOptions& opts) {
  require_valid(space);
  if (n_list.empty()) return {};
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1 || (i && n_list[i] <= n_list[i - 1])) {
      throw PreconditionError("converse_table needs a strictly ascending list of n >= 1");
    }
  }
  const auto seq = best_approx_sequence(f, n_list.back(), space, opts.approx);
  std::vector<ConverseTableRow> rows;
  for (int n : n_list) {
    ConverseTableRow row;
    row.n = n;
    row.omega = modulus_omega(f, 1.0 / n, space, opts.modulus).value;
    for (int nu = 1; nu <= n; ++nu) {
      const double e = seq.e(nu);
      if (e > kRoundoffFloor) row.rhs_sum += nu * e;
    }
    if (row.omega <= kRoundoffFloor) {
      row.ratio = 0.0;
    } else {
      row.ratio = row.rhs_sum > 0.0 ? row.omega * n * n / row.rhs_sum : kInfinity;
    }
    rows.push_back(row);
  }
  return rows;
}

RatioBoundedness ratio_boundedness(const std::vector<ConverseTableRow>& rows) {
  RatioBoundedness b;
  if (rows.empty()) return b;
  std::vector<double> r;
  for (const auto& row : rows) r.push_back(row.ratio);
  std::vector<double> sorted = r;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t k = sorted.size();
  const double median = k % 2 ? sorted[k / 2] : 0.5 * (sorted[k / 2 - 1] + sorted[k / 2]);
  const double max = sorted.back();
  if (median > 0.0) {
    b.max_over_median = max / median;
  } else {
    b.max_over_median = max == 0.0 ? 1.0 : kInfinity;
  }
  if (k >= 3) {
    const double a = r[k - 3], m = r[k - 2], z = r[k - 1];
    b.increasing_tail = a < m && m < z;
    b.monotone_growth = b.increasing_tail && (z - m) >= (m - a);
  }
  return b;
}

// ---------------------------------------------------------------------------

int dyadic_exponent(int n) {
  if (n < 2) throw PreconditionError("dyadic decomposition needs n >= 2");
  return static_cast<int>(std::bit_width(static_cast<unsigned>(n) + 1u)) - 1;
}

bool DyadicDecomposition::all_hold() const {
  auto ok = [](const std::vector<InequalityCheck>& v) {
    return std::all_of(v.begin(), v.end(), [](const InequalityCheck& c) { return c.holds; });
  };
  return ok(triangle) && ok(block_sum) && ok(chain_checks);
}

DyadicDecomposition dyadic_bound(const SampledFunction& f, int n, const WeightedSpace& space,
                                 const ApproxOptions& opts) {
  require_valid(space);
  DyadicDecomposition d;
  d.n = n;
  d.N = dyadic_exponent(n);
  const int top = 1 << d.N;
  const auto seq = best_approx_sequence(f, std::max(n, top), space, opts);
  auto e = [&](int nu) { return seq.e(nu); };
  auto gap = [&](int nu) { return seq.results[static_cast<std::size_t>(nu - 1)].absolute_gap(); };
  auto poly = [&](int nu) { return seq.results[static_cast<std::size_t>(nu - 1)].polynomial; };
  auto check = [](int idx, double lhs, double rhs, double budget) {
    const double slack = budget + 1e-12 * std::max(1.0, std::abs(rhs));
    return InequalityCheck{idx, lhs, rhs, slack, lhs <= rhs + slack};
  };

  const int res = approx_norm_resolution(space, opts);
  for (int k = 0; k <= d.N; ++k) {
    const int nu = 1 << k;
    d.e_dyadic.push_back(e(nu));
    const ChebyshevSeries q = k == 0 ? poly(1) : poly(nu) - poly(nu / 2);
    d.block_norms.push_back(weighted_norm(q.as_function("Q"), space, res));
    if (k >= 1) {
      d.triangle.push_back(check(k, d.block_norms.back(), e(nu) + e(nu / 2), 2.0 * (gap(nu) + gap(nu / 2))));
    }
  }

  for (int mu = 1; mu <= d.N; ++mu) {
    const int lo = 1 << (mu - 1), hi = (1 << mu) - 1;
    const double scale = std::ldexp(1.0, 2 * (mu - 1));
    double sum = 0.0, budget = scale * gap(1 << mu);
    for (int nu = lo; nu <= hi; ++nu) {
      sum += nu * e(nu);
      budget += nu * gap(nu);
    }
    d.block_sum.push_back(check(mu, scale * e(1 << mu), sum, budget));
  }

  // Successive bounds of the proof, each computable from the E sequence.
  const double inv_n2 = 1.0 / (static_cast<double>(n) * n);
  double a_sum = 0.0, b_sum = 0.0, c_sum = 0.0, blocks = 0.0, g_sum = 0.0, gap_sum = 0.0;
  for (int mu = 1; mu <= d.N; ++mu) {
    const double w = std::ldexp(1.0, 2 * mu);
    a_sum += w * d.block_norms[static_cast<std::size_t>(mu)];
    b_sum += w * (e(1 << mu) + e(1 << (mu - 1)));
    c_sum += w * e(1 << (mu - 1));
    for (int nu = 1 << (mu - 1); nu < (1 << mu); ++nu) blocks += nu * e(nu);
  }
  for (int nu = 1; nu <= std::max(n, top); ++nu) {
    if (nu <= n) g_sum += nu * e(nu);
    gap_sum += nu * gap(nu);
  }
  const double e_top = e(top);
  const double d_sum = c_sum + std::ldexp(1.0, 2 * (d.N + 1)) * e_top;
  d.chain = {
      {"E_{2^N} + n^-2 sum 2^{2mu} ||Q_mu||", e_top + inv_n2 * a_sum},
      {"E_{2^N} + n^-2 sum 2^{2mu} (E_{2^mu} + E_{2^{mu-1}})", e_top + inv_n2 * b_sum},
      {"E_{2^N} + n^-2 sum_{mu<N} 2^{2(mu+1)} E_{2^mu}", e_top + inv_n2 * c_sum},
      {"n^-2 sum_{mu<=N} 2^{2(mu+1)} E_{2^mu}", inv_n2 * d_sum},
      {"n^-2 (4 E_1 + sum_mu sum_nu nu E_nu)", inv_n2 * (4.0 * e(1) + blocks)},
      {"n^-2 sum_{nu<=n} nu E_nu", inv_n2 * g_sum},
  };
  const double budget = 16.0 * inv_n2 * gap_sum + 2.0 * gap(top);
  const double factors[] = {1.0, 2.0, 1.0, 16.0, 5.0};
  for (std::size_t i = 0; i + 1 < d.chain.size(); ++i) {
    d.chain_checks.push_back(check(static_cast<int>(i) + 1, d.chain[i].value,
                                   factors[i] * d.chain[i + 1].value, budget));
  }
  return d;
}

// ---------------------------------------------------------------------------

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw PreconditionError("slope fit needs two or more points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ClassFit class_fit(const SampledFunction& f, const WeightedSpace& space, int n_max,
                   std::optional<double> lambda, const ExperimentOptions& opts) {
  const auto verdict = validate_params(space, lambda);
  if (!verdict.valid) {
    std::string msg = "class_fit parameters violate";
    for (const auto& c : verdict.violated) msg += " [" + c + "]";
    throw PreconditionError(msg);
  }
  ClassFit fit;
  for (int n = 4; n <= n_max; n *= 2) fit.n_values.push_back(n);
  if (fit.n_values.size() < 2) throw PreconditionError("class_fit needs n_max >= 8");

  const double fnorm = weighted_norm(f, space, approx_norm_resolution(space, opts.approx));
  std::vector<double> log_n, log_e, log_d, log_w;
  for (int n : fit.n_values) {
    const double e = best_approx(f, n, space, opts.approx).value;
    const double w = modulus_omega(f, 1.0 / n, space, opts.modulus).value;
    fit.e_values.push_back(e);
    fit.omega_values.push_back(w);
    if (e <= 1e-12 * std::max(1.0, fnorm)) {
      fit.degenerate = true;
      fit.note = "E_" + std::to_string(n) + " vanishes; f is a polynomial of degree < n";
    } else if (w <= kRoundoffFloor) {
      fit.degenerate = true;
      fit.note = "omega(f, 1/" + std::to_string(n) + ") vanishes";
    }
    log_n.push_back(std::log(static_cast<double>(n)));
    log_d.push_back(-std::log(static_cast<double>(n)));
    log_e.push_back(std::log(e));
    log_w.push_back(std::log(w));
  }
  if (fit.degenerate) return fit;
  fit.approx_exponent = -fit_slope(log_n, log_e);
  fit.modulus_exponent = fit_slope(log_d, log_w);
  fit.difference = fit.approx_exponent - fit.modulus_exponent;
  return fit;
}

}  // namespace gtmod
