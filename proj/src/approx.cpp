#include "gtmod/approx.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gtmod/errors.hpp"
#include "gtmod/orthopoly.hpp"

namespace gtmod {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct DiscreteProblem {
  std::vector<double> x;
  std::vector<double> quad;    // quadrature weights, p < inf only
  VectorXd weight;             // (1 - x^2)^alpha
  VectorXd f;
  MatrixXd basis;              // T_j(x_i), j < n
};

MatrixXd chebyshev_matrix(const std::vector<double>& x, int cols) {
  MatrixXd v(static_cast<Eigen::Index>(x.size()), cols);
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const double t = x[static_cast<std::size_t>(i)];
    if (cols > 0) v(i, 0) = 1.0;
    if (cols > 1) v(i, 1) = t;
    for (int j = 2; j < cols; ++j) v(i, j) = 2.0 * t * v(i, j - 1) - v(i, j - 2);
  }
  return v;
}

DiscreteProblem discretise(const SampledFunction& f, int n, const WeightedSpace& space,
                           const ApproxOptions& opts) {
  DiscreteProblem d;
  const std::vector<double>* fx = nullptr;
  if (space.uniform()) {
    d.x = chebyshev_grid(opts.uniform_grid);
    fx = &f.on_grid("cheb:" + std::to_string(opts.uniform_grid), d.x);
  } else {
    const auto& rule = cached_gauss_legendre(opts.legendre_grid);
    d.x = rule.nodes;
    d.quad = rule.weights;
    fx = &f.on_grid("gl:" + std::to_string(opts.legendre_grid), d.x);
  }
  const auto m = static_cast<Eigen::Index>(d.x.size());
  if (n > m / 2) throw PreconditionError("degree bound too large for the approximation grid");
  d.weight.resize(m);
  d.f.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double xi = d.x[static_cast<std::size_t>(i)];
    const double fi = (*fx)[static_cast<std::size_t>(i)];
    if (!std::isfinite(fi)) {
      std::ostringstream msg;
      msg << "non-finite sample " << fi << " at x = " << xi;
      throw NonFiniteError(msg.str(), xi);
    }
    d.weight(i) = space.weight(xi);
    d.f(i) = fi;
  }
  d.basis = chebyshev_matrix(d.x, n);
  return d;
}

ChebyshevSeries to_series(const VectorXd& c) {
  return ChebyshevSeries(std::vector<double>(c.data(), c.data() + c.size()));
}

double lp_value(const VectorXd& rho, const std::vector<double>& quad, double p) {
  std::vector<double> t(static_cast<std::size_t>(rho.size()));
  for (Eigen::Index i = 0; i < rho.size(); ++i) {
    t[static_cast<std::size_t>(i)] = quad[static_cast<std::size_t>(i)] * std::pow(std::abs(rho(i)), p);
  }
  return std::pow(pairwise_sum(t.data(), t.size()), 1.0 / p);
}

// Weighted least squares: minimise sum_i (s_i (f_i - (V c)_i))^2.
VectorXd weighted_lsq(const DiscreteProblem& d, const VectorXd& row_scale) {
  const MatrixXd a = row_scale.asDiagonal() * d.basis;
  const VectorXd b = row_scale.cwiseProduct(d.f);
  return a.colPivHouseholderQr().solve(b);
}

BestApproxResult solve_projection(const DiscreteProblem& d, int n, const WeightedSpace& space) {
  const auto m = d.weight.size();
  VectorXd scale(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    scale(i) = std::sqrt(d.quad[static_cast<std::size_t>(i)]) * d.weight(i);
  }
  const VectorXd c = n ? weighted_lsq(d, scale) : VectorXd();
  const VectorXd rho = d.weight.cwiseProduct(d.f - d.basis * c);

  BestApproxResult r;
  r.n = n;
  r.solver = Solver::projection;
  r.iterations = 1;
  r.value = lp_value(rho, d.quad, space.p);
  r.polynomial = to_series(c);
  r.gap = 0.0;
  r.converged = true;
  r.grid_size = static_cast<int>(m);
  return r;
}

// ---------------------------------------------------------------------------
// Discrete exchange on the weighted error e = w (f - P) over the grid points
// where the weight is positive.

struct Extremum {
  Eigen::Index index;
  double value;
};

// One extremum per run of constant error sign, scanning the grid in order.
std::vector<Extremum> alternating_extrema(const VectorXd& e, const std::vector<Eigen::Index>& active,
                                          double floor_abs) {
  std::vector<Extremum> out;
  int run_sign = 0;
  for (Eigen::Index i : active) {
    const double v = e(i);
    if (std::abs(v) < floor_abs || v == 0.0) continue;
    const int s = v > 0 ? 1 : -1;
    if (s != run_sign) {
      out.push_back({i, v});
      run_sign = s;
    } else if (std::abs(v) > std::abs(out.back().value)) {
      out.back() = {i, v};
    }
  }
  return out;
}

BestApproxResult solve_exchange(const DiscreteProblem& d, int n, const ApproxOptions& opts) {
  const auto m = d.weight.size();
  std::vector<Eigen::Index> active;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (d.weight(i) > 0.0) active.push_back(i);
  }
  const VectorXd wf = d.weight.cwiseProduct(d.f);
  const double scale = std::max(1.0, wf.cwiseAbs().maxCoeff());

  // Initial reference near the zeros of T_{n+1}.
  std::vector<Eigen::Index> ref;
  for (int k = 0; k <= n; ++k) {
    const double target = -std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * (n + 1)));
    auto it = std::min_element(active.begin(), active.end(), [&](Eigen::Index a, Eigen::Index b) {
      return std::abs(d.x[static_cast<std::size_t>(a)] - target) <
             std::abs(d.x[static_cast<std::size_t>(b)] - target);
    });
    Eigen::Index idx = *it;
    if (!ref.empty() && idx <= ref.back()) idx = ref.back() + 1;
    ref.push_back(idx);
  }

  BestApproxResult r;
  r.n = n;
  r.solver = Solver::exchange;
  r.grid_size = static_cast<int>(m);
  r.converged = false;

  VectorXd best_c = VectorXd::Zero(n);
  double best_value = wf.cwiseAbs().maxCoeff();
  double lower = 0.0;
  VectorXd best_err = wf;

  for (int it = 1; it <= opts.exchange_max_iter; ++it) {
    r.iterations = it;
    MatrixXd sys(n + 1, n + 1);
    VectorXd rhs(n + 1);
    for (int k = 0; k <= n; ++k) {
      const Eigen::Index i = ref[static_cast<std::size_t>(k)];
      sys.row(k).head(n) = d.weight(i) * d.basis.row(i);
      sys(k, n) = k % 2 ? -1.0 : 1.0;
      rhs(k) = wf(i);
    }
    const VectorXd sol = sys.fullPivLu().solve(rhs);
    const VectorXd c = sol.head(n);
    const double level = std::abs(sol(n));
    lower = std::max(lower, level);

    const VectorXd err = wf - d.weight.cwiseProduct(d.basis * c);
    Eigen::Index arg = 0;
    const double maxabs = err.cwiseAbs().maxCoeff(&arg);
    if (maxabs < best_value) {
      best_value = maxabs;
      best_c = c;
      best_err = err;
    }

    if (best_value <= 1e-14 * scale) {
      r.converged = true;
      break;
    }
    if (best_value - lower <= opts.target_gap * best_value) {
      r.converged = true;
      break;
    }

    auto ext = alternating_extrema(err, active, 0.0);
    if (static_cast<int>(ext.size()) < n + 1) break;
    // Keep n + 1 consecutive alternants that include the global maximum.
    std::size_t lo = 0, hi = ext.size() - 1;
    auto is_global = [&](std::size_t k) { return ext[k].index == arg; };
    while (hi - lo + 1 > static_cast<std::size_t>(n + 1)) {
      const bool drop_lo = !is_global(lo) &&
                           (is_global(hi) || std::abs(ext[lo].value) <= std::abs(ext[hi].value));
      if (drop_lo) {
        ++lo;
      } else {
        --hi;
      }
    }
    std::vector<Eigen::Index> next;
    for (std::size_t k = lo; k <= hi; ++k) next.push_back(ext[k].index);
    if (next == ref) {
      r.converged = best_value - lower <= 1e-6 * best_value;
      break;
    }
    ref = std::move(next);
  }

  r.value = best_value;
  r.polynomial = to_series(best_c);
  r.gap = best_value > 0.0 ? std::max(0.0, (best_value - lower) / best_value) : 0.0;
  if (best_value <= 1e-14 * scale) r.gap = 0.0;

  // Certificate: alternation among points within 1e-6 of the extreme value.
  if (best_value <= 1e-14 * scale) {
    r.equioscillation = true;
  } else {
    const auto near = alternating_extrema(best_err, active, best_value * (1.0 - 1e-6));
    for (const auto& e : near) r.reference.push_back(d.x[static_cast<std::size_t>(e.index)]);
    r.equioscillation = static_cast<int>(near.size()) >= n + 1;
  }
  if (!r.equioscillation) r.converged = false;
  return r;
}

// ---------------------------------------------------------------------------
// Iteratively reweighted least squares for 1 <= p < inf, p != 2.

BestApproxResult solve_irls(const DiscreteProblem& d, int n, const WeightedSpace& space,
                            const ApproxOptions& opts) {
  const double p = space.p;
  const auto m = d.weight.size();
  VectorXd qp(m);  // quad^(1/p), so that the objective is ||qp w (f - Vc)||_p
  VectorXd l2_scale(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double q = d.quad[static_cast<std::size_t>(i)];
    qp(i) = std::pow(q, 1.0 / p);
    l2_scale(i) = std::sqrt(q) * d.weight(i);
  }
  const VectorXd a = qp.cwiseProduct(d.weight);
  const std::vector<double> ones(static_cast<std::size_t>(m), 1.0);

  // Orthonormal basis of range(diag(a) V) for the dual bound.
  const MatrixXd av = a.asDiagonal() * d.basis;
  const MatrixXd q_thin = n ? MatrixXd(av.householderQr().householderQ() * MatrixXd::Identity(m, n))
                            : MatrixXd(m, 0);
  const double q_exp = p == 1.0 ? kInfinity : p / (p - 1.0);

  auto lower_bound = [&](const VectorXd& rho) {
    VectorXd u(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const double v = rho(i);
      u(i) = v == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(v), p - 1.0), v);
    }
    if (n) u -= q_thin * (q_thin.transpose() * u);
    const double un = q_exp == kInfinity ? u.cwiseAbs().maxCoeff()
                                          : std::pow(u.cwiseAbs().array().pow(q_exp).sum(), 1.0 / q_exp);
    if (!(un > 0.0)) return 0.0;
    return std::max(0.0, u.dot(rho) / un);
  };

  BestApproxResult r;
  r.n = n;
  r.solver = Solver::irls;
  r.grid_size = static_cast<int>(m);
  r.converged = false;

  auto objective = [&](const VectorXd& coef) {
    return lp_value(a.cwiseProduct(d.f - d.basis * coef), ones, p);
  };

  VectorXd c = n ? weighted_lsq(d, l2_scale) : VectorXd();
  double value = objective(c);
  double lower = 0.0;
  // The reweighted solve is a Newton step shrunk by 1/(p - 1), so for p > 2
  // the trial length starts above one; backtracking keeps the descent monotone.
  const double theta0 = std::max(1.0, p - 1.0);
  for (int it = 1; it <= opts.irls_max_iter; ++it) {
    r.iterations = it;
    const VectorXd rho = a.cwiseProduct(d.f - d.basis * c);
    lower = std::max(lower, lower_bound(rho));
    if (value <= 1e-14 || value - lower <= opts.target_gap * value) {
      r.converged = true;
      break;
    }
    if (!n) break;
    VectorXd s(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const double mag = std::max(std::abs(rho(i)), opts.irls_clip);
      s(i) = std::sqrt(std::pow(mag, p - 2.0)) * a(i);
    }
    const VectorXd step = weighted_lsq(d, s) - c;
    bool moved = false;
    for (double theta = theta0; theta > 1e-6; theta *= 0.5) {
      const VectorXd trial = c + theta * step;
      const double v = objective(trial);
      if (v < value) {
        c = trial;
        value = v;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  const double best = value;
  r.value = best;
  r.polynomial = to_series(c);
  r.gap = best > 1e-14 ? std::max(0.0, (best - lower) / best) : 0.0;
  if (r.gap <= 1e-6) r.converged = true;
  return r;
}

}  // namespace

std::string to_string(Solver s) {
  switch (s) {
    case Solver::projection:
      return "projection";
    case Solver::exchange:
      return "exchange";
    case Solver::irls:
      return "irls";
  }
  return "unknown";
}

int approx_norm_resolution(const WeightedSpace& space, const ApproxOptions& opts) {
  return space.uniform() ? opts.uniform_grid : opts.legendre_grid;
}

BestApproxResult best_approx(const SampledFunction& f, int n, const WeightedSpace& space,
                             const ApproxOptions& opts) {
  if (n < 1) throw PreconditionError("best_approx needs n >= 1");
  require_valid(space);
  const auto d = discretise(f, n, space, opts);
  if (space.uniform()) return solve_exchange(d, n, opts);
  if (space.p == 2.0) return solve_projection(d, n, space);
  return solve_irls(d, n, space, opts);
}

ApproxSequence best_approx_sequence(const SampledFunction& f, int n_max,
                                    const WeightedSpace& space, const ApproxOptions& opts) {
  if (n_max < 1) throw PreconditionError("best_approx_sequence needs n_max >= 1");
  ApproxSequence seq;
  seq.results.reserve(static_cast<std::size_t>(n_max));
  for (int nu = 1; nu <= n_max; ++nu) {
    try {
      seq.results.push_back(best_approx(f, nu, space, opts));
    } catch (const std::exception& e) {
      throw std::runtime_error("E_" + std::to_string(nu) + ": " + e.what());
    }
  }
  for (int nu = 1; nu < n_max; ++nu) {
    if (seq.e(nu + 1) > seq.e(nu) + 1e-9) seq.monotonicity_violations.push_back(nu);
  }
  return seq;
}

}  // namespace gtmod
