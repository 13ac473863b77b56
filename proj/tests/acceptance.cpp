// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gtmod/approx.hpp"
#include "gtmod/harness.hpp"
#include "gtmod/modulus.hpp"
#include "gtmod/orthopoly.hpp"
#include "gtmod/translation.hpp"
#include "gtmod/weighted_space.hpp"

using namespace gtmod;

namespace {

constexpr double pi = std::numbers::pi;
const WeightedSpace kL2{2.0, 1.0};
const WeightedSpace kUniform{kInfinity, 1.0};
const std::vector<const char*> kFunctions = {"abs", "signpow15", "abs_shift"};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string space_name(const WeightedSpace& s) {
  std::ostringstream o;
  o << "p=" << (s.uniform() ? std::string("inf") : std::to_string(static_cast<int>(s.p)))
    << ",alpha=" << s.alpha;
  return o.str();
}

double legendre_moment(int k) { return k % 2 ? 0.0 : 2.0 / (k + 1); }

double chebyshev_moment(int k) {
  if (k % 2) return 0.0;
  double m = pi;
  for (int j = 2; j <= k; j += 2) m *= static_cast<double>(j - 1) / j;
  return m;
}

void quadrature(Outcome& o) {
  double worst = 0.0;
  for (int m = 1; m <= 64; ++m) {
    for (const QuadratureRule& rule : {gauss_chebyshev(m), gauss_legendre(m)}) {
      for (int k = 0; k <= 2 * m - 1; ++k) {
        const double exact =
            rule.kind == RuleKind::legendre ? legendre_moment(k) : chebyshev_moment(k);
        const double got = rule.integrate([k](double z) { return std::pow(z, k); });
        worst = std::max(worst, std::abs(got - exact));
      }
    }
  }
  o.detail << "max moment error " << worst << " (tol 1e-12)";
  o.require(worst <= 1e-12, "moment error");
}

void lemma1(Outcome& o) {
  const auto rep = verify_lemma1();
  for (const auto& p : rep.properties) {
    o.detail << " " << p.index << ":" << p.max_residual << "/" << p.tolerance;
    o.require(p.passed, "property " + std::to_string(p.index));
  }
}

void multiplier(Outcome& o) {
  const auto cal = calibrate_multiplier(default_multiplier_candidates(), 8, default_calibration_grid());
  int matches = 0;
  double best = kInfinity;
  for (const auto& c : cal.table) {
    matches += c.matches;
    best = std::min(best, c.max_residual);
  }
  o.detail << "matches " << matches << "/" << cal.table.size() << ", residual " << best;
  o.require(matches == 1 && cal.multiplier.validated, "unique validated candidate");
  o.require(best <= 1e-8, "residual");
  if (cal.multiplier.validated) {
    o.detail << ", form " << cal.multiplier.form.label();
    double worst = 0.0;
    for (int n = 0; n <= 12; ++n)
      worst = std::max(worst, std::abs(multiplier_eval(cal.multiplier, n, 1.0) - 1.0));
    o.detail << ", max |R_n(1)-1| " << worst;
    o.require(worst <= 1e-10, "R_n(1) = 1");
  }
}

void best_approximation(Outcome& o) {
  double feasible = 0.0;
  const auto poly = random_polynomial(7, 11);
  for (WeightedSpace s : {kL2, kUniform, WeightedSpace{1.0, 0.75}, WeightedSpace{3.0, 1.0}})
    feasible = std::max(feasible, best_approx(poly, 8, s).value);
  o.detail << "feasible " << feasible;
  o.require(feasible <= 1e-10, "feasible polynomial");

  const auto x = make_test_function("x");
  const double e_x = best_approx(x, 1, kL2).value;
  const auto q = best_approx(make_test_function("x2"), 1, kL2);
  const double err_x = std::abs(e_x - std::sqrt(16.0 / 105.0));
  const double err_c = std::abs(q.polynomial(0.0) - 1.0 / 7.0);
  const double err_q = std::abs(q.value - 8.0 * std::sqrt(5.0) / 105.0);
  o.detail << ", analytic " << std::max({err_x, err_c, err_q});
  o.require(err_x <= 1e-8 && err_c <= 1e-8 && err_q <= 1e-8, "analytic values");

  int violations = 0, certificates = 0, flagged = 0, total = 0;
  for (const char* name : kFunctions) {
    for (WeightedSpace s : {kL2, kUniform}) {
      const auto seq = best_approx_sequence(make_test_function(name), 64, s);
      violations += static_cast<int>(seq.monotonicity_violations.size());
      if (!s.uniform()) continue;
      for (const auto& r : seq.results) {
        ++total;
        if (r.equioscillation) {
          ++certificates;
        } else if (!r.converged) {
          ++flagged;  // reported rather than hidden
        }
      }
    }
  }
  o.detail << ", monotonicity violations " << violations << ", exchange certified " << certificates
           << "/" << total << " flagged " << flagged;
  o.require(violations == 0, "monotonicity");
  o.require(certificates + flagged == total, "certificate or flag");
}

void modulus(Outcome& o) {
  double zero = 0.0, constant = 0.0, trig = 0.0;
  int violations = 0;
  const std::vector<double> deltas = {1.0 / 64, 1.0 / 32, 1.0 / 16, 1.0 / 8, 0.25, 0.5, 1.0};
  for (WeightedSpace s : {kL2, kUniform}) {
    for (const char* name : kFunctions) {
      const auto f = make_test_function(name);
      zero = std::max(zero, modulus_omega(f, 0.0, s).value);
      violations += static_cast<int>(modulus_curve(f, deltas, s).monotonicity_violations.size());
    }
    for (double d : deltas) constant = std::max(constant, modulus_omega(constant_function(1.0), d, s).value);
  }
  for (const char* name : kFunctions) {
    const auto f = make_test_function(name);
    for (double t : {-1.0, -0.2, 1.0 / 64, 0.5, 2.0})
      for (double x : {-0.95, -0.3, 0.0, 0.6, 0.99})
        trig = std::max(trig, std::abs(translate_trig(f, t, x, 128) - translate(f, std::cos(t), x, 128)));
  }
  o.detail << "omega(f,0) " << zero << ", omega(1,d) " << constant << ", curve violations "
           << violations << ", trig/algebraic " << trig;
  o.require(zero == 0.0, "omega(f,0) = 0");
  o.require(constant <= 1e-10, "omega(1,d)");
  o.require(violations == 0, "non-decreasing curves");
  o.require(trig <= 1e-12, "trig agreement");
}

void converse(Outcome& o) {
  const std::vector<int> ns = {4, 8, 16, 32, 64};
  for (WeightedSpace s : {kL2, kUniform}) {
    for (const char* name : kFunctions) {
      const auto rows = converse_table(make_test_function(name), ns, s);
      const auto b = ratio_boundedness(rows);
      o.detail << "\n    " << name << " " << space_name(s) << " ratios";
      for (const auto& r : rows) o.detail << " " << r.ratio;
      o.detail << " | max/median " << b.max_over_median << ", increasing tail "
               << (b.increasing_tail ? "yes" : "no") << ", growth "
               << (b.monotone_growth ? "yes" : "no");
      o.require(b.max_over_median <= 10.0, std::string(name) + " bounded");
      o.require(!b.monotone_growth, std::string(name) + " growth");
    }
  }
}

void proof_mechanics(Outcome& o) {
  bool bracket = true;
  for (int n = 2; n <= 4096; ++n) {
    const double p = std::ldexp(1.0, dyadic_exponent(n));
    bracket = bracket && n / 2.0 < p && p <= n + 1.0;
  }
  o.detail << "N bracket " << (bracket ? "ok" : "broken");
  o.require(bracket, "N selection");

  int checks = 0, failures = 0;
  for (WeightedSpace s : {kL2, kUniform}) {
    for (const char* name : kFunctions) {
      for (int n : {5, 16, 33, 64}) {
        const auto d = dyadic_bound(make_test_function(name), n, s);
        for (const auto* list : {&d.triangle, &d.block_sum}) {
          for (const auto& c : *list) {
            ++checks;
            failures += !c.holds;
          }
        }
      }
    }
  }
  o.detail << ", triangle/block checks " << checks - failures << "/" << checks;
  o.require(failures == 0, "dyadic inequalities");
}

void lemma2(Outcome& o) {
  const auto fit = class_fit(make_test_function("abs"), kL2, 64);
  o.detail << "E slope " << fit.approx_exponent << ", omega slope " << fit.modulus_exponent
           << ", difference " << fit.difference;
  o.require(!fit.degenerate, "non-degenerate");
  o.require(std::abs(fit.difference) <= 0.25, "exponent difference");
}

void parameter_gate(Outcome& o) {
  struct Probe {
    double p, alpha;
    bool accept;
  };
  // (2, 0.75) sits on the strict lower bound 1 - 1/(2p) and is rejected.
  const std::vector<Probe> probes = {{1, 0.5, false},     {1, 0.75, true},   {1, 1.0, true},
                                     {1, 1.01, false},    {2, 0.75, false},  {2, 1.25, false},
                                     {kInfinity, 1.0, true}, {kInfinity, 1.5, false}};
  for (const auto& pr : probes) {
    const bool got = validate_params({pr.p, pr.alpha}).valid;
    o.detail << " (" << pr.p << "," << pr.alpha << ")=" << (got ? "accept" : "reject");
    o.require(got == pr.accept, "probe");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"quadrature exactness", quadrature},
      {"operator properties", lemma1},
      {"multiplier calibration", multiplier},
      {"best approximation", best_approximation},
      {"modulus", modulus},
      {"converse inequality ratios", converse},
      {"dyadic proof mechanics", proof_mechanics},
      {"exponent agreement for |x|", lemma2},
      {"parameter gate", parameter_gate},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("criterion %zu %s: %s (%.1fs) %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL",
                secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
