#include <doctest.h>

#include <cmath>

#include "gtmod/approx.hpp"
#include "gtmod/errors.hpp"
#include "gtmod/harness.hpp"
#include "gtmod/orthopoly.hpp"

using namespace gtmod;

namespace {

const WeightedSpace kL2{2.0, 1.0};
const WeightedSpace kUniform{kInfinity, 1.0};

// min_c max_i |w_i (f_i - c)| by golden-section search on the convex
// objective. Independent of the exchange solver.
double uniform_best_constant_oracle(const SampledFunction& f, const WeightedSpace& s) {
  const auto g = chebyshev_grid(4097);
  auto obj = [&](double c) {
    double m = 0.0;
    for (double x : g) m = std::max(m, std::abs((f(x) - c) * s.weight(x)));
    return m;
  };
  double lo = -2.0, hi = 2.0;
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
    if (obj(a) < obj(b)) hi = b; else lo = a;
  }
  return obj(0.5 * (lo + hi));
}

}  // namespace

TEST_CASE("feasible polynomials have zero error") {
  const auto f = random_polynomial(5, 42);
  for (WeightedSpace s : {kL2, kUniform, WeightedSpace{1.0, 0.75}, WeightedSpace{3.0, 1.0}}) {
    CAPTURE(s.p);
    const auto r = best_approx(f, 6, s);
    CHECK(r.value <= 1e-10);
    CHECK(r.polynomial.degree() <= 5);
    CHECK(r.converged);
  }
}

TEST_CASE("analytic weighted L2 values") {
  const SampledFunction x([](double t) { return t; }, "x", 1);
  const auto r = best_approx(x, 1, kL2);
  CHECK(r.value == doctest::Approx(std::sqrt(16.0 / 105.0)).epsilon(1e-12));
  CHECK(std::abs(r.polynomial(0.3)) <= 1e-14);
  CHECK(r.solver == Solver::projection);

  const SampledFunction x2([](double t) { return t * t; }, "x2", 2);
  const auto q = best_approx(x2, 1, kL2);
  CHECK(q.polynomial(0.0) == doctest::Approx(1.0 / 7.0).epsilon(1e-13));
  CHECK(q.value == doctest::Approx(8.0 * std::sqrt(5.0) / 105.0).epsilon(1e-12));  // sympy
}

TEST_CASE("value is bounded by the norm of f") {
  for (const char* name : {"abs", "signpow15", "abs_shift"}) {
    const auto f = make_test_function(name);
    for (WeightedSpace s : {kL2, kUniform, WeightedSpace{1.0, 1.0}}) {
      const double norm = weighted_norm(f, s, approx_norm_resolution(s));
      for (int n : {1, 3, 8}) {
        const auto r = best_approx(f, n, s);
        CHECK(r.value >= 0.0);
        CHECK(r.value <= norm + 1e-10);
      }
    }
  }
}

TEST_CASE("projection residual is orthogonal to the approximating space") {
  const auto f = make_test_function("abs_shift");
  for (double alpha : {1.0, 0.9, 1.2}) {
    const WeightedSpace s{2.0, alpha};
    const auto r = best_approx(f, 12, s);
    const auto& rule = cached_gauss_legendre(1025);
    for (int j = 0; j < 12; ++j) {
      double ip = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        const double x = rule.nodes[i];
        const double w = s.weight(x);
        ip += rule.weights[i] * w * w * (f(x) - r.polynomial(x)) * std::cos(j * std::acos(x));
      }
      CHECK(std::abs(ip) <= 1e-9);
    }
  }
}

TEST_CASE("exchange matches independent oracles") {
  const auto abs = make_test_function("abs");
  const auto r1 = best_approx(abs, 1, kUniform);
  CHECK(r1.value == doctest::Approx(uniform_best_constant_oracle(abs, kUniform)).epsilon(1e-9));

  // Frozen from a linear-programming formulation on the same grid.
  CHECK(best_approx(abs, 3, kUniform).value == doctest::Approx(0.0804830649031368).epsilon(1e-7));
  CHECK(best_approx(abs, 5, kUniform).value == doctest::Approx(0.049712973017145105).epsilon(1e-7));
  CHECK(best_approx(abs, 8, kUniform).value == doctest::Approx(0.03628354323042197).epsilon(1e-7));
  const auto shift = make_test_function("abs_shift");
  CHECK(best_approx(shift, 2, kUniform).value == doctest::Approx(0.20455647124026285).epsilon(1e-7));
  CHECK(best_approx(shift, 7, kUniform).value == doctest::Approx(0.037850283238382916).epsilon(1e-7));
}

TEST_CASE("exchange certificate") {
  for (const char* name : {"abs", "signpow15", "abs_shift"}) {
    const auto f = make_test_function(name);
    for (int n : {1, 2, 7, 16, 33, 64}) {
      CAPTURE(name);
      CAPTURE(n);
      const auto r = best_approx(f, n, kUniform);
      CHECK(r.equioscillation);
      CHECK(r.converged);
      CHECK(static_cast<int>(r.reference.size()) >= n + 1);
      CHECK(r.gap <= 1e-6);
    }
  }
}

TEST_CASE("IRLS against the L1 oracle") {
  const auto abs = make_test_function("abs");
  const WeightedSpace s{1.0, 0.75};
  const auto r = best_approx(abs, 3, s);
  CHECK(r.solver == Solver::irls);
  // Upper bound from the returned polynomial, lower bound from the dual.
  CHECK(r.value >= 0.08187645080615065 * (1 - 1e-9));
  CHECK(r.value == doctest::Approx(0.08187645080615065).epsilon(std::max(1e-6, 2 * r.gap)));
  const auto shift = make_test_function("abs_shift");
  const auto q = best_approx(shift, 5, WeightedSpace{1.0, 1.0});
  CHECK(q.value == doctest::Approx(0.04528095292398308).epsilon(std::max(1e-6, 2 * q.gap)));
  CHECK(q.value * (1 - q.gap) <= 0.04528095292398308 * (1 + 1e-9));
}

TEST_CASE("IRLS for p > 2 converges") {
  const auto f = make_test_function("signpow15");
  const auto r = best_approx(f, 6, WeightedSpace{4.0, 1.0});
  CHECK(r.converged);
  CHECK(r.gap <= 1e-6);
}

TEST_CASE("scale equivariance") {
  const auto f = make_test_function("abs_shift");
  for (WeightedSpace s : {kL2, kUniform}) {
    for (int n : {2, 9}) {
      const double base = best_approx(f, n, s).value;
      for (double c : {-3.0, 0.25}) {
        CHECK(best_approx(scaled(c, f), n, s).value == doctest::Approx(std::abs(c) * base).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("best_approx_sequence examples") {
  const auto cubic = ChebyshevSeries::from_monomial(std::vector<double>{0.1, -1.0, 0.0, 2.0}).as_function();
  for (WeightedSpace s : {kL2, kUniform}) {
    const auto seq = best_approx_sequence(cubic, 6, s);
    REQUIRE(seq.n_max() == 6);
    for (int nu = 4; nu <= 6; ++nu) CHECK(seq.e(nu) <= 1e-10);
    CHECK(seq.e(3) > 0.01);
    CHECK(seq.monotonicity_violations.empty());
  }

  const auto abs = make_test_function("abs");
  const auto seq = best_approx_sequence(abs, 32, kL2);
  CHECK(seq.monotonicity_violations.empty());
  for (int nu = 1; nu <= 32; ++nu) CHECK(seq.e(nu) > 0.0);
  for (int nu = 1; nu < 32; ++nu) CHECK(seq.e(nu + 1) <= seq.e(nu) + 1e-9);

  const auto zero = best_approx_sequence(constant_function(0.0), 5, kUniform);
  for (const auto& r : zero.results) CHECK(r.value == 0.0);
}

TEST_CASE("best_approx preconditions") {
  const auto f = make_test_function("abs");
  CHECK_THROWS_AS(best_approx(f, 0, kL2), PreconditionError);
  CHECK_THROWS_AS(best_approx(f, 3, WeightedSpace{2.0, 2.0}), PreconditionError);
  CHECK_THROWS_AS(best_approx_sequence(f, 0, kL2), PreconditionError);
}
