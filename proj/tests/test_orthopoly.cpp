#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gtmod/errors.hpp"
#include "gtmod/orthopoly.hpp"
#include "gtmod/polynomial.hpp"
#include "gtmod/sampled_function.hpp"

using namespace gtmod;
using std::numbers::pi;

namespace {

// Explicit sum
//   P_n^(a,b)(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)
// in long double, divided by C(n+a, n). Independent of the recurrence.
long double binom_ld(long double top, int k) {
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r *= (top - k + i) / i;
  return r;
}

long double jacobi_explicit(int n, double a, double b, double x) {
  long double sum = 0.0L;
  const long double lo = (static_cast<long double>(x) - 1.0L) / 2.0L;
  const long double hi = (static_cast<long double>(x) + 1.0L) / 2.0L;
  for (int s = 0; s <= n; ++s) {
    sum += binom_ld(n + a, n - s) * binom_ld(n + b, s) * std::pow(lo, s) * std::pow(hi, n - s);
  }
  return sum / binom_ld(n + a, n);
}

// Closed-form moments.
double legendre_moment(int k) { return k % 2 ? 0.0 : 2.0 / (k + 1); }

double chebyshev_moment(int k) {
  if (k % 2) return 0.0;
  double m = pi;  // int z^k / sqrt(1-z^2) = pi (k-1)!! / k!!
  for (int j = 2; j <= k; j += 2) m *= static_cast<double>(j - 1) / j;
  return m;
}

// Composite Simpson on a fine grid, used as a brute-force integral oracle.
template <class F>
double simpson(F&& g, int panels = 200000) {
  const double h = 2.0 / panels;
  double s = g(-1.0) + g(1.0);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * g(-1.0 + i * h);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("jacobi_eval examples") {
  const JacobiBasis b = ultraspherical22();
  CHECK(b.eval(0, 0.3) == 1.0);
  CHECK(b.eval(5, 1.0) == 1.0);
  CHECK(std::abs(b.eval(1, 0.0)) <= 1e-15);
}

TEST_CASE("jacobi_eval agrees with the explicit sum") {
  for (auto [a, bb] : {std::pair{2.0, 2.0}, {0.0, 0.0}, {1.0, 1.0}, {3.0, 1.0}, {0.5, -0.5}}) {
    const JacobiBasis basis(a, bb);
    for (int n = 0; n <= 16; ++n) {
      for (double x : {-1.0, -0.83, -0.2, 0.0, 0.41, 0.97, 1.0}) {
        CHECK(basis.eval(n, x) == doctest::Approx(static_cast<double>(jacobi_explicit(n, a, bb, x)))
                                      .epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("three-term recurrence consistency up to degree 30") {
  // Classical recurrence applied to the normalised values, with the
  // normalisation c_n = C(n+a, n) restored and removed by hand.
  const double a = 2.0, b = 2.0;
  const JacobiBasis basis(a, b);
  for (double x = -1.0; x <= 1.0; x += 0.0625) {
    for (int n = 1; n < 30; ++n) {
      const double pn = basis.eval(n, x) * basis.endpoint_value(n);
      const double pm = basis.eval(n - 1, x) * basis.endpoint_value(n - 1);
      const double s = 2.0 * n + a + b;
      const double next = ((s + 1) * ((s + 2) * s * x + a * a - b * b) * pn -
                           2.0 * (n + a) * (n + b) * (s + 2) * pm) /
                          (2.0 * (n + 1) * (n + a + b + 1) * s);
      CHECK(std::abs(next / basis.endpoint_value(n + 1) - basis.eval(n + 1, x)) <= 1e-12);
    }
  }
}

TEST_CASE("endpoint normalisation is exact") {
  for (auto [a, b] : {std::pair{2.0, 2.0}, {0.0, 0.0}, {3.0, 1.0}}) {
    const JacobiBasis basis(a, b);
    for (int n = 0; n <= 30; ++n) CHECK(basis.eval(n, 1.0) == 1.0);
    const auto all = basis.eval_all(30, 1.0);
    for (double v : all) CHECK(v == 1.0);
  }
}

TEST_CASE("jacobi_eval domain") {
  const JacobiBasis b = ultraspherical22();
  CHECK_NOTHROW(b.eval(3, 1.0 + 5e-13));
  CHECK_THROWS_AS(b.eval(3, 1.0 + 1e-9), DomainError);
  CHECK_THROWS_AS(b.eval(3, -1.1), DomainError);
  CHECK_THROWS_AS(b.eval(-1, 0.0), DomainError);
  CHECK_THROWS_AS(JacobiBasis(-1.0, 0.0), DomainError);
}

TEST_CASE("gauss_chebyshev examples") {
  const auto r1 = gauss_chebyshev(1);
  REQUIRE(r1.size() == 1);
  CHECK(std::abs(r1.nodes[0]) <= 1e-16);
  CHECK(r1.weights[0] == doctest::Approx(pi));
  CHECK(gauss_chebyshev(2).integrate([](double z) { return z * z; }) ==
        doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(gauss_chebyshev(8).integrate([](double) { return 1.0; }) ==
        doctest::Approx(pi).epsilon(1e-15));
  const auto r = gauss_chebyshev(5);
  for (double w : r.weights) CHECK(w == doctest::Approx(pi / 5));
  CHECK_THROWS(gauss_chebyshev(0));
}

TEST_CASE("gauss_legendre examples") {
  const auto r1 = gauss_legendre(1);
  REQUIRE(r1.size() == 1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(2.0));
  CHECK(gauss_legendre(3).integrate([](double x) { return x * x * x * x; }) ==
        doctest::Approx(0.4).epsilon(1e-15));
  CHECK(gauss_legendre(10).integrate([](double x) { return (1 - x * x) * (1 - x * x); }) ==
        doctest::Approx(16.0 / 15.0).epsilon(1e-15));
  CHECK_THROWS(gauss_legendre(0));
}

TEST_CASE("quadrature exactness and node layout for M <= 64") {
  for (int m = 1; m <= 64; ++m) {
    for (const auto& rule : {gauss_chebyshev(m), gauss_legendre(m)}) {
      for (std::size_t i = 0; i < rule.size(); ++i) {
        CHECK(std::abs(rule.nodes[i]) < 1.0);
        CHECK(rule.weights[i] > 0.0);
        if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
      }
      for (int k = 0; k <= 2 * m - 1; ++k) {
        const double exact =
            rule.kind == RuleKind::legendre ? legendre_moment(k) : chebyshev_moment(k);
        const double got = rule.integrate([k](double z) { return std::pow(z, k); });
        CHECK(std::abs(got - exact) <= 1e-12);
      }
    }
  }
}

TEST_CASE("large Legendre rules integrate the weight") {
  for (int m : {256, 1025}) {
    const auto& r = cached_gauss_legendre(m);
    CHECK(r.integrate([](double) { return 1.0; }) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(r.integrate([](double x) { return (1 - x * x) * (1 - x * x); }) ==
          doctest::Approx(16.0 / 15.0).epsilon(1e-13));
    CHECK(&cached_gauss_legendre(m) == &r);
  }
}

TEST_CASE("orthogonality of the (2,2) family") {
  const JacobiBasis b = ultraspherical22();
  const auto& rule = cached_gauss_legendre(64);
  for (int m = 0; m <= 20; ++m) {
    for (int n = 0; n <= 20; ++n) {
      if (m == n) continue;
      const double ip = rule.integrate([&](double x) {
        return b.eval(m, x) * b.eval(n, x) * (1 - x * x) * (1 - x * x);
      });
      CHECK(std::abs(ip) <= 1e-10);
    }
  }
}

TEST_CASE("fourier_jacobi_coeff examples") {
  const JacobiBasis b = ultraspherical22();
  CHECK(fourier_jacobi_coeff(constant_function(1.0), 0, 8) ==
        doctest::Approx(16.0 / 15.0).epsilon(1e-14));

  const SampledFunction p3([&](double x) { return b.eval(3, x); }, "P3", 3);
  CHECK(std::abs(fourier_jacobi_coeff(p3, 5, default_coefficient_quad_size(5))) <= 1e-12);

  const SampledFunction p2([&](double x) { return b.eval(2, x); }, "P2", 2);
  const double brute = simpson([](double x) {
    const double p = static_cast<double>(jacobi_explicit(2, 2, 2, x));
    return p * p * (1 - x * x) * (1 - x * x);
  });
  const double a2 = fourier_jacobi_coeff(p2, 2, default_coefficient_quad_size(2));
  CHECK(a2 > 0.0);
  CHECK(a2 == doctest::Approx(brute).epsilon(1e-10));
  CHECK(a2 == doctest::Approx(16.0 / 405.0).epsilon(1e-14));  // sympy
}

TEST_CASE("fourier_jacobi_coeffs matches the scalar routine") {
  const SampledFunction f([](double x) { return std::exp(x) * std::sin(3 * x); }, "g");
  const auto all = fourier_jacobi_coeffs(f, 12, 40);
  REQUIRE(all.size() == 13);
  for (int n = 0; n <= 12; ++n) CHECK(all[n] == doctest::Approx(fourier_jacobi_coeff(f, n, 40)));
}
