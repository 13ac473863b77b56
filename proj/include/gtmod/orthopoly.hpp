#pragma once

// Jacobi polynomials normalised to one at x = 1, Gauss rules, and
// Fourier-Jacobi coefficients against the weight (1-x^2)^2.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gtmod {

class SampledFunction;

/// Jacobi family P_n^(alpha,beta) with the normalisation P_n(1) = 1.
class JacobiBasis {
 public:
  JacobiBasis(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// P_n(x). Throws DomainError when |x| > 1 + 1e-12.
  double eval(int n, double x) const;

  /// P_0(x), ..., P_{n_max}(x) in one recurrence sweep.
  std::vector<double> eval_all(int n_max, double x) const;

  /// Classical value P_n(1) = binom(n + alpha, n), computed as a product.
  double endpoint_value(int n) const;

 private:
  double alpha_;
  double beta_;
};

/// The (2,2) family that is orthogonal for the weight (1-x^2)^2.
JacobiBasis ultraspherical22();

enum class RuleKind { chebyshev_first_kind, legendre };

struct QuadratureRule {
  RuleKind kind;
  std::vector<double> nodes;  // ascending, strictly inside (-1, 1)
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }

  /// Sum of w_j g(z_j). For the Chebyshev kind this approximates the
  /// integral of g(z) / sqrt(1 - z^2); for Legendre, of g(x).
  double integrate(const std::function<double(double)>& g) const;
};

/// Nodes cos((2j-1) pi / 2M), weights pi / M.
QuadratureRule gauss_chebyshev(int m);

/// Gauss-Legendre rule from Newton iteration on the Legendre recurrence.
/// Throws ConvergenceError if a root does not settle within 100 steps.
QuadratureRule gauss_legendre(int m);

/// Memoised rules. References stay valid for the life of the program.
const QuadratureRule& cached_gauss_chebyshev(int m);
const QuadratureRule& cached_gauss_legendre(int m);

/// Coefficient quadrature size 2 (n_max + 8).
int default_coefficient_quad_size(int n_max);

/// a_n(f) = integral of f(x) P_n^(2,2)(x) (1-x^2)^2 dx, by Gauss-Legendre
/// with m nodes. Not divided by the squared norm of P_n.
double fourier_jacobi_coeff(const SampledFunction& f, int n, int m);

/// a_0(f), ..., a_{n_max}(f) with one set of samples.
std::vector<double> fourier_jacobi_coeffs(const SampledFunction& f, int n_max, int m);

}  // namespace gtmod
