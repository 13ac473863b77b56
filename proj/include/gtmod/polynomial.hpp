#pragma once

#include <span>
#include <vector>

namespace gtmod {

class SampledFunction;

/// Polynomial stored by its coefficients in the Chebyshev basis T_0, T_1, ...
class ChebyshevSeries {
 public:
  ChebyshevSeries() = default;
  explicit ChebyshevSeries(std::vector<double> coeffs);

  /// Power-basis coefficients c_0 + c_1 x + ... converted to Chebyshev form.
  static ChebyshevSeries from_monomial(std::span<const double> power_coeffs);

  double operator()(double x) const;  // Clenshaw

  /// Index of the last non-zero coefficient, -1 for the zero polynomial.
  int degree() const;
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  ChebyshevSeries operator-(const ChebyshevSeries& other) const;
  ChebyshevSeries operator+(const ChebyshevSeries& other) const;
  ChebyshevSeries operator*(double s) const;

  SampledFunction as_function(const char* name = "poly") const;

 private:
  std::vector<double> coeffs_;
};

}  // namespace gtmod
