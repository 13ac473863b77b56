#include "gtmod/polynomial.hpp"

#include <algorithm>

#include "gtmod/sampled_function.hpp"

namespace gtmod {

ChebyshevSeries::ChebyshevSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

ChebyshevSeries ChebyshevSeries::from_monomial(std::span<const double> power_coeffs) {
  // x * T_k = (T_{k+1} + T_{|k-1|}) / 2; Horner in the Chebyshev basis.
  std::vector<double> c;
  for (auto it = power_coeffs.rbegin(); it != power_coeffs.rend(); ++it) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k == 0) {
        next[1] += c[0];
      } else {
        next[k + 1] += 0.5 * c[k];
        next[k - 1] += 0.5 * c[k];
      }
    }
    next[0] += *it;
    c = std::move(next);
  }
  return ChebyshevSeries(std::move(c));
}

double ChebyshevSeries::operator()(double x) const {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 1;) {
    const double b0 = 2.0 * x * b1 - b2 + coeffs_[k];
    b2 = b1;
    b1 = b0;
  }
  const double c0 = coeffs_.empty() ? 0.0 : coeffs_[0];
  return x * b1 - b2 + c0;
}

int ChebyshevSeries::degree() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] != 0.0) return static_cast<int>(k);
  }
  return -1;
}

ChebyshevSeries ChebyshevSeries::operator+(const ChebyshevSeries& other) const {
  std::vector<double> c(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) c[k] += other.coeffs_[k];
  return ChebyshevSeries(std::move(c));
}

ChebyshevSeries ChebyshevSeries::operator-(const ChebyshevSeries& other) const {
  return *this + other * -1.0;
}

ChebyshevSeries ChebyshevSeries::operator*(double s) const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v *= s;
  return ChebyshevSeries(std::move(c));
}

SampledFunction ChebyshevSeries::as_function(const char* name) const {
  auto self = *this;
  return SampledFunction([self](double x) { return self(x); }, name, std::max(0, degree()));
}

}  // namespace gtmod
