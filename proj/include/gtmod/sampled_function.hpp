#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gtmod {

/// A real function on [-1, 1]: a callable plus memoised samples on named
/// grids. Copies share the sample cache. Safe to use from several threads.
class SampledFunction {
 public:
  using Evaluator = std::function<double(double)>;

  SampledFunction(Evaluator f, std::string name = "f",
                  std::optional<int> polynomial_degree = std::nullopt);

  double operator()(double x) const { return (*eval_)(x); }

  /// Values at `nodes`, computed once per `grid_id` and cached. The caller
  /// must use one id per distinct node set.
  const std::vector<double>& on_grid(const std::string& grid_id,
                                     std::span<const double> nodes) const;

  const std::string& name() const noexcept { return name_; }

  /// Degree when the function is known to be a polynomial.
  std::optional<int> polynomial_degree() const noexcept { return degree_; }

 private:
  struct Cache;
  std::shared_ptr<const Evaluator> eval_;
  std::string name_;
  std::optional<int> degree_;
  std::shared_ptr<Cache> cache_;
};

/// x -> a f(x) + b g(x)
SampledFunction linear_combination(double a, const SampledFunction& f, double b,
                                   const SampledFunction& g);

/// x -> c f(x)
SampledFunction scaled(double c, const SampledFunction& f);

SampledFunction constant_function(double c);

}  // namespace gtmod
