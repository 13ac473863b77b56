#include "gtmod/sampled_function.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace gtmod {

struct SampledFunction::Cache {
  std::mutex mu;
  std::map<std::string, std::vector<double>> grids;
};

SampledFunction::SampledFunction(Evaluator f, std::string name,
                                 std::optional<int> polynomial_degree)
    : eval_(std::make_shared<const Evaluator>(std::move(f))),
      name_(std::move(name)),
      degree_(polynomial_degree),
      cache_(std::make_shared<Cache>()) {}

const std::vector<double>& SampledFunction::on_grid(const std::string& grid_id,
                                                    std::span<const double> nodes) const {
  std::lock_guard lock(cache_->mu);
  auto it = cache_->grids.find(grid_id);
  if (it != cache_->grids.end()) return it->second;
  std::vector<double> v(nodes.size());
  std::transform(nodes.begin(), nodes.end(), v.begin(), *eval_);
  return cache_->grids.emplace(grid_id, std::move(v)).first->second;
}

namespace {

std::optional<int> combined_degree(const SampledFunction& f, const SampledFunction& g) {
  if (!f.polynomial_degree() || !g.polynomial_degree()) return std::nullopt;
  return std::max(*f.polynomial_degree(), *g.polynomial_degree());
}

}  // namespace

SampledFunction linear_combination(double a, const SampledFunction& f, double b,
                                   const SampledFunction& g) {
  return SampledFunction([a, f, b, g](double x) { return a * f(x) + b * g(x); },
                         f.name() + "+" + g.name(), combined_degree(f, g));
}

SampledFunction scaled(double c, const SampledFunction& f) {
  return SampledFunction([c, f](double x) { return c * f(x); }, f.name(), f.polynomial_degree());
}

SampledFunction constant_function(double c) {
  return SampledFunction([c](double) { return c; }, "const", 0);
}

}  // namespace gtmod
