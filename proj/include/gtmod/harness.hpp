#pragma once

// Experiment drivers: operator property checks, the converse inequality
// omega(f, 1/n) <= C n^-2 sum_{nu<=n} nu E_nu, its dyadic proof mechanics,
// and an empirical exponent comparison between E_n and omega.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtmod/approx.hpp"
#include "gtmod/modulus.hpp"
#include "gtmod/sampled_function.hpp"
#include "gtmod/weighted_space.hpp"

namespace gtmod {

// ---------------------------------------------------------------------------
// Test functions

/// Seeded polynomial with Chebyshev coefficients uniform in [-1, 1].
SampledFunction random_polynomial(int degree, std::uint64_t seed);

/// Named functions: one, x, x2, abs, signpow15, abs_shift, randpoly:<d>, or
/// a comma separated list of power-basis coefficients ("1,0,-2").
/// Throws std::invalid_argument for anything else.
SampledFunction make_test_function(const std::string& spec, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Operator properties

struct Lemma1Options {
  int n_max = 20;
  int grid = 24;             // interior x and y points for properties 1, 3, 4
  int multiplier_y_points = 9;
  int multiplier_degree = 10;
  std::uint64_t seed = 7;
  double prefactor_scale = 1.0;  // diagnostic fault injection

  double tol_linearity = 1e-12;
  double tol_identity = 1e-10;
  double tol_constant = 1e-12;
  double tol_rank_one = 1e-8;
  double tol_multiplier = 1e-9;
};

struct PropertyResult {
  int index = 0;
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct Lemma1Report {
  std::vector<PropertyResult> properties;
  bool all_passed() const;
};

/// Runs the five eigen/identity/linearity checks of the translation.
Lemma1Report verify_lemma1(const Lemma1Options& opts = {});

// ---------------------------------------------------------------------------
// Converse inequality

struct ConverseTableRow {
  int n = 0;
  double omega = 0.0;    // omega(f, 1/n)
  double rhs_sum = 0.0;  // sum_{nu=1}^{n} nu E_nu
  double ratio = 0.0;    // omega n^2 / rhs_sum
};

struct ExperimentOptions {
  ApproxOptions approx;
  ModulusOptions modulus;
};

/// n_list ascending, entries >= 1.
std::vector<ConverseTableRow> converse_table(const SampledFunction& f,
                                             const std::vector<int>& n_list,
                                             const WeightedSpace& space,
                                             const ExperimentOptions& opts = {});

struct RatioBoundedness {
  double max_over_median = 0.0;
  /// Last three ratios strictly increasing.
  bool increasing_tail = false;
  /// Strictly increasing tail whose last step is at least as large as the
  /// one before: growth that is not levelling off.
  bool monotone_growth = false;
};

RatioBoundedness ratio_boundedness(const std::vector<ConverseTableRow>& rows);

// ---------------------------------------------------------------------------
// Dyadic decomposition

/// N = floor(log2(n + 1)): the largest N with n/2 < 2^N <= n + 1. Requires n >= 2.
int dyadic_exponent(int n);

struct InequalityCheck {
  int index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double budget = 0.0;  // solver-gap allowance added to rhs
  bool holds = false;
};

struct ChainTerm {
  std::string label;
  double value = 0.0;
};

struct DyadicDecomposition {
  int n = 0;
  int N = 0;
  std::vector<double> e_dyadic;     // E_{2^k}, k = 0..N
  std::vector<double> block_norms;  // ||Q_k||, k = 0..N
  std::vector<InequalityCheck> triangle;   // ||Q_k|| <= E_{2^k} + E_{2^{k-1}}, k >= 1
  std::vector<InequalityCheck> block_sum;  // 2^{2(mu-1)} E_{2^mu} <= sum nu E_nu, mu >= 1
  std::vector<ChainTerm> chain;            // successive bounds of the proof
  std::vector<InequalityCheck> chain_checks;

  bool all_hold() const;
};

DyadicDecomposition dyadic_bound(const SampledFunction& f, int n, const WeightedSpace& space,
                                 const ApproxOptions& opts = {});

// ---------------------------------------------------------------------------
// Exponent fit

struct ClassFit {
  std::vector<int> n_values;
  std::vector<double> e_values;
  std::vector<double> omega_values;
  double approx_exponent = 0.0;   // E_n ~ n^{-approx_exponent}
  double modulus_exponent = 0.0;  // omega(f, d) ~ d^{modulus_exponent}
  double difference = 0.0;        // approx_exponent - modulus_exponent
  bool degenerate = false;
  std::string note;
};

/// Least-squares slopes over n = 4, 8, ..., n_max (powers of two), delta = 1/n.
/// Throws PreconditionError if lambda is outside (0, 2) or the space is invalid.
ClassFit class_fit(const SampledFunction& f, const WeightedSpace& space, int n_max,
                   std::optional<double> lambda = std::nullopt,
                   const ExperimentOptions& opts = {});

/// Slope of the least-squares line through (x_i, y_i).
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace gtmod
