#include "gtmod/io.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace gtmod {

using nlohmann::json;

namespace {

json family_json(const JacobiFamily& f) {
  return {{"alpha", f.alpha}, {"beta", f.beta}, {"degree_offset", f.degree_offset}};
}

json candidate_json(const MultiplierCandidate& c) {
  return {{"first", family_json(c.first)}, {"second", family_json(c.second)}, {"label", c.label()}};
}

json checks_json(const std::vector<InequalityCheck>& v) {
  json out = json::array();
  for (const auto& c : v) {
    out.push_back({{"index", c.index}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"budget", c.budget}, {"holds", c.holds}});
  }
  return out;
}

std::ostringstream csv_stream() {
  std::ostringstream s;
  s << std::setprecision(std::numeric_limits<double>::max_digits10);
  return s;
}

}  // namespace

json to_json(const Calibration& c) {
  json table = json::array();
  for (const auto& row : c.table) {
    table.push_back({{"candidate", candidate_json(row.candidate)},
                     {"max_residual", row.max_residual},
                     {"matches", row.matches},
                     {"residual", row.residual}});
  }
  return {{"validated", c.multiplier.validated},
          {"selected", candidate_json(c.multiplier.form)},
          {"n_max", c.n_max},
          {"y_grid", c.y_grid},
          {"tolerance", c.tolerance},
          {"candidates", table}};
}

json to_json(const BestApproxResult& r) {
  return {{"n", r.n},
          {"value", r.value},
          {"coefficients", r.polynomial.coeffs()},
          {"solver", to_string(r.solver)},
          {"iterations", r.iterations},
          {"gap", r.gap},
          {"converged", r.converged},
          {"grid_size", r.grid_size},
          {"equioscillation", r.equioscillation},
          {"reference", r.reference}};
}

json to_json(const ModulusReport& r) {
  return {{"delta", r.delta},
          {"value", r.value},
          {"argmax_t", r.argmax_t},
          {"t_grid_size", r.t_grid_size},
          {"norm_resolution", r.norm_resolution},
          {"quad_size", r.quad_size}};
}

json to_json(const ConverseTableRow& r) {
  return {{"n", r.n}, {"omega", r.omega}, {"rhs_sum", r.rhs_sum}, {"ratio", r.ratio}};
}

json to_json(const Lemma1Report& r) {
  json props = json::array();
  for (const auto& p : r.properties) {
    props.push_back({{"property", p.index},
                     {"name", p.name},
                     {"max_residual", p.max_residual},
                     {"tolerance", p.tolerance},
                     {"passed", p.passed}});
  }
  return {{"all_passed", r.all_passed()}, {"properties", props}};
}

json to_json(const DyadicDecomposition& d) {
  json chain = json::array();
  for (const auto& c : d.chain) chain.push_back({{"label", c.label}, {"value", c.value}});
  return {{"n", d.n},
          {"N", d.N},
          {"e_dyadic", d.e_dyadic},
          {"block_norms", d.block_norms},
          {"triangle", checks_json(d.triangle)},
          {"block_sum", checks_json(d.block_sum)},
          {"chain", chain},
          {"chain_checks", checks_json(d.chain_checks)},
          {"all_hold", d.all_hold()}};
}

json to_json(const ClassFit& f) {
  return {{"n_values", f.n_values},
          {"e_values", f.e_values},
          {"omega_values", f.omega_values},
          {"approx_exponent", f.approx_exponent},
          {"modulus_exponent", f.modulus_exponent},
          {"difference", f.difference},
          {"degenerate", f.degenerate},
          {"note", f.note}};
}

std::string sequence_csv(const ApproxSequence& seq) {
  auto s = csv_stream();
  s << "nu,E_nu,solver,iterations,gap\n";
  for (const auto& r : seq.results) {
    s << r.n << ',' << r.value << ',' << to_string(r.solver) << ',' << r.iterations << ',' << r.gap << '\n';
  }
  return s.str();
}

std::string modulus_csv(const std::vector<ModulusReport>& reports) {
  auto s = csv_stream();
  s << "delta,omega,argmax_t\n";
  for (const auto& r : reports) s << r.delta << ',' << r.value << ',' << r.argmax_t << '\n';
  return s.str();
}

std::string converse_csv(const std::vector<ConverseTableRow>& rows) {
  auto s = csv_stream();
  s << "n,omega,rhs_sum,ratio\n";
  for (const auto& r : rows) s << r.n << ',' << r.omega << ',' << r.rhs_sum << ',' << r.ratio << '\n';
  return s.str();
}

std::string lemma1_csv(const Lemma1Report& r) {
  auto s = csv_stream();
  s << "property,name,max_residual,tolerance,passed\n";
  for (const auto& p : r.properties) {
    s << p.index << ",\"" << p.name << "\"," << p.max_residual << ',' << p.tolerance << ','
      << (p.passed ? "true" : "false") << '\n';
  }
  return s.str();
}

}  // namespace gtmod
