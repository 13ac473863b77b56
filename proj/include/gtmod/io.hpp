#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gtmod/approx.hpp"
#include "gtmod/harness.hpp"
#include "gtmod/modulus.hpp"
#include "gtmod/translation.hpp"

namespace gtmod {

nlohmann::json to_json(const Calibration& c);
nlohmann::json to_json(const BestApproxResult& r);
nlohmann::json to_json(const ModulusReport& r);
nlohmann::json to_json(const ConverseTableRow& r);
nlohmann::json to_json(const Lemma1Report& r);
nlohmann::json to_json(const DyadicDecomposition& d);
nlohmann::json to_json(const ClassFit& f);

/// nu,E_nu,solver,iterations,gap
std::string sequence_csv(const ApproxSequence& seq);
/// delta,omega,argmax_t
std::string modulus_csv(const std::vector<ModulusReport>& reports);
/// n,omega,rhs_sum,ratio
std::string converse_csv(const std::vector<ConverseTableRow>& rows);
/// property,name,max_residual,tolerance,passed
std::string lemma1_csv(const Lemma1Report& r);

}  // namespace gtmod
