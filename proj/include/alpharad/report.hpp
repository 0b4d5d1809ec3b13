#pragma once

#include <string>

#include "json.hpp"

#include "alpharad/theorem.hpp"
#include "alpharad/verifier.hpp"

namespace alpharad {

// Field order follows VerificationReport's declaration order and is part of
// the output contract. alpha is written as its exact string form ("1/2").
nlohmann::ordered_json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);
std::string to_json_line(const VerificationReport& report);

std::string csv_header();
std::string to_csv_row(const VerificationReport& report);
std::string to_human(const VerificationReport& report);

nlohmann::ordered_json to_json(const RegimeVerdict& verdict, std::size_t n, std::size_t beta, const Alpha& alpha);
nlohmann::ordered_json to_json(const FamilySearchResult& result);

std::string describe(Extremal kind, std::size_t n, std::size_t beta);
std::string describe(const JoinFamily& family);

}  // namespace alpharad
