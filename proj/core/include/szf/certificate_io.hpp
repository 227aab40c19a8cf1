#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "szf/search.hpp"

namespace szf {

// JSON forms use 1-based vertex labels throughout:
//   {"initial":[1,2],"moves":[{"clause":"D","pivot":3,"mark":{"v":3,"sign":"+"}}, ...]}

nlohmann::json to_json(const RuleInstance& inst);
nlohmann::json to_json(const Transcript& t);
nlohmann::json to_json(const BranchCertificate& cert);

/// Throws ParseError on malformed documents.
RuleInstance rule_instance_from_json(const nlohmann::json& j);
Transcript transcript_from_json(const nlohmann::json& j);
BranchCertificate branch_certificate_from_json(const nlohmann::json& j);

/// Graphviz rendering of a transcript over the pattern digraph: initial vertices filled,
/// each move as a labelled edge from its pivot.
std::string transcript_to_dot(const SignPattern& p, const Transcript& t);

}  // namespace szf
