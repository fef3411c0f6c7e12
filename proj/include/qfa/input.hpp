#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qfa/repn.hpp"
#include "qfa/verdicts.hpp"

namespace qfa {

struct InputDocument {
  Representation rep;
  std::optional<bool> declared_faithful;
  nlohmann::ordered_json echo;  // normalized form of the accepted input
};

// Strict schema: unknown fields rejected, rationals travel as strings,
// the only floats are the basis approximations.
InputDocument parse_input(const std::string& text);

nlohmann::ordered_json report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

// 0 all decided, 1 some verdict unknown, 2 a hypothesis is violated.
int exit_code_for(const AnalysisReport& r);

}  // namespace qfa
