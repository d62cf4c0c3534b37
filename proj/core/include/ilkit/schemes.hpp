#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ilkit/conditions.hpp"
#include "ilkit/formula.hpp"

namespace ilkit {

struct NamedScheme {
  std::string id;
  Fml scheme;
};

// The modal-logic base: L1 L2 L3 J1 J2 J3 J4 J5.
const std::vector<NamedScheme>& axiom_schemes();

// Interpretability principles: M P W KW1 KW1_0 F M0 W* P0 R KM1 KM2.
const std::vector<NamedScheme>& scheme_catalog();

// Accepts axiom ids, catalog ids, and the indexed families "Rn:<k>" (k >= 0,
// Rn:0 coincides with R) and "Un:<k>" (k >= 1).
std::optional<Fml> scheme_by_id(const std::string& id);

// The scheme a frame condition is named after; empty for conditions that do
// not correspond to a single scheme.
std::optional<NamedScheme> scheme_for_condition(const ConditionId& c);

}  // namespace ilkit
