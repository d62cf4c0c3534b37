#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ilkit/conditions.hpp"
#include "ilkit/formula.hpp"
#include "ilkit/model.hpp"

namespace ilkit {

struct SearchBounds {
  int max_worlds = 4;
  std::int64_t max_frames_examined = 5'000'000;
  std::int64_t max_valuations = std::int64_t{1} << 22;
  std::int64_t time_budget_ms = 600'000;
  int qt_variant = 2;
};

enum class OutcomeKind { Witness, ExhaustedWithinBounds, BudgetExceeded };

struct SearchOutcome {
  OutcomeKind kind = OutcomeKind::ExhaustedWithinBounds;
  std::optional<GeneralModel> model;  // witness; valuation set for countermodels
  std::string world;                  // refuting world, for countermodels
  std::string detail;
  std::int64_t frames_examined = 0;
};

// First enumerated frame satisfying every condition in logic on which some
// valuation of f's atoms refutes f somewhere. f must be ground; every
// condition must be a generalised-frame condition.
SearchOutcome find_countermodel(const Fml& f, const std::vector<ConditionId>& logic,
                                const SearchBounds& bounds);

// First enumerated frame where `holds` holds and `fails` fails; the witness
// is validated and both verdicts re-checked before it is returned.
SearchOutcome find_separating_frame(const ConditionId& holds,
                                    const ConditionId& fails,
                                    const SearchBounds& bounds);

}  // namespace ilkit
