#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ilkit/formula.hpp"
#include "ilkit/model.hpp"

namespace ilkit {

// Assignment of truth sets to letters. Both atoms and metavariables are
// letters here: frame validity quantifies over all of them.
using LetterEnv = std::map<std::string, WorldSet>;

// Budgets for exhaustive quantification.
struct Limits {
  // Upper bound on the number of letter assignments a frame-validity scan
  // (or a set-quantifying condition check) may enumerate.
  std::int64_t max_valuations = std::int64_t{1} << 22;
};

// Truth set of a ground formula under the model's own valuation. Atoms
// missing from the valuation are false everywhere; metavariables throw.
WorldSet truth_set(const OrdinaryModel& m, const Fml& f);
WorldSet truth_set(const GeneralModel& m, const Fml& f);

// Truth set with letters read from env first, then from the valuation.
// A metavariable not bound by env throws.
WorldSet truth_set(const OrdinaryModel& m, const Fml& f, const LetterEnv& env);
WorldSet truth_set(const GeneralModel& m, const Fml& f, const LetterEnv& env);

bool forces(const OrdinaryModel& m, World w, const Fml& f);
bool forces(const GeneralModel& m, World w, const Fml& f);

// By world name; throws ModelError on unknown names.
bool forces(const OrdinaryModel& m, const std::string& world, const Fml& f);
bool forces(const GeneralModel& m, const std::string& world, const Fml& f);

struct FrameValidity {
  bool valid = true;
  // Least falsifying letter assignment and world when invalid.
  LetterEnv witness_valuation;
  std::string witness_world;
};

// A scheme is frame-valid when every assignment of world sets to its letters
// makes it true everywhere. The valuation stored in the model is ignored;
// the scan covers 2^(letters * worlds) assignments and throws LimitError
// (reporting the required count) when that exceeds limits.max_valuations.
FrameValidity frame_valid_scheme(const OrdinaryModel& m, const Fml& scheme,
                                 const Limits& limits = {});
FrameValidity frame_valid_scheme(const GeneralModel& m, const Fml& scheme,
                                 const Limits& limits = {});

}  // namespace ilkit
