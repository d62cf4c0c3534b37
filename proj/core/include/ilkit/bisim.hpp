#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ilkit/formula.hpp"
#include "ilkit/model.hpp"

namespace ilkit {

// Relation between the worlds of a left and a right model:
// rel[w] = set of right-hand worlds related to left world w.
using Rel = std::vector<WorldSet>;

// Atom agreement plus the forth and back rounds, checked directly.
bool is_bisimulation(const GeneralModel& a, const GeneralModel& b, const Rel& z);

// Greatest fixpoint: start from atom agreement over the joint vocabulary and
// prune pairs whose forth or back round fails until stable.
Rel largest_bisimulation(const GeneralModel& a, const GeneralModel& b);

// chain[k] holds the pairs surviving k pruning rounds (chain[0] is atom
// agreement), so chain[k] is the k-bisimilarity relation.
std::vector<Rel> n_bisimulation(const GeneralModel& a, const GeneralModel& b, int n);

struct EquivalenceResult {
  bool equivalent = true;
  // True when every formula of the given depth over the vocabulary was
  // decided (joint truth-set closure); false when a fixed corpus sampled
  // the formula space instead.
  bool exhaustive = true;
  std::int64_t formulas_checked = 0;
  std::string separating;  // a separating formula, when one was found
};

// Deterministic formula pool over the vocabulary, capped at roughly `budget`
// entries per layer expansion; used when exhaustive checking is infeasible.
std::vector<Fml> formula_corpus(const std::vector<std::string>& vocabulary,
                                int depth, size_t budget = 4000);

EquivalenceResult modally_equivalent_up_to(const GeneralModel& a, World wa,
                                           const GeneralModel& b, World wb,
                                           int depth,
                                           const std::vector<std::string>& vocabulary);
EquivalenceResult modally_equivalent_up_to(const GeneralModel& a, World wa,
                                           const OrdinaryModel& b, World wb,
                                           int depth,
                                           const std::vector<std::string>& vocabulary);
EquivalenceResult modally_equivalent_up_to(const OrdinaryModel& a, World wa,
                                           const OrdinaryModel& b, World wb,
                                           int depth,
                                           const std::vector<std::string>& vocabulary);

}  // namespace ilkit
