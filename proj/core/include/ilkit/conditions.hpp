#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ilkit/model.hpp"
#include "ilkit/semantics.hpp"

namespace ilkit {

// Frame conditions over ordinary models (checked on the frame part only)
// and over generalised models. Rn families take the index n.
enum class ConditionKind {
  MOrd,     // y S_w z R u  =>  y R u
  M0Ord,    // w R x R y S_w u R u'  =>  x R u'
  WfamOrd,  // per w, the composite (S_w then R) has no cycle
  KW1Ord,   // every y in R[w] reaches some S_w-endpoint with no S_w-then-R step
  RnOrd,    // chain condition over the B relation
  MGen,
  KM1Gen,
  PGen,
  M0Gen,
  P0Gen,
  RGen,
  WGen,
  NotWGen,  // holds when a counterexample to the W condition exists
  RnGen,
};

struct ConditionId {
  ConditionKind kind;
  int n = 0;  // RnOrd / RnGen index

  bool is_general() const;
  std::string token() const;
  // Exact CLI tokens: Mord, M0ord, Word, KW1ord, Rnord:<n>, Mgen, KM1gen,
  // Pgen, M0gen, P0gen, Rgen, Wgen, NotW, Rngen:<n>.
  static std::optional<ConditionId> from_token(const std::string& token);
};

struct ConditionWitness {
  // Named roles instantiating the violated (or, for NotW, satisfied)
  // quantifier prefix: individual worlds and world sets.
  std::vector<std::pair<std::string, std::string>> worlds;
  std::vector<std::pair<std::string, std::string>> sets;
  std::string note;
};

struct ConditionVerdict {
  bool holds = true;
  std::optional<ConditionWitness> witness;
};

std::string describe(const ConditionVerdict& v);

// Throws ModelError when the id is not an ordinary condition.
ConditionVerdict check_ordinary(const OrdinaryModel& frame,
                                const ConditionId& c);

// Throws ModelError when the id is not a generalised condition and
// LimitError when a subset quantifier would exceed limits.max_valuations.
ConditionVerdict check_general(const GeneralModel& frame, const ConditionId& c,
                               const Limits& limits = {});

// Counterexample search for the W condition; holds means one exists. The
// witness carries (w, u, V) plus a refined subset U with R[U] disjoint from
// U and the quasi-partition U = U0 | Ubar, when such a refinement exists.
ConditionVerdict check_not_w(const GeneralModel& frame);

// printed_base_form switches the base of the chain relation to the
// degenerate published variant that requires x1 R x1.
ConditionVerdict check_rn_ordinary(const OrdinaryModel& frame, int n,
                                   bool printed_base_form = false);
ConditionVerdict check_rn_general(const GeneralModel& frame, int n,
                                  const Limits& limits = {});

}  // namespace ilkit
