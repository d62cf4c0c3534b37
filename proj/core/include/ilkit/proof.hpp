#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ilkit/formula.hpp"

namespace ilkit {

class ProofError : public std::runtime_error {
public:
  explicit ProofError(const std::string& what) : std::runtime_error(what) {}
};

// "IL" optionally extended with catalog principles, e.g. "IL+M0+W*" or
// "IL+Rn:2"; duplicates collapse, order is kept.
struct LogicId {
  std::vector<std::string> principles;

  static std::optional<LogicId> parse(const std::string& text);
  std::string text() const;
};

enum class StepRule { Taut, Axiom, MP, Nec };

struct ProofStep {
  StepRule rule = StepRule::Taut;
  Fml formula;                        // claimed line; empty when derivable
  std::string scheme;                 // axiom steps: scheme id
  std::optional<Substitution> subst;  // axiom steps: explicit instance
  std::vector<int> refs;              // 1-based references to earlier lines
};

struct Proof {
  LogicId logic;
  std::vector<ProofStep> steps;
};

struct ProofVerdict {
  bool accepted = false;
  int failing_step = 0;  // 1-based; 0 when accepted or the proof is empty
  std::string reason;
  Fml theorem;           // final line when accepted
};

// {"logic": "IL+W", "steps": [{"rule": "taut"|"axiom"|"mp"|"nec",
//  "formula": "...", "scheme": "J1", "subst": {"A": "p"}, "refs": [1, 3]}]}
// Unknown keys are rejected; throws ProofError.
Proof parse_proof_json(const std::string& text);
Proof load_proof_file(const std::string& path);

// True when the formula is a propositional tautology with its modal
// subformulas read as opaque letters; throws LimitError past 20 letters.
bool is_opaque_tautology(const Fml& f);

// Accepts MP references as (antecedent, implication). Axiom steps may cite
// the base schemes or the logic's principles; the proof's own logic header
// is ignored in favour of the argument.
ProofVerdict check_proof(const Proof& p, const LogicId& logic);
ProofVerdict check_proof(const Proof& p);  // uses the proof's logic

}  // namespace ilkit
