#include "ilkit/proof.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "ilkit/model.hpp"
#include "ilkit/schemes.hpp"
#include "json.hpp"

namespace ilkit {

namespace {

using nlohmann::json;

std::vector<std::string> split_plus(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, '+')) parts.push_back(part);
  if (!text.empty() && text.back() == '+') parts.push_back("");
  return parts;
}

bool axiom_id(const std::string& id) {
  for (const NamedScheme& s : axiom_schemes()) {
    if (s.id == id) return true;
  }
  return false;
}

}  // namespace

std::optional<LogicId> LogicId::parse(const std::string& text) {
  const std::vector<std::string> parts = split_plus(text);
  if (parts.empty() || parts[0] != "IL") return std::nullopt;
  LogicId out;
  for (size_t i = 1; i < parts.size(); ++i) {
    const std::string& id = parts[i];
    if (axiom_id(id) || !scheme_by_id(id) || id.rfind("Un:", 0) == 0) {
      return std::nullopt;  // principles only
    }
    if (std::find(out.principles.begin(), out.principles.end(), id) ==
        out.principles.end()) {
      out.principles.push_back(id);
    }
  }
  return out;
}

std::string LogicId::text() const {
  std::string out = "IL";
  for (const std::string& id : principles) out += "+" + id;
  return out;
}

namespace {

void collect_letters(const Fml& f, std::vector<Fml>& letters,
                     std::map<std::string, int>& index) {
  switch (f->op) {
    case Op::Top:
    case Op::Bot:
      return;
    case Op::Atom:
    case Op::Box:
    case Op::Dia:
    case Op::Rhd: {
      const std::string key = render(f);
      if (index.emplace(key, static_cast<int>(letters.size())).second) {
        letters.push_back(f);
      }
      return;
    }
    case Op::Meta:
      throw FormulaError("proof lines must be ground");
    case Op::Neg:
      collect_letters(f->lhs, letters, index);
      return;
    case Op::And:
    case Op::Or:
    case Op::Impl:
      collect_letters(f->lhs, letters, index);
      collect_letters(f->rhs, letters, index);
      return;
  }
}

bool eval_opaque(const Fml& f, const std::map<std::string, int>& index,
                 std::uint32_t bits) {
  switch (f->op) {
    case Op::Top:
      return true;
    case Op::Bot:
      return false;
    case Op::Atom:
    case Op::Box:
    case Op::Dia:
    case Op::Rhd:
      return (bits >> index.at(render(f))) & 1u;
    case Op::Meta:
      throw FormulaError("proof lines must be ground");
    case Op::Neg:
      return !eval_opaque(f->lhs, index, bits);
    case Op::And:
      return eval_opaque(f->lhs, index, bits) && eval_opaque(f->rhs, index, bits);
    case Op::Or:
      return eval_opaque(f->lhs, index, bits) || eval_opaque(f->rhs, index, bits);
    case Op::Impl:
      return !eval_opaque(f->lhs, index, bits) || eval_opaque(f->rhs, index, bits);
  }
  return false;
}

}  // namespace

bool is_opaque_tautology(const Fml& f) {
  std::vector<Fml> letters;
  std::map<std::string, int> index;
  collect_letters(f, letters, index);
  if (letters.size() > 20) {
    throw LimitError("tautology check over " + std::to_string(letters.size()) +
                     " opaque letters");
  }
  const std::uint32_t count = 1u << letters.size();
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    if (!eval_opaque(f, index, bits)) return false;
  }
  return true;
}

namespace {

StepRule rule_from(const std::string& name) {
  if (name == "taut") return StepRule::Taut;
  if (name == "axiom") return StepRule::Axiom;
  if (name == "mp") return StepRule::MP;
  if (name == "nec") return StepRule::Nec;
  throw ProofError("unknown rule \"" + name + "\"");
}

Fml parse_line(const std::string& text, const std::string& where) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ProofError(where + ": " + e.what());
  }
}

}  // namespace

Proof parse_proof_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ProofError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ProofError("top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "logic" && key != "steps") throw ProofError("unknown key \"" + key + "\"");
  }
  if (!doc.contains("logic") || !doc["logic"].is_string()) {
    throw ProofError("\"logic\" must be a string");
  }
  Proof p;
  auto logic = LogicId::parse(doc["logic"].get<std::string>());
  if (!logic) throw ProofError("unknown logic \"" + doc["logic"].get<std::string>() + "\"");
  p.logic = *logic;
  if (!doc.contains("steps") || !doc["steps"].is_array()) {
    throw ProofError("\"steps\" must be an array");
  }
  int idx = 0;
  for (const json& js : doc["steps"]) {
    ++idx;
    const std::string where = "step " + std::to_string(idx);
    if (!js.is_object()) throw ProofError(where + ": must be an object");
    for (const auto& [key, value] : js.items()) {
      if (key != "rule" && key != "formula" && key != "scheme" && key != "subst" &&
          key != "refs") {
        throw ProofError(where + ": unknown key \"" + key + "\"");
      }
    }
    if (!js.contains("rule") || !js["rule"].is_string()) {
      throw ProofError(where + ": \"rule\" must be a string");
    }
    ProofStep step;
    step.rule = rule_from(js["rule"].get<std::string>());
    if (js.contains("formula")) {
      if (!js["formula"].is_string()) throw ProofError(where + ": \"formula\" must be a string");
      step.formula = parse_line(js["formula"].get<std::string>(), where);
    }
    if (js.contains("scheme")) {
      if (!js["scheme"].is_string()) throw ProofError(where + ": \"scheme\" must be a string");
      step.scheme = js["scheme"].get<std::string>();
    }
    if (js.contains("subst")) {
      if (!js["subst"].is_object()) throw ProofError(where + ": \"subst\" must be an object");
      Substitution s;
      for (const auto& [meta, value] : js["subst"].items()) {
        if (!value.is_string()) throw ProofError(where + ": substitution values must be strings");
        s[meta] = parse_line(value.get<std::string>(), where);
      }
      step.subst = std::move(s);
    }
    if (js.contains("refs")) {
      if (!js["refs"].is_array()) throw ProofError(where + ": \"refs\" must be an array");
      for (const json& r : js["refs"]) {
        if (!r.is_number_integer()) throw ProofError(where + ": refs must be integers");
        step.refs.push_back(r.get<int>());
      }
    }
    p.steps.push_back(std::move(step));
  }
  return p;
}

Proof load_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProofError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_proof_json(buf.str());
}

ProofVerdict check_proof(const Proof& p, const LogicId& logic) {
  ProofVerdict verdict;
  if (p.steps.empty()) {
    verdict.reason = "proof has no steps";
    return verdict;
  }
  std::vector<Fml> lines;
  for (int idx = 1; idx <= static_cast<int>(p.steps.size()); ++idx) {
    const ProofStep& step = p.steps[idx - 1];
    auto fail = [&](const std::string& reason) {
      verdict.failing_step = idx;
      verdict.reason = reason;
      return verdict;
    };
    if (step.formula && !is_ground(step.formula)) {
      return fail("proof lines must be ground");
    }
    auto ref = [&](int r) -> Fml {
      if (r < 1 || r >= idx) return nullptr;
      return lines[r - 1];
    };
    Fml line;
    switch (step.rule) {
      case StepRule::Taut: {
        if (!step.formula) return fail("tautology step needs a formula");
        if (!step.refs.empty()) return fail("tautology step takes no references");
        if (!is_opaque_tautology(step.formula)) {
          return fail("not a tautology over its modal components");
        }
        line = step.formula;
        break;
      }
      case StepRule::Axiom: {
        if (!step.refs.empty()) return fail("axiom step takes no references");
        if (step.scheme.empty()) return fail("axiom step needs a scheme id");
        auto scheme = scheme_by_id(step.scheme);
        if (!scheme) return fail("unknown scheme \"" + step.scheme + "\"");
        if (!axiom_id(step.scheme)) {
          const auto& ids = logic.principles;
          if (std::find(ids.begin(), ids.end(), step.scheme) == ids.end()) {
            return fail("scheme \"" + step.scheme + "\" is not part of " + logic.text());
          }
        }
        if (step.subst) {
          Fml inst;
          try {
            inst = instantiate(*scheme, *step.subst);
          } catch (const FormulaError& e) {
            return fail(e.what());
          }
          if (!is_ground(inst)) return fail("axiom instance must be ground");
          if (step.formula && !equal(step.formula, inst)) {
            return fail("formula does not match the substituted scheme");
          }
          line = inst;
        } else {
          if (!step.formula) return fail("axiom step needs a substitution or a formula");
          if (!match_scheme(*scheme, step.formula)) {
            return fail("formula is not an instance of " + step.scheme);
          }
          line = step.formula;
        }
        break;
      }
      case StepRule::MP: {
        if (step.refs.size() != 2) return fail("mp needs two references");
        const Fml antecedent = ref(step.refs[0]);
        const Fml implication = ref(step.refs[1]);
        if (!antecedent || !implication) return fail("mp references must point at earlier lines");
        if (implication->op != Op::Impl) {
          return fail("second mp reference must be an implication");
        }
        if (!equal(implication->lhs, antecedent)) {
          return fail("implication does not start from the first mp reference");
        }
        if (step.formula && !equal(step.formula, implication->rhs)) {
          return fail("formula is not the implication's conclusion");
        }
        line = implication->rhs;
        break;
      }
      case StepRule::Nec: {
        if (step.refs.size() != 1) return fail("nec needs one reference");
        const Fml premise = ref(step.refs[0]);
        if (!premise) return fail("nec reference must point at an earlier line");
        const Fml boxed = mk_box(premise);
        if (step.formula && !equal(step.formula, boxed)) {
          return fail("formula is not the box of the referenced line");
        }
        line = boxed;
        break;
      }
    }
    lines.push_back(line);
  }
  verdict.accepted = true;
  verdict.theorem = lines.back();
  return verdict;
}

ProofVerdict check_proof(const Proof& p) { return check_proof(p, p.logic); }

}  // namespace ilkit
