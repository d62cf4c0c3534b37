#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace ilkit {

// Connectives. Atom names are lowercase identifiers, Meta (schematic
// letters) uppercase; `top`/`bot` are reserved words of the grammar.
enum class Op : uint8_t { Atom, Meta, Top, Bot, Neg, And, Or, Impl, Box, Dia, Rhd };

class Formula;
using Fml = std::shared_ptr<const Formula>;

class Formula {
public:
  Op op;
  std::string name;  // Atom/Meta only
  Fml lhs, rhs;      // unary connectives use lhs

  Formula(Op o, std::string n, Fml l, Fml r)
      : op(o), name(std::move(n)), lhs(std::move(l)), rhs(std::move(r)) {}
};

Fml mk_atom(std::string name);
Fml mk_meta(std::string name);
Fml mk_top();
Fml mk_bot();
Fml mk_neg(Fml f);
Fml mk_and(Fml l, Fml r);
Fml mk_or(Fml l, Fml r);
Fml mk_impl(Fml l, Fml r);
Fml mk_box(Fml f);
Fml mk_dia(Fml f);
Fml mk_rhd(Fml l, Fml r);

bool equal(const Fml& a, const Fml& b);
// Total structural order; used to canonicalise formula sets.
int compare(const Fml& a, const Fml& b);

struct FmlLess {
  bool operator()(const Fml& a, const Fml& b) const { return compare(a, b) < 0; }
};
using FmlSet = std::set<Fml, FmlLess>;

class ParseError : public std::runtime_error {
public:
  size_t position;
  ParseError(size_t pos, const std::string& what)
      : std::runtime_error(what), position(pos) {}
};

class FormulaError : public std::runtime_error {
public:
  explicit FormulaError(const std::string& what) : std::runtime_error(what) {}
};

// Concrete syntax:
//   atom  [a-z][a-zA-Z0-9_]*   meta  [A-Z][a-zA-Z0-9_]*   constants `top` `bot`
//   unary ~ [] <>   binary /\ \/ |> ->   grouping ( )
// Binding strength {~,[],<>} > {/\,\/} > |> > ->.  -> associates right.
// |> does not associate (chains need parentheses).  /\ and \/ bind equally
// and may not be mixed without parentheses.
Fml parse(const std::string& text);

// Minimal-parenthesis printer; parse(render(f)) == f.
std::string render(const Fml& f);

bool is_ground(const Fml& f);
std::set<std::string> metavariables(const Fml& f);
std::set<std::string> atoms(const Fml& f);

// ~f: strips one outer negation if present, otherwise negates.
Fml single_negation(const Fml& f);

// Rewrites to the |>-only kernel: <>A to ~(A |> bot), []A to (~A) |> bot.
// Rejects schemes (metavariables are matched on surface syntax).
Fml desugar(const Fml& f);

FmlSet subformulas(const Fml& f);
int modal_depth(const Fml& f);

// Smallest superset of fs plus top, closed under subformulas and ~.
FmlSet close_seed(const FmlSet& fs);

struct AdequateSet {
  FmlSet seed;   // the D the set was built from
  FmlSet gamma;  // Gamma_D
};

// Least set over a seed-closed D that is closed under subformulas and ~,
// contains bot |> bot and []~A for all A in D, and contains X |> Y for all
// X, Y in the antecedent/succedent pool.  Box/Dia members contribute to the
// pool through their |>-kernel reading ([]B ~ (~B)|>bot, <>B ~ ~(B|>bot)).
AdequateSet adequate_set(const FmlSet& seed_closed);

using Substitution = std::map<std::string, Fml>;

// Replaces every metavariable by its image; s must cover all of them.
Fml instantiate(const Fml& scheme, const Substitution& s);

// Syntactic match: returns s with instantiate(scheme, s) == f, if any.
// Repeated metavariables must match equal subtrees.
std::optional<Substitution> match_scheme(const Fml& scheme, const Fml& f);

}  // namespace ilkit
