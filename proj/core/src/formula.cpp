#include "ilkit/formula.hpp"

#include <cctype>
#include <functional>
#include <sstream>
#include <vector>

namespace ilkit {

Fml mk_atom(std::string name) { return std::make_shared<Formula>(Op::Atom, std::move(name), nullptr, nullptr); }
Fml mk_meta(std::string name) { return std::make_shared<Formula>(Op::Meta, std::move(name), nullptr, nullptr); }

Fml mk_top() {
  static const Fml t = std::make_shared<Formula>(Op::Top, "", nullptr, nullptr);
  return t;
}

Fml mk_bot() {
  static const Fml b = std::make_shared<Formula>(Op::Bot, "", nullptr, nullptr);
  return b;
}

Fml mk_neg(Fml f) { return std::make_shared<Formula>(Op::Neg, "", std::move(f), nullptr); }
Fml mk_and(Fml l, Fml r) { return std::make_shared<Formula>(Op::And, "", std::move(l), std::move(r)); }
Fml mk_or(Fml l, Fml r) { return std::make_shared<Formula>(Op::Or, "", std::move(l), std::move(r)); }
Fml mk_impl(Fml l, Fml r) { return std::make_shared<Formula>(Op::Impl, "", std::move(l), std::move(r)); }
Fml mk_box(Fml f) { return std::make_shared<Formula>(Op::Box, "", std::move(f), nullptr); }
Fml mk_dia(Fml f) { return std::make_shared<Formula>(Op::Dia, "", std::move(f), nullptr); }
Fml mk_rhd(Fml l, Fml r) { return std::make_shared<Formula>(Op::Rhd, "", std::move(l), std::move(r)); }

int compare(const Fml& a, const Fml& b) {
  if (a.get() == b.get()) return 0;
  if (!a) return b ? -1 : 0;
  if (!b) return 1;
  if (a->op != b->op) return a->op < b->op ? -1 : 1;
  if (int c = a->name.compare(b->name); c != 0) return c < 0 ? -1 : 1;
  if (int c = compare(a->lhs, b->lhs); c != 0) return c;
  return compare(a->rhs, b->rhs);
}

bool equal(const Fml& a, const Fml& b) { return compare(a, b) == 0; }

// ---------------------------------------------------------------------------
// Lexer / parser

namespace {

enum class Tok { Atom, Meta, Top, Bot, Not, Box, Dia, And, Or, Rhd, Impl, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : src_(s) {}

  Token next() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    size_t start = i_;
    if (i_ >= src_.size()) return {Tok::End, "", start};
    char c = src_[i_];
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string id = ident();
      if (id == "top") return {Tok::Top, id, start};
      if (id == "bot") return {Tok::Bot, id, start};
      return {Tok::Atom, id, start};
    }
    if (std::isupper(static_cast<unsigned char>(c))) return {Tok::Meta, ident(), start};
    switch (c) {
      case '~': ++i_; return {Tok::Not, "~", start};
      case '(': ++i_; return {Tok::LParen, "(", start};
      case ')': ++i_; return {Tok::RParen, ")", start};
      case '[':
        if (peek2('[', ']')) { i_ += 2; return {Tok::Box, "[]", start}; }
        throw ParseError(start, "expected \"[]\"");
      case '<':
        if (peek2('<', '>')) { i_ += 2; return {Tok::Dia, "<>", start}; }
        throw ParseError(start, "expected \"<>\"");
      case '/':
        if (peek2('/', '\\')) { i_ += 2; return {Tok::And, "/\\", start}; }
        throw ParseError(start, "expected \"/\\\"");
      case '\\':
        if (peek2('\\', '/')) { i_ += 2; return {Tok::Or, "\\/", start}; }
        throw ParseError(start, "expected \"\\/\"");
      case '|':
        if (peek2('|', '>')) { i_ += 2; return {Tok::Rhd, "|>", start}; }
        throw ParseError(start, "expected \"|>\"");
      case '-':
        if (peek2('-', '>')) { i_ += 2; return {Tok::Impl, "->", start}; }
        throw ParseError(start, "expected \"->\"");
      default:
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }

private:
  bool peek2(char a, char b) const {
    return i_ + 1 < src_.size() && src_[i_] == a && src_[i_ + 1] == b;
  }

  std::string ident() {
    size_t start = i_;
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ++i_;
      else break;
    }
    return src_.substr(start, i_ - start);
  }

  const std::string& src_;
  size_t i_ = 0;
};

class Parser {
public:
  explicit Parser(const std::string& s) : lex_(s) { advance(); }

  Fml parse_all() {
    Fml f = implication();
    if (cur_.kind != Tok::End) throw ParseError(cur_.pos, "unexpected \"" + cur_.text + "\"");
    return f;
  }

private:
  void advance() { cur_ = lex_.next(); }

  bool accept(Tok k) {
    if (cur_.kind != k) return false;
    advance();
    return true;
  }

  // impl := rhd ('->' impl)?        right-associative
  Fml implication() {
    Fml l = triangle();
    if (accept(Tok::Impl)) return mk_impl(std::move(l), implication());
    return l;
  }

  // rhd := andor ('|>' andor)?      non-associative: a chain is an error
  Fml triangle() {
    Fml l = conjdisj();
    if (!accept(Tok::Rhd)) return l;
    Fml r = conjdisj();
    if (cur_.kind == Tok::Rhd)
      throw ParseError(cur_.pos, "\"|>\" is non-associative; parenthesise the chain");
    return mk_rhd(std::move(l), std::move(r));
  }

  // andor := unary (op unary)*      one operator per unparenthesised chain
  Fml conjdisj() {
    Fml l = unary();
    if (cur_.kind != Tok::And && cur_.kind != Tok::Or) return l;
    Tok op = cur_.kind;
    while (cur_.kind == Tok::And || cur_.kind == Tok::Or) {
      if (cur_.kind != op)
        throw ParseError(cur_.pos, "mixing \"/\\\" and \"\\/\" requires parentheses");
      advance();
      Fml r = unary();
      l = (op == Tok::And) ? mk_and(std::move(l), std::move(r)) : mk_or(std::move(l), std::move(r));
    }
    return l;
  }

  Fml unary() {
    if (accept(Tok::Not)) return mk_neg(unary());
    if (accept(Tok::Box)) return mk_box(unary());
    if (accept(Tok::Dia)) return mk_dia(unary());
    return primary();
  }

  Fml primary() {
    switch (cur_.kind) {
      case Tok::Top: advance(); return mk_top();
      case Tok::Bot: advance(); return mk_bot();
      case Tok::Atom: {
        Fml f = mk_atom(cur_.text);
        advance();
        return f;
      }
      case Tok::Meta: {
        Fml f = mk_meta(cur_.text);
        advance();
        return f;
      }
      case Tok::LParen: {
        advance();
        Fml f = implication();
        if (!accept(Tok::RParen)) throw ParseError(cur_.pos, "expected \")\"");
        return f;
      }
      default:
        throw ParseError(cur_.pos, cur_.kind == Tok::End ? "unexpected end of input"
                                                         : "unexpected \"" + cur_.text + "\"");
    }
  }

  Lexer lex_;
  Token cur_{Tok::End, "", 0};
};

// Precedence levels for the printer; higher binds tighter.
int level(Op op) {
  switch (op) {
    case Op::Impl: return 0;
    case Op::Rhd: return 1;
    case Op::And:
    case Op::Or: return 2;
    case Op::Neg:
    case Op::Box:
    case Op::Dia: return 3;
    default: return 4;
  }
}

void render_rec(const Fml& f, std::ostringstream& out);

// Parenthesise child when it binds no tighter than required, with the two
// stated exceptions: a right-nested -> (right associativity) and a
// left-nested /\ or \/ of the same operator (left associativity).
void child(const Fml& c, int min_level, std::ostringstream& out) {
  if (level(c->op) < min_level) {
    out << '(';
    render_rec(c, out);
    out << ')';
  } else {
    render_rec(c, out);
  }
}

void render_rec(const Fml& f, std::ostringstream& out) {
  switch (f->op) {
    case Op::Atom:
    case Op::Meta: out << f->name; return;
    case Op::Top: out << "top"; return;
    case Op::Bot: out << "bot"; return;
    case Op::Neg:
      out << '~';
      child(f->lhs, 3, out);
      return;
    case Op::Box:
      out << "[]";
      child(f->lhs, 3, out);
      return;
    case Op::Dia:
      out << "<>";
      child(f->lhs, 3, out);
      return;
    case Op::And:
    case Op::Or: {
      const char* sym = f->op == Op::And ? " /\\ " : " \\/ ";
      // left-associative within one operator; the sibling operator and any
      // right-nested copy must be bracketed
      if (f->lhs->op == f->op) render_rec(f->lhs, out);
      else child(f->lhs, 3, out);
      out << sym;
      child(f->rhs, 3, out);
      return;
    }
    case Op::Rhd:
      child(f->lhs, 2, out);
      out << " |> ";
      child(f->rhs, 2, out);
      return;
    case Op::Impl:
      child(f->lhs, 1, out);
      out << " -> ";
      // right-associative: a nested -> on the right needs no brackets
      if (f->rhs->op == Op::Impl) render_rec(f->rhs, out);
      else child(f->rhs, 1, out);
      return;
  }
}

}  // namespace

Fml parse(const std::string& text) { return Parser(text).parse_all(); }

std::string render(const Fml& f) {
  std::ostringstream out;
  render_rec(f, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Structural operations

bool is_ground(const Fml& f) {
  if (!f) return true;
  if (f->op == Op::Meta) return false;
  return is_ground(f->lhs) && is_ground(f->rhs);
}

namespace {
void collect_names(const Fml& f, Op which, std::set<std::string>& out) {
  if (!f) return;
  if (f->op == which) out.insert(f->name);
  collect_names(f->lhs, which, out);
  collect_names(f->rhs, which, out);
}
}  // namespace

std::set<std::string> metavariables(const Fml& f) {
  std::set<std::string> out;
  collect_names(f, Op::Meta, out);
  return out;
}

std::set<std::string> atoms(const Fml& f) {
  std::set<std::string> out;
  collect_names(f, Op::Atom, out);
  return out;
}

Fml single_negation(const Fml& f) {
  if (f->op == Op::Neg) return f->lhs;
  return mk_neg(f);
}

Fml desugar(const Fml& f) {
  switch (f->op) {
    case Op::Meta: throw FormulaError("schemes cannot be desugared");
    case Op::Atom:
    case Op::Top:
    case Op::Bot: return f;
    case Op::Neg: return mk_neg(desugar(f->lhs));
    case Op::And: return mk_and(desugar(f->lhs), desugar(f->rhs));
    case Op::Or: return mk_or(desugar(f->lhs), desugar(f->rhs));
    case Op::Impl: return mk_impl(desugar(f->lhs), desugar(f->rhs));
    case Op::Rhd: return mk_rhd(desugar(f->lhs), desugar(f->rhs));
    case Op::Box: return mk_rhd(single_negation(desugar(f->lhs)), mk_bot());
    case Op::Dia: return mk_neg(mk_rhd(desugar(f->lhs), mk_bot()));
  }
  throw FormulaError("unreachable");
}

namespace {
void subformulas_rec(const Fml& f, FmlSet& out) {
  if (!f || !out.insert(f).second) return;
  subformulas_rec(f->lhs, out);
  subformulas_rec(f->rhs, out);
}
}  // namespace

FmlSet subformulas(const Fml& f) {
  FmlSet out;
  subformulas_rec(f, out);
  return out;
}

int modal_depth(const Fml& f) {
  if (!f) return 0;
  int sub = std::max(modal_depth(f->lhs), modal_depth(f->rhs));
  switch (f->op) {
    case Op::Box:
    case Op::Dia:
    case Op::Rhd: return sub + 1;
    default: return sub;
  }
}

FmlSet close_seed(const FmlSet& fs) {
  FmlSet out;
  for (const Fml& f : fs) subformulas_rec(f, out);
  subformulas_rec(mk_top(), out);
  // ~-closure: new negations have all their subformulas present already
  for (bool grew = true; grew;) {
    grew = false;
    FmlSet add;
    for (const Fml& f : out) {
      Fml n = single_negation(f);
      if (!out.count(n)) add.insert(n);
    }
    for (const Fml& f : add) {
      subformulas_rec(f, out);
      grew = true;
    }
  }
  return out;
}

namespace {
bool same_fml_set(const FmlSet& a, const FmlSet& b) {
  if (a.size() != b.size()) return false;
  for (const Fml& f : a)
    if (!b.count(f)) return false;
  return true;
}
}  // namespace

AdequateSet adequate_set(const FmlSet& seed_closed) {
  if (!same_fml_set(close_seed(seed_closed), seed_closed))
    throw FormulaError("adequate_set: seed is not closed (apply close_seed first)");
  for (const Fml& f : seed_closed)
    if (!is_ground(f)) throw FormulaError("adequate_set: seed must be ground");

  FmlSet gamma;
  auto add = [&gamma](const Fml& f) { subformulas_rec(f, gamma); };

  for (const Fml& f : seed_closed) add(f);
  add(mk_rhd(mk_bot(), mk_bot()));
  for (const Fml& f : seed_closed) add(mk_box(mk_neg(f)));

  for (bool grew = true; grew;) {
    grew = false;
    // ~-closure
    FmlSet negs;
    for (const Fml& f : gamma) {
      Fml n = single_negation(f);
      if (!gamma.count(n)) negs.insert(n);
    }
    for (const Fml& f : negs) {
      add(f);
      grew = true;
    }
    // antecedent/succedent pool; Box/Dia members enter through their
    // |>-kernel reading, so []B contributes ~B and bot, <>B contributes
    // B and bot
    FmlSet pool;
    for (const Fml& f : gamma) {
      if (f->op == Op::Rhd) {
        pool.insert(f->lhs);
        pool.insert(f->rhs);
      } else if (f->op == Op::Box) {
        pool.insert(single_negation(f->lhs));
        pool.insert(mk_bot());
      } else if (f->op == Op::Dia) {
        pool.insert(f->lhs);
        pool.insert(mk_bot());
      }
    }
    for (const Fml& a : pool) {
      for (const Fml& b : pool) {
        Fml r = mk_rhd(a, b);
        if (!gamma.count(r)) {
          add(r);
          grew = true;
        }
      }
    }
  }
  return AdequateSet{seed_closed, std::move(gamma)};
}

Fml instantiate(const Fml& scheme, const Substitution& s) {
  switch (scheme->op) {
    case Op::Meta: {
      auto it = s.find(scheme->name);
      if (it == s.end())
        throw FormulaError("substitution missing metavariable " + scheme->name);
      return it->second;
    }
    case Op::Atom:
    case Op::Top:
    case Op::Bot: return scheme;
    case Op::Neg: return mk_neg(instantiate(scheme->lhs, s));
    case Op::Box: return mk_box(instantiate(scheme->lhs, s));
    case Op::Dia: return mk_dia(instantiate(scheme->lhs, s));
    case Op::And: return mk_and(instantiate(scheme->lhs, s), instantiate(scheme->rhs, s));
    case Op::Or: return mk_or(instantiate(scheme->lhs, s), instantiate(scheme->rhs, s));
    case Op::Impl: return mk_impl(instantiate(scheme->lhs, s), instantiate(scheme->rhs, s));
    case Op::Rhd: return mk_rhd(instantiate(scheme->lhs, s), instantiate(scheme->rhs, s));
  }
  throw FormulaError("unreachable");
}

namespace {
bool match_rec(const Fml& scheme, const Fml& f, Substitution& s) {
  if (scheme->op == Op::Meta) {
    auto [it, inserted] = s.emplace(scheme->name, f);
    return inserted || equal(it->second, f);
  }
  if (scheme->op != f->op || scheme->name != f->name) return false;
  if (scheme->lhs && !match_rec(scheme->lhs, f->lhs, s)) return false;
  if (scheme->rhs && !match_rec(scheme->rhs, f->rhs, s)) return false;
  return true;
}
}  // namespace

std::optional<Substitution> match_scheme(const Fml& scheme, const Fml& f) {
  Substitution s;
  if (match_rec(scheme, f, s)) return s;
  return std::nullopt;
}

}  // namespace ilkit
