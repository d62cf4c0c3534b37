#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ilkit/formula.hpp"

using namespace ilkit;

TEST_CASE("parse/render round-trips") {
  const char* samples[] = {
      "p",
      "top",
      "bot",
      "~p",
      "~~p",
      "[]p",
      "<>~q",
      "p /\\ q",
      "p \\/ q \\/ r",
      "p -> q -> r",
      "p |> q",
      "(p |> q) |> r",
      "p |> (q |> r)",
      "[](A -> B) -> (A |> B)",
      "A |> B -> (<>A -> <>B)",
      "~(p /\\ (q \\/ r)) -> []p |> <>bot",
      "p0 /\\ qX_7 -> Zed9",
  };
  for (const char* s : samples) {
    Fml f = parse(s);
    Fml g = parse(render(f));
    CHECK_MESSAGE(equal(f, g), "round-trip changed: ", s, " vs ", render(f));
  }
}

TEST_CASE("precedence and associativity") {
  // unary binds tightest
  CHECK(equal(parse("~[]p /\\ q"), mk_and(mk_neg(mk_box(mk_atom("p"))), mk_atom("q"))));
  // /\ and \/ bind tighter than |>
  CHECK(equal(parse("p /\\ q |> r"), mk_rhd(mk_and(mk_atom("p"), mk_atom("q")), mk_atom("r"))));
  // |> binds tighter than ->
  CHECK(equal(parse("p |> q -> r"), mk_impl(mk_rhd(mk_atom("p"), mk_atom("q")), mk_atom("r"))));
  // -> is right-associative
  CHECK(equal(parse("p -> q -> r"),
              mk_impl(mk_atom("p"), mk_impl(mk_atom("q"), mk_atom("r")))));
  // conjunction chains associate left
  CHECK(equal(parse("p /\\ q /\\ r"),
              mk_and(mk_and(mk_atom("p"), mk_atom("q")), mk_atom("r"))));
}

TEST_CASE("rejected inputs") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p |> q |> r"), ParseError);
  CHECK_THROWS_AS(parse("p /\\ q \\/ r"), ParseError);
  CHECK_THROWS_AS(parse("(p"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("p ->"), ParseError);
  CHECK_THROWS_AS(parse("p & q"), ParseError);
  try {
    parse("p |> q |> r");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position >= 7);  // points at the second |>
  }
}

TEST_CASE("lexing of identifiers and constants") {
  CHECK(parse("topx")->op == Op::Atom);  // identifier, not the constant
  CHECK(parse("top")->op == Op::Top);
  CHECK(parse("bot")->op == Op::Bot);
  CHECK(parse("q3_z")->op == Op::Atom);
  CHECK(parse("Q3_z")->op == Op::Meta);
  CHECK(atoms(parse("p /\\ Q -> p2")) == std::set<std::string>{"p", "p2"});
  CHECK(metavariables(parse("p /\\ Q -> R")) == std::set<std::string>{"Q", "R"});
  CHECK(is_ground(parse("p |> q")));
  CHECK_FALSE(is_ground(parse("p |> B")));
}

TEST_CASE("render uses minimal parentheses") {
  CHECK(render(mk_impl(mk_atom("p"), mk_impl(mk_atom("q"), mk_atom("r")))) ==
        "p -> q -> r");
  CHECK(render(mk_impl(mk_impl(mk_atom("p"), mk_atom("q")), mk_atom("r"))) ==
        "(p -> q) -> r");
  CHECK(render(mk_and(mk_atom("p"), mk_or(mk_atom("q"), mk_atom("r")))) ==
        "p /\\ (q \\/ r)");
  CHECK(render(mk_rhd(mk_rhd(mk_atom("p"), mk_atom("q")), mk_atom("r"))) ==
        "(p |> q) |> r");
  CHECK(render(mk_neg(mk_box(mk_atom("p")))) == "~[]p");
}

TEST_CASE("structural order") {
  Fml a = parse("p |> q");
  Fml b = parse("p |> q");
  Fml c = parse("q |> p");
  CHECK(compare(a, b) == 0);
  CHECK(equal(a, b));
  CHECK(compare(a, c) != 0);
  CHECK(compare(a, c) == -compare(c, a));
  FmlSet s;
  s.insert(a);
  s.insert(b);
  s.insert(c);
  CHECK(s.size() == 2);
}

TEST_CASE("single negation flips one outer negation") {
  CHECK(equal(single_negation(parse("p")), parse("~p")));
  CHECK(equal(single_negation(parse("~p")), parse("p")));
  CHECK(equal(single_negation(parse("~~p")), parse("~p")));
  CHECK(equal(single_negation(parse("p /\\ q")), parse("~(p /\\ q)")));
}

TEST_CASE("desugar rewrites to the |>-only kernel") {
  CHECK(equal(desugar(parse("<>p")), parse("~(p |> bot)")));
  CHECK(equal(desugar(parse("[]p")), parse("~p |> bot")));
  CHECK(equal(desugar(parse("p -> q")), parse("p -> q")));
  // the outer box negates its operand via single_negation, so the double
  // negation collapses
  CHECK(equal(desugar(parse("[]<>p")), parse("(p |> bot) |> bot")));
  CHECK_THROWS_AS(desugar(parse("[]A")), FormulaError);
}

TEST_CASE("subformulas and modal depth") {
  Fml f = parse("(p |> q) -> []p");
  FmlSet subs = subformulas(f);
  CHECK(subs.size() == 5);  // f, p|>q, []p, p, q
  CHECK(subs.count(parse("p |> q")) == 1);
  CHECK(subs.count(parse("[]p")) == 1);
  CHECK(subs.count(parse("p")) == 1);

  CHECK(modal_depth(parse("p /\\ q")) == 0);
  CHECK(modal_depth(parse("[]p")) == 1);
  CHECK(modal_depth(parse("[](p |> q)")) == 2);
  CHECK(modal_depth(parse("(p |> q) |> <>r")) == 2);
  CHECK(modal_depth(parse("[]([]p |> q)")) == 3);
}

TEST_CASE("seed closure") {
  FmlSet seed;
  seed.insert(parse("p |> q"));
  FmlSet closed = close_seed(seed);
  CHECK(closed.count(parse("top")) == 1);
  CHECK(closed.count(parse("p")) == 1);
  CHECK(closed.count(parse("~q")) == 1);
  for (const Fml& f : closed) {
    for (const Fml& g : subformulas(f)) CHECK(closed.count(g) == 1);
    CHECK(closed.count(single_negation(f)) == 1);
  }
}

TEST_CASE("adequate set over a closed seed") {
  FmlSet closed = close_seed({parse("p |> q")});
  AdequateSet gamma = adequate_set(closed);
  for (const Fml& f : closed) CHECK(gamma.gamma.count(f) == 1);
  CHECK(gamma.gamma.count(parse("bot |> bot")) == 1);
  for (const Fml& f : closed) CHECK(gamma.gamma.count(mk_box(mk_neg(f))) == 1);
  for (const Fml& f : gamma.gamma) {
    for (const Fml& g : subformulas(f)) CHECK(gamma.gamma.count(g) == 1);
    CHECK(gamma.gamma.count(single_negation(f)) == 1);
    CHECK(is_ground(f));
  }
  // |> members pair up over the shared pool
  std::vector<Fml> lefts, rights;
  for (const Fml& f : gamma.gamma)
    if (f->op == Op::Rhd) {
      lefts.push_back(f->lhs);
      rights.push_back(f->rhs);
    }
  for (const Fml& a : lefts)
    for (const Fml& b : rights) CHECK(gamma.gamma.count(mk_rhd(a, b)) == 1);

  CHECK_THROWS_AS(adequate_set({parse("p |> q")}), FormulaError);  // not closed
  CHECK_THROWS_AS(adequate_set(close_seed({parse("A")})), FormulaError);  // not ground
}

TEST_CASE("instantiate and match") {
  Fml j1 = parse("[](A -> B) -> (A |> B)");
  Substitution s;
  s["A"] = parse("p");
  s["B"] = parse("q /\\ r");
  Fml inst = instantiate(j1, s);
  CHECK(equal(inst, parse("[](p -> q /\\ r) -> (p |> q /\\ r)")));

  Substitution partial;
  partial["A"] = parse("p");
  CHECK_THROWS_AS(instantiate(j1, partial), FormulaError);

  auto back = match_scheme(j1, inst);
  REQUIRE(back.has_value());
  CHECK(equal(instantiate(j1, *back), inst));

  CHECK(match_scheme(parse("A -> A"), parse("p -> p")).has_value());
  CHECK_FALSE(match_scheme(parse("A -> A"), parse("p -> q")).has_value());
  CHECK_FALSE(match_scheme(j1, parse("p |> q")).has_value());
}
