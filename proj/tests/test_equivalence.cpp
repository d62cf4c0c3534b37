#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <bit>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ilkit/bisim.hpp"
#include "ilkit/filtration.hpp"
#include "ilkit/model_io.hpp"
#include "ilkit/semantics.hpp"
#include "ilkit/transform.hpp"
#include "oracles.hpp"

using namespace ilkit;

namespace {

std::vector<std::string> joint_vocab(const GeneralModel& a, const GeneralModel& b) {
  std::set<std::string> v;
  for (const auto& [atom, s] : a.valuation) v.insert(atom);
  for (const auto& [atom, s] : b.valuation) v.insert(atom);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("the identity relation is a bisimulation") {
  for (const char* name : {"fan.json", "tworoles.json"}) {
    GeneralModel m = helpers::load_general(name);
    Rel id(m.n(), 0);
    for (World w = 0; w < m.n(); ++w) id[w] = ws_single(w);
    CHECK(is_bisimulation(m, m, id));
    Rel largest = largest_bisimulation(m, m);
    for (World w = 0; w < m.n(); ++w) CHECK(ws_has(largest[w], w));
  }
}

TEST_CASE("mismatched relation sizes are rejected") {
  GeneralModel a = helpers::load_general("fan.json");
  GeneralModel b = helpers::load_general("tworoles.json");
  CHECK_THROWS_AS(is_bisimulation(a, b, Rel(2, 0)), ModelError);
}

TEST_CASE("largest bisimulation equals the union of all bisimulations") {
  std::mt19937 rng(21);
  std::vector<std::pair<GeneralModel, GeneralModel>> pairs;
  pairs.emplace_back(helpers::load_general("tworoles.json"),
                     helpers::load_general("tworoles.json"));
  for (int i = 0; i < 8; ++i)
    pairs.emplace_back(helpers::random_general(rng, 3, {"p", "q"}, 6),
                       helpers::random_general(rng, 3, {"p", "q"}, 6));
  for (int i = 0; i < 4; ++i)
    pairs.emplace_back(helpers::random_general(rng, 2, {"p"}, 2),
                       helpers::random_general(rng, 3, {"p"}, 2));
  for (size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    REQUIRE(a.n() * b.n() <= 16);
    Rel lib = largest_bisimulation(a, b);
    Rel brute = oracles::oracle_bisim_union(a, b);
    CAPTURE(i);
    REQUIRE(lib == brute);
    if (std::any_of(lib.begin(), lib.end(), [](WorldSet s) { return s != 0; }))
      CHECK(is_bisimulation(a, b, lib));
  }
}

TEST_CASE("bisimilar worlds are modally equivalent, others get a separator") {
  std::mt19937 rng(22);
  for (int i = 0; i < 6; ++i) {
    GeneralModel a = helpers::random_general(rng, 3, {"p", "q"}, 6);
    GeneralModel b = helpers::random_general(rng, 3, {"p", "q"}, 6);
    Rel z = largest_bisimulation(a, b);
    std::vector<std::string> vocab = joint_vocab(a, b);
    for (World w = 0; w < a.n(); ++w) {
      for (World w2 = 0; w2 < b.n(); ++w2) {
        EquivalenceResult eq = modally_equivalent_up_to(a, w, b, w2, 2, vocab);
        CHECK(eq.exhaustive);
        if (ws_has(z[w], w2)) {
          CAPTURE(i);
          CAPTURE(w);
          CAPTURE(w2);
          REQUIRE(eq.equivalent);
        } else if (!eq.equivalent) {
          REQUIRE_FALSE(eq.separating.empty());
          Fml sep = parse(eq.separating);
          CHECK(forces(a, w, sep) != forces(b, w2, sep));
        }
      }
    }
  }
}

TEST_CASE("n-bisimilarity coincides with n-equivalence") {
  std::mt19937 rng(23);
  for (int i = 0; i < 5; ++i) {
    GeneralModel a = helpers::random_general(rng, 3, {"p", "q"}, 2);
    GeneralModel b = helpers::random_general(rng, 3, {"p", "q"}, 2);
    std::vector<Rel> chain = n_bisimulation(a, b, 2);
    REQUIRE(chain.size() == 3);
    std::vector<std::string> vocab = joint_vocab(a, b);
    for (int n = 0; n <= 2; ++n) {
      if (n > 0)
        for (World w = 0; w < a.n(); ++w) CHECK(ws_subset(chain[n][w], chain[n - 1][w]));
      for (World w = 0; w < a.n(); ++w)
        for (World w2 = 0; w2 < b.n(); ++w2) {
          EquivalenceResult eq = modally_equivalent_up_to(a, w, b, w2, n, vocab);
          REQUIRE(eq.exhaustive);
          CAPTURE(i);
          CAPTURE(n);
          CAPTURE(w);
          CAPTURE(w2);
          REQUIRE(ws_has(chain[n][w], w2) == eq.equivalent);
        }
    }
  }
}

TEST_CASE("formula corpus is deterministic and respects its vocabulary") {
  std::vector<Fml> a = formula_corpus({"p", "q"}, 2, 500);
  std::vector<Fml> b = formula_corpus({"p", "q"}, 2, 500);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(equal(a[i], b[i]));
  for (const Fml& f : a) {
    CHECK(is_ground(f));
    CHECK(modal_depth(f) <= 2);
    for (const std::string& atom : atoms(f)) CHECK((atom == "p" || atom == "q"));
  }
}

TEST_CASE("equivalence falls back to the corpus on large joint models") {
  std::mt19937 rng(24);
  GeneralModel g = helpers::random_general(rng, 3, {"p"}, 6);
  Unravelled u = unravel(g);
  if (g.n() + u.model.n() > 10) {
    EquivalenceResult eq =
        modally_equivalent_up_to(g, 0, u.model, 0, 2, {"p"});
    CHECK_FALSE(eq.exhaustive);
    CHECK(eq.formulas_checked > 0);
  }
}

TEST_CASE("filtration satisfies the truth lemma on the fixture") {
  GeneralModel m = helpers::load_general("tworoles.json");
  AdequateSet gamma = adequate_set(close_seed({parse("p |> q")}));
  FiltrationResult out = filtrate(m, gamma);
  REQUIRE(validate_general(out.model).ok);
  CHECK(out.model.n() <= m.n());
  REQUIRE(static_cast<int>(out.quotient.class_of.size()) == m.n());
  for (const Fml& f : gamma.gamma) {
    for (World w = 0; w < m.n(); ++w) {
      std::string fr = render(f);
      CAPTURE(fr);
      CAPTURE(m.names[w]);
      REQUIRE(forces(m, w, f) == forces(out.model, out.quotient.class_of[w], f));
    }
  }
}

TEST_CASE("filtration collapses exactly the bisimilar worlds") {
  std::mt19937 rng(25);
  for (int i = 0; i < 6; ++i) {
    GeneralModel m = helpers::random_general(rng, 4, {"p", "q"}, 2);
    AdequateSet gamma = adequate_set(close_seed({parse("p |> q")}));
    FiltrationResult out = filtrate(m, gamma);
    REQUIRE(validate_general(out.model).ok);
    Rel self = largest_bisimulation(m, m);
    for (World w = 0; w < m.n(); ++w)
      for (World u = 0; u < m.n(); ++u) {
        CAPTURE(i);
        CAPTURE(w);
        CAPTURE(u);
        REQUIRE((out.quotient.class_of[w] == out.quotient.class_of[u]) ==
                ws_has(self[w], u));
      }
    // R-chains in the image never exceed the boxed members of gamma
    int boxes = 0;
    for (const Fml& f : gamma.gamma)
      if (f->op == Op::Box) ++boxes;
    std::vector<int> depth(out.model.n(), 0);
    for (int round = 0; round < out.model.n(); ++round)
      for (World w = 0; w < out.model.n(); ++w)
        ws_for_each(out.model.R[w], [&](World u) {
          depth[w] = std::max(depth[w], depth[u] + 1);
        });
    for (int d : depth) CHECK(d <= boxes);
  }
}

TEST_CASE("quotient classes partition the worlds") {
  GeneralModel m = helpers::load_general("fan.json");
  AdequateSet gamma = adequate_set(close_seed({parse("p |> q")}));
  FiltrationResult out = filtrate(m, gamma);
  WorldSet all = 0;
  for (WorldSet c : out.quotient.classes) {
    CHECK(c != 0);
    CHECK((all & c) == 0);
    all |= c;
  }
  CHECK(all == ws_full(m.n()));
  CHECK(out.quotient.class_names.size() == out.quotient.classes.size());
  for (size_t i = 0; i < out.quotient.classes.size(); ++i) {
    World rep = std::countr_zero(out.quotient.classes[i]);
    CHECK(out.quotient.class_names[i] == m.names[rep]);
  }
}
