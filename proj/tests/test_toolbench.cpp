#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "ilkit/conditions.hpp"
#include "ilkit/model_io.hpp"
#include "ilkit/semantics.hpp"

using namespace ilkit;
using helpers::fixture;
using helpers::run_cli;
using helpers::shell_quote;

namespace {

std::string scratch(const std::string& name) {
  return (helpers::scratch_dir() / name).string();
}

}  // namespace

TEST_CASE("parse prints the canonical form") {
  auto r = run_cli("parse --formula " + shell_quote("p /\\ (q)"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "p /\\ q\n");

  auto bad = run_cli("parse --formula " + shell_quote("p |> q |> r"));
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("parse error") != std::string::npos);

  auto usage = run_cli("parse");
  CHECK(usage.exit_code == 2);
}

TEST_CASE("check-model reports forcing with its exit code") {
  std::string model = shell_quote(fixture("fan.json"));
  auto yes = run_cli("check-model --model " + model + " --world w --formula " +
                     shell_quote("~(p |> q)"));
  CHECK(yes.exit_code == 0);
  CHECK(yes.out.find("forces") != std::string::npos);

  auto no = run_cli("check-model --model " + model + " --world w --formula " +
                    shell_quote("p |> q"));
  CHECK(no.exit_code == 1);
  CHECK(no.out.find("does not force") != std::string::npos);

  auto unknown = run_cli("check-model --model " + model +
                         " --world nobody --formula p");
  CHECK(unknown.exit_code == 2);

  auto missing = run_cli("check-model --model /no/such/file.json --world w --formula p");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("validate distinguishes legal and broken models") {
  auto good = run_cli("validate --model " + shell_quote(fixture("tworoles.json")));
  CHECK(good.exit_code == 0);

  GeneralModel fan = helpers::load_general("fan.json");
  fan.qt_variant = 2;
  std::string path = helpers::write_scratch("fan_qt2.json", model_to_json(fan));
  auto bad = run_cli("validate --model " + shell_quote(path));
  CHECK(bad.exit_code == 1);
  CHECK_FALSE(bad.out.empty());
}

TEST_CASE("check-frame evaluates condition tokens") {
  std::string model = shell_quote(fixture("tworoles.json"));
  GeneralModel m = helpers::load_general("tworoles.json");
  for (const char* token : {"Mgen", "Pgen", "Wgen", "NotW"}) {
    auto c = ConditionId::from_token(token);
    ConditionVerdict v = c->kind == ConditionKind::NotWGen ? check_not_w(m)
                                                           : check_general(m, *c);
    auto r = run_cli("check-frame --model " + model + " --condition " + token);
    CAPTURE(token);
    CAPTURE(r.out);
    CHECK(r.exit_code == (v.holds ? 0 : 1));
  }
  auto bad = run_cli("check-frame --model " + model + " --condition Zgen");
  CHECK(bad.exit_code == 2);

  // ordinary tokens work on ordinary models only
  auto wrong = run_cli("check-frame --model " + model + " --condition Mord");
  CHECK(wrong.exit_code == 2);
  auto ord = run_cli("check-frame --model " + shell_quote(fixture("chain.json")) +
                     " --condition Mord");
  CHECK((ord.exit_code == 0 || ord.exit_code == 1));
}

TEST_CASE("frame-valid sweeps schemes and writes reports") {
  std::string model = shell_quote(fixture("fan.json"));
  auto valid = run_cli("frame-valid --model " + model + " --scheme J1");
  CHECK(valid.exit_code == 0);
  CHECK(valid.out.find("valid") != std::string::npos);

  std::string report = scratch("report.json");
  auto refuted = run_cli("frame-valid --model " + model + " --scheme " +
                         shell_quote("A -> []A") + " -o " + shell_quote(report));
  CHECK(refuted.exit_code == 1);
  CHECK(refuted.out.find("refuted") != std::string::npos);
  CHECK(helpers::slurp(report).find("\"valid\"") != std::string::npos);

  auto budget = run_cli("frame-valid --model " + model + " --scheme " +
                        shell_quote("A |> B") + " --max-valuations 4");
  CHECK(budget.exit_code == 2);
}

TEST_CASE("transform writes models and map files") {
  std::string out = scratch("lifted.json");
  auto lift = run_cli("transform --op lift-singleton --model " +
                      shell_quote(fixture("chain.json")) + " -o " + shell_quote(out));
  CHECK(lift.exit_code == 0);
  LoadedModel lifted = load_model_file(out);
  REQUIRE(lifted.kind == ModelKind::General);
  CHECK(lifted.gen.qt_variant == 6);
  CHECK(validate_general(lifted.gen).ok);

  auto wrongkind = run_cli("transform --op lift-singleton --model " +
                           shell_quote(fixture("fan.json")) + " -o " + shell_quote(out));
  CHECK(wrongkind.exit_code == 2);

  std::string closed = scratch("closed.json");
  auto close = run_cli("transform --op monotone-closure --model " +
                       shell_quote(fixture("fan.json")) + " -o " + shell_quote(closed));
  CHECK(close.exit_code == 0);
  CHECK(load_model_file(closed).gen.qt_variant == 2);

  std::string unr = scratch("unravelled.json");
  auto unravelled = run_cli("transform --op unravel --model " + shell_quote(out) +
                            " -o " + shell_quote(unr));
  CHECK(unravelled.exit_code == 0);
  LoadedModel u = load_model_file(unr);
  REQUIRE(u.kind == ModelKind::Ordinary);
  CHECK(validate_ordinary(u.ord).ok);
  std::string map_text = helpers::slurp(scratch("unravelled.map.json"));
  CHECK(map_text.find("\"tag\"") != std::string::npos);

  auto badop = run_cli("transform --op fold --model " + shell_quote(out) + " -o " +
                       shell_quote(scratch("x.json")));
  CHECK(badop.exit_code == 2);
}

TEST_CASE("bisim prints related pairs") {
  std::string fan = shell_quote(fixture("fan.json"));
  auto self = run_cli("bisim --left " + fan + " --right " + fan);
  CHECK(self.exit_code == 0);
  CHECK(self.out.find("w ~ w") != std::string::npos);

  auto bounded = run_cli("bisim --left " + fan + " --right " + fan + " --n 2");
  CHECK(bounded.exit_code == 0);

  // ordinary inputs are lifted before comparing
  std::string chain = shell_quote(fixture("chain.json"));
  auto mixed = run_cli("bisim --left " + chain + " --right " + fan);
  CHECK((mixed.exit_code == 0 || mixed.exit_code == 1));
}

TEST_CASE("filtrate writes the quotient and class map") {
  std::string out = scratch("filtrated.json");
  auto r = run_cli("filtrate --model " + shell_quote(fixture("tworoles.json")) +
                   " --seed-formulas " + shell_quote("p |> q") + " -o " +
                   shell_quote(out));
  CHECK(r.exit_code == 0);
  LoadedModel f = load_model_file(out);
  REQUIRE(f.kind == ModelKind::General);
  CHECK(validate_general(f.gen).ok);
  CHECK(helpers::slurp(scratch("filtrated.classes.json")).find("\"classes\"") !=
        std::string::npos);

  auto alias = run_cli("filtrate --model " + shell_quote(fixture("tworoles.json")) +
                       " --seed " + shell_quote("p |> q; q |> p") + " -o " +
                       shell_quote(scratch("filt2.json")));
  CHECK(alias.exit_code == 0);

  auto ordinary = run_cli("filtrate --model " + shell_quote(fixture("chain.json")) +
                          " --seed-formulas p -o " + shell_quote(scratch("filt3.json")));
  CHECK(ordinary.exit_code == 2);
}

TEST_CASE("check-proof accepts the fixture and rejects corruptions") {
  auto ok = run_cli("check-proof " + shell_quote(fixture("rhd_refl.json")));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("accepted: p |> p") != std::string::npos);

  std::string text = helpers::slurp(fixture("rhd_refl.json"));
  auto pos = text.find("p -> p");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "p -> q");
  std::string bad = helpers::write_scratch("bad_proof.json", text);
  auto rejected = run_cli("check-proof " + shell_quote(bad));
  CHECK(rejected.exit_code == 1);
  CHECK(rejected.out.find("rejected at step") != std::string::npos);

  auto logic = run_cli("check-proof " + shell_quote(fixture("rhd_refl.json")) +
                       " --logic IL+W");
  CHECK(logic.exit_code == 0);
  auto badlogic = run_cli("check-proof " + shell_quote(fixture("rhd_refl.json")) +
                          " --logic GL");
  CHECK(badlogic.exit_code == 2);
}

TEST_CASE("search hunts for countermodels") {
  auto witness = run_cli("search --formula " + shell_quote("p |> q") +
                         " --max-worlds 2");
  CHECK(witness.exit_code == 1);
  CHECK(witness.out.find("refuted at") != std::string::npos);

  std::string out = scratch("counter.json");
  auto with_file = run_cli("search --formula " + shell_quote("p |> q") +
                           " --max-worlds 2 -o " + shell_quote(out));
  CHECK(with_file.exit_code == 1);
  LoadedModel cm = load_model_file(out);
  REQUIRE(cm.kind == ModelKind::General);
  CHECK(validate_general(cm.gen).ok);
  // the stored valuation refutes the formula somewhere
  CHECK(truth_set(cm.gen, parse("p |> q")) != ws_full(cm.gen.n()));

  auto exhausted = run_cli("search --formula " + shell_quote("p -> p") +
                           " --max-worlds 2");
  CHECK(exhausted.exit_code == 0);

  auto schematic = run_cli("search --formula " + shell_quote("A |> A") +
                           " --max-worlds 2");
  CHECK(schematic.exit_code == 2);
}

TEST_CASE("separate tells conditions apart or reports exhaustion") {
  auto impossible = run_cli("separate --holds Mgen --fails Mgen --max-worlds 2");
  CHECK(impossible.exit_code == 1);

  auto badtoken = run_cli("separate --holds Mgen --fails Zord --max-worlds 2");
  CHECK(badtoken.exit_code == 2);
}

TEST_CASE("the thread override gives the same verdicts") {
  auto direct = run_cli("frame-valid --model " + shell_quote(fixture("fan.json")) +
                        " --scheme J2");
  auto single = helpers::run_cli_env("ILKIT_THREADS=1",
                                     "frame-valid --model " +
                                         shell_quote(fixture("fan.json")) +
                                         " --scheme J2");
  CHECK(direct.exit_code == 0);
  CHECK(single.exit_code == 0);
  CHECK(direct.out == single.out);
}
