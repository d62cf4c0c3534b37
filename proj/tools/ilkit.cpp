// Command-line front end: one subcommand per library entry point.
// Exit codes: 0 affirmative, 1 negative verdict (witness found where one
// refutes the query, or nothing found where something was wanted), 2 usage,
// data, or budget errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ilkit/bisim.hpp"
#include "ilkit/conditions.hpp"
#include "ilkit/enumerate.hpp"
#include "ilkit/filtration.hpp"
#include "ilkit/formula.hpp"
#include "ilkit/model.hpp"
#include "ilkit/model_io.hpp"
#include "ilkit/proof.hpp"
#include "ilkit/schemes.hpp"
#include "ilkit/search.hpp"
#include "ilkit/semantics.hpp"
#include "ilkit/transform.hpp"

namespace {

using nlohmann::json;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ilkit::ModelError("cannot write " + path);
  out << text;
  if (!out) throw ilkit::ModelError("cannot write " + path);
}

std::vector<std::string> split_semicolons(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(part);
      part.clear();
    } else {
      part += c;
    }
  }
  parts.push_back(part);
  return parts;
}

ilkit::ConditionId condition_from(const std::string& token) {
  auto c = ilkit::ConditionId::from_token(token);
  if (!c) throw ilkit::ModelError("unknown condition \"" + token + "\"");
  return *c;
}

ilkit::Fml scheme_or_formula(const std::string& text) {
  if (auto s = ilkit::scheme_by_id(text)) return *s;
  return ilkit::parse(text);
}

json world_list(const std::vector<std::string>& names, ilkit::WorldSet s) {
  json arr = json::array();
  ilkit::ws_for_each(s, [&](ilkit::World w) { arr.push_back(names[w]); });
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for interpretability logics over finite Veltman structures"};
  app.require_subcommand(1);

  std::string model_path, left_path, right_path, world, formula_text;
  std::string condition_token, scheme_token, logic_text, op_token, seed_text;
  std::string holds_token, fails_token, output_path, proof_path;
  std::vector<std::string> condition_tokens;
  int qt = 0;
  int depth_n = -1;
  ilkit::SearchBounds bounds;
  std::int64_t max_valuations = ilkit::Limits{}.max_valuations;

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula, print its canonical form");
  parse_cmd->add_option("--formula", formula_text, "formula text")->required();

  auto* check_model = app.add_subcommand("check-model", "does a world force a formula?");
  check_model->add_option("--model", model_path, "model file")->required();
  check_model->add_option("--world", world, "world name")->required();
  check_model->add_option("--formula", formula_text, "ground formula")->required();

  auto* validate = app.add_subcommand("validate", "check a model against the frame conditions");
  validate->add_option("--model", model_path, "model file")->required();

  auto* check_frame = app.add_subcommand("check-frame", "evaluate a frame condition");
  check_frame->add_option("--model", model_path, "model file")->required();
  check_frame->add_option("--condition", condition_token, "condition token")->required();
  check_frame->add_option("--max-valuations", max_valuations, "set enumeration budget");

  auto* frame_valid = app.add_subcommand("frame-valid", "is a scheme valid on the frame?");
  frame_valid->add_option("--model", model_path, "model file")->required();
  frame_valid->add_option("--scheme", scheme_token, "scheme id or formula")->required();
  frame_valid->add_option("--max-valuations", max_valuations, "assignment budget");
  frame_valid->add_option("-o,--output", output_path, "witness report file");

  auto* transform = app.add_subcommand("transform", "rewrite a model");
  transform->add_option("--op", op_token,
                        "lift-singleton | lift-monotone | monotone-closure | unravel")
      ->required();
  transform->add_option("--model", model_path, "model file")->required();
  transform->add_option("--qt", qt, "variant for the lifted model (lift-singleton)");
  transform->add_option("-o,--output", output_path, "output model file")->required();

  auto* bisim = app.add_subcommand("bisim", "bisimulation between two models");
  bisim->add_option("--left", left_path, "left model file")->required();
  bisim->add_option("--right", right_path, "right model file")->required();
  bisim->add_option("--n", depth_n, "bounded depth (omit for the largest bisimulation)");

  auto* filtrate = app.add_subcommand("filtrate", "collapse a model through an adequate set");
  filtrate->add_option("--model", model_path, "gvs model file")->required();
  filtrate->add_option("--seed-formulas,--seed", seed_text, "semicolon-separated formulas")
      ->required();
  filtrate->add_option("-o,--output", output_path, "output model file")->required();

  auto* check_proof = app.add_subcommand("check-proof", "verify a Hilbert-style proof");
  check_proof->add_option("proof", proof_path, "proof file")->required();
  check_proof->add_option("--logic", logic_text, "override the proof's logic header");

  auto* search = app.add_subcommand("search", "look for a countermodel of a formula");
  search->add_option("--formula", formula_text, "ground formula")->required();
  search->add_option("--condition", condition_tokens, "frame conditions the logic assumes");
  search->add_option("--qt", bounds.qt_variant, "quasi-transitivity variant");
  search->add_option("--max-worlds", bounds.max_worlds, "frame size bound");
  search->add_option("--max-valuations", bounds.max_valuations, "valuation budget per frame");
  search->add_option("-o,--output", output_path, "countermodel file");

  auto* separate = app.add_subcommand("separate", "find a frame telling two conditions apart");
  separate->add_option("--holds", holds_token, "condition that must hold")->required();
  separate->add_option("--fails", fails_token, "condition that must fail")->required();
  separate->add_option("--qt", bounds.qt_variant, "quasi-transitivity variant");
  separate->add_option("--max-worlds", bounds.max_worlds, "frame size bound");
  separate->add_option("--max-valuations", bounds.max_valuations, "set enumeration budget");
  separate->add_option("-o,--output", output_path, "witness frame file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (parse_cmd->parsed()) {
      std::cout << ilkit::render(ilkit::parse(formula_text)) << "\n";
      return 0;
    }

    if (check_model->parsed()) {
      const ilkit::LoadedModel lm = ilkit::load_model_file(model_path);
      const ilkit::Fml f = ilkit::parse(formula_text);
      const bool holds = lm.kind == ilkit::ModelKind::Ordinary
                             ? ilkit::forces(lm.ord, world, f)
                             : ilkit::forces(lm.gen, world, f);
      std::cout << world << (holds ? " forces " : " does not force ")
                << ilkit::render(f) << "\n";
      return holds ? 0 : 1;
    }

    if (validate->parsed()) {
      const ilkit::LoadedModel lm = ilkit::load_model_file(model_path);
      const ilkit::ValidationReport report = lm.kind == ilkit::ModelKind::Ordinary
                                                 ? ilkit::validate_ordinary(lm.ord)
                                                 : ilkit::validate_general(lm.gen);
      std::cout << ilkit::describe(report) << "\n";
      return report.ok ? 0 : 1;
    }

    if (check_frame->parsed()) {
      const ilkit::LoadedModel lm = ilkit::load_model_file(model_path);
      const ilkit::ConditionId c = condition_from(condition_token);
      const ilkit::Limits limits{max_valuations};
      const ilkit::ConditionVerdict verdict =
          lm.kind == ilkit::ModelKind::Ordinary ? ilkit::check_ordinary(lm.ord, c)
                                                : ilkit::check_general(lm.gen, c, limits);
      std::cout << c.token() << ": " << ilkit::describe(verdict) << "\n";
      return verdict.holds ? 0 : 1;
    }

    if (frame_valid->parsed()) {
      const ilkit::LoadedModel lm = ilkit::load_model_file(model_path);
      const ilkit::Fml scheme = scheme_or_formula(scheme_token);
      const ilkit::Limits limits{max_valuations};
      const ilkit::FrameValidity fv =
          lm.kind == ilkit::ModelKind::Ordinary
              ? ilkit::frame_valid_scheme(lm.ord, scheme, limits)
              : ilkit::frame_valid_scheme(lm.gen, scheme, limits);
      const std::vector<std::string>& names =
          lm.kind == ilkit::ModelKind::Ordinary ? lm.ord.names : lm.gen.names;
      if (fv.valid) {
        std::cout << "valid on the frame\n";
      } else {
        std::cout << "refuted at " << fv.witness_world << " under:\n";
        for (const auto& [letter, mask] : fv.witness_valuation) {
          std::cout << "  " << letter << " = " << ilkit::ws_names(names, mask) << "\n";
        }
      }
      if (!output_path.empty()) {
        json report;
        report["scheme"] = ilkit::render(scheme);
        report["valid"] = fv.valid;
        if (!fv.valid) {
          report["world"] = fv.witness_world;
          json val = json::object();
          for (const auto& [letter, mask] : fv.witness_valuation) {
            val[letter] = world_list(names, mask);
          }
          report["valuation"] = val;
        }
        write_file(output_path, report.dump(2) + "\n");
      }
      return fv.valid ? 0 : 1;
    }

    if (transform->parsed()) {
      const ilkit::LoadedModel lm = ilkit::load_model_file(model_path);
      if (op_token == "lift-singleton" || op_token == "lift-monotone") {
        if (lm.kind != ilkit::ModelKind::Ordinary) {
          throw ilkit::ModelError(op_token + " expects an ordinary model");
        }
        const ilkit::GeneralModel out = op_token == "lift-singleton"
                                            ? ilkit::lift_singleton(lm.ord, qt ? qt : 6)
                                            : ilkit::lift_monotone(lm.ord);
        write_file(output_path, ilkit::model_to_json(out));
      } else if (op_token == "monotone-closure") {
        if (lm.kind != ilkit::ModelKind::General) {
          throw ilkit::ModelError("monotone-closure expects a gvs model");
        }
        write_file(output_path, ilkit::model_to_json(ilkit::monotone_closure(lm.gen)));
      } else if (op_token == "unravel") {
        if (lm.kind != ilkit::ModelKind::General) {
          throw ilkit::ModelError("unravel expects a gvs model");
        }
        const ilkit::Unravelled u = ilkit::unravel(lm.gen);
        write_file(output_path, ilkit::model_to_json(u.model));
        json map = json::object();
        for (const auto& [source, targets] : u.world_map) {
          json arr = json::array();
          for (const ilkit::TaggedWorld& tw : targets) {
            json tag = json::array();
            for (const auto& [a, b] : tw.tag) tag.push_back(json::array({a, b}));
            arr.push_back(json{{"world", tw.name}, {"tag", tag}});
          }
          map[source] = arr;
        }
        std::string map_path = output_path;
        const std::string suffix = ".json";
        if (map_path.size() >= suffix.size() &&
            map_path.compare(map_path.size() - suffix.size(), suffix.size(), suffix) == 0) {
          map_path.resize(map_path.size() - suffix.size());
        }
        map_path += ".map.json";
        write_file(map_path, map.dump(2) + "\n");
        std::cout << "world map: " << map_path << "\n";
      } else {
        throw ilkit::ModelError("unknown op \"" + op_token + "\"");
      }
      std::cout << "wrote " << output_path << "\n";
      return 0;
    }

    if (bisim->parsed()) {
      const ilkit::LoadedModel la = ilkit::load_model_file(left_path);
      const ilkit::LoadedModel lb = ilkit::load_model_file(right_path);
      const ilkit::GeneralModel a = la.kind == ilkit::ModelKind::General
                                        ? la.gen
                                        : ilkit::lift_singleton(la.ord);
      const ilkit::GeneralModel b = lb.kind == ilkit::ModelKind::General
                                        ? lb.gen
                                        : ilkit::lift_singleton(lb.ord);
      const ilkit::Rel rel = depth_n < 0
                                 ? ilkit::largest_bisimulation(a, b)
                                 : ilkit::n_bisimulation(a, b, depth_n).back();
      int pairs = 0;
      for (ilkit::World w = 0; w < a.n(); ++w) {
        ilkit::ws_for_each(rel[w], [&](ilkit::World v) {
          std::cout << a.names[w] << " ~ " << b.names[v] << "\n";
          ++pairs;
        });
      }
      return pairs > 0 ? 0 : 1;
    }

    if (filtrate->parsed()) {
      const ilkit::LoadedModel lm = ilkit::load_model_file(model_path);
      if (lm.kind != ilkit::ModelKind::General) {
        throw ilkit::ModelError("filtrate expects a gvs model");
      }
      ilkit::FmlSet seed;
      for (const std::string& part : split_semicolons(seed_text)) {
        if (part.find_first_not_of(" \t") == std::string::npos) continue;
        seed.insert(ilkit::parse(part));
      }
      if (seed.empty()) throw ilkit::ModelError("no seed formulas given");
      const ilkit::AdequateSet gamma = ilkit::adequate_set(ilkit::close_seed(seed));
      const ilkit::FiltrationResult fr = ilkit::filtrate(lm.gen, gamma);
      write_file(output_path, ilkit::model_to_json(fr.model));
      json classes = json::object();
      for (size_t c = 0; c < fr.quotient.classes.size(); ++c) {
        classes[fr.quotient.class_names[c]] =
            world_list(lm.gen.names, fr.quotient.classes[c]);
      }
      std::string classes_path = output_path;
      const std::string suffix = ".json";
      if (classes_path.size() >= suffix.size() &&
          classes_path.compare(classes_path.size() - suffix.size(), suffix.size(),
                               suffix) == 0) {
        classes_path.resize(classes_path.size() - suffix.size());
      }
      classes_path += ".classes.json";
      write_file(classes_path, json{{"classes", classes}}.dump(2) + "\n");
      std::cout << fr.quotient.classes.size() << " classes; wrote " << output_path
                << " and " << classes_path << "\n";
      return 0;
    }

    if (check_proof->parsed()) {
      const ilkit::Proof proof = ilkit::load_proof_file(proof_path);
      ilkit::LogicId logic = proof.logic;
      if (!logic_text.empty()) {
        auto parsed = ilkit::LogicId::parse(logic_text);
        if (!parsed) throw ilkit::ProofError("unknown logic \"" + logic_text + "\"");
        logic = *parsed;
      }
      const ilkit::ProofVerdict verdict = ilkit::check_proof(proof, logic);
      if (verdict.accepted) {
        std::cout << "accepted: " << ilkit::render(verdict.theorem) << "\n";
        return 0;
      }
      std::cout << "rejected at step " << verdict.failing_step << ": "
                << verdict.reason << "\n";
      return 1;
    }

    if (search->parsed()) {
      const ilkit::Fml f = ilkit::parse(formula_text);
      std::vector<ilkit::ConditionId> logic;
      for (const std::string& token : condition_tokens) {
        logic.push_back(condition_from(token));
      }
      const ilkit::SearchOutcome outcome = ilkit::find_countermodel(f, logic, bounds);
      std::cout << outcome.detail << "\n";
      if (outcome.kind == ilkit::OutcomeKind::Witness) {
        std::cout << "refuted at " << outcome.world << "\n";
        if (!output_path.empty()) {
          write_file(output_path, ilkit::model_to_json(*outcome.model));
          std::cout << "wrote " << output_path << "\n";
        }
        return 1;
      }
      return outcome.kind == ilkit::OutcomeKind::ExhaustedWithinBounds ? 0 : 2;
    }

    if (separate->parsed()) {
      const ilkit::SearchOutcome outcome = ilkit::find_separating_frame(
          condition_from(holds_token), condition_from(fails_token), bounds);
      std::cout << outcome.detail << "\n";
      if (outcome.kind == ilkit::OutcomeKind::Witness) {
        if (!output_path.empty()) {
          write_file(output_path, ilkit::model_to_json(*outcome.model));
          std::cout << "wrote " << output_path << "\n";
        }
        return 0;
      }
      return outcome.kind == ilkit::OutcomeKind::ExhaustedWithinBounds ? 1 : 2;
    }
  } catch (const ilkit::ParseError& e) {
    std::cerr << "parse error at " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
