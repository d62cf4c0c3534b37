#pragma once

#include <string>

#include "ilkit/model.hpp"

namespace ilkit {

enum class ModelKind { Ordinary, General };

struct LoadedModel {
  ModelKind kind;
  OrdinaryModel ord;  // filled when kind == Ordinary
  GeneralModel gen;   // filled when kind == General
};

// Accepts exactly the documented shape:
//   {"kind":"gvs"|"ordinary", "qt":1..8 (gvs only), "worlds":[...],
//    "R":[[w,u],...], "S":[{"w":...,"from":...,"to":[...]|string},...],
//    "valuation":{atom:[worlds]}}
// Unknown keys are rejected.  Throws ModelError on any structural problem.
LoadedModel parse_model_json(const std::string& text);
LoadedModel load_model_file(const std::string& path);

std::string model_to_json(const OrdinaryModel& m);
std::string model_to_json(const GeneralModel& m);

}  // namespace ilkit
