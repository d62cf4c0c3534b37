#pragma once

#include <string>
#include <vector>

#include "ilkit/bisim.hpp"
#include "ilkit/formula.hpp"
#include "ilkit/model.hpp"

namespace ilkit {

struct Quotient {
  std::vector<WorldSet> classes;         // partition of the source worlds
  std::vector<int> class_of;             // source world -> class index
  std::vector<std::string> class_names;  // least member name, per class
};

struct FiltrationResult {
  GeneralModel model;  // carries qt_variant 2
  Quotient quotient;
};

// Collapses the model to its largest auto-bisimulation classes. R-edges
// survive when some boxed member of gamma.gamma flips from false to true
// across the edge; a class image belongs to S when every concrete R-pair of
// representatives has an image whose classes stay inside it. Atoms outside
// gamma.gamma are dropped. Truth of every member of gamma.gamma is preserved
// between a world and its class.
FiltrationResult filtrate(const GeneralModel& m, const AdequateSet& gamma);

}  // namespace ilkit
