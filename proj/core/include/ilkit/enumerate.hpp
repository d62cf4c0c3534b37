#pragma once

#include <functional>

#include "ilkit/model.hpp"

namespace ilkit {

// Frames (empty valuation, worlds named w0..w{k-1}) for k = 1..max_worlds,
// one canonical representative per relabelling class: R is the
// lexicographically least encoding over all permutations, S the least over
// the automorphisms of R. The sequence is deterministic. The callback stops
// the run by returning false; the enumerators return true when they ran to
// completion.
//
// Ordinary frames support max_worlds <= 4; general frames support
// max_worlds <= 4 for qt_variant 2 and <= 3 otherwise (LimitError beyond).
bool enumerate_ordinary_frames(int max_worlds,
                               const std::function<bool(const OrdinaryModel&)>& f);
bool enumerate_general_frames(int max_worlds, int qt_variant,
                              const std::function<bool(const GeneralModel&)>& f);

}  // namespace ilkit
