#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ilkit/model.hpp"
#include "ilkit/semantics.hpp"

namespace ilkit {

// Images become singletons: u S'_w {v} iff u S_w v. Forcing is preserved.
// The output carries the requested qt_variant; every variant except 2 is
// legal for it (singleton images are not monotone, so variant 2 callers
// should take the monotone closure afterwards or use lift_monotone).
GeneralModel lift_singleton(const OrdinaryModel& m, int qt_variant = 6);

// u S'_w V iff some v in V has u S_w v; legal under variant 2 and
// forcing-preserving.
GeneralModel lift_monotone(const OrdinaryModel& m, const Limits& limits = {});

// Closes every image upward inside R[w]; output is a legal variant-2 model
// with the same forcing relation.
GeneralModel monotone_closure(const GeneralModel& m, const Limits& limits = {});

// A relation over source worlds used as an unravelling tag.
using PairRel = std::vector<std::pair<World, World>>;

// All relations A covering every S-obligation of x (whenever x S_u V, A
// picks some member of V for u) and sound (every (u,v) in A comes from some
// x S_u V with v in V); enumerated over the sound pool only.
std::vector<PairRel> sr_sets(const GeneralModel& m, World x,
                             const Limits& limits = {});

struct TaggedWorld {
  std::string name;  // target world
  std::vector<std::pair<std::string, std::string>> tag;  // sorted pair list
};

struct Unravelled {
  OrdinaryModel model;
  // source world name -> its tagged copies, in enumeration order
  std::map<std::string, std::vector<TaggedWorld>> world_map;
};

// Ordinary model whose tagged worlds force exactly what their source world
// forces. Input must carry qt_variant 3..6.
Unravelled unravel(const GeneralModel& m, const Limits& limits = {});

}  // namespace ilkit
