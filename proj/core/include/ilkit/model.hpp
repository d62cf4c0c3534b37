#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ilkit {

// Worlds are dense indices into a sorted name table; world sets are bitmasks.
using World = int;
using WorldSet = uint64_t;
constexpr int kMaxWorlds = 64;

inline bool ws_has(WorldSet s, World w) { return (s >> w) & 1u; }
inline WorldSet ws_single(World w) { return WorldSet{1} << w; }
inline WorldSet ws_full(int n) { return n >= kMaxWorlds ? ~WorldSet{0} : (WorldSet{1} << n) - 1; }
inline int ws_count(WorldSet s) { return std::popcount(s); }
inline bool ws_subset(WorldSet a, WorldSet b) { return (a & ~b) == 0; }

// Iterates set bits low to high.
template <typename F>
void ws_for_each(WorldSet s, F&& f) {
  while (s) {
    World w = std::countr_zero(s);
    s &= s - 1;
    f(w);
  }
}

class ModelError : public std::runtime_error {
public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

class LimitError : public std::runtime_error {
public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// R transitive and acyclic; S_w a relation on R[w] that is reflexive on
// R[w], transitive, and contains R restricted to R[w].
struct OrdinaryModel {
  std::vector<std::string> names;        // sorted; index is the world id
  std::vector<WorldSet> R;               // R[w] = successor set
  std::vector<std::vector<WorldSet>> S;  // S[w][u] = {v : u S_w v}
  std::map<std::string, WorldSet> valuation;

  int n() const { return static_cast<int>(names.size()); }
  std::optional<World> world_index(const std::string& name) const;
  bool s_has(World w, World u, World v) const { return ws_has(S[w][u], v); }
};

// R as above; S_w relates members of R[w] to nonempty subsets of R[w].
// qt_variant selects which quasi-transitivity condition the model carries;
// monotonicity is part of the package only for variant 2.
struct GeneralModel {
  std::vector<std::string> names;
  std::vector<WorldSet> R;
  // S[w][u] = sorted list of sets V with u S_w V
  std::vector<std::vector<std::vector<WorldSet>>> S;
  std::map<std::string, WorldSet> valuation;
  int qt_variant = 2;

  int n() const { return static_cast<int>(names.size()); }
  std::optional<World> world_index(const std::string& name) const;
  bool s_has(World w, World u, WorldSet v) const;
  void s_add(World w, World u, WorldSet v);  // keeps the list sorted/unique
};

struct Violation {
  std::string condition;  // e.g. "R-transitivity", "b", "c-4", "e"
  std::string witness;    // the offending tuple, rendered with world names
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// "{a,b}" rendering of a world set.
std::string ws_names(const std::vector<std::string>& names, WorldSet s);

ValidationReport validate_ordinary(const OrdinaryModel& m);
ValidationReport validate_general(const GeneralModel& m);

// Quasi-transitivity variant c-k alone, as used by the validator.
bool quasi_transitive(const GeneralModel& m, int variant,
                      std::string* witness = nullptr);

std::string describe(const ValidationReport& r);

}  // namespace ilkit
