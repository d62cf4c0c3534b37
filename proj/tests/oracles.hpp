// Independent reference implementations used to cross-check the library.
// Everything here is written for clarity over speed: plain recursion per
// world, no bitset caching, brute-force quantifiers.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ilkit/bisim.hpp"
#include "ilkit/formula.hpp"
#include "ilkit/model.hpp"

namespace oracles {

using namespace ilkit;

using Env = std::map<std::string, WorldSet>;

inline bool letter_true(const Env& env, const std::map<std::string, WorldSet>& val,
                        const std::string& name, World w) {
  auto it = env.find(name);
  if (it != env.end()) return ws_has(it->second, w);
  auto vt = val.find(name);
  return vt != val.end() && ws_has(vt->second, w);
}

inline bool holds_at(const OrdinaryModel& m, World w, const Fml& f, const Env& env) {
  switch (f->op) {
    case Op::Atom:
    case Op::Meta:
      return letter_true(env, m.valuation, f->name, w);
    case Op::Top:
      return true;
    case Op::Bot:
      return false;
    case Op::Neg:
      return !holds_at(m, w, f->lhs, env);
    case Op::And:
      return holds_at(m, w, f->lhs, env) && holds_at(m, w, f->rhs, env);
    case Op::Or:
      return holds_at(m, w, f->lhs, env) || holds_at(m, w, f->rhs, env);
    case Op::Impl:
      return !holds_at(m, w, f->lhs, env) || holds_at(m, w, f->rhs, env);
    case Op::Box: {
      for (World u = 0; u < m.n(); ++u)
        if (ws_has(m.R[w], u) && !holds_at(m, u, f->lhs, env)) return false;
      return true;
    }
    case Op::Dia: {
      for (World u = 0; u < m.n(); ++u)
        if (ws_has(m.R[w], u) && holds_at(m, u, f->lhs, env)) return true;
      return false;
    }
    case Op::Rhd: {
      for (World u = 0; u < m.n(); ++u) {
        if (!ws_has(m.R[w], u) || !holds_at(m, u, f->lhs, env)) continue;
        bool saved = false;
        for (World v = 0; v < m.n(); ++v)
          if (m.s_has(w, u, v) && holds_at(m, v, f->rhs, env)) saved = true;
        if (!saved) return false;
      }
      return true;
    }
  }
  return false;
}

inline bool holds_at(const GeneralModel& m, World w, const Fml& f, const Env& env) {
  switch (f->op) {
    case Op::Atom:
    case Op::Meta:
      return letter_true(env, m.valuation, f->name, w);
    case Op::Top:
      return true;
    case Op::Bot:
      return false;
    case Op::Neg:
      return !holds_at(m, w, f->lhs, env);
    case Op::And:
      return holds_at(m, w, f->lhs, env) && holds_at(m, w, f->rhs, env);
    case Op::Or:
      return holds_at(m, w, f->lhs, env) || holds_at(m, w, f->rhs, env);
    case Op::Impl:
      return !holds_at(m, w, f->lhs, env) || holds_at(m, w, f->rhs, env);
    case Op::Box: {
      for (World u = 0; u < m.n(); ++u)
        if (ws_has(m.R[w], u) && !holds_at(m, u, f->lhs, env)) return false;
      return true;
    }
    case Op::Dia: {
      for (World u = 0; u < m.n(); ++u)
        if (ws_has(m.R[w], u) && holds_at(m, u, f->lhs, env)) return true;
      return false;
    }
    case Op::Rhd: {
      for (World u = 0; u < m.n(); ++u) {
        if (!ws_has(m.R[w], u) || !holds_at(m, u, f->lhs, env)) continue;
        bool saved = false;
        for (WorldSet img : m.S[w][u]) {
          bool all = true;
          ws_for_each(img, [&](World v) {
            if (!holds_at(m, v, f->rhs, env)) all = false;
          });
          if (all) saved = true;
        }
        if (!saved) return false;
      }
      return true;
    }
  }
  return false;
}

template <class Model>
bool oracle_forces(const Model& m, World w, const Fml& f) {
  return holds_at(m, w, f, {});
}

// Every letter of the scheme ranges over all world subsets; validity means
// truth at every world under every assignment. Only usable on tiny frames.
template <class Model>
bool oracle_frame_valid(const Model& m, const Fml& scheme) {
  std::set<std::string> letters;
  for (const std::string& a : atoms(scheme)) letters.insert(a);
  for (const std::string& a : metavariables(scheme)) letters.insert(a);
  std::vector<std::string> ls(letters.begin(), letters.end());
  WorldSet full = ws_full(m.n());
  std::vector<WorldSet> pick(ls.size(), 0);
  while (true) {
    Env env;
    for (size_t i = 0; i < ls.size(); ++i) env[ls[i]] = pick[i];
    for (World w = 0; w < m.n(); ++w)
      if (!holds_at(m, w, scheme, env)) return false;
    size_t i = 0;
    for (; i < ls.size(); ++i) {
      if (pick[i] < full) {
        ++pick[i];
        break;
      }
      pick[i] = 0;
    }
    if (i == ls.size()) return true;
  }
}

// Naive clause check of a candidate bisimulation, written from scratch.
inline bool oracle_is_bisim(const GeneralModel& a, const GeneralModel& b,
                            const std::vector<WorldSet>& z) {
  std::set<std::string> vocab;
  for (const auto& [atom, s] : a.valuation) vocab.insert(atom);
  for (const auto& [atom, s] : b.valuation) vocab.insert(atom);
  auto val = [&](const GeneralModel& m, const std::string& atom, World w) {
    auto it = m.valuation.find(atom);
    return it != m.valuation.end() && ws_has(it->second, w);
  };
  auto covered = [&](WorldSet left, WorldSet right) {
    bool ok = true;
    ws_for_each(left, [&](World v) {
      bool some = false;
      ws_for_each(right, [&](World v2) {
        if (ws_has(z[v], v2)) some = true;
      });
      if (!some) ok = false;
    });
    return ok;
  };
  for (World w = 0; w < a.n(); ++w) {
    for (World w2 = 0; w2 < b.n(); ++w2) {
      if (!ws_has(z[w], w2)) continue;
      for (const std::string& atom : vocab)
        if (val(a, atom, w) != val(b, atom, w2)) return false;
      // forth
      for (World u = 0; u < a.n(); ++u) {
        if (!ws_has(a.R[w], u)) continue;
        bool ok = false;
        for (World u2 = 0; u2 < b.n() && !ok; ++u2) {
          if (!ws_has(b.R[w2], u2) || !ws_has(z[u], u2)) continue;
          bool every = true;
          for (WorldSet v2 : b.S[w2][u2]) {
            bool some = false;
            for (WorldSet v : a.S[w][u])
              if (covered(v, v2)) some = true;
            if (!some) every = false;
          }
          if (every) ok = true;
        }
        if (!ok) return false;
      }
      // back
      for (World u2 = 0; u2 < b.n(); ++u2) {
        if (!ws_has(b.R[w2], u2)) continue;
        bool ok = false;
        for (World u = 0; u < a.n() && !ok; ++u) {
          if (!ws_has(a.R[w], u) || !ws_has(z[u], u2)) continue;
          bool every = true;
          for (WorldSet v : a.S[w][u]) {
            bool some = false;
            for (WorldSet v2 : b.S[w2][u2]) {
              // each v2-member must see a z-partner in v
              bool cov = true;
              ws_for_each(v2, [&](World y2) {
                bool hit = false;
                ws_for_each(v, [&](World y) {
                  if (ws_has(z[y], y2)) hit = true;
                });
                if (!hit) cov = false;
              });
              if (cov) some = true;
            }
            if (!some) every = false;
          }
          if (every) ok = true;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

// Union of every relation that passes the naive clause check. Only feasible
// when |W| * |W'| is small (2^(|W||W'|) candidates).
inline std::vector<WorldSet> oracle_bisim_union(const GeneralModel& a,
                                                const GeneralModel& b) {
  int bits = a.n() * b.n();
  std::vector<WorldSet> best(a.n(), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    std::vector<WorldSet> z(a.n(), 0);
    for (int i = 0; i < bits; ++i)
      if (mask >> i & 1) z[i / b.n()] |= ws_single(i % b.n());
    if (oracle_is_bisim(a, b, z))
      for (World w = 0; w < a.n(); ++w) best[w] |= z[w];
  }
  return best;
}

}  // namespace oracles
