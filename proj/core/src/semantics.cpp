#include "ilkit/semantics.hpp"

#include <bit>
#include <vector>

#include "ilkit/parallel.hpp"

namespace ilkit {

namespace {

// w |- A |> B quantifies u over R[w] & [[A]]; this answers the per-u step.
bool rhd_step(const OrdinaryModel& m, World w, World u, WorldSet b) {
  return (m.S[w][u] & b) != 0;
}

bool rhd_step(const GeneralModel& m, World w, World u, WorldSet b) {
  for (WorldSet v : m.S[w][u]) {
    if (ws_subset(v, b)) return true;
  }
  return false;
}

template <class Model>
WorldSet eval(const Model& m, const Formula* f, const LetterEnv* env) {
  const int n = m.n();
  const WorldSet all = ws_full(n);
  switch (f->op) {
    case Op::Top:
      return all;
    case Op::Bot:
      return 0;
    case Op::Atom: {
      if (env) {
        auto it = env->find(f->name);
        if (it != env->end()) return it->second & all;
      }
      auto it = m.valuation.find(f->name);
      return it == m.valuation.end() ? 0 : (it->second & all);
    }
    case Op::Meta: {
      if (env) {
        auto it = env->find(f->name);
        if (it != env->end()) return it->second & all;
      }
      throw FormulaError("metavariable \"" + f->name +
                         "\" has no assigned truth set");
    }
    case Op::Neg:
      return all & ~eval(m, f->lhs.get(), env);
    case Op::And:
      return eval(m, f->lhs.get(), env) & eval(m, f->rhs.get(), env);
    case Op::Or:
      return eval(m, f->lhs.get(), env) | eval(m, f->rhs.get(), env);
    case Op::Impl:
      return (all & ~eval(m, f->lhs.get(), env)) | eval(m, f->rhs.get(), env);
    case Op::Box: {
      WorldSet a = eval(m, f->lhs.get(), env);
      WorldSet out = 0;
      for (World w = 0; w < n; ++w) {
        if ((m.R[w] & ~a) == 0) out |= ws_single(w);
      }
      return out;
    }
    case Op::Dia: {
      WorldSet a = eval(m, f->lhs.get(), env);
      WorldSet out = 0;
      for (World w = 0; w < n; ++w) {
        if ((m.R[w] & a) != 0) out |= ws_single(w);
      }
      return out;
    }
    case Op::Rhd: {
      WorldSet a = eval(m, f->lhs.get(), env);
      WorldSet b = eval(m, f->rhs.get(), env);
      WorldSet out = 0;
      for (World w = 0; w < n; ++w) {
        bool ok = true;
        WorldSet dom = m.R[w] & a;
        while (dom != 0) {
          World u = std::countr_zero(dom);
          dom &= dom - 1;
          if (!rhd_step(m, w, u, b)) {
            ok = false;
            break;
          }
        }
        if (ok) out |= ws_single(w);
      }
      return out;
    }
  }
  return 0;
}

template <class Model>
bool forces_impl(const Model& m, World w, const Fml& f) {
  if (w < 0 || w >= m.n()) throw ModelError("world index out of range");
  return ws_has(truth_set(m, f), w);
}

template <class Model>
bool forces_named(const Model& m, const std::string& world, const Fml& f) {
  auto idx = m.world_index(world);
  if (!idx) throw ModelError("unknown world \"" + world + "\"");
  return forces_impl(m, *idx, f);
}

template <class Model>
FrameValidity frame_valid_impl(const Model& m, const Fml& scheme,
                               const Limits& limits) {
  const int n = m.n();
  std::vector<std::string> letters;
  for (const auto& a : atoms(scheme)) letters.push_back(a);
  for (const auto& v : metavariables(scheme)) letters.push_back(v);
  const int k = static_cast<int>(letters.size());
  const int bits = k * n;
  if (bits >= 62 ||
      (std::int64_t{1} << bits) > limits.max_valuations) {
    throw LimitError("frame validity over " + std::to_string(k) +
                     " letters and " + std::to_string(n) + " worlds needs 2^" +
                     std::to_string(bits) + " assignments; limit is " +
                     std::to_string(limits.max_valuations));
  }
  const std::int64_t total = std::int64_t{1} << bits;
  const WorldSet all = ws_full(n);
  auto env_at = [&](std::int64_t idx) {
    LetterEnv env;
    for (int i = 0; i < k; ++i) {
      env[letters[static_cast<size_t>(i)]] =
          static_cast<WorldSet>(idx >> (i * n)) & all;
    }
    return env;
  };
  auto refuted = least_index_where(total, [&](std::int64_t idx) {
    LetterEnv env = env_at(idx);
    return eval(m, scheme.get(), &env) != all;
  });
  FrameValidity out;
  if (!refuted) return out;
  out.valid = false;
  out.witness_valuation = env_at(*refuted);
  WorldSet t = eval(m, scheme.get(), &out.witness_valuation);
  out.witness_world =
      m.names[static_cast<size_t>(std::countr_zero(all & ~t))];
  return out;
}

}  // namespace

WorldSet truth_set(const OrdinaryModel& m, const Fml& f) {
  return eval(m, f.get(), nullptr);
}
WorldSet truth_set(const GeneralModel& m, const Fml& f) {
  return eval(m, f.get(), nullptr);
}
WorldSet truth_set(const OrdinaryModel& m, const Fml& f, const LetterEnv& env) {
  return eval(m, f.get(), &env);
}
WorldSet truth_set(const GeneralModel& m, const Fml& f, const LetterEnv& env) {
  return eval(m, f.get(), &env);
}

bool forces(const OrdinaryModel& m, World w, const Fml& f) {
  return forces_impl(m, w, f);
}
bool forces(const GeneralModel& m, World w, const Fml& f) {
  return forces_impl(m, w, f);
}
bool forces(const OrdinaryModel& m, const std::string& world, const Fml& f) {
  return forces_named(m, world, f);
}
bool forces(const GeneralModel& m, const std::string& world, const Fml& f) {
  return forces_named(m, world, f);
}

FrameValidity frame_valid_scheme(const OrdinaryModel& m, const Fml& scheme,
                                 const Limits& limits) {
  return frame_valid_impl(m, scheme, limits);
}
FrameValidity frame_valid_scheme(const GeneralModel& m, const Fml& scheme,
                                 const Limits& limits) {
  return frame_valid_impl(m, scheme, limits);
}

}  // namespace ilkit
