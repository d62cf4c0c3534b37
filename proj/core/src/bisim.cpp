#include "ilkit/bisim.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ilkit/semantics.hpp"

namespace ilkit {

namespace {

std::vector<std::string> joint_vocabulary(const GeneralModel& a, const GeneralModel& b) {
  std::set<std::string> v;
  for (const auto& [p, mask] : a.valuation) v.insert(p);
  for (const auto& [p, mask] : b.valuation) v.insert(p);
  return {v.begin(), v.end()};
}

WorldSet valuation_of(const std::map<std::string, WorldSet>& val, const std::string& p) {
  auto it = val.find(p);
  return it == val.end() ? 0 : it->second;
}

Rel atom_agreement(const GeneralModel& a, const GeneralModel& b) {
  Rel z(a.n(), ws_full(b.n()));
  for (const std::string& p : joint_vocabulary(a, b)) {
    const WorldSet va = valuation_of(a.valuation, p);
    const WorldSet vb = valuation_of(b.valuation, p);
    for (World w = 0; w < a.n(); ++w) {
      z[w] &= ws_has(va, w) ? vb : ~vb;
    }
  }
  return z;
}

// Every member of V is z-related into T.
bool z_covers(const Rel& z, WorldSet V, WorldSet T) {
  for (WorldSet s = V; s;) {
    const World v = std::countr_zero(s);
    s &= s - 1;
    if ((z[v] & T) == 0) return false;
  }
  return true;
}

Rel transpose(const Rel& z, int nb) {
  Rel zt(nb, 0);
  for (World w = 0; w < static_cast<int>(z.size()); ++w) {
    ws_for_each(z[w], [&](World v) { zt[v] |= ws_single(w); });
  }
  return zt;
}

// Every R-successor u of w has a z-partner u2 under w2 whose right-hand
// images are all covered from below by some left-hand image of u.
bool forth_ok(const GeneralModel& a, const GeneralModel& b, const Rel& z,
              World w, World w2) {
  for (WorldSet su = a.R[w]; su;) {
    const World u = std::countr_zero(su);
    su &= su - 1;
    bool found = false;
    for (WorldSet su2 = b.R[w2] & z[u]; su2;) {
      const World u2 = std::countr_zero(su2);
      su2 &= su2 - 1;
      bool images_ok = true;
      for (WorldSet v2 : b.S[w2][u2]) {
        bool some = false;
        for (WorldSet v : a.S[w][u]) {
          if (z_covers(z, v, v2)) {
            some = true;
            break;
          }
        }
        if (!some) {
          images_ok = false;
          break;
        }
      }
      if (images_ok) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool back_ok(const GeneralModel& a, const GeneralModel& b, const Rel& zt,
             World w, World w2) {
  for (WorldSet su2 = b.R[w2]; su2;) {
    const World u2 = std::countr_zero(su2);
    su2 &= su2 - 1;
    bool found = false;
    for (WorldSet su = a.R[w] & zt[u2]; su;) {
      const World u = std::countr_zero(su);
      su &= su - 1;
      bool images_ok = true;
      for (WorldSet v : a.S[w][u]) {
        bool some = false;
        for (WorldSet v2 : b.S[w2][u2]) {
          if (z_covers(zt, v2, v)) {
            some = true;
            break;
          }
        }
        if (!some) {
          images_ok = false;
          break;
        }
      }
      if (images_ok) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Rel refine_round(const GeneralModel& a, const GeneralModel& b, const Rel& z) {
  const Rel zt = transpose(z, b.n());
  Rel out(a.n(), 0);
  for (World w = 0; w < a.n(); ++w) {
    ws_for_each(z[w], [&](World w2) {
      if (forth_ok(a, b, z, w, w2) && back_ok(a, b, zt, w, w2)) {
        out[w] |= ws_single(w2);
      }
    });
  }
  return out;
}

}  // namespace

bool is_bisimulation(const GeneralModel& a, const GeneralModel& b, const Rel& z) {
  if (static_cast<int>(z.size()) != a.n()) throw ModelError("relation size mismatch");
  for (const WorldSet row : z) {
    if (!ws_subset(row, ws_full(b.n()))) throw ModelError("relation exceeds right model");
  }
  const Rel at = atom_agreement(a, b);
  const Rel zt = transpose(z, b.n());
  for (World w = 0; w < a.n(); ++w) {
    if (!ws_subset(z[w], at[w])) return false;
    for (WorldSet s = z[w]; s;) {
      const World w2 = std::countr_zero(s);
      s &= s - 1;
      if (!forth_ok(a, b, z, w, w2) || !back_ok(a, b, zt, w, w2)) return false;
    }
  }
  return true;
}

Rel largest_bisimulation(const GeneralModel& a, const GeneralModel& b) {
  Rel z = atom_agreement(a, b);
  for (;;) {
    Rel next = refine_round(a, b, z);
    if (next == z) return z;
    z = std::move(next);
  }
}

std::vector<Rel> n_bisimulation(const GeneralModel& a, const GeneralModel& b, int n) {
  if (n < 0) throw ModelError("negative bisimulation depth");
  std::vector<Rel> chain{atom_agreement(a, b)};
  for (int k = 1; k <= n; ++k) chain.push_back(refine_round(a, b, chain.back()));
  return chain;
}

namespace {

WorldSet box_of(const std::vector<WorldSet>& r, WorldSet x, int n) {
  WorldSet out = 0;
  for (World w = 0; w < n; ++w) {
    if (ws_subset(r[w], x)) out |= ws_single(w);
  }
  return out;
}

WorldSet rhd_of(const OrdinaryModel& m, WorldSet x, WorldSet y) {
  WorldSet out = 0;
  for (World w = 0; w < m.n(); ++w) {
    bool ok = true;
    for (WorldSet s = m.R[w] & x; s;) {
      const World u = std::countr_zero(s);
      s &= s - 1;
      if ((m.S[w][u] & y) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) out |= ws_single(w);
  }
  return out;
}

WorldSet rhd_of(const GeneralModel& m, WorldSet x, WorldSet y) {
  WorldSet out = 0;
  for (World w = 0; w < m.n(); ++w) {
    bool ok = true;
    for (WorldSet s = m.R[w] & x; s;) {
      const World u = std::countr_zero(s);
      s &= s - 1;
      bool some = false;
      for (WorldSet v : m.S[w][u]) {
        if (ws_subset(v, y)) {
          some = true;
          break;
        }
      }
      if (!some) {
        ok = false;
        break;
      }
    }
    if (ok) out |= ws_single(w);
  }
  return out;
}

// Joint truth-set closure: masks pack the left truth set in the low bits and
// the right one above. The closure after k modal rounds realises every
// formula of modal depth <= k over the vocabulary.
template <class MA, class MB>
EquivalenceResult equiv_exact(const MA& a, World wa, const MB& b, World wb,
                              int depth, const std::vector<std::string>& vocab) {
  const int nl = a.n(), nr = b.n();
  const std::uint64_t full = ws_full(nl + nr);
  auto enc = [&](WorldSet x, WorldSet y) { return x | (y << nl); };

  std::map<std::uint64_t, Fml> layer;
  std::vector<std::uint64_t> order;
  auto insert = [&](std::uint64_t m, Fml f) {
    if (layer.emplace(m, std::move(f)).second) order.push_back(m);
  };
  auto bool_close = [&]() {
    for (size_t i = 0; i < order.size(); ++i) {
      const std::uint64_t mi = order[i];
      insert(full & ~mi, mk_neg(layer[mi]));
      for (size_t j = 0; j <= i; ++j) {
        insert(mi & order[j], mk_and(layer[mi], layer[order[j]]));
      }
    }
  };

  insert(full, mk_top());
  insert(0, mk_bot());
  for (const std::string& p : vocab) {
    insert(enc(valuation_of(a.valuation, p) & ws_full(nl),
               valuation_of(b.valuation, p) & ws_full(nr)),
           mk_atom(p));
  }
  bool_close();
  for (int d = 1; d <= depth; ++d) {
    const std::vector<std::uint64_t> snapshot = order;
    for (std::uint64_t m : snapshot) {
      const WorldSet x = m & ws_full(nl);
      const WorldSet y = m >> nl;
      insert(enc(box_of(a.R, x, nl), box_of(b.R, y, nr)), mk_box(layer[m]));
    }
    for (std::uint64_t ms : snapshot) {
      for (std::uint64_t mt : snapshot) {
        insert(enc(rhd_of(a, ms & ws_full(nl), mt & ws_full(nl)),
                   rhd_of(b, ms >> nl, mt >> nl)),
               mk_rhd(layer[ms], layer[mt]));
      }
    }
    bool_close();
  }

  EquivalenceResult result;
  result.exhaustive = true;
  result.formulas_checked = static_cast<std::int64_t>(order.size());
  for (std::uint64_t m : order) {
    if (ws_has(m, wa) != ws_has(m >> nl, wb)) {
      result.equivalent = false;
      result.separating = render(layer[m]);
      return result;
    }
  }
  return result;
}

template <class MA, class MB>
EquivalenceResult equiv_corpus(const MA& a, World wa, const MB& b, World wb,
                               int depth, const std::vector<std::string>& vocab) {
  EquivalenceResult result;
  result.exhaustive = false;
  for (const Fml& f : formula_corpus(vocab, depth)) {
    ++result.formulas_checked;
    if (forces(a, wa, f) != forces(b, wb, f)) {
      result.equivalent = false;
      result.separating = render(f);
      return result;
    }
  }
  return result;
}

template <class MA, class MB>
EquivalenceResult equiv_impl(const MA& a, World wa, const MB& b, World wb,
                             int depth, const std::vector<std::string>& vocab) {
  if (wa < 0 || wa >= a.n() || wb < 0 || wb >= b.n()) {
    throw ModelError("world index out of range");
  }
  if (depth < 0) throw ModelError("negative equivalence depth");
  if (a.n() + b.n() <= 10) return equiv_exact(a, wa, b, wb, depth, vocab);
  return equiv_corpus(a, wa, b, wb, depth, vocab);
}

}  // namespace

std::vector<Fml> formula_corpus(const std::vector<std::string>& vocabulary,
                                int depth, size_t budget) {
  std::vector<Fml> items;
  std::set<std::string> seen;
  auto add = [&](const Fml& f) {
    if (items.size() >= budget) return;
    if (seen.insert(render(f)).second) items.push_back(f);
  };
  add(mk_top());
  add(mk_bot());
  for (const std::string& p : vocabulary) add(mk_atom(p));

  constexpr size_t kUnaryKernels = 48;
  constexpr size_t kPairKernels = 24;
  constexpr size_t kBoolSpan = 64;
  for (int d = 1; d <= depth; ++d) {
    const size_t level = items.size();
    const size_t unary = std::min(level, kUnaryKernels);
    for (size_t i = 0; i < unary; ++i) {
      add(mk_box(items[i]));
      add(mk_dia(items[i]));
    }
    const size_t pairs = std::min(level, kPairKernels);
    for (size_t i = 0; i < pairs; ++i) {
      for (size_t j = 0; j < pairs; ++j) {
        add(mk_rhd(items[i], items[j]));
      }
    }
    const size_t span = std::min(items.size(), kBoolSpan);
    for (size_t i = 0; i < span; ++i) add(mk_neg(items[i]));
    for (size_t i = 0; i < span; ++i) {
      for (size_t j = i + 1; j < span; ++j) {
        add(mk_and(items[i], items[j]));
        add(mk_or(items[i], items[j]));
      }
    }
  }
  return items;
}

EquivalenceResult modally_equivalent_up_to(const GeneralModel& a, World wa,
                                           const GeneralModel& b, World wb,
                                           int depth,
                                           const std::vector<std::string>& vocabulary) {
  return equiv_impl(a, wa, b, wb, depth, vocabulary);
}

EquivalenceResult modally_equivalent_up_to(const GeneralModel& a, World wa,
                                           const OrdinaryModel& b, World wb,
                                           int depth,
                                           const std::vector<std::string>& vocabulary) {
  return equiv_impl(a, wa, b, wb, depth, vocabulary);
}

EquivalenceResult modally_equivalent_up_to(const OrdinaryModel& a, World wa,
                                           const OrdinaryModel& b, World wb,
                                           int depth,
                                           const std::vector<std::string>& vocabulary) {
  return equiv_impl(a, wa, b, wb, depth, vocabulary);
}

}  // namespace ilkit
