#include "ilkit/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace ilkit {

namespace {

std::vector<std::string> world_names(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("w" + std::to_string(i));
  return names;
}

WorldSet permute_set(WorldSet s, const std::vector<int>& p) {
  WorldSet out = 0;
  ws_for_each(s, [&](World w) { out |= ws_single(p[w]); });
  return out;
}

std::vector<WorldSet> permute_rel(const std::vector<WorldSet>& r,
                                  const std::vector<int>& p) {
  std::vector<WorldSet> out(r.size(), 0);
  for (size_t w = 0; w < r.size(); ++w) out[p[w]] = permute_set(r[w], p);
  return out;
}

bool transitive(const std::vector<WorldSet>& r) {
  for (size_t w = 0; w < r.size(); ++w) {
    bool ok = true;
    ws_for_each(r[w], [&](World u) {
      if (!ws_subset(r[u], r[w])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

struct FrameShape {
  std::vector<WorldSet> R;
  std::vector<std::vector<int>> auts;  // permutations fixing R
};

// Transitive irreflexive (hence acyclic) relations on k worlds, one
// lexicographically least representative per relabelling class.
std::vector<FrameShape> frame_shapes(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int w = 0; w < k; ++w) {
    for (int v = 0; v < k; ++v) {
      if (v != w) pairs.emplace_back(w, v);
    }
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<FrameShape> shapes;
  const int bits = static_cast<int>(pairs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    std::vector<WorldSet> r(k, 0);
    for (int i = 0; i < bits; ++i) {
      if ((mask >> i) & 1u) r[pairs[i].first] |= ws_single(pairs[i].second);
    }
    if (!transitive(r)) continue;
    FrameShape shape{r, {}};
    bool canonical = true;
    for (const auto& q : perms) {
      const std::vector<WorldSet> r2 = permute_rel(r, q);
      if (r2 < r) {
        canonical = false;
        break;
      }
      if (r2 == r) shape.auts.push_back(q);
    }
    if (canonical) shapes.push_back(std::move(shape));
  }
  return shapes;
}

// ---- ordinary frames ----

using OrdRow = std::vector<WorldSet>;  // S_w as successor sets, full width

bool row_transitive(const OrdRow& row, WorldSet domain) {
  bool ok = true;
  ws_for_each(domain, [&](World u) {
    ws_for_each(row[u], [&](World v) {
      if (!ws_subset(row[v], row[u])) ok = false;
    });
  });
  return ok;
}

// All S_w rows: reflexive on R[w], transitive, containing R restricted
// to R[w]; sorted ascending.
std::vector<OrdRow> ordinary_rows(const std::vector<WorldSet>& r, World w, int k) {
  const WorldSet domain = r[w];
  OrdRow base(k, 0);
  std::vector<std::pair<int, int>> free_pairs;
  ws_for_each(domain, [&](World u) { base[u] = ws_single(u) | (r[u] & domain); });
  ws_for_each(domain, [&](World u) {
    ws_for_each(domain, [&](World v) {
      if (!ws_has(base[u], v)) free_pairs.emplace_back(u, v);
    });
  });
  std::vector<OrdRow> rows;
  const int bits = static_cast<int>(free_pairs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    OrdRow row = base;
    for (int i = 0; i < bits; ++i) {
      if ((mask >> i) & 1u) row[free_pairs[i].first] |= ws_single(free_pairs[i].second);
    }
    if (row_transitive(row, domain)) rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

// ---- general frames ----

using GenRow = std::vector<std::vector<WorldSet>>;  // S_w image lists, full width

// Per-world image families for S_w under the given variant; each candidate
// satisfies quasi-reflexivity, the R-inclusion pairs, the variant's
// composition law, and (for variant 2) monotonicity.
std::vector<GenRow> general_rows(const std::vector<WorldSet>& r, World w, int k,
                                 int variant) {
  const WorldSet domain = r[w];
  std::vector<World> dw;
  ws_for_each(domain, [&](World u) { dw.push_back(u); });
  const int d = static_cast<int>(dw.size());
  if (d == 0) return {GenRow(k)};
  const int values = (1 << d) - 1;  // nonempty subsets in local coordinates

  auto to_global = [&](std::uint32_t lv) {
    WorldSet v = 0;
    for (int i = 0; i < d; ++i) {
      if ((lv >> i) & 1u) v |= ws_single(dw[i]);
    }
    return v;
  };
  auto local_single = [&](World u) {
    for (int i = 0; i < d; ++i) {
      if (dw[i] == u) return std::uint32_t{1} << i;
    }
    throw ModelError("world outside the domain");
  };

  // required[u] = local values forced by quasi-reflexivity and R-inclusion
  // (their upward closures when monotone).
  std::vector<std::uint32_t> seeds(k, 0);
  ws_for_each(domain, [&](World u) {
    std::uint32_t s = std::uint32_t{1} << local_single(u);
    ws_for_each(r[u] & domain, [&](World v) { s |= std::uint32_t{1} << local_single(v); });
    seeds[u] = s;
  });
  auto up_close = [&](std::uint32_t family) {
    std::uint32_t out = 0;
    for (int a = 1; a <= values; ++a) {
      if (!((family >> a) & 1u)) continue;
      for (int b = 1; b <= values; ++b) {
        if ((a & ~b) == 0) out |= std::uint32_t{1} << b;
      }
    }
    return out;
  };
  auto upward_closed = [&](std::uint32_t family) { return up_close(family) == family; };

  std::vector<std::vector<std::uint32_t>> choices(k);
  for (World u : dw) {
    const std::uint32_t need = variant == 2 ? up_close(seeds[u]) : seeds[u];
    for (std::uint32_t fam = 0; fam < (std::uint32_t{1} << (values + 1)); fam += 2) {
      if ((fam & need) != need) continue;
      if (variant == 2 && !upward_closed(fam)) continue;
      choices[u].push_back(fam);
    }
  }

  std::vector<std::uint32_t> chosen(k, 0);

  // Variant 2 composition over minimal images (monotone families make the
  // minimal choices decisive).
  auto qt2_closed = [&]() {
    std::vector<std::vector<std::uint32_t>> mins(k);
    for (World u : dw) {
      for (int a = 1; a <= values; ++a) {
        if (!((chosen[u] >> a) & 1u)) continue;
        bool minimal = true;
        for (int b = 1; b < a; ++b) {
          if (((chosen[u] >> b) & 1u) && (b & ~a) == 0) {
            minimal = false;
            break;
          }
        }
        if (minimal) mins[u].push_back(a);
      }
    }
    for (World u : dw) {
      for (int y = 1; y <= values; ++y) {
        if (!((chosen[u] >> y) & 1u)) continue;
        std::vector<World> members;
        for (int i = 0; i < d; ++i) {
          if ((y >> i) & 1u) members.push_back(dw[i]);
        }
        std::function<bool(size_t, std::uint32_t)> pick = [&](size_t at,
                                                              std::uint32_t acc) {
          if (at == members.size()) return ((chosen[u] >> acc) & 1u) != 0;
          for (std::uint32_t lv : mins[members[at]]) {
            if (!pick(at + 1, acc | lv)) return false;
          }
          return true;
        };
        if (!pick(0, 0)) return false;
      }
    }
    return true;
  };

  auto assemble = [&]() {
    GenRow row(k);
    for (World u : dw) {
      for (int a = 1; a <= values; ++a) {
        if ((chosen[u] >> a) & 1u) row[u].push_back(to_global(a));
      }
    }
    return row;
  };

  GeneralModel probe;  // scratch model for the non-monotone variants
  if (variant != 2) {
    probe.names = world_names(k);
    probe.R = r;
    probe.qt_variant = variant;
  }

  std::vector<GenRow> rows;
  std::function<void(int)> rec = [&](int at) {
    if (at == d) {
      if (variant == 2) {
        if (qt2_closed()) rows.push_back(assemble());
      } else {
        probe.S.assign(k, std::vector<std::vector<WorldSet>>(k));
        probe.S[w] = assemble();
        if (quasi_transitive(probe, variant)) rows.push_back(probe.S[w]);
      }
      return;
    }
    for (std::uint32_t fam : choices[dw[at]]) {
      chosen[dw[at]] = fam;
      rec(at + 1);
    }
    chosen[dw[at]] = 0;
  };
  rec(0);
  return rows;
}

template <class S>
S permute_s(const S& s, const std::vector<int>& p);

template <>
std::vector<OrdRow> permute_s(const std::vector<OrdRow>& s, const std::vector<int>& p) {
  const int k = static_cast<int>(s.size());
  std::vector<OrdRow> out(k, OrdRow(k, 0));
  for (int w = 0; w < k; ++w) {
    for (int u = 0; u < k; ++u) out[p[w]][p[u]] = permute_set(s[w][u], p);
  }
  return out;
}

template <>
std::vector<GenRow> permute_s(const std::vector<GenRow>& s, const std::vector<int>& p) {
  const int k = static_cast<int>(s.size());
  std::vector<GenRow> out(k, GenRow(k));
  for (int w = 0; w < k; ++w) {
    for (int u = 0; u < k; ++u) {
      std::vector<WorldSet> images;
      for (WorldSet v : s[w][u]) images.push_back(permute_set(v, p));
      std::sort(images.begin(), images.end());
      out[p[w]][p[u]] = std::move(images);
    }
  }
  return out;
}

// Least S assignment among the automorphisms of R.
template <class S>
bool s_canonical(const S& s, const std::vector<std::vector<int>>& auts) {
  for (size_t i = 1; i < auts.size(); ++i) {  // auts[0] is the identity
    if (permute_s(s, auts[i]) < s) return false;
  }
  return true;
}

}  // namespace

bool enumerate_ordinary_frames(int max_worlds,
                               const std::function<bool(const OrdinaryModel&)>& f) {
  if (max_worlds > 4) throw LimitError("ordinary frame enumeration supports at most 4 worlds");
  for (int k = 1; k <= max_worlds; ++k) {
    const std::vector<std::string> names = world_names(k);
    for (const FrameShape& shape : frame_shapes(k)) {
      std::vector<std::vector<OrdRow>> rows(k);
      for (World w = 0; w < k; ++w) rows[w] = ordinary_rows(shape.R, w, k);
      std::vector<size_t> pick(k, 0);
      for (;;) {
        OrdinaryModel m;
        m.names = names;
        m.R = shape.R;
        m.S.reserve(k);
        for (World w = 0; w < k; ++w) m.S.push_back(rows[w][pick[w]]);
        if (s_canonical(m.S, shape.auts) && !f(m)) return false;
        int at = k - 1;
        while (at >= 0 && ++pick[at] == rows[at].size()) pick[at--] = 0;
        if (at < 0) break;
      }
    }
  }
  return true;
}

bool enumerate_general_frames(int max_worlds, int qt_variant,
                              const std::function<bool(const GeneralModel&)>& f) {
  if (qt_variant < 1 || qt_variant > 8) throw ModelError("qt_variant must be 1..8");
  const int cap = qt_variant == 2 ? 4 : 3;
  if (max_worlds > cap) {
    throw LimitError("general frame enumeration supports at most " +
                     std::to_string(cap) + " worlds for variant " +
                     std::to_string(qt_variant));
  }
  for (int k = 1; k <= max_worlds; ++k) {
    const std::vector<std::string> names = world_names(k);
    for (const FrameShape& shape : frame_shapes(k)) {
      std::vector<std::vector<GenRow>> rows(k);
      for (World w = 0; w < k; ++w) rows[w] = general_rows(shape.R, w, k, qt_variant);
      std::vector<size_t> pick(k, 0);
      for (;;) {
        GeneralModel m;
        m.names = names;
        m.R = shape.R;
        m.qt_variant = qt_variant;
        m.S.reserve(k);
        for (World w = 0; w < k; ++w) m.S.push_back(rows[w][pick[w]]);
        if (s_canonical(m.S, shape.auts) && !f(m)) return false;
        int at = k - 1;
        while (at >= 0 && ++pick[at] == rows[at].size()) pick[at--] = 0;
        if (at < 0) break;
      }
    }
  }
  return true;
}

}  // namespace ilkit
