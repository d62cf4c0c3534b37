#include "ilkit/transform.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace ilkit {

namespace {

void require_legal(const OrdinaryModel& m) {
  ValidationReport rep = validate_ordinary(m);
  if (!rep.ok) throw ModelError("input model is illegal: " + describe(rep));
}

void require_legal(const GeneralModel& m) {
  ValidationReport rep = validate_general(m);
  if (!rep.ok) throw ModelError("input model is illegal: " + describe(rep));
}

void require_subset_budget(int bits, const Limits& limits, const char* what) {
  if (bits >= 62 || (std::int64_t{1} << bits) > limits.max_valuations) {
    throw LimitError(std::string(what) + " needs 2^" + std::to_string(bits) +
                     " subsets; limit is " + std::to_string(limits.max_valuations));
  }
}

// All A in SR(x); assumes m already validated.
std::vector<PairRel> sr_sets_unchecked(const GeneralModel& m, World x,
                                       const Limits& limits) {
  const int n = m.n();
  std::vector<std::pair<World, World>> pool;
  std::vector<std::pair<World, WorldSet>> obligations;
  for (World u = 0; u < n; ++u) {
    for (WorldSet v : m.S[u][x]) {
      obligations.emplace_back(u, v);
      ws_for_each(v, [&](World z) { pool.emplace_back(u, z); });
    }
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  const int k = static_cast<int>(pool.size());
  require_subset_budget(k, limits, "sound-pool enumeration");

  // ob_mask[j] = pool indices that discharge obligation j.
  std::vector<std::uint64_t> ob_mask(obligations.size(), 0);
  for (size_t j = 0; j < obligations.size(); ++j) {
    for (int i = 0; i < k; ++i) {
      if (pool[i].first == obligations[j].first &&
          ws_has(obligations[j].second, pool[i].second)) {
        ob_mask[j] |= std::uint64_t{1} << i;
      }
    }
  }

  std::vector<PairRel> out;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
    bool covers = true;
    for (std::uint64_t mask : ob_mask) {
      if ((a & mask) == 0) {
        covers = false;
        break;
      }
    }
    if (!covers) continue;
    PairRel rel;
    for (int i = 0; i < k; ++i) {
      if ((a >> i) & 1u) rel.push_back(pool[i]);
    }
    out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace

GeneralModel lift_singleton(const OrdinaryModel& m, int qt_variant) {
  require_legal(m);
  if (qt_variant < 1 || qt_variant > 8) throw ModelError("qt_variant must be 1..8");
  GeneralModel out;
  out.names = m.names;
  out.R = m.R;
  out.valuation = m.valuation;
  out.qt_variant = qt_variant;
  const int n = m.n();
  out.S.assign(n, std::vector<std::vector<WorldSet>>(n));
  for (World w = 0; w < n; ++w) {
    for (World u = 0; u < n; ++u) {
      ws_for_each(m.S[w][u], [&](World v) { out.S[w][u].push_back(ws_single(v)); });
    }
  }
  return out;
}

GeneralModel lift_monotone(const OrdinaryModel& m, const Limits& limits) {
  require_legal(m);
  GeneralModel out;
  out.names = m.names;
  out.R = m.R;
  out.valuation = m.valuation;
  out.qt_variant = 2;
  const int n = m.n();
  out.S.assign(n, std::vector<std::vector<WorldSet>>(n));
  for (World w = 0; w < n; ++w) {
    require_subset_budget(ws_count(m.R[w]), limits, "monotone lift");
    const WorldSet domain = m.R[w];
    for (World u = 0; u < n; ++u) {
      WorldSet hits = m.S[w][u];
      if (hits == 0) continue;
      // Nonempty subsets of R[w] meeting the S_w-image of u, ascending.
      WorldSet v = 0;
      do {
        v = (v - domain) & domain;
        if (v && (v & hits)) out.S[w][u].push_back(v);
      } while (v != domain);
    }
  }
  return out;
}

GeneralModel monotone_closure(const GeneralModel& m, const Limits& limits) {
  require_legal(m);
  GeneralModel out;
  out.names = m.names;
  out.R = m.R;
  out.valuation = m.valuation;
  out.qt_variant = 2;
  const int n = m.n();
  out.S.assign(n, std::vector<std::vector<WorldSet>>(n));
  for (World w = 0; w < n; ++w) {
    for (World u = 0; u < n; ++u) {
      if (m.S[w][u].empty()) continue;
      std::set<WorldSet> closed;
      for (WorldSet v : m.S[w][u]) {
        const WorldSet extra = m.R[w] & ~v;
        require_subset_budget(ws_count(extra), limits, "monotone closure");
        WorldSet sub = 0;
        while (true) {
          closed.insert(v | sub);
          if (sub == extra) break;
          sub = (sub - extra) & extra;
        }
      }
      out.S[w][u].assign(closed.begin(), closed.end());
    }
  }
  return out;
}

std::vector<PairRel> sr_sets(const GeneralModel& m, World x, const Limits& limits) {
  require_legal(m);
  if (x < 0 || x >= m.n()) throw ModelError("world index out of range");
  return sr_sets_unchecked(m, x, limits);
}

Unravelled unravel(const GeneralModel& m, const Limits& limits) {
  require_legal(m);
  if (m.qt_variant < 3 || m.qt_variant > 6) {
    throw ModelError("unravelling requires quasi-transitivity variant 3..6; got " +
                     std::to_string(m.qt_variant));
  }
  const int n = m.n();

  struct Entry {
    std::string name;
    World source;
    PairRel tag;
    std::vector<WorldSet> rel;  // rel[u] = {v : (u,v) in tag}
  };
  std::vector<Entry> entries;
  for (World x = 0; x < n; ++x) {
    std::vector<PairRel> sets = sr_sets_unchecked(m, x, limits);
    if (sets.empty()) sets.push_back({});  // keep a bare copy of x
    if (entries.size() + sets.size() > static_cast<size_t>(kMaxWorlds)) {
      throw LimitError("unravelling exceeds " + std::to_string(kMaxWorlds) + " worlds");
    }
    for (size_t i = 0; i < sets.size(); ++i) {
      Entry e;
      char suffix[8];
      std::snprintf(suffix, sizeof(suffix), "@%03zu", i);
      e.name = m.names[x] + suffix;
      e.source = x;
      e.tag = std::move(sets[i]);
      e.rel.assign(n, 0);
      for (const auto& [u, v] : e.tag) e.rel[u] |= ws_single(v);
      entries.push_back(std::move(e));
    }
  }

  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.name < b.name; });
  const int t = static_cast<int>(entries.size());

  OrdinaryModel out;
  out.names.reserve(t);
  for (const Entry& e : entries) out.names.push_back(e.name);
  out.R.assign(t, 0);
  out.S.assign(t, std::vector<WorldSet>(t, 0));
  for (const auto& [atom, mask] : m.valuation) {
    WorldSet v = 0;
    for (int i = 0; i < t; ++i) {
      if (ws_has(mask, entries[i].source)) v |= ws_single(i);
    }
    out.valuation[atom] = v;
  }

  // (x,A) R' (y,B) iff x R y and B restricted to predecessors of x is in A.
  auto r_prime = [&](int a, int b) {
    if (!ws_has(m.R[entries[a].source], entries[b].source)) return false;
    for (World w = 0; w < n; ++w) {
      if (!ws_has(m.R[w], entries[a].source)) continue;
      if (!ws_subset(entries[b].rel[w], entries[a].rel[w])) return false;
    }
    return true;
  };
  for (int a = 0; a < t; ++a) {
    for (int b = 0; b < t; ++b) {
      if (r_prime(a, b)) out.R[a] |= ws_single(b);
    }
  }
  for (int w = 0; w < t; ++w) {
    const World ws = entries[w].source;
    for (int a = 0; a < t; ++a) {
      if (!ws_has(out.R[w], a)) continue;
      for (int b = 0; b < t; ++b) {
        if (!ws_has(out.R[w], b)) continue;
        if (ws_subset(entries[b].rel[ws], entries[a].rel[ws])) {
          out.S[w][a] |= ws_single(b);
        }
      }
    }
  }

  ValidationReport rep = validate_ordinary(out);
  if (!rep.ok) throw ModelError("unravelling produced an illegal model: " + describe(rep));

  Unravelled result;
  result.model = std::move(out);
  for (const Entry& e : entries) {
    TaggedWorld tw;
    tw.name = e.name;
    for (const auto& [u, v] : e.tag) tw.tag.emplace_back(m.names[u], m.names[v]);
    result.world_map[m.names[e.source]].push_back(std::move(tw));
  }
  return result;
}

}  // namespace ilkit
