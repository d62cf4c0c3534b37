#include "ilkit/conditions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

namespace ilkit {

namespace {

WorldSet r_image(const std::vector<WorldSet>& R, WorldSet v) {
  WorldSet out = 0;
  ws_for_each(v, [&](World x) { out |= R[x]; });
  return out;
}

// Submasks of domain by ascending cardinality, numeric order within a
// cardinality class; stops when f returns true.
template <typename F>
bool for_each_submask_ascending(WorldSet domain, F&& f) {
  int total = ws_count(domain);
  for (int k = 0; k <= total; ++k) {
    WorldSet sub = 0;
    while (true) {
      if (ws_count(sub) == k && f(sub)) return true;
      if (sub == domain) break;
      sub = (sub - domain) & domain;
    }
  }
  return false;
}

void require_subset_budget(int bits, const Limits& limits, const char* what) {
  if (bits >= 62 || (std::int64_t{1} << bits) > limits.max_valuations) {
    throw LimitError(std::string(what) + " quantifies over 2^" +
                     std::to_string(bits) + " sets; limit is " +
                     std::to_string(limits.max_valuations));
  }
}

using Roles = std::vector<std::pair<std::string, std::string>>;

ConditionVerdict fail_with(Roles worlds, Roles sets, std::string note) {
  ConditionVerdict v;
  v.holds = false;
  v.witness =
      ConditionWitness{std::move(worlds), std::move(sets), std::move(note)};
  return v;
}

std::optional<std::vector<World>> find_cycle(
    const std::vector<WorldSet>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n, 0);  // 0 fresh, 1 on path, 2 done
  std::vector<World> path;
  for (World s = 0; s < n; ++s) {
    if (color[s] != 0) continue;
    std::vector<std::pair<World, WorldSet>> stack{{s, adj[s]}};
    color[s] = 1;
    path.push_back(s);
    while (!stack.empty()) {
      auto& [x, rest] = stack.back();
      if (rest == 0) {
        color[x] = 2;
        path.pop_back();
        stack.pop_back();
        continue;
      }
      World y = std::countr_zero(rest);
      rest &= rest - 1;
      if (color[y] == 1) {
        auto it = std::find(path.begin(), path.end(), y);
        std::vector<World> cycle(it, path.end());
        cycle.push_back(y);
        return cycle;
      }
      if (color[y] == 0) {
        color[y] = 1;
        path.push_back(y);
        stack.emplace_back(y, adj[y]);
      }
    }
  }
  return std::nullopt;
}

// ---- ordinary conditions ----

// y S_w z R u  =>  y R u
ConditionVerdict m_ord(const OrdinaryModel& m) {
  const int n = m.n();
  for (World w = 0; w < n; ++w) {
    for (World y = 0; y < n; ++y) {
      ConditionVerdict out;
      ws_for_each(m.S[w][y], [&](World z) {
        if (!out.holds) return;
        WorldSet bad = m.R[z] & ~m.R[y];
        if (bad != 0) {
          World u = std::countr_zero(bad);
          out = fail_with({{"w", m.names[w]},
                           {"y", m.names[y]},
                           {"z", m.names[z]},
                           {"u", m.names[u]}},
                          {}, "y S_w z R u but not y R u");
        }
      });
      if (!out.holds) return out;
    }
  }
  return {};
}

// w R x R y S_w u R z  =>  x R z
ConditionVerdict m0_ord(const OrdinaryModel& m) {
  const int n = m.n();
  for (World w = 0; w < n; ++w) {
    for (World x = 0; x < n; ++x) {
      if (!ws_has(m.R[w], x)) continue;
      ConditionVerdict out;
      ws_for_each(m.R[x], [&](World y) {
        if (!out.holds) return;
        ws_for_each(m.S[w][y], [&](World u) {
          if (!out.holds) return;
          WorldSet bad = m.R[u] & ~m.R[x];
          if (bad != 0) {
            World z = std::countr_zero(bad);
            out = fail_with({{"w", m.names[w]},
                             {"x", m.names[x]},
                             {"y", m.names[y]},
                             {"u", m.names[u]},
                             {"z", m.names[z]}},
                            {}, "w R x R y S_w u R z but not x R z");
          }
        });
      });
      if (!out.holds) return out;
    }
  }
  return {};
}

// Per w, the composite x -> y iff exists z with x S_w z and z R y must have
// no cycle (conversely well-founded on a finite carrier).
ConditionVerdict wfam_ord(const OrdinaryModel& m) {
  const int n = m.n();
  for (World w = 0; w < n; ++w) {
    std::vector<WorldSet> comp(static_cast<size_t>(n), 0);
    for (World x = 0; x < n; ++x) {
      comp[static_cast<size_t>(x)] = r_image(m.R, m.S[w][x]);
    }
    if (auto cycle = find_cycle(comp)) {
      std::ostringstream path;
      for (size_t i = 0; i < cycle->size(); ++i) {
        if (i) path << " -> ";
        path << m.names[static_cast<size_t>((*cycle)[i])];
      }
      return fail_with({{"w", m.names[w]}}, {},
                       "S_w;R cycle " + path.str());
    }
  }
  return {};
}

// Every y in R[w] has an S_w-successor from which no S_w;R step leaves.
ConditionVerdict kw1_ord(const OrdinaryModel& m) {
  const int n = m.n();
  for (World w = 0; w < n; ++w) {
    WorldSet terminal = 0;  // M(w)
    ws_for_each(m.R[w], [&](World x) {
      if ((r_image(m.R, m.S[w][x]) & m.R[w]) == 0) terminal |= ws_single(x);
    });
    ConditionVerdict out;
    ws_for_each(m.R[w], [&](World y) {
      if (!out.holds) return;
      if ((m.S[w][y] & terminal) == 0) {
        out = fail_with({{"w", m.names[w]}, {"y", m.names[y]}},
                        {{"M(w)", ws_names(m.names, terminal)}},
                        "no S_w-successor of y lies in M(w)");
      }
    });
    if (!out.holds) return out;
  }
  return {};
}

// ---- generalised conditions ----

// Does some V in S[s][u] fit inside target?
bool covered(const GeneralModel& m, World s, World u, WorldSet target) {
  for (WorldSet v : m.S[s][u]) {
    if (ws_subset(v, target)) return true;
  }
  return false;
}

ConditionVerdict m_gen(const GeneralModel& m) {
  const int n = m.n();
  for (World w = 0; w < n; ++w) {
    for (World u = 0; u < n; ++u) {
      for (WorldSet v : m.S[w][u]) {
        bool ok = false;
        for (WorldSet v2 : m.S[w][u]) {
          if (ws_subset(v2, v) && ws_subset(r_image(m.R, v2), m.R[u])) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          return fail_with({{"w", m.names[w]}, {"u", m.names[u]}},
                           {{"V", ws_names(m.names, v)}},
                           "no V' <= V with u S_w V' and R[V'] <= R[u]");
        }
      }
    }
  }
  return {};
}

ConditionVerdict km1_gen(const GeneralModel& m) {
  const int n = m.n();
  for (World w = 0; w < n; ++w) {
    for (World u = 0; u < n; ++u) {
      for (WorldSet v : m.S[w][u]) {
        bool ok = false;
        ws_for_each(v, [&](World x) {
          if (!ok && ws_subset(m.R[x], m.R[u])) ok = true;
        });
        if (!ok) {
          return fail_with({{"w", m.names[w]}, {"u", m.names[u]}},
                           {{"V", ws_names(m.names, v)}},
                           "no v in V with R[v] <= R[u]");
        }
      }
    }
  }
  return {};
}

// w R w' R u S_w V  =>  exists V' <= V with u S_w' V'
ConditionVerdict p_gen(const GeneralModel& m) {
  const int n = m.n();
  for (World w = 0; w < n; ++w) {
    ConditionVerdict out;
    ws_for_each(m.R[w], [&](World w2) {
      if (!out.holds) return;
      ws_for_each(m.R[w2], [&](World u) {
        if (!out.holds) return;
        for (WorldSet v : m.S[w][u]) {
          if (!covered(m, w2, u, v)) {
            out = fail_with({{"w", m.names[w]},
                             {"w'", m.names[w2]},
                             {"u", m.names[u]}},
                            {{"V", ws_names(m.names, v)}},
                            "no V' <= V with u S_w' V'");
            return;
          }
        }
      });
    });
    if (!out.holds) return out;
  }
  return {};
}

// w R u R x S_w V  =>  exists V' <= V with u S_w V' and R[V'] <= R[u]
ConditionVerdict m0_gen(const GeneralModel& m) {
  const int n = m.n();
  for (World w = 0; w < n; ++w) {
    ConditionVerdict out;
    ws_for_each(m.R[w], [&](World u) {
      if (!out.holds) return;
      ws_for_each(m.R[u], [&](World x) {
        if (!out.holds) return;
        for (WorldSet v : m.S[w][x]) {
          bool ok = false;
          for (WorldSet v2 : m.S[w][u]) {
            if (ws_subset(v2, v) && ws_subset(r_image(m.R, v2), m.R[u])) {
              ok = true;
              break;
            }
          }
          if (!ok) {
            out = fail_with({{"w", m.names[w]},
                             {"u", m.names[u]},
                             {"x", m.names[x]}},
                            {{"V", ws_names(m.names, v)}},
                            "no V' <= V with u S_w V' and R[V'] <= R[u]");
            return;
          }
        }
      });
    });
    if (!out.holds) return out;
  }
  return {};
}

// w R x R u S_w V and every v in V has R[v] meeting Z  =>  some Z' <= Z
// with u S_x Z'.  Z ranges over all subsets of the world set.
ConditionVerdict p0_gen(const GeneralModel& m, const Limits& limits) {
  const int n = m.n();
  require_subset_budget(n, limits, "P0 condition");
  const WorldSet full = ws_full(n);
  for (World w = 0; w < n; ++w) {
    ConditionVerdict out;
    ws_for_each(m.R[w], [&](World x) {
      if (!out.holds) return;
      ws_for_each(m.R[x], [&](World u) {
        if (!out.holds) return;
        for (WorldSet v : m.S[w][u]) {
          WorldSet zw = 0;
          bool bad = for_each_submask_ascending(full, [&](WorldSet z) {
            bool premise = true;
            ws_for_each(v, [&](World vv) {
              if ((m.R[vv] & z) == 0) premise = false;
            });
            if (!premise) return false;
            if (covered(m, x, u, z)) return false;
            zw = z;
            return true;
          });
          if (bad) {
            out = fail_with({{"w", m.names[w]},
                             {"x", m.names[x]},
                             {"u", m.names[u]}},
                            {{"V", ws_names(m.names, v)},
                             {"Z", ws_names(m.names, zw)}},
                            "every v in V has R[v] meeting Z, but no Z' <= Z "
                            "with u S_x Z'");
            return;
          }
        }
      });
    });
    if (!out.holds) return out;
  }
  return {};
}

// w R x R u S_w V  =>  for every choice set C of (x,u) some U <= V has
// x S_w U and R[U] <= C.  Choice sets: C <= R[x] meeting every S_x-image
// of u.
ConditionVerdict r_gen(const GeneralModel& m, const Limits& limits) {
  const int n = m.n();
  for (World w = 0; w < n; ++w) {
    ConditionVerdict out;
    ws_for_each(m.R[w], [&](World x) {
      if (!out.holds) return;
      require_subset_budget(ws_count(m.R[x]), limits, "R condition");
      ws_for_each(m.R[x], [&](World u) {
        if (!out.holds) return;
        for (WorldSet v : m.S[w][u]) {
          WorldSet cw = 0;
          bool bad = for_each_submask_ascending(m.R[x], [&](WorldSet c) {
            for (WorldSet z : m.S[x][u]) {
              if ((z & c) == 0) return false;  // not a choice set
            }
            for (WorldSet u2 : m.S[w][x]) {
              if (ws_subset(u2, v) && ws_subset(r_image(m.R, u2), c)) {
                return false;
              }
            }
            cw = c;
            return true;
          });
          if (bad) {
            out = fail_with({{"w", m.names[w]},
                             {"x", m.names[x]},
                             {"u", m.names[u]}},
                            {{"V", ws_names(m.names, v)},
                             {"C", ws_names(m.names, cw)}},
                            "C meets every S_x-image of u, but no U <= V "
                            "with x S_w U and R[U] <= C");
            return;
          }
        }
      });
    });
    if (!out.holds) return out;
  }
  return {};
}

// {z : exists Z with z S_w Z and Z <= v}
WorldSet s_preimage(const GeneralModel& m, World w, WorldSet v) {
  WorldSet out = 0;
  const int n = m.n();
  for (World z = 0; z < n; ++z) {
    for (WorldSet img : m.S[w][z]) {
      if (ws_subset(img, v)) {
        out |= ws_single(z);
        break;
      }
    }
  }
  return out;
}

// u S_w V  =>  exists V' <= V with u S_w V' and R[V'] disjoint from the
// S_w-preimage of V.
ConditionVerdict w_gen(const GeneralModel& m) {
  const int n = m.n();
  for (World w = 0; w < n; ++w) {
    for (World u = 0; u < n; ++u) {
      for (WorldSet v : m.S[w][u]) {
        WorldSet pre = s_preimage(m, w, v);
        bool ok = false;
        for (WorldSet v2 : m.S[w][u]) {
          if (ws_subset(v2, v) && (r_image(m.R, v2) & pre) == 0) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          return fail_with({{"w", m.names[w]}, {"u", m.names[u]}},
                           {{"V", ws_names(m.names, v)},
                            {"S_w^-1[V]", ws_names(m.names, pre)}},
                           "every u S_w V' <= V has R[V'] meeting S_w^-1[V]");
        }
      }
    }
  }
  return {};
}

}  // namespace

ConditionVerdict check_not_w(const GeneralModel& m) {
  const int n = m.n();
  for (World w = 0; w < n; ++w) {
    for (World u = 0; u < n; ++u) {
      for (WorldSet v : m.S[w][u]) {
        WorldSet pre = s_preimage(m, w, v);
        bool counter = true;
        for (WorldSet v2 : m.S[w][u]) {
          if (ws_subset(v2, v) && (r_image(m.R, v2) & pre) == 0) {
            counter = false;
            break;
          }
        }
        if (!counter) continue;
        // Refine: U <= V that is still a counterexample, has R[U] disjoint
        // from U, and splits into U0 (cannot return into U) and Ubar
        // (returns into U, and every return meets Ubar).
        WorldSet uw = 0, u0w = 0, ubarw = 0;
        bool refined = for_each_submask_ascending(v, [&](WorldSet cand) {
          if (cand == 0 || !m.s_has(w, u, cand)) return false;
          WorldSet preU = s_preimage(m, w, cand);
          for (WorldSet u2 : m.S[w][u]) {
            if (ws_subset(u2, cand) && (r_image(m.R, u2) & preU) == 0) {
              return false;  // (w,u,cand) is not a counterexample
            }
          }
          if ((r_image(m.R, cand) & cand) != 0) return false;
          WorldSet u0 = 0;
          ws_for_each(cand, [&](World x) {
            if ((m.R[x] & preU) == 0) u0 |= ws_single(x);
          });
          WorldSet ubar = cand & ~u0;
          if (ubar == 0) return false;
          bool fixpoint = true;
          ws_for_each(ubar, [&](World x) {
            if (!fixpoint) return;
            ws_for_each(m.R[x], [&](World z) {
              if (!fixpoint) return;
              for (WorldSet img : m.S[w][z]) {
                if (ws_subset(img, cand) && (img & ubar) == 0) {
                  fixpoint = false;
                  return;
                }
              }
            });
          });
          if (!fixpoint) return false;
          uw = cand;
          u0w = u0;
          ubarw = ubar;
          return true;
        });
        ConditionVerdict out;
        out.holds = true;
        ConditionWitness witness;
        witness.worlds = {{"w", m.names[w]}, {"u", m.names[u]}};
        witness.sets = {{"V", ws_names(m.names, v)},
                        {"S_w^-1[V]", ws_names(m.names, pre)}};
        if (refined) {
          witness.sets.push_back({"U", ws_names(m.names, uw)});
          witness.sets.push_back({"U0", ws_names(m.names, u0w)});
          witness.sets.push_back({"Ubar", ws_names(m.names, ubarw)});
          witness.note = "counterexample to the W condition, with refinement";
        } else {
          witness.note =
              "counterexample to the W condition; no refined subset found";
        }
        out.witness = witness;
        return out;
      }
    }
  }
  ConditionVerdict out;
  out.holds = false;
  return out;
}

ConditionVerdict check_rn_ordinary(const OrdinaryModel& m, int n,
                                   bool printed_base_form) {
  if (n < 0) throw ModelError("Rn index must be nonnegative");
  const int nw = m.n();
  using Pair = std::pair<World, World>;
  for (World x0 = 0; x0 < nw; ++x0) {
    for (World y0 = 0; y0 < nw; ++y0) {
      // Base of the chain relation: pairs (x1, y1).
      std::set<Pair> level;
      for (World x1 = 0; x1 < nw; ++x1) {
        bool head = printed_base_form
                        ? (ws_has(m.R[x1], x1) && ws_has(m.R[x1], y0))
                        : (ws_has(m.R[x1], x0) && ws_has(m.R[x0], y0));
        if (!head) continue;
        ws_for_each(m.S[x1][y0],
                    [&](World y1) { level.insert({x1, y1}); });
      }
      for (int step = 0; step < n; ++step) {
        std::set<Pair> next;
        for (World a = 0; a < nw; ++a) {
          for (const auto& [a2, b2] : level) {
            if (!ws_has(m.R[a], a2)) continue;
            ws_for_each(m.S[a][b2], [&](World b) { next.insert({a, b}); });
          }
        }
        level = std::move(next);
      }
      for (const auto& [a, b] : level) {
        ConditionVerdict out;
        ws_for_each(m.R[b], [&](World z) {
          if (!out.holds) return;
          if (!m.s_has(x0, y0, z)) {
            std::string top = std::to_string(n + 1);
            out = fail_with({{"x" + top, m.names[a]},
                             {"x0", m.names[x0]},
                             {"y0", m.names[y0]},
                             {"y" + top, m.names[b]},
                             {"z", m.names[z]}},
                            {},
                            "chain reaches y" + top + " R z without y0 S_x0 z");
          }
        });
        if (!out.holds) return out;
      }
    }
  }
  return {};
}

ConditionVerdict check_rn_general(const GeneralModel& m, int n,
                                  const Limits& limits) {
  if (n < 0) throw ModelError("Rn index must be nonnegative");
  if (n == 0)
    return check_general(m, ConditionId{ConditionKind::RGen, 0}, limits);
  const int nw = m.n();
  const int sets = n + 3;  // A, B, C, D0..D_{n-1}
  require_subset_budget(nw * sets, limits, "Rn condition");
  const WorldSet full = ws_full(nw);
  const std::int64_t total = std::int64_t{1} << (nw * sets);

  // Chain w R x_{n-1} R ... R x_0 R y R z, iterated lexicographically.
  World cw = 0, cy = 0, cz = 0;
  std::vector<World> xs(static_cast<size_t>(n));
  ConditionVerdict result;

  auto scan_assignments = [&]() -> bool {
    World xtop = xs[static_cast<size_t>(n - 1)];
    for (std::int64_t idx = 0; idx < total; ++idx) {
      auto piece = [&](int i) {
        return static_cast<WorldSet>(idx >> (i * nw)) & full;
      };
      WorldSet a = piece(0), b = piece(1), c = piece(2);
      auto d = [&](int i) { return piece(3 + i); };
      if (!ws_has(d(0), cz)) continue;
      bool premises = true;
      for (WorldSet img : m.S[cy][cz]) {
        if ((img & c) == 0) {
          premises = false;
          break;
        }
      }
      ws_for_each(m.R[cw] & a, [&](World u) {
        if (premises && !covered(m, cw, u, b)) premises = false;
      });
      ws_for_each(m.R[xtop] & d(n - 1), [&](World u) {
        if (premises && !covered(m, xtop, u, a)) premises = false;
      });
      for (int i = 0; premises && i + 1 < n; ++i) {
        World xi = xs[static_cast<size_t>(i)];
        ws_for_each(m.R[xi] & d(i), [&](World u) {
          if (premises && !covered(m, xi, u, d(i + 1))) premises = false;
        });
      }
      if (!premises) continue;
      bool concl = false;
      for (WorldSet img : m.S[cw][xtop]) {
        if (ws_subset(img, b) && ws_subset(r_image(m.R, img), c)) {
          concl = true;
          break;
        }
      }
      if (concl) continue;
      Roles worlds = {{"w", m.names[cw]}};
      for (int i = n - 1; i >= 0; --i) {
        worlds.push_back(
            {"x" + std::to_string(i), m.names[xs[static_cast<size_t>(i)]]});
      }
      worlds.push_back({"y", m.names[cy]});
      worlds.push_back({"z", m.names[cz]});
      Roles setroles = {{"A", ws_names(m.names, a)},
                        {"B", ws_names(m.names, b)},
                        {"C", ws_names(m.names, c)}};
      for (int i = 0; i < n; ++i) {
        setroles.push_back({"D" + std::to_string(i), ws_names(m.names, d(i))});
      }
      result = fail_with(std::move(worlds), std::move(setroles),
                         "premises hold but no V <= B with x" +
                             std::to_string(n - 1) + " S_w V and R[V] <= C");
      return true;
    }
    return false;
  };

  // Places xs[i] below `above`; below xs[0] come y and z.
  std::function<bool(World, int)> extend = [&](World above, int i) -> bool {
    bool hit = false;
    if (i < 0) {
      ws_for_each(m.R[above], [&](World y) {
        if (hit) return;
        cy = y;
        ws_for_each(m.R[y], [&](World z) {
          if (hit) return;
          cz = z;
          if (scan_assignments()) hit = true;
        });
      });
      return hit;
    }
    ws_for_each(m.R[above], [&](World x) {
      if (hit) return;
      xs[static_cast<size_t>(i)] = x;
      if (extend(x, i - 1)) hit = true;
    });
    return hit;
  };

  for (World w = 0; w < nw; ++w) {
    cw = w;
    if (extend(w, n - 1)) return result;
  }
  return {};
}

bool ConditionId::is_general() const {
  switch (kind) {
    case ConditionKind::MOrd:
    case ConditionKind::M0Ord:
    case ConditionKind::WfamOrd:
    case ConditionKind::KW1Ord:
    case ConditionKind::RnOrd:
      return false;
    default:
      return true;
  }
}

std::string ConditionId::token() const {
  switch (kind) {
    case ConditionKind::MOrd: return "Mord";
    case ConditionKind::M0Ord: return "M0ord";
    case ConditionKind::WfamOrd: return "Word";
    case ConditionKind::KW1Ord: return "KW1ord";
    case ConditionKind::RnOrd: return "Rnord:" + std::to_string(n);
    case ConditionKind::MGen: return "Mgen";
    case ConditionKind::KM1Gen: return "KM1gen";
    case ConditionKind::PGen: return "Pgen";
    case ConditionKind::M0Gen: return "M0gen";
    case ConditionKind::P0Gen: return "P0gen";
    case ConditionKind::RGen: return "Rgen";
    case ConditionKind::WGen: return "Wgen";
    case ConditionKind::NotWGen: return "NotW";
    case ConditionKind::RnGen: return "Rngen:" + std::to_string(n);
  }
  return "";
}

std::optional<ConditionId> ConditionId::from_token(const std::string& token) {
  static const std::pair<const char*, ConditionKind> plain[] = {
      {"Mord", ConditionKind::MOrd},   {"M0ord", ConditionKind::M0Ord},
      {"Word", ConditionKind::WfamOrd}, {"KW1ord", ConditionKind::KW1Ord},
      {"Mgen", ConditionKind::MGen},   {"KM1gen", ConditionKind::KM1Gen},
      {"Pgen", ConditionKind::PGen},   {"M0gen", ConditionKind::M0Gen},
      {"P0gen", ConditionKind::P0Gen}, {"Rgen", ConditionKind::RGen},
      {"Wgen", ConditionKind::WGen},   {"NotW", ConditionKind::NotWGen},
  };
  for (const auto& [name, kind] : plain) {
    if (token == name) return ConditionId{kind, 0};
  }
  for (auto [prefix, kind] :
       {std::pair<const char*, ConditionKind>{"Rnord:", ConditionKind::RnOrd},
        std::pair<const char*, ConditionKind>{"Rngen:", ConditionKind::RnGen}}) {
    std::string p(prefix);
    if (token.size() > p.size() && token.compare(0, p.size(), p) == 0) {
      const std::string digits = token.substr(p.size());
      if (!digits.empty() &&
          digits.find_first_not_of("0123456789") == std::string::npos &&
          digits.size() <= 6) {
        return ConditionId{kind, std::stoi(digits)};
      }
    }
  }
  return std::nullopt;
}

ConditionVerdict check_ordinary(const OrdinaryModel& frame,
                                const ConditionId& c) {
  switch (c.kind) {
    case ConditionKind::MOrd: return m_ord(frame);
    case ConditionKind::M0Ord: return m0_ord(frame);
    case ConditionKind::WfamOrd: return wfam_ord(frame);
    case ConditionKind::KW1Ord: return kw1_ord(frame);
    case ConditionKind::RnOrd: return check_rn_ordinary(frame, c.n);
    default:
      throw ModelError("condition " + c.token() +
                       " is not an ordinary-frame condition");
  }
}

ConditionVerdict check_general(const GeneralModel& frame, const ConditionId& c,
                               const Limits& limits) {
  switch (c.kind) {
    case ConditionKind::MGen: return m_gen(frame);
    case ConditionKind::KM1Gen: return km1_gen(frame);
    case ConditionKind::PGen: return p_gen(frame);
    case ConditionKind::M0Gen: return m0_gen(frame);
    case ConditionKind::P0Gen: return p0_gen(frame, limits);
    case ConditionKind::RGen: return r_gen(frame, limits);
    case ConditionKind::WGen: return w_gen(frame);
    case ConditionKind::NotWGen: return check_not_w(frame);
    case ConditionKind::RnGen: return check_rn_general(frame, c.n, limits);
    default:
      throw ModelError("condition " + c.token() +
                       " is not a generalised-frame condition");
  }
}

std::string describe(const ConditionVerdict& v) {
  std::ostringstream out;
  out << (v.holds ? "holds" : "fails");
  if (v.witness) {
    bool first = true;
    for (const auto& [role, value] : v.witness->worlds) {
      out << (first ? ": " : ", ") << role << "=" << value;
      first = false;
    }
    for (const auto& [role, value] : v.witness->sets) {
      out << (first ? ": " : ", ") << role << "=" << value;
      first = false;
    }
    if (!v.witness->note.empty()) out << " (" << v.witness->note << ")";
  }
  return out.str();
}

}  // namespace ilkit
