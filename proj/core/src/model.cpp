#include "ilkit/model.hpp"

#include <algorithm>
#include <sstream>

namespace ilkit {

std::optional<World> OrdinaryModel::world_index(const std::string& name) const {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) return std::nullopt;
  return static_cast<World>(it - names.begin());
}

std::optional<World> GeneralModel::world_index(const std::string& name) const {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) return std::nullopt;
  return static_cast<World>(it - names.begin());
}

bool GeneralModel::s_has(World w, World u, WorldSet v) const {
  const auto& vs = S[w][u];
  return std::binary_search(vs.begin(), vs.end(), v);
}

void GeneralModel::s_add(World w, World u, WorldSet v) {
  auto& vs = S[w][u];
  auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v) vs.insert(it, v);
}

std::string ws_names(const std::vector<std::string>& names, WorldSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  ws_for_each(s, [&](World w) {
    if (!first) out << ',';
    first = false;
    out << names[w];
  });
  out << '}';
  return out.str();
}

namespace {

constexpr auto set_names = ws_names;

void check_r(const std::vector<std::string>& names, const std::vector<WorldSet>& R,
             ValidationReport& rep) {
  int n = static_cast<int>(names.size());
  for (World w = 0; w < n; ++w) {
    if (ws_has(R[w], w)) {
      rep.violations.push_back({"R-irreflexivity", names[w] + " R " + names[w]});
      break;
    }
  }
  for (World w = 0; w < n; ++w) {
    bool done = false;
    ws_for_each(R[w], [&](World u) {
      if (done) return;
      if (!ws_subset(R[u], R[w])) {
        World v = std::countr_zero(R[u] & ~R[w]);
        rep.violations.push_back({"R-transitivity", names[w] + " R " + names[u] + " R " +
                                                        names[v] + " but not " + names[w] +
                                                        " R " + names[v]});
        done = true;
      }
    });
    if (done) break;
  }
  // cycle search independent of the transitivity verdict
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<World> stack, path;
  for (World s = 0; s < n; ++s) {
    if (state[s]) continue;
    // iterative DFS with explicit path
    std::vector<std::pair<World, WorldSet>> frames{{s, R[s]}};
    state[s] = 1;
    path = {s};
    while (!frames.empty()) {
      auto& [w, rest] = frames.back();
      if (!rest) {
        state[w] = 2;
        frames.pop_back();
        path.pop_back();
        continue;
      }
      World u = std::countr_zero(rest);
      rest &= rest - 1;
      if (state[u] == 1) {
        std::ostringstream cyc;
        auto it = std::find(path.begin(), path.end(), u);
        for (; it != path.end(); ++it) cyc << names[*it] << " R ";
        cyc << names[u];
        rep.violations.push_back({"R-acyclicity", cyc.str()});
        return;
      }
      if (state[u] == 0) {
        state[u] = 1;
        frames.push_back({u, R[u]});
        path.push_back(u);
      }
    }
  }
}

}  // namespace

ValidationReport validate_ordinary(const OrdinaryModel& m) {
  ValidationReport rep;
  int n = m.n();
  if (n == 0 || n > kMaxWorlds) throw ModelError("world count must be in 1..64");
  if (static_cast<int>(m.R.size()) != n || static_cast<int>(m.S.size()) != n)
    throw ModelError("malformed model: R/S size mismatch");
  for (const auto& row : m.S)
    if (static_cast<int>(row.size()) != n) throw ModelError("malformed model: S row size");

  check_r(m.names, m.R, rep);

  for (World w = 0; w < n && rep.violations.empty(); ++w) {
    for (World u = 0; u < n; ++u) {
      WorldSet img = m.S[w][u];
      if (img && !ws_has(m.R[w], u)) {
        rep.violations.push_back({"S-domain", m.names[u] + " S_" + m.names[w] +
                                                  " ... but not " + m.names[w] + " R " +
                                                  m.names[u]});
        break;
      }
      if (!ws_subset(img, m.R[w])) {
        World v = std::countr_zero(img & ~m.R[w]);
        rep.violations.push_back({"S-range", m.names[u] + " S_" + m.names[w] + " " +
                                                 m.names[v] + " but not " + m.names[w] +
                                                 " R " + m.names[v]});
        break;
      }
    }
  }
  for (World w = 0; w < n && rep.violations.empty(); ++w) {
    ws_for_each(m.R[w], [&](World u) {
      if (!m.s_has(w, u, u) && rep.violations.empty())
        rep.violations.push_back({"S-reflexivity", m.names[u] + " S_" + m.names[w] + " " +
                                                       m.names[u] + " missing"});
    });
  }
  for (World w = 0; w < n && rep.violations.empty(); ++w) {
    for (World u = 0; u < n && rep.violations.empty(); ++u) {
      ws_for_each(m.S[w][u], [&](World v) {
        if (!ws_subset(m.S[w][v], m.S[w][u]) && rep.violations.empty()) {
          World z = std::countr_zero(m.S[w][v] & ~m.S[w][u]);
          rep.violations.push_back({"S-transitivity",
                                    m.names[u] + " S_" + m.names[w] + " " + m.names[v] +
                                        " S_" + m.names[w] + " " + m.names[z] +
                                        " but not " + m.names[u] + " S_" + m.names[w] +
                                        " " + m.names[z]});
        }
      });
    }
  }
  for (World w = 0; w < n && rep.violations.empty(); ++w) {
    ws_for_each(m.R[w], [&](World u) {
      ws_for_each(m.R[w] & m.R[u], [&](World v) {
        if (!m.s_has(w, u, v) && rep.violations.empty())
          rep.violations.push_back({"S-contains-R", m.names[u] + " R " + m.names[v] +
                                                        " inside R[" + m.names[w] +
                                                        "] but not " + m.names[u] + " S_" +
                                                        m.names[w] + " " + m.names[v]});
      });
    });
  }

  rep.ok = rep.violations.empty();
  return rep;
}

bool quasi_transitive(const GeneralModel& m, int variant, std::string* witness) {
  int n = m.n();
  auto fail = [&](World w, World u, WorldSet y, const std::string& detail) {
    if (witness)
      *witness = "x=" + m.names[w] + " u=" + m.names[u] + " Y=" + set_names(m.names, y) +
                 (detail.empty() ? "" : " " + detail);
    return false;
  };
  // exists Z with u S_w Z and Z subset of U
  auto has_sub_image = [&](World w, World u, WorldSet bound) {
    for (WorldSet v : m.S[w][u])
      if (ws_subset(v, bound)) return true;
    return false;
  };

  for (World w = 0; w < n; ++w) {
    for (World u = 0; u < n; ++u) {
      for (WorldSet y : m.S[w][u]) {
        switch (variant) {
          case 1:
          case 2: {
            // one image Y_y chosen for each y in Y; quantify over all choices
            std::vector<World> ys;
            ws_for_each(y, [&](World v) { ys.push_back(v); });
            bool vacuous = false;
            for (World v : ys)
              if (m.S[w][v].empty()) vacuous = true;
            if (vacuous) break;
            std::vector<size_t> idx(ys.size(), 0);
            while (true) {
              WorldSet uni = 0;
              for (size_t i = 0; i < ys.size(); ++i) uni |= m.S[w][ys[i]][idx[i]];
              bool ok = variant == 2 ? m.s_has(w, u, uni) : has_sub_image(w, u, uni);
              if (!ok)
                return fail(w, u, y, "union=" + set_names(m.names, uni));
              size_t i = 0;
              for (; i < ys.size(); ++i) {
                if (++idx[i] < m.S[w][ys[i]].size()) break;
                idx[i] = 0;
              }
              if (i == ys.size()) break;
            }
            break;
          }
          case 3:
          case 4: {
            bool some = false;
            ws_for_each(y, [&](World v) {
              if (some) return;
              bool all = true;
              for (WorldSet yp : m.S[w][v]) {
                bool ok = variant == 4 ? m.s_has(w, u, yp) : has_sub_image(w, u, yp);
                if (!ok) { all = false; break; }
              }
              if (all) some = true;
            });
            if (!some) return fail(w, u, y, "");
            break;
          }
          case 5:
          case 6:
          case 7:
          case 8: {
            bool strict = variant == 7 || variant == 8;     // skip images with y inside
            bool exact = variant == 6 || variant == 8;      // image itself must be in S
            World bad_y = -1;
            WorldSet bad_img = 0;
            ws_for_each(y, [&](World v) {
              if (bad_y >= 0) return;
              for (WorldSet yp : m.S[w][v]) {
                if (strict && ws_has(yp, v)) continue;
                bool ok = exact ? m.s_has(w, u, yp) : has_sub_image(w, u, yp);
                if (!ok) {
                  bad_y = v;
                  bad_img = yp;
                  return;
                }
              }
            });
            if (bad_y >= 0)
              return fail(w, u, y, "y=" + m.names[bad_y] +
                                       " Y'=" + set_names(m.names, bad_img));
            break;
          }
          default:
            throw ModelError("qt_variant must be in 1..8");
        }
      }
    }
  }
  return true;
}

ValidationReport validate_general(const GeneralModel& m) {
  ValidationReport rep;
  int n = m.n();
  if (n == 0 || n > kMaxWorlds) throw ModelError("world count must be in 1..64");
  if (static_cast<int>(m.R.size()) != n || static_cast<int>(m.S.size()) != n)
    throw ModelError("malformed model: R/S size mismatch");
  for (const auto& row : m.S)
    if (static_cast<int>(row.size()) != n) throw ModelError("malformed model: S row size");
  if (m.qt_variant < 1 || m.qt_variant > 8) throw ModelError("qt_variant must be in 1..8");

  check_r(m.names, m.R, rep);

  // (a) S_w inside R[w] x (nonempty subsets of R[w])
  for (World w = 0; w < n && rep.violations.empty(); ++w) {
    for (World u = 0; u < n && rep.violations.empty(); ++u) {
      for (WorldSet v : m.S[w][u]) {
        if (!ws_has(m.R[w], u)) {
          rep.violations.push_back({"a", m.names[u] + " S_" + m.names[w] + " " +
                                             set_names(m.names, v) + " but not " +
                                             m.names[w] + " R " + m.names[u]});
          break;
        }
        if (!v) {
          rep.violations.push_back({"a", m.names[u] + " S_" + m.names[w] + " {} (empty image)"});
          break;
        }
        if (!ws_subset(v, m.R[w])) {
          rep.violations.push_back({"a", m.names[u] + " S_" + m.names[w] + " " +
                                             set_names(m.names, v) + " not inside R[" +
                                             m.names[w] + "]"});
          break;
        }
      }
    }
  }

  // (b) quasi-reflexivity
  for (World w = 0; w < n && rep.violations.empty(); ++w) {
    ws_for_each(m.R[w], [&](World u) {
      if (!m.s_has(w, u, ws_single(u)) && rep.violations.empty())
        rep.violations.push_back({"b", m.names[u] + " S_" + m.names[w] + " {" +
                                           m.names[u] + "} missing"});
    });
  }

  // (d) wRuRv forces u S_w {v}
  for (World w = 0; w < n && rep.violations.empty(); ++w) {
    ws_for_each(m.R[w], [&](World u) {
      ws_for_each(m.R[u] & m.R[w], [&](World v) {
        if (!m.s_has(w, u, ws_single(v)) && rep.violations.empty())
          rep.violations.push_back({"d", m.names[w] + " R " + m.names[u] + " R " +
                                             m.names[v] + " but " + m.names[u] + " S_" +
                                             m.names[w] + " {" + m.names[v] + "} missing"});
      });
      // if transitivity failed some v may sit outside R[w]; condition a
      // already reported that situation
    });
  }

  // (c) quasi-transitivity for the declared variant
  if (rep.violations.empty()) {
    std::string wit;
    if (!quasi_transitive(m, m.qt_variant, &wit))
      rep.violations.push_back({"c-" + std::to_string(m.qt_variant), wit});
  }

  // (e) monotonicity, part of the variant-2 package only
  if (m.qt_variant == 2 && rep.violations.empty()) {
    for (World w = 0; w < n && rep.violations.empty(); ++w) {
      for (World u = 0; u < n && rep.violations.empty(); ++u) {
        for (WorldSet v : m.S[w][u]) {
          // enumerate supersets of v inside R[w]
          WorldSet extra = m.R[w] & ~v;
          for (WorldSet sub = extra;; sub = (sub - 1) & extra) {
            if (sub && !m.s_has(w, u, v | sub)) {
              rep.violations.push_back({"e", m.names[u] + " S_" + m.names[w] + " " +
                                                 set_names(m.names, v) + " but not " +
                                                 set_names(m.names, v | sub)});
              break;
            }
            if (!sub) break;
          }
          if (!rep.violations.empty()) break;
        }
      }
    }
  }

  rep.ok = rep.violations.empty();
  return rep;
}

std::string describe(const ValidationReport& r) {
  if (r.ok) return "ok";
  std::ostringstream out;
  for (const auto& v : r.violations) {
    out << v.condition << ": " << v.witness << '\n';
  }
  return out.str();
}

}  // namespace ilkit
