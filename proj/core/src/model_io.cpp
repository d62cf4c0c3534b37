#include "ilkit/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ilkit {

namespace {

using nlohmann::json;

bool valid_atom_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw ModelError("unknown key \"" + it.key() + "\" in " + where);
}

World lookup(const std::map<std::string, World>& index, const json& name,
             const std::string& where) {
  if (!name.is_string()) throw ModelError(where + ": world name must be a string");
  auto it = index.find(name.get<std::string>());
  if (it == index.end())
    throw ModelError(where + ": unknown world \"" + name.get<std::string>() + "\"");
  return it->second;
}

}  // namespace

LoadedModel parse_model_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ModelError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("model file must be a JSON object");

  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw ModelError("missing \"kind\" (\"gvs\" or \"ordinary\")");
  std::string kind = doc["kind"].get<std::string>();
  bool gvs = kind == "gvs";
  if (!gvs && kind != "ordinary")
    throw ModelError("\"kind\" must be \"gvs\" or \"ordinary\"");

  std::set<std::string> allowed = {"kind", "worlds", "R", "S", "valuation"};
  if (gvs) allowed.insert("qt");
  reject_unknown_keys(doc, allowed, "model");

  if (!doc.contains("worlds") || !doc["worlds"].is_array() || doc["worlds"].empty())
    throw ModelError("\"worlds\" must be a nonempty array");
  std::vector<std::string> names;
  for (const auto& w : doc["worlds"]) {
    if (!w.is_string() || w.get<std::string>().empty())
      throw ModelError("world names must be nonempty strings");
    names.push_back(w.get<std::string>());
  }
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw ModelError("duplicate world name");
  if (static_cast<int>(names.size()) > kMaxWorlds)
    throw ModelError("at most 64 worlds are supported");
  int n = static_cast<int>(names.size());

  std::map<std::string, World> index;
  for (World i = 0; i < n; ++i) index[names[i]] = i;

  std::vector<WorldSet> R(n, 0);
  if (doc.contains("R")) {
    if (!doc["R"].is_array()) throw ModelError("\"R\" must be an array of pairs");
    for (const auto& pair : doc["R"]) {
      if (!pair.is_array() || pair.size() != 2)
        throw ModelError("\"R\" entries must be [from, to] pairs");
      World a = lookup(index, pair[0], "R");
      World b = lookup(index, pair[1], "R");
      R[a] |= ws_single(b);
    }
  }

  std::map<std::string, WorldSet> valuation;
  if (doc.contains("valuation")) {
    if (!doc["valuation"].is_object()) throw ModelError("\"valuation\" must be an object");
    for (auto it = doc["valuation"].begin(); it != doc["valuation"].end(); ++it) {
      if (!valid_atom_name(it.key()))
        throw ModelError("valuation key \"" + it.key() + "\" is not an atom name");
      if (!it.value().is_array())
        throw ModelError("valuation of \"" + it.key() + "\" must be a world array");
      WorldSet s = 0;
      for (const auto& w : it.value()) s |= ws_single(lookup(index, w, "valuation"));
      valuation[it.key()] = s;
    }
  }

  LoadedModel out;
  if (gvs) {
    if (!doc.contains("qt") || !doc["qt"].is_number_integer())
      throw ModelError("gvs model requires integer \"qt\" in 1..8");
    int qt = doc["qt"].get<int>();
    if (qt < 1 || qt > 8) throw ModelError("\"qt\" must be in 1..8");

    GeneralModel m;
    m.names = names;
    m.R = R;
    m.S.assign(n, std::vector<std::vector<WorldSet>>(n));
    m.valuation = valuation;
    m.qt_variant = qt;
    if (doc.contains("S")) {
      if (!doc["S"].is_array()) throw ModelError("\"S\" must be an array");
      for (const auto& e : doc["S"]) {
        if (!e.is_object()) throw ModelError("\"S\" entries must be objects");
        reject_unknown_keys(e, {"w", "from", "to"}, "S entry");
        if (!e.contains("w") || !e.contains("from") || !e.contains("to"))
          throw ModelError("S entry needs \"w\", \"from\", \"to\"");
        World w = lookup(index, e["w"], "S");
        World u = lookup(index, e["from"], "S");
        if (!e["to"].is_array())
          throw ModelError("gvs S entry \"to\" must be an array of worlds");
        WorldSet v = 0;
        for (const auto& t : e["to"]) v |= ws_single(lookup(index, t, "S"));
        m.s_add(w, u, v);
      }
    }
    out.kind = ModelKind::General;
    out.gen = std::move(m);
  } else {
    OrdinaryModel m;
    m.names = names;
    m.R = R;
    m.S.assign(n, std::vector<WorldSet>(n, 0));
    m.valuation = valuation;
    if (doc.contains("S")) {
      if (!doc["S"].is_array()) throw ModelError("\"S\" must be an array");
      for (const auto& e : doc["S"]) {
        if (!e.is_object()) throw ModelError("\"S\" entries must be objects");
        reject_unknown_keys(e, {"w", "from", "to"}, "S entry");
        if (!e.contains("w") || !e.contains("from") || !e.contains("to"))
          throw ModelError("S entry needs \"w\", \"from\", \"to\"");
        World w = lookup(index, e["w"], "S");
        World u = lookup(index, e["from"], "S");
        if (!e["to"].is_string())
          throw ModelError("ordinary S entry \"to\" must be a single world name");
        World v = lookup(index, e["to"], "S");
        m.S[w][u] |= ws_single(v);
      }
    }
    out.kind = ModelKind::Ordinary;
    out.ord = std::move(m);
  }
  return out;
}

LoadedModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_json(buf.str());
}

namespace {

json names_array(const std::vector<std::string>& names, WorldSet s) {
  json arr = json::array();
  ws_for_each(s, [&](World w) { arr.push_back(names[w]); });
  return arr;
}

json common_to_json(const std::vector<std::string>& names, const std::vector<WorldSet>& R,
                    const std::map<std::string, WorldSet>& valuation) {
  json doc;
  doc["worlds"] = names;
  json r = json::array();
  for (World w = 0; w < static_cast<int>(names.size()); ++w)
    ws_for_each(R[w], [&](World u) { r.push_back(json::array({names[w], names[u]})); });
  doc["R"] = r;
  json val = json::object();
  for (const auto& [atom, s] : valuation) val[atom] = names_array(names, s);
  doc["valuation"] = val;
  return doc;
}

}  // namespace

std::string model_to_json(const OrdinaryModel& m) {
  json doc = common_to_json(m.names, m.R, m.valuation);
  doc["kind"] = "ordinary";
  json s = json::array();
  for (World w = 0; w < m.n(); ++w)
    for (World u = 0; u < m.n(); ++u)
      ws_for_each(m.S[w][u], [&](World v) {
        s.push_back(json{{"w", m.names[w]}, {"from", m.names[u]}, {"to", m.names[v]}});
      });
  doc["S"] = s;
  return doc.dump(2);
}

std::string model_to_json(const GeneralModel& m) {
  json doc = common_to_json(m.names, m.R, m.valuation);
  doc["kind"] = "gvs";
  doc["qt"] = m.qt_variant;
  json s = json::array();
  for (World w = 0; w < m.n(); ++w)
    for (World u = 0; u < m.n(); ++u)
      for (WorldSet v : m.S[w][u])
        s.push_back(json{{"w", m.names[w]}, {"from", m.names[u]}, {"to", names_array(m.names, v)}});
  doc["S"] = s;
  return doc.dump(2);
}

}  // namespace ilkit
