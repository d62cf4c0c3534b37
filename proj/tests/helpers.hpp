// Shared test utilities: fixture loading, seeded random model generation,
// and a small subprocess runner for the CLI tests.
#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ilkit/model.hpp"
#include "ilkit/model_io.hpp"
#include "ilkit/transform.hpp"

namespace helpers {

using namespace ilkit;

inline std::string fixture(const std::string& name) {
#ifdef FIXTURES_DIR
  return std::string(FIXTURES_DIR) + "/" + name;
#else
  return "tests/fixtures/" + name;
#endif
}

inline GeneralModel load_general(const std::string& name) {
  LoadedModel lm = load_model_file(fixture(name));
  if (lm.kind != ModelKind::General) throw std::runtime_error(name + ": expected a gvs fixture");
  return lm.gen;
}

inline OrdinaryModel load_ordinary(const std::string& name) {
  LoadedModel lm = load_model_file(fixture(name));
  if (lm.kind != ModelKind::Ordinary)
    throw std::runtime_error(name + ": expected an ordinary fixture");
  return lm.ord;
}

// R is built on the index order (always acyclic), then closed transitively.
// S_w starts from the sets required by the frame conditions and gains random
// extra pairs, then is closed transitively. Legal by construction.
inline OrdinaryModel random_ordinary(std::mt19937& rng, int n,
                                     const std::vector<std::string>& atoms) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  OrdinaryModel m;
  for (int i = 0; i < n; ++i) m.names.push_back("w" + std::to_string(i));
  m.R.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < 0.45) m.R[i] |= ws_single(j);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (ws_has(m.R[i], k)) m.R[i] |= m.R[k];

  m.S.assign(n, std::vector<WorldSet>(n, 0));
  for (World w = 0; w < n; ++w) {
    ws_for_each(m.R[w], [&](World u) {
      m.S[w][u] |= ws_single(u);
      m.S[w][u] |= m.R[u] & m.R[w];
    });
    ws_for_each(m.R[w], [&](World u) {
      ws_for_each(m.R[w], [&](World v) {
        if (coin(rng) < 0.25) m.S[w][u] |= ws_single(v);
      });
    });
    for (int round = 0; round < n; ++round)
      for (World u = 0; u < n; ++u)
        ws_for_each(m.S[w][u], [&](World v) { m.S[w][u] |= m.S[w][v]; });
  }

  for (const std::string& a : atoms) {
    WorldSet s = 0;
    for (int i = 0; i < n; ++i)
      if (coin(rng) < 0.5) s |= ws_single(i);
    m.valuation[a] = s;
  }
  return m;
}

// Singleton lift of a random ordinary model, with extra random image sets
// kept only when the result still validates.
inline GeneralModel random_general(std::mt19937& rng, int n,
                                   const std::vector<std::string>& atoms,
                                   int qt_variant) {
  OrdinaryModel base = random_ordinary(rng, n, atoms);
  GeneralModel m = lift_singleton(base, qt_variant == 2 ? 6 : qt_variant);
  std::uniform_int_distribution<int> pick_world(0, n - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < 3 * n; ++attempt) {
    World w = pick_world(rng);
    if (!m.R[w]) continue;
    GeneralModel trial = m;
    World u = pick_world(rng);
    if (!ws_has(m.R[w], u)) continue;
    WorldSet img = 0;
    ws_for_each(m.R[w], [&](World v) {
      if (coin(rng) < 0.5) img |= ws_single(v);
    });
    if (!img) continue;
    trial.s_add(w, u, img);
    if (validate_general(trial).ok) m = std::move(trial);
  }
  if (qt_variant == 2) m = monotone_closure(m);
  return m;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'')
      q += "'\\''";
    else
      q += c;
  }
  return q + "'";
}

// Runs the installed CLI with the given (already quoted) argument string,
// capturing interleaved stdout/stderr. env_prefix may carry VAR=value pairs.
inline RunResult run_cli_env(const std::string& env_prefix, const std::string& args) {
#ifndef ILKIT_BIN
  (void)env_prefix;
  (void)args;
  throw std::runtime_error("ILKIT_BIN is not defined");
#else
  std::string cmd = env_prefix.empty() ? "" : "env " + env_prefix + " ";
  cmd += shell_quote(ILKIT_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = status >= 0 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
#endif
}

inline RunResult run_cli(const std::string& args) { return run_cli_env("", args); }

// Per-process scratch directory for files the tests write.
inline std::filesystem::path scratch_dir() {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("ilkit-tests-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

inline std::string write_scratch(const std::string& name, const std::string& text) {
  auto path = scratch_dir() / name;
  std::ofstream out(path);
  out << text;
  out.close();
  return path.string();
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace helpers
