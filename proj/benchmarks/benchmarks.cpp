#include <benchmark/benchmark.h>

#include <random>

#include "ilkit/bisim.hpp"
#include "ilkit/enumerate.hpp"
#include "ilkit/filtration.hpp"
#include "ilkit/formula.hpp"
#include "ilkit/model.hpp"
#include "ilkit/model_io.hpp"
#include "ilkit/schemes.hpp"
#include "ilkit/semantics.hpp"
#include "ilkit/transform.hpp"

using namespace ilkit;

namespace {

GeneralModel fixture_model() {
  static GeneralModel m = [] {
    LoadedModel lm = load_model_file(std::string(FIXTURES_DIR) + "/tworoles.json");
    return lm.gen;
  }();
  return m;
}

// Deterministic mid-size model: a transitively closed order with singleton
// lifts, wide enough to make the evaluators work.
GeneralModel wide_model(int n) {
  OrdinaryModel m;
  for (int i = 0; i < n; ++i) m.names.push_back("w" + std::to_string(i));
  m.R.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((i + j) % 3 != 0) m.R[i] |= ws_single(j);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (ws_has(m.R[i], k)) m.R[i] |= m.R[k];
  m.S.assign(n, std::vector<WorldSet>(n, 0));
  for (World w = 0; w < n; ++w)
    ws_for_each(m.R[w], [&](World u) {
      m.S[w][u] |= ws_single(u) | (m.R[u] & m.R[w]);
    });
  WorldSet odd = 0;
  for (int i = 1; i < n; i += 2) odd |= ws_single(i);
  m.valuation["p"] = odd;
  m.valuation["q"] = ~odd & ws_full(n);
  return lift_singleton(m);
}

void bm_truth_set(benchmark::State& state) {
  GeneralModel m = wide_model(static_cast<int>(state.range(0)));
  Fml f = parse("(p |> q) -> ([](p -> <>q) /\\ (q |> p \\/ q))");
  for (auto _ : state) benchmark::DoNotOptimize(truth_set(m, f));
}

void bm_frame_validity(benchmark::State& state) {
  GeneralModel m = fixture_model();
  Fml j2 = *scheme_by_id("J2");
  for (auto _ : state) benchmark::DoNotOptimize(frame_valid_scheme(m, j2).valid);
}

void bm_enumerate_frames(benchmark::State& state) {
  for (auto _ : state) {
    long count = 0;
    enumerate_general_frames(static_cast<int>(state.range(0)), 2,
                             [&](const GeneralModel&) {
                               ++count;
                               return true;
                             });
    benchmark::DoNotOptimize(count);
  }
}

void bm_largest_bisimulation(benchmark::State& state) {
  GeneralModel a = wide_model(static_cast<int>(state.range(0)));
  GeneralModel b = wide_model(static_cast<int>(state.range(0)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(largest_bisimulation(a, b));
}

void bm_filtration(benchmark::State& state) {
  GeneralModel m = wide_model(static_cast<int>(state.range(0)));
  AdequateSet gamma = adequate_set(close_seed({parse("p |> q")}));
  for (auto _ : state) benchmark::DoNotOptimize(filtrate(m, gamma).model.n());
}

void bm_unravel(benchmark::State& state) {
  GeneralModel m = wide_model(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(unravel(m).model.n());
}

}  // namespace

BENCHMARK(bm_truth_set)->Arg(8)->Arg(16);
BENCHMARK(bm_frame_validity);
BENCHMARK(bm_enumerate_frames)->Arg(2)->Arg(3);
BENCHMARK(bm_largest_bisimulation)->Arg(6);
BENCHMARK(bm_filtration)->Arg(6);
BENCHMARK(bm_unravel)->Arg(8);
