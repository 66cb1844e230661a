#include <benchmark/benchmark.h>

#include <random>

#include "doxepi/doxepi.hpp"

using namespace doxepi;

namespace {

Relation random_relation(std::size_t n, std::uint64_t seed, unsigned density) {
  std::mt19937_64 rng(seed);
  Relation r(StateSpace::numbered(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (rng() % density == 0) r.insert(s, t);
  return r;
}

FunctionPair random_pair(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto space = StateSpace::numbered(n);
  std::vector<std::size_t> f(n);
  for (auto& v : f) v = rng() % n;
  StateFunction vis = StateFunction::total(space, f);
  const StateSet image = vis.image();
  const std::size_t anchor = *image.first();
  std::vector<std::size_t> g(n, StateFunction::kUndefined);
  image.for_each([&](std::size_t v) { g[v] = rng() % 3 == 0 ? anchor : v; });
  return validate_pair(std::move(vis), StateFunction(space, image, g)).value();
}

void BM_TransitiveClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Relation r = random_relation(n, 1, static_cast<unsigned>(n / 2 + 1));
  for (auto _ : state) benchmark::DoNotOptimize(closure(r, ClosureKind::kTransitive));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TransitiveClosure)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_Doxastic(benchmark::State& state) {
  const FunctionPair p = random_pair(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(doxastic(p));
}
BENCHMARK(BM_Doxastic)->RangeMultiplier(4)->Range(8, 512);

void BM_Epistemic(benchmark::State& state) {
  const FunctionPair p = random_pair(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(epistemic(p));
}
BENCHMARK(BM_Epistemic)->RangeMultiplier(4)->Range(8, 512);

void BM_FromKd45(benchmark::State& state) {
  const Relation d = doxastic(random_pair(static_cast<std::size_t>(state.range(0)), 4));
  for (auto _ : state) benchmark::DoNotOptimize(from_kd45(d));
}
BENCHMARK(BM_FromKd45)->RangeMultiplier(4)->Range(8, 512);

void BM_TraceCorrespondence(benchmark::State& state) {
  const TraceSpace ts = TraceSpace::numbered(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_indist_correspondence(ts, "1"));
    benchmark::DoNotOptimize(verify_pdl_correspondence(ts, "1"));
  }
}
BENCHMARK(BM_TraceCorrespondence)->DenseRange(2, 5);

void BM_LawSuite(benchmark::State& state) {
  const Model m = load_model(R"({"states": ["w0", "w1", "w2", "w3", "w4"], "types": {"V": ["w0", "w2", "w4"]},
      "functions": {
        "see": {"domain": "S", "codomain": "V", "map": {"w0": "w0", "w1": "w0", "w2": "w2", "w3": "w2", "w4": "w4"}},
        "tilt": {"kind": "G", "domain": "V", "codomain": "V", "map": {"w0": "w0", "w2": "w0", "w4": "w4"}}},
      "belief_labels": {"a": ["see", "tilt"], "b": ["id_S", "id_S"]},
      "knowledge_labels": {"a": ["see", "tilt"], "b": ["id_S", "id_S"]},
      "valuation": {"p": ["w0", "w1"], "q": ["w1", "w3"], "r": ["w4"]}})")
                      .value();
  LawSuiteOptions o;
  o.depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(law_suite(m, o));
}
BENCHMARK(BM_LawSuite)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
