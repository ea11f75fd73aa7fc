// Microbenchmarks for the performance-critical kernels: exact clique search,
// graph powers, seed expansion and decision-mode verification.

#include <random>

#include <benchmark/benchmark.h>

#include "ramsey/abbott.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/sample_space.hpp"
#include "ramsey/search.hpp"

namespace {

using namespace ramsey;

Graph random_graph(int n, std::uint64_t seed, double p = 0.5) {
  std::mt19937_64 rng(seed);
  auto threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() < threshold) g.add_edge(i, j);
  return g;
}

void BM_MaxClique(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    CliqueWitness w = max_clique(g);
    benchmark::DoNotOptimize(w.size);
  }
}
BENCHMARK(BM_MaxClique)->Arg(32)->Arg(64)->Arg(96);

void BM_DecisionVerify(benchmark::State& state) {
  Graph g = random_graph(16, 7);
  for (auto _ : state) {
    VerificationReport r = verify_bounds(g, 12, VerifyMode::decision);
    benchmark::DoNotOptimize(r.passed);
  }
}
BENCHMARK(BM_DecisionVerify);

void BM_AbbottPower(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    Graph h = abbott_power(g, 2);
    benchmark::DoNotOptimize(h.order());
  }
}
BENCHMARK(BM_AbbottPower)->Arg(8)->Arg(16)->Arg(32);

void BM_SampleExpansion(benchmark::State& state) {
  SampleSpaceSpec spec = relaxed_spec(16, static_cast<int>(state.range(0)));
  Seed seed = Seed::from_value(spec.seed_bits, 0x2001);
  for (auto _ : state) {
    Bits bits = sample_string(spec, seed);
    benchmark::DoNotOptimize(bits.count());
  }
}
BENCHMARK(BM_SampleExpansion)->Arg(12)->Arg(64)->Arg(127);

void BM_SeedThroughput(benchmark::State& state) {
  SampleSpaceSpec spec = relaxed_spec(16, 12);
  for (auto _ : state) {
    SeedEnumerator en(spec, 64);
    std::uint64_t sum = 0;
    while (auto s = en.next()) sum += s->words()[0];
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_SeedThroughput);

}  // namespace

BENCHMARK_MAIN();
