#include <benchmark/benchmark.h>

#include <random>

#include "penergy/canonical.hpp"
#include "penergy/enumerate.hpp"
#include "penergy/graph.hpp"
#include "penergy/pinching.hpp"
#include "penergy/spectra.hpp"

using namespace penergy;

namespace {

SymmetricMatrix random_symmetric(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(-1, 1);
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, u(rng));
  return m;
}

void BM_Eigenvalues(benchmark::State& state) {
  auto m = random_symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(m));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(4)->Range(8, 512);

void BM_Eigendecompose(benchmark::State& state) {
  auto m = random_symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigendecompose(m));
}
BENCHMARK(BM_Eigendecompose)->RangeMultiplier(4)->Range(8, 512);

void BM_ExactInertia(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::bernoulli_distribution e(0.5);
  Graph g(static_cast<int>(state.range(0)));
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (e(rng)) g.add_edge(i, j);
  auto a = adjacency(g);
  for (auto _ : state) benchmark::DoNotOptimize(exact_inertia(a));
}
BENCHMARK(BM_ExactInertia)->Arg(8)->Arg(16)->Arg(32);

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution e(0.5);
  Graph g(static_cast<int>(state.range(0)));
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (e(rng)) g.add_edge(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12)->Arg(16);

void BM_CanonicalFormCycle(benchmark::State& state) {
  auto g = family(Family::cycle, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormCycle)->Arg(8)->Arg(16);

void BM_EnumerateConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected(n, [](const Graph&) {}));
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_SuperadditivityGap(benchmark::State& state) {
  auto m = random_symmetric(12);
  BlockPartition part({4, 5, 3});
  for (auto _ : state) {
    auto spectra = block_spectra(m, part);
    benchmark::DoNotOptimize(superadditivity_gap(spectra, 4, default_tolerance(12)));
  }
}
BENCHMARK(BM_SuperadditivityGap);

}  // namespace

BENCHMARK_MAIN();
