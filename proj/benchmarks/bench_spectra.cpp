#include <benchmark/benchmark.h>

#include <random>

#include "dspec/corpus.hpp"
#include "dspec/random_digraph.hpp"
#include "dspec/spectra.hpp"
#include "dspec/verifier.hpp"

using namespace dspec;

static void BM_CharPolyLineAdjacency(benchmark::State& state) {
  Digraph d = corpus::load("d1_c");
  auto m = line_adjacency_matrix(d);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPolyLineAdjacency);

static void BM_SpectrumRandom(benchmark::State& state) {
  std::mt19937_64 rng(1);
  RandomDigraphOptions o;
  o.min_vertices = o.max_vertices = static_cast<std::size_t>(state.range(0));
  o.max_edges = 2 * o.max_vertices;
  Digraph d = random_digraph(rng, o);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(d, MatrixKind::Laplacian));
}
BENCHMARK(BM_SpectrumRandom)->Arg(4)->Arg(8)->Arg(16);

static void BM_VerdictTables(benchmark::State& state) {
  TableOptions o;
  o.random_trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theorem_tables(o));
}
BENCHMARK(BM_VerdictTables)->Arg(0)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
