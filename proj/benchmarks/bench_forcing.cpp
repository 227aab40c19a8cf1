#include <benchmark/benchmark.h>

#include "szf/bounds.hpp"
#include "szf/clique_cover.hpp"
#include "szf/exact.hpp"
#include "szf/generators.hpp"
#include "szf/minimize.hpp"
#include "szf/search.hpp"

namespace {

using namespace szf;

void BM_SignedForcesLK(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SignPattern p = z_pattern_of_graph(line_graph(complete_graph(n)).graph);
  const SignedGame game(p);
  const VertexSet s = lkn_forcing_set(n);
  for (auto _ : state) benchmark::DoNotOptimize(signed_forces(game, s));
}
BENCHMARK(BM_SignedForcesLK)->Arg(6)->Arg(8)->Arg(10);

void BM_SignedNumberQ3(benchmark::State& state) {
  const SignPattern p = z_pattern_of_graph(hypercube(3));
  for (auto _ : state) benchmark::DoNotOptimize(signed_zero_forcing_number(p).value);
}
BENCHMARK(BM_SignedNumberQ3);

void BM_SignedNumberLK5(benchmark::State& state) {
  const SignPattern p = z_pattern_of_graph(line_graph(complete_graph(5)).graph);
  MinimizeOptions opts;
  opts.prune = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(signed_zero_forcing_number(p, opts).value);
}
BENCHMARK(BM_SignedNumberLK5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassicalNumberRandom(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(zero_forcing_number(g).value);
}
BENCHMARK(BM_ClassicalNumberRandom)->Arg(12)->Arg(16);

void BM_CliqueCover(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 11);
  for (auto _ : state) benchmark::DoNotOptimize(clique_cover_number(g).cc);
}
BENCHMARK(BM_CliqueCover)->Arg(12)->Arg(18);

void BM_ExactRank(benchmark::State& state) {
  const Graph g = line_graph(complete_graph(static_cast<int>(state.range(0)))).graph;
  const ExactMatrix w = witness_matrix(g, clique_cover_number(g).cover);
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(w).rank);
}
BENCHMARK(BM_ExactRank)->Arg(6)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
