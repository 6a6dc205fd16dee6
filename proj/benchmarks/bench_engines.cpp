#include <benchmark/benchmark.h>

#include "cdfree/cliques.hpp"
#include "cdfree/codec.hpp"
#include "cdfree/generators.hpp"
#include "cdfree/recognition.hpp"

using namespace cdfree;

namespace {

Graph plane_for(const benchmark::State& state) {
  return projective_plane_graph(static_cast<int>(state.range(0)));
}

void BM_RecognizeNaive(benchmark::State& state) {
  Graph g = plane_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(recognize_naive(g).free);
  state.SetLabel(std::to_string(g.vertex_count()) + "v/" + std::to_string(g.edge_count()) + "e");
}

void BM_RecognizeMdelta(benchmark::State& state) {
  Graph g = plane_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(recognize_mdelta(g).free);
}

void BM_RecognizeThreshold(benchmark::State& state) {
  Graph g = plane_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(recognize_threshold(g).free);
}

void BM_EnumerateCliques(benchmark::State& state) {
  Graph g = plane_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_maximal_cliques(g).cliques.size());
}

void BM_MaxClique(benchmark::State& state) {
  Graph g = plane_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(g).size());
}

void BM_Encode(benchmark::State& state) {
  Graph g = plane_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(encode_graph(g).size());
}

void BM_Decode(benchmark::State& state) {
  Graph g = plane_for(state);
  auto bytes = encode_graph(g);
  for (auto _ : state) benchmark::DoNotOptimize(decode_graph(bytes).edge_count());
}

}  // namespace

BENCHMARK(BM_RecognizeNaive)->Arg(5)->Arg(13)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RecognizeMdelta)->Arg(5)->Arg(13)->Arg(31)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RecognizeThreshold)->Arg(5)->Arg(13)->Arg(31)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EnumerateCliques)->Arg(5)->Arg(13)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MaxClique)->Arg(5)->Arg(13)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Encode)->Arg(5)->Arg(13)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Decode)->Arg(5)->Arg(13)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
