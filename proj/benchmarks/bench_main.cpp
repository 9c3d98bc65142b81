#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ncrainbow/bounds.hpp"
#include "ncrainbow/coloring.hpp"
#include "ncrainbow/connectivity.hpp"
#include "ncrainbow/group_catalog.hpp"
#include "ncrainbow/isomorphism.hpp"
#include "ncrainbow/ncgraph.hpp"
#include "ncrainbow/rainbow.hpp"

using namespace ncrainbow;

namespace {

void BM_IsomorphismJ62(benchmark::State& state) {
  const Graph target = lexicographic_product(johnson(6, 2), edgeless_graph(2));
  const Graph g = noncommuting_graph(extraspecial32_groups()[state.range(0)].group).graph();
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(g, target));
}
BENCHMARK(BM_IsomorphismJ62)->Arg(0)->Arg(1);

void BM_IsomorphismShuffledJohnson(benchmark::State& state) {
  const Graph g = johnson(static_cast<std::size_t>(state.range(0)), 2);
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(1));
  const Graph h = permute(g, perm);
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(g, h));
}
BENCHMARK(BM_IsomorphismShuffledJohnson)->Arg(6)->Arg(8)->Arg(10);

void BM_VerifyJ62(benchmark::State& state) {
  const auto cg = j62_graph_and_coloring();
  const VerifyOptions opts{.workers = static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(is_rainbow_k_connected(cg.graph, cg.coloring, 2, opts));
}
BENCHMARK(BM_VerifyJ62)->Arg(1)->Arg(4)->UseRealTime();

void BM_VerifyProp24(benchmark::State& state) {
  const auto cg = prop24_coloring({static_cast<std::size_t>(state.range(0)), 5, 2});
  for (auto _ : state) benchmark::DoNotOptimize(is_rainbow_k_connected(cg.graph, cg.coloring, 2));
}
BENCHMARK(BM_VerifyProp24)->Arg(2)->Arg(4)->Arg(8);

void BM_FailureBoundDihedral(benchmark::State& state) {
  const Group g = dihedral(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(failure_bound(g, 2));
}
BENCHMARK(BM_FailureBoundDihedral)->Arg(9)->Arg(28)->Arg(56);

void BM_FailureBoundExtraspecial(benchmark::State& state) {
  const Group g = extraspecial32_groups()[0].group;
  for (auto _ : state) benchmark::DoNotOptimize(failure_bound(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_FailureBoundExtraspecial)->Arg(2)->Arg(3);

void BM_SearchDihedral(benchmark::State& state) {
  const Graph g = noncommuting_graph(dihedral(static_cast<std::size_t>(state.range(0)))).graph();
  for (auto _ : state) benchmark::DoNotOptimize(search_two_coloring(g, 2, 10'000, 1));
}
BENCHMARK(BM_SearchDihedral)->Arg(9)->Arg(20)->Arg(56);

void BM_VertexConnectivity(benchmark::State& state) {
  const Graph g = noncommuting_graph(dihedral(static_cast<std::size_t>(state.range(0)))).graph();
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}
BENCHMARK(BM_VertexConnectivity)->Arg(7)->Arg(28);

void BM_ThresholdForK(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(threshold_for_k(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ThresholdForK)->Arg(2)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
