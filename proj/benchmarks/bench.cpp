#include <benchmark/benchmark.h>

#include "semigraph/graph.hpp"
#include "semigraph/metric_dim.hpp"
#include "semigraph/theory.hpp"

using namespace semigraph;

namespace {

ProductSemiring boolean_tower(int n) {
  std::vector<SemiringTable> fs(static_cast<size_t>(n), catalog("BOOL"));
  return direct_product(std::move(fs));
}

void BM_AxiomCheck(benchmark::State& state) {
  const SemiringTable t = catalog("BXMODX2");
  for (auto _ : state) benchmark::DoNotOptimize(verify_axioms(t));
}
BENCHMARK(BM_AxiomCheck);

void BM_TotalGraphBuild(benchmark::State& state) {
  const ProductSemiring p = boolean_tower(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_total_graph(p));
}
BENCHMARK(BM_TotalGraphBuild)->Arg(6)->Arg(8)->Arg(10);

void BM_Distances(benchmark::State& state) {
  const Graph g = build_total_graph(boolean_tower(8));
  for (auto _ : state) benchmark::DoNotOptimize(distances(g, 1));
}
BENCHMARK(BM_Distances);

void BM_TwinPartition(benchmark::State& state) {
  const Graph g = build_total_graph(boolean_tower(8));
  for (auto _ : state) benchmark::DoNotOptimize(twin_partition(g));
}
BENCHMARK(BM_TwinPartition);

void BM_PrunedSolver(benchmark::State& state) {
  const Graph g = build_total_graph(
      direct_product({catalog("BOOL"), catalog("T3"), catalog("T3")}));
  for (auto _ : state) benchmark::DoNotOptimize(metric_dimension_exact(g));
}
BENCHMARK(BM_PrunedSolver);

void BM_OracleSolver(benchmark::State& state) {
  const Graph g = build_total_graph(
      direct_product({catalog("BOOL"), catalog("CHAIN_3"), catalog("T3")}));
  for (auto _ : state) benchmark::DoNotOptimize(metric_dimension_oracle(g));
}
BENCHMARK(BM_OracleSolver);

void BM_Enumerate3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_semirings(3));
}
BENCHMARK(BM_Enumerate3);

void BM_Campaign(benchmark::State& state) {
  const std::vector<CampaignEntry> entries = default_campaign();
  CampaignOptions opt;
  opt.use_oracle = false;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(verify_campaign(entries, opt));
}
BENCHMARK(BM_Campaign);

}  // namespace

BENCHMARK_MAIN();
