#include <benchmark/benchmark.h>

#include "antimagic/generator.hpp"
#include "antimagic/io.hpp"
#include "antimagic/orientation.hpp"
#include "antimagic/partition.hpp"
#include "antimagic/verify.hpp"

using namespace antimagic;

namespace {

Forest forest_of_size(std::int64_t base) {
  GeneratorConfig cfg;
  cfg.seed = 7;
  cfg.min_base_vertices = static_cast<std::size_t>(base);
  cfg.max_base_vertices = static_cast<std::size_t>(base);
  cfg.subdiv_max = 3;
  cfg.max_components = 4;
  return generate_random_forest(cfg);
}

void BM_Orient(benchmark::State& state) {
  const Forest f = forest_of_size(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orient_antimagic(f, {false}));
  state.counters["m"] = static_cast<double>(f.edge_count());
  state.SetComplexityN(static_cast<std::int64_t>(f.edge_count()));
}
BENCHMARK(BM_Orient)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_OrientWithStepChecks(benchmark::State& state) {
  const Forest f = forest_of_size(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orient_antimagic(f, {true}));
  state.counters["m"] = static_cast<double>(f.edge_count());
}
BENCHMARK(BM_OrientWithStepChecks)->RangeMultiplier(4)->Range(64, 16384);

void BM_Verify(benchmark::State& state) {
  const auto d = orient_antimagic(forest_of_size(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_antimagic(d));
}
BENCHMARK(BM_Verify)->RangeMultiplier(4)->Range(64, 16384);

void BM_JsonRoundTrip(benchmark::State& state) {
  const auto d = orient_antimagic(forest_of_size(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parse_orientation_json(emit_json(d)));
}
BENCHMARK(BM_JsonRoundTrip)->RangeMultiplier(4)->Range(64, 16384);

void BM_Partition(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  std::vector<std::int64_t> parts(static_cast<std::size_t>(k / 3), 3);
  if (k % 3 == 1) parts.back() = 4;
  if (k % 3 == 2) parts.push_back(2);
  const PartitionInstance inst{k, 5, parts};
  for (auto _ : state) benchmark::DoNotOptimize(partition_label_set(inst));
}
BENCHMARK(BM_Partition)->Arg(30)->Arg(300)->Arg(3000);

}  // namespace
BENCHMARK_MAIN();
