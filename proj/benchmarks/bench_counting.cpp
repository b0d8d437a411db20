#include <benchmark/benchmark.h>

#include <map>

#include "incidence/constructions/generators.hpp"
#include "incidence/incidence/count.hpp"

using namespace incidence;

namespace {

const GeneratedInstance& instance(GeneratorKind kind, int size) {
  static std::map<std::pair<int, int>, GeneratedInstance> cache;
  auto key = std::make_pair(static_cast<int>(kind), size);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, generate({kind, size, 0, 0})).first;
  return it->second;
}

void BM_CountBruteElekes(benchmark::State& state) {
  const auto& g = instance(GeneratorKind::elekes2d, static_cast<int>(state.range(0)));
  CountOptions o;
  o.collect_pairs = false;
  for (auto _ : state) benchmark::DoNotOptimize(count_brute(g.points, g.family.curves, o).count);
  state.counters["m"] = static_cast<double>(g.points.size());
  state.counters["n"] = static_cast<double>(g.family.curves.size());
}
BENCHMARK(BM_CountBruteElekes)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_CountPartitionedElekes(benchmark::State& state) {
  const auto& g = instance(GeneratorKind::elekes2d, static_cast<int>(state.range(0)));
  CountOptions o;
  o.collect_pairs = false;
  o.r = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_partitioned(g.points, g.family.curves, o).count);
}
BENCHMARK(BM_CountPartitionedElekes)
    ->ArgsProduct({{4, 6, 8}, {4, 16}})
    ->Unit(benchmark::kMillisecond);

void BM_CountPartitionedCircles3d(benchmark::State& state) {
  const auto& g = instance(GeneratorKind::circles_3d, static_cast<int>(state.range(0)));
  CountOptions o;
  o.collect_pairs = false;
  for (auto _ : state) benchmark::DoNotOptimize(count_partitioned(g.points, g.family.curves, o).count);
}
BENCHMARK(BM_CountPartitionedCircles3d)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
