#include <benchmark/benchmark.h>

#include <random>

#include "incidence/algebra/root_isolation.hpp"
#include "incidence/algebra/uv_polynomial.hpp"
#include "incidence/partition/partition.hpp"

using namespace incidence;

namespace {

UvPolynomial random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(static_cast<long>(rng() % 41) - 20, static_cast<unsigned long>(rng() % 9) + 1);
  c.emplace_back(1);
  return UvPolynomial(std::move(c));
}

std::vector<Point> random_points(std::size_t m, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> out(m);
  for (auto& p : out)
    for (std::size_t k = 0; k < d; ++k) p.coords.emplace_back(static_cast<long>(rng() % 2001) - 1000);
  return out;
}

void BM_IsolateRealRoots(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<UvPolynomial> polys;
  for (int i = 0; i < 64; ++i) polys.push_back(random_poly(rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(isolate_real_roots(polys[i++ % polys.size()]));
  }
}
BENCHMARK(BM_IsolateRealRoots)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Gcd(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int d = static_cast<int>(state.range(0));
  const UvPolynomial common = random_poly(rng, 2);
  const UvPolynomial a = random_poly(rng, d) * common;
  const UvPolynomial b = random_poly(rng, d) * common;
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd)->Arg(4)->Arg(8)->Arg(16);

void BM_BuildPartition(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto r = static_cast<unsigned>(state.range(1));
  const auto pts = random_points(256, d, 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_partition(pts, r));
}
BENCHMARK(BM_BuildPartition)->Args({2, 4})->Args({2, 16})->Args({3, 4})->Args({3, 16})
    ->Unit(benchmark::kMillisecond);

}  // namespace
