#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>

#include "trisec/classify.hpp"
#include "trisec/distributions.hpp"
#include "trisec/field.hpp"
#include "trisec/steiner.hpp"

namespace {

using namespace trisec;

const Field& gf(std::uint32_t p, std::uint32_t m) {
  static std::map<std::uint64_t, Field> cache;
  const std::uint64_t key = std::uint64_t(p) << 32 | m;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, Field::build(p, m)).first;
  return it->second;
}

void BM_field_mul(benchmark::State& state) {
  const Field& F = gf(3, 5);
  Elem x = F.one();
  for (auto _ : state) {
    x = F.mul(x, F.alpha());
    x = F.add(x, F.one());
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_field_mul);

void BM_multiplicity_row(benchmark::State& state) {
  const Field& F = gf(3, std::uint32_t(state.range(0)));
  const auto values = PolyFn::cubic(1).value_table(F);
  Elem b = 1;
  for (auto _ : state) {
    auto row = multiplicity_row(F, values, b);
    benchmark::DoNotOptimize(row);
    b = b + 1 == F.q() ? 1 : b + 1;
  }
}
BENCHMARK(BM_multiplicity_row)->Arg(3)->Arg(5);

void BM_intersection_distribution(benchmark::State& state) {
  const Field& F = gf(3, std::uint32_t(state.range(0)));
  for (auto _ : state) {
    auto dist = intersection_distribution(F, PolyFn::monomial(3));
    benchmark::DoNotOptimize(dist);
  }
}
BENCHMARK(BM_intersection_distribution)->Arg(3)->Arg(4);

void BM_cubic_like_filter(benchmark::State& state) {
  const Field& F = gf(3, std::uint32_t(state.range(0)));
  std::uint64_t d = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_cubic_like(F, d));
    d = d + 1 == F.q() ? 2 : d + 1;
  }
}
BENCHMARK(BM_cubic_like_filter)->Arg(5)->Arg(7);

void BM_pasch_count(benchmark::State& state) {
  const Field& F = gf(3, 3);
  const auto ts = build_sts(F, PolyFn::monomial(11));
  for (auto _ : state) benchmark::DoNotOptimize(pasch_count(ts));
}
BENCHMARK(BM_pasch_count);

}  // namespace

BENCHMARK_MAIN();
