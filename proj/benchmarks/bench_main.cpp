#include <benchmark/benchmark.h>

#include <set>

#include "sgp/gorenstein.hpp"
#include "sgp/rf.hpp"
#include "sgp/semigroup.hpp"
#include "sgp/verify.hpp"

using namespace sgp;

namespace {

const std::vector<Int> kExample{13, 45, 72, 79, 99};
const std::vector<Int> kBigAS{455, 497, 574, 589, 631, 708};

void BM_Construct(benchmark::State& state, std::vector<Int> gens) {
  for (auto _ : state) {
    NumericalSemigroup s(gens);
    benchmark::DoNotOptimize(s.pseudo_frobenius());
  }
}
BENCHMARK_CAPTURE(BM_Construct, worked_example, kExample);
BENCHMARK_CAPTURE(BM_Construct, big_as, kBigAS);

void BM_AlmostSymmetric(benchmark::State& state) {
  const NumericalSemigroup s(kBigAS);
  for (auto _ : state) benchmark::DoNotOptimize(is_almost_symmetric(s));
}
BENCHMARK(BM_AlmostSymmetric);

void BM_NGVectors(benchmark::State& state) {
  const NumericalSemigroup s(kExample);
  for (auto _ : state) benchmark::DoNotOptimize(ng_vectors(s));
}
BENCHMARK(BM_NGVectors);

void BM_RFPlusSet(benchmark::State& state) {
  const NumericalSemigroup s(kBigAS);
  for (auto _ : state) benchmark::DoNotOptimize(rf_plus_set(s, 4767).count());
}
BENCHMARK(BM_RFPlusSet);

void BM_CheckSemigroup(benchmark::State& state) {
  const NumericalSemigroup s(kExample);
  const std::set<ClaimId> claims(all_claims().begin(), all_claims().end());
  for (auto _ : state) benchmark::DoNotOptimize(check_semigroup(s, claims));
}
BENCHMARK(BM_CheckSemigroup);

void BM_EnumerateGenus(benchmark::State& state) {
  HarnessConfig cfg;
  cfg.genus_max = state.range(0);
  std::uint64_t n = 0;
  for (auto _ : state) {
    enumerate_semigroups(cfg, [&](const NumericalSemigroup&) { ++n; });
  }
  benchmark::DoNotOptimize(n);
}
BENCHMARK(BM_EnumerateGenus)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_CheckAll(benchmark::State& state) {
  HarnessConfig cfg;
  cfg.genus_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(check_all(cfg).summary.semigroups);
}
BENCHMARK(BM_CheckAll)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
