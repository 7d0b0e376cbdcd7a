#include <benchmark/benchmark.h>

#include "orbizeta/inertia.hpp"
#include "orbizeta/point_count.hpp"
#include "orbizeta/ring.hpp"
#include "orbizeta/zeta.hpp"

using namespace orbizeta;

namespace {

OrbifoldSpec wps(std::vector<std::int64_t> weights) {
  OrbifoldSpec spec;
  spec.family = WeightedProjective{std::move(weights)};
  return spec;
}

void BM_EnumerateSectors(benchmark::State& state) {
  OrbifoldSpec spec = wps({1, 2, 3, static_cast<std::int64_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sectors(spec));
}
BENCHMARK(BM_EnumerateSectors)->Arg(5)->Arg(7)->Arg(11);

void BM_TraceSeries(benchmark::State& state) {
  InertiaDecomposition d = enumerate_sectors(wps({1, 1, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(trace_series(d, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TraceSeries)->Arg(10)->Arg(40);

void BM_RecoverZeta(benchmark::State& state) {
  InertiaDecomposition d = enumerate_sectors(wps({1, static_cast<std::int64_t>(state.range(0))}));
  TraceSeries ts = trace_series(d, default_truncation(d));
  for (auto _ : state) benchmark::DoNotOptimize(recover_zeta(ts));
}
BENCHMARK(BM_RecoverZeta)->Arg(3)->Arg(5)->Arg(7);

void BM_ExpIdentity(benchmark::State& state) {
  InertiaDecomposition d = enumerate_sectors(wps({1, 2, 3}));
  std::size_t order = default_truncation(d);
  TraceSeries ts = trace_series(d, order);
  for (auto _ : state) benchmark::DoNotOptimize(exp_of_traces(ts, order));
}
BENCHMARK(BM_ExpIdentity);

void BM_FrobeniusRingCheck(benchmark::State& state) {
  GradedRing ring = build_ring(wps({1, static_cast<std::int64_t>(state.range(0))}));
  RingMap f = frobenius_orb(ring);
  for (auto _ : state) benchmark::DoNotOptimize(verify_ring_hom(ring, f));
}
BENCHMARK(BM_FrobeniusRingCheck)->Arg(3)->Arg(7)->Arg(13);

void BM_GroupoidCountEnumerative(benchmark::State& state) {
  OrbifoldSpec spec = wps({1, 1, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(
        groupoid_count(spec, SectorLabel::identity(), 13, state.range(0), CountMethod::Enumerative));
}
BENCHMARK(BM_GroupoidCountEnumerative)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
