#include <benchmark/benchmark.h>

#include "chainseif/critical.hpp"
#include "chainseif/identities.hpp"
#include "chainseif/lattice.hpp"
#include "chainseif/movie.hpp"

using namespace chainseif;

static void BM_SeifertSeries(benchmark::State& state) {
  const ChainTuple a = ChainTuple::parse("4,4,4,4");
  for (auto _ : state) benchmark::DoNotOptimize(seifert_series(a));
}
BENCHMARK(BM_SeifertSeries);

static void BM_LatticeRoute(benchmark::State& state) {
  const ChainTuple a = ChainTuple::parse("4,4,4,4");
  for (auto _ : state) benchmark::DoNotOptimize(seifert_lattice_route(a));
}
BENCHMARK(BM_LatticeRoute);

static void BM_MonodromyIdentity(benchmark::State& state) {
  const ChainTuple a = ChainTuple::parse(state.range(0) == 0 ? "3,3,3" : "4,4,4");
  for (auto _ : state) benchmark::DoNotOptimize(verify_monodromy_identity(a));
}
BENCHMARK(BM_MonodromyIdentity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_TwistComposition(benchmark::State& state) {
  const SeifertLattice l = SeifertLattice::from_rainbow(seifert_series(ChainTuple::parse("4,4,4")), 3);
  for (auto _ : state) benchmark::DoNotOptimize(monodromy_as_twists(l));
}
BENCHMARK(BM_TwistComposition)->Unit(benchmark::kMillisecond);

static void BM_MovieTrack(benchmark::State& state) {
  const CurveCoeffs k = critv_curve(ChainTuple::parse("1,2,2,2"));
  MovieConfig cfg;
  cfg.d = k.d.get_ui();
  cfg.mu = k.mu.get_ui();
  cfg.c = k.c.get_d();
  cfg.path = radial_path(find_alpha(cfg.d, cfg.mu, cfg.c).eps);
  for (auto _ : state) benchmark::DoNotOptimize(track(cfg));
}
BENCHMARK(BM_MovieTrack)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
