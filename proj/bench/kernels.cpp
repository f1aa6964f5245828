#include <benchmark/benchmark.h>

#include "vwreath/classify.hpp"
#include "vwreath/verify.hpp"

namespace {

using vwreath::Exec;

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_Homomorphisms(benchmark::State& state) {
  const auto g = vwreath::product_group(vwreath::dihedral_group(4), vwreath::cyclic_group(2));
  for (auto _ : state) benchmark::DoNotOptimize(vwreath::homomorphisms(g, g, exec_of(state)));
}
BENCHMARK(BM_Homomorphisms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OuterConjugate(benchmark::State& state) {
  const auto g = vwreath::symmetric_group(4);
  const auto beta = vwreath::identity_hom(g);
  const auto beta_t = vwreath::inner_hom(g, g->element("(12)"));
  for (auto _ : state) benchmark::DoNotOptimize(vwreath::outer_conjugate(beta, beta_t, exec_of(state)));
}
BENCHMARK(BM_OuterConjugate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SufficientIso(benchmark::State& state) {
  const auto g = vwreath::symmetric_group(4);
  const auto omega = vwreath::parse_omega("id/zero", g);
  const auto omega_t = vwreath::parse_omega("zero/ad((1234))", g);
  for (auto _ : state) benchmark::DoNotOptimize(vwreath::sufficient_iso_check(omega, omega_t, exec_of(state)));
}
BENCHMARK(BM_SufficientIso)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PropertyCases(benchmark::State& state) {
  const vwreath::Suite* suite = vwreath::find_suite("support");
  vwreath::VerifyOptions options;
  options.exec = exec_of(state);
  options.samples = 200;
  for (auto _ : state) benchmark::DoNotOptimize(suite->run(options));
}
BENCHMARK(BM_PropertyCases)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
