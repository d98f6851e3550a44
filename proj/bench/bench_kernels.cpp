#include <benchmark/benchmark.h>

#include <random>

#include "quartic/aniso.hpp"
#include "quartic/forms.hpp"
#include "quartic/kernels.hpp"
#include "quartic/solver.hpp"

using namespace quartic;

namespace {

Backend backend_of(const benchmark::State& st) { return st.range(0) ? Backend::parallel : Backend::serial; }

void BM_UnitPowerPatterns(benchmark::State& st) {
  const FieldParams& f = field(FieldTag::sqrt10);
  const int k = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(unit_power_patterns(f, k, backend_of(st)));
  st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_UnitPowerPatterns)->ArgsProduct({{0, 1}, {12, 16, 20}})->Unit(benchmark::kMillisecond);

void BM_DpReach(benchmark::State& st) {
  const FieldParams& f = field(FieldTag::sqrt_m2);
  const AdditiveForm form = parse_form("1,1,1,1+p,p,p+p^2,p,p^2,p^2,p^3,p^3", f);
  const int N = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(dp_reach(form, N, {}, backend_of(st)));
  st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_DpReach)->ArgsProduct({{0, 1}, {7, 10, 12}})->Unit(benchmark::kMillisecond);

void BM_CheckAniso(benchmark::State& st) {
  const FieldParams& f = field(FieldTag::sqrt2);
  const AdditiveForm form = parse_form("1,1,1,1,p,p,p,p,p,p", f);
  for (auto _ : st) benchmark::DoNotOptimize(has_primitive_zero_mod(form, 8, backend_of(st)));
  st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_CheckAniso)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& st) {
  const FieldParams& f = field(FieldTag::sqrt2);
  std::mt19937_64 rng(7);
  std::vector<RingElt> coeffs;
  for (int i = 0; i < 11; ++i) {
    RingElt u = unit_from_pattern(f, static_cast<std::uint32_t>(rng() % 256), 8).with_precision(f.max_precision());
    coeffs.push_back(mul_pi_power(u, static_cast<int>(rng() % 4)));
  }
  const AdditiveForm form(f, coeffs);
  for (auto _ : st) benchmark::DoNotOptimize(solve(form, 48, backend_of(st)));
  st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_Solve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
