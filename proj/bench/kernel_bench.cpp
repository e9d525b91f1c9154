// Serial reference against OpenMP kernel, plus the exact and FFT trace paths.
#include <benchmark/benchmark.h>

#include "dworkbench/dwork.hpp"
#include "dworkbench/hyper.hpp"
#include "dworkbench/kernels.hpp"

using namespace dwb;

namespace {

HyperSpec canonical(int64_t q) {
  const auto [sc, sr] = hyper_data(build_v(2, 7));
  return HyperSpec::from_multisets(FqField::get(q), sc, sr);
}

void BM_TorusSerial(benchmark::State& st) {
  const auto F = FqField::get(st.range(0));
  const std::vector<int> v{0, 0, 1, 2, 2};
  for (auto _ : st) benchmark::DoNotOptimize(kernels::torus_histogram_serial(*F, 5, v));
}
void BM_TorusParallel(benchmark::State& st) {
  const auto F = FqField::get(st.range(0));
  const std::vector<int> v{0, 0, 1, 2, 2};
  for (auto _ : st) benchmark::DoNotOptimize(kernels::torus_histogram_parallel(*F, 5, v));
}
BENCHMARK(BM_TorusSerial)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorusParallel)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_CountSerial(benchmark::State& st) {
  const auto F = FqField::get(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_points_serial(*F, 5, 2));
}
void BM_CountParallel(benchmark::State& st) {
  const auto F = FqField::get(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_points_parallel(*F, 5, 2));
}
BENCHMARK(BM_CountSerial)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_NaiveTraceSerial(benchmark::State& st) {
  const HyperSpec s = canonical(29);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::trad_trace_naive_serial(*s.field, s.chi, s.rho, s.psi, 2));
}
void BM_NaiveTraceParallel(benchmark::State& st) {
  const HyperSpec s = canonical(29);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::trad_trace_naive_parallel(*s.field, s.chi, s.rho, s.psi, 2));
}
BENCHMARK(BM_NaiveTraceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NaiveTraceParallel)->Unit(benchmark::kMillisecond);

void BM_ConvolveSerial(benchmark::State& st) {
  const HyperSpec s = canonical(st.range(0));
  const auto tables = rank1_tables(s);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::convolve_serial(tables[0], tables[1], -1));
}
void BM_ConvolveParallel(benchmark::State& st) {
  const HyperSpec s = canonical(st.range(0));
  const auto tables = rank1_tables(s);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::convolve_parallel(tables[0], tables[1], -1));
}
BENCHMARK(BM_ConvolveSerial)->Arg(29)->Arg(43)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvolveParallel)->Arg(29)->Arg(43)->Unit(benchmark::kMillisecond);

void BM_MellinFast(benchmark::State& st) {
  const HyperSpec s = canonical(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(mellin_fast(s));
}
BENCHMARK(BM_MellinFast)->Arg(29)->Arg(43)->Arg(113)->Unit(benchmark::kMicrosecond);

void BM_EigentraceEngine(benchmark::State& st) {
  const auto F = FqField::get(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(EigentraceEngine(F, build_v(2, 7)).at(2));
}
BENCHMARK(BM_EigentraceEngine)->Arg(29)->Arg(43)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
