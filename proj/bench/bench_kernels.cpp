// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "rgcone/generation.hpp"
#include "rgcone/lab.hpp"

using namespace rgcone;

namespace {

GeneratingSet sqrt2_set() {
  auto ctx = FieldContext::sqrt(2);
  auto r = AlgebraicNumber::generator(ctx);
  Cone c = Cone::pointed(ctx, {{1, r}, {-1, r}});
  return build_generating_set(c, decide(c));
}

GeneratingSet block_set() {
  auto ctx = FieldContext::sqrt(2);
  auto r = AlgebraicNumber::generator(ctx);
  Cone c = Cone::pointed(ctx, {{1, 0, 0}, {0, 1, r}, {0, -1, r}});
  return build_generating_set(c, decide(c));
}

void BM_verify_2d(benchmark::State& st) {
  auto gs = sqrt2_set();
  for (auto _ : st) benchmark::DoNotOptimize(verify_generating_set(gs, st.range(0)));
}
void BM_verify_2d_serial(benchmark::State& st) {
  auto gs = sqrt2_set();
  for (auto _ : st) benchmark::DoNotOptimize(verify_generating_set_serial(gs, st.range(0)));
}
void BM_verify_3d(benchmark::State& st) {
  auto gs = block_set();
  for (auto _ : st) benchmark::DoNotOptimize(verify_generating_set(gs, st.range(0)));
}
void BM_verify_3d_serial(benchmark::State& st) {
  auto gs = block_set();
  for (auto _ : st) benchmark::DoNotOptimize(verify_generating_set_serial(gs, st.range(0)));
}

void BM_symmetry_search(benchmark::State& st) {
  Cone sub = build_4d_subcone();
  for (auto _ : st) benchmark::DoNotOptimize(search_eigen_symmetry(sub, st.range(0)));
}
void BM_symmetry_search_serial(benchmark::State& st) {
  Cone sub = build_4d_subcone();
  for (auto _ : st) benchmark::DoNotOptimize(search_eigen_symmetry_serial(sub, st.range(0)));
}

void BM_fermat(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(fermat_scan(2, st.range(0)));
}
void BM_fermat_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(fermat_scan_serial(2, st.range(0)));
}

void BM_hilbert(benchmark::State& st) {
  RationalCone c({{1, 0, 0}, {0, 1, 0}, {3, 5, 97}});
  for (auto _ : st) benchmark::DoNotOptimize(hilbert_basis(c));
}
void BM_hilbert_serial(benchmark::State& st) {
  RationalCone c({{1, 0, 0}, {0, 1, 0}, {3, 5, 97}});
  for (auto _ : st) benchmark::DoNotOptimize(hilbert_basis_serial(c));
}

}  // namespace

BENCHMARK(BM_verify_2d)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_2d_serial)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_3d)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_3d_serial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_symmetry_search)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_symmetry_search_serial)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fermat)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fermat_serial)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hilbert)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hilbert_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
