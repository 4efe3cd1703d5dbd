// Serial reference versus OpenMP kernels. The Exec argument selects the
// code path; OMP_NUM_THREADS controls the parallel width.
#include <benchmark/benchmark.h>

#include "gclab/conjecture_lab.hpp"
#include "gclab/constructions.hpp"
#include "gclab/gc_analysis.hpp"
#include "gclab/matrix.hpp"
#include "gclab/poly.hpp"

using namespace gclab;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

const Matrix& chung_yao_vandermonde() {
  static const Matrix m = vandermonde(chung_yao(random_general_lines(10, 1)), 8);
  return m;
}

void BM_RowEchelon(benchmark::State& state) {
  const Matrix& m = chung_yao_vandermonde();
  for (auto _ : state) benchmark::DoNotOptimize(reduced_row_echelon(m, exec_of(state)));
}

void BM_Inverse(benchmark::State& state) {
  const Matrix& m = chung_yao_vandermonde();
  for (auto _ : state) benchmark::DoNotOptimize(inverse(m, exec_of(state)));
}

void BM_IsGcSet(benchmark::State& state) {
  const NodeSet x = chung_yao(random_general_lines(8, 1));
  for (auto _ : state) benchmark::DoNotOptimize(is_gc_set(x, 6, exec_of(state)));
}

void BM_MSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(m_search(3, 3, 2, 2000, 3, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_RowEchelon)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Inverse)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IsGcSet)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MSearch)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
