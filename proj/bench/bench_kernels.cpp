// Serial reference kernels against their OpenMP counterparts.
#include "dmf/carlitz.hpp"
#include "dmf/forms.hpp"
#include "dmf/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace dmf;

namespace {

const FieldCtx& field_arg(int q) { return q == 9 ? make_field(3, 2) : make_field(q, 1); }

void BM_mul(benchmark::State& state, bool parallel) {
  const FieldCtx& f = field_arg(int(state.range(0)));
  const int prec = int(state.range(1));
  const auto g = generators(f, prec);
  const USeries a = g->E_T.truncated(prec), b = g->Delta_W.truncated(prec);
  kernels::set_threads(int(state.range(2)));
  for (auto _ : state) {
    USeries c = parallel ? kernels::mul_parallel(a, b) : kernels::mul_reference(a, b);
    benchmark::DoNotOptimize(c);
  }
  kernels::set_threads(0);
}

void BM_substitute(benchmark::State& state, bool parallel) {
  const FieldCtx& f = field_arg(int(state.range(0)));
  const int prec = int(state.range(1));
  const USeries a = generators(f, prec)->g1.truncated(prec);
  kernels::set_threads(int(state.range(2)));
  for (auto _ : state) {
    USeries c = parallel ? kernels::substitute_parallel(a) : kernels::substitute_reference(a);
    benchmark::DoNotOptimize(c);
  }
  kernels::set_threads(0);
}

void BM_monic_sum(benchmark::State& state, bool parallel) {
  const FieldCtx& f = field_arg(int(state.range(0)));
  const int prec = int(state.range(1));
  const MonicWeight id = [](const Poly& a) { return a; };
  kernels::set_threads(int(state.range(2)));
  for (auto _ : state) {
    USeries c = parallel ? monic_series_sum(f, id, 1, prec) : monic_series_sum_reference(f, id, 1, prec);
    benchmark::DoNotOptimize(c);
  }
  kernels::set_threads(0);
}

// {q, prec, threads}
void sizes(benchmark::internal::Benchmark* b) {
  for (int threads : {1, 2, 4}) {
    b->Args({3, 300, threads});
    b->Args({5, 300, threads});
    b->Args({9, 200, threads});
  }
  b->Unit(benchmark::kMillisecond);
}

void small_sizes(benchmark::internal::Benchmark* b) {
  for (int threads : {1, 2, 4}) {
    b->Args({3, 120, threads});
    b->Args({5, 120, threads});
  }
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK_CAPTURE(BM_mul, reference, false)->Apply(sizes);
BENCHMARK_CAPTURE(BM_mul, parallel, true)->Apply(sizes);
BENCHMARK_CAPTURE(BM_substitute, reference, false)->Apply(small_sizes);
BENCHMARK_CAPTURE(BM_substitute, parallel, true)->Apply(small_sizes);
BENCHMARK_CAPTURE(BM_monic_sum, reference, false)->Apply(sizes);
BENCHMARK_CAPTURE(BM_monic_sum, parallel, true)->Apply(sizes);

BENCHMARK_MAIN();
