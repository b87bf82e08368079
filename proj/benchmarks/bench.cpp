#include <benchmark/benchmark.h>

#include "cometq/charformula.hpp"
#include "cometq/crystal.hpp"
#include "cometq/modular.hpp"
#include "cometq/qarith.hpp"
#include "cometq/quotient.hpp"

namespace {

using namespace cometq;

void BM_qbinom_grid(benchmark::State& state) {
  const long N = state.range(0);
  for (auto _ : state) {
    for (long a = 0; a <= N; ++a)
      for (long b = 0; b <= a; ++b) benchmark::DoNotOptimize(qbinom(a, b));
  }
}
BENCHMARK(BM_qbinom_grid)->Arg(8)->Arg(16);

void BM_quotient_piece(benchmark::State& state) {
  QuiverParams p;
  p.r = 1;
  p.maxI = (int)state.range(0);
  p.maxJ = (int)state.range(0);
  p.maxLoop = (int)state.range(0);
  const Degree d(p.maxI, {p.maxJ});
  for (auto _ : state) {
    GradedQuotient q(p);
    benchmark::DoNotOptimize(q.dim(d));
  }
}
BENCHMARK(BM_quotient_piece)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_modular_tower(benchmark::State& state) {
  QuiverParams p;
  p.r = 1;
  p.maxI = (int)state.range(0);
  p.maxJ = (int)state.range(0);
  p.maxLoop = (int)state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(modular_dims_tower(p, 2147483647ull, 74207281ull));
  }
}
BENCHMARK(BM_modular_tower)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_enumerate_steep(benchmark::State& state) {
  const int n = (int)state.range(0);
  const Degree d(n, {n});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_steep(d, 1));
}
BENCHMARK(BM_enumerate_steep)->Arg(4)->Arg(6);

void BM_normalize_word(benchmark::State& state) {
  OpWord w;
  for (int t = 0; t < (int)state.range(0); ++t) {
    w.push_back(Gen::loop(1 + t % 2));
    for (int s = 0; s < 3; ++s) w.push_back(Gen::real(1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(normalize(w, 1));
}
BENCHMARK(BM_normalize_word)->Arg(4)->Arg(16);

void BM_char_series(benchmark::State& state) {
  const int n = (int)state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(char_series(2, n, n));
}
BENCHMARK(BM_char_series)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
