#include <hexstrip/hexstrip.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace hexstrip;

void BM_TotalMD(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(h(state.range(0)));
}
BENCHMARK(BM_TotalMD)->RangeMultiplier(10)->Range(100, 100000)->Unit(benchmark::kMicrosecond);

void BM_TotalMDT(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(g(state.range(0)));
}
BENCHMARK(BM_TotalMDT)->RangeMultiplier(10)->Range(100, 100000)->Unit(benchmark::kMicrosecond);

void BM_DimerTriangleFresh(benchmark::State& state) {
  for (auto _ : state) {
    TriangleBuilder builder(Family::C);
    benchmark::DoNotOptimize(builder.rows(state.range(0)));
  }
}
BENCHMARK(BM_DimerTriangleFresh)->Arg(100)->Arg(250)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_ClosedFormRow(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    for (long k = 0; k <= n / 2; ++k) benchmark::DoNotOptimize(c_closed(n, k));
  }
}
BENCHMARK(BM_ClosedFormRow)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ConvolutionT(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    for (long k = 0; k <= n / 3; ++k) benchmark::DoNotOptimize(t_conv(n, k));
  }
}
BENCHMARK(BM_ConvolutionT)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_ColouredPolynomial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(h_from_c(state.range(0)));
}
BENCHMARK(BM_ColouredPolynomial)->Arg(60)->Arg(300)->Unit(benchmark::kMicrosecond);

void BM_Enumerate(benchmark::State& state) {
  const auto model = static_cast<TileModel>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::size_t count = 0;
  for (auto _ : state) {
    for_each_tiling(n, model, [&](const Tiling& tiling) { count += tiling.tiles().size(); });
  }
  benchmark::DoNotOptimize(count);
}
BENCHMARK(BM_Enumerate)
    ->Args({static_cast<long>(TileModel::MD), 14})
    ->Args({static_cast<long>(TileModel::MD), 18})
    ->Args({static_cast<long>(TileModel::MDT), 18})
    ->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(state.range(0)));
}
BENCHMARK(BM_VerifyAll)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
