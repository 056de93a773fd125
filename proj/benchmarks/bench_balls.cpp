#include <benchmark/benchmark.h>

#include "cgw/ball.hpp"
#include "cgw/engine.hpp"

namespace {

void BM_BallFree2(benchmark::State& state) {
  auto e = cgw::build_engine("free(2)");
  auto radius = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto ball = cgw::enumerate_ball(*e, radius);
    benchmark::DoNotOptimize(ball.size());
  }
}
BENCHMARK(BM_BallFree2)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BallHeisenberg(benchmark::State& state) {
  auto e = cgw::build_engine("heisenberg");
  auto radius = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto ball = cgw::enumerate_ball(*e, radius);
    benchmark::DoNotOptimize(ball.size());
  }
}
BENCHMARK(BM_BallHeisenberg)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BallC3C3(benchmark::State& state) {
  auto e = cgw::build_engine("product(cyclic(3),cyclic(3))");
  auto radius = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto ball = cgw::enumerate_ball(*e, radius);
    benchmark::DoNotOptimize(ball.size());
  }
}
BENCHMARK(BM_BallC3C3)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace
