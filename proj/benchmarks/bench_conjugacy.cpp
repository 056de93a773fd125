#include <benchmark/benchmark.h>

#include <random>

#include "cgw/conjugacy.hpp"
#include "cgw/engines.hpp"
#include "cgw/growth.hpp"
#include "cgw/hnn.hpp"

namespace {

void BM_ConjugacyGrowthFree2(benchmark::State& state) {
  auto e = cgw::build_engine("free(2)");
  auto radius = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto t = cgw::conjugacy_growth_table(*e, radius);
    benchmark::DoNotOptimize(t.values.back());
  }
}
BENCHMARK(BM_ConjugacyGrowthFree2)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_PrimitiveGrowthC3C3(benchmark::State& state) {
  auto e = cgw::build_engine("product(cyclic(3),cyclic(3))");
  auto radius = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto t = cgw::primitive_growth_table(*e, radius);
    benchmark::DoNotOptimize(t.values.back());
  }
}
BENCHMARK(BM_PrimitiveGrowthC3C3)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_ClassKeyHeisenberg(benchmark::State& state) {
  auto e = cgw::build_engine("heisenberg");
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> coord(-1000, 1000);
  std::vector<cgw::Payload> elems;
  for (int i = 0; i < 1024; ++i) {
    elems.push_back(cgw::Payload{coord(rng), coord(rng), coord(rng)});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    auto k = cgw::class_key_payload(*e, cgw::view(elems[i++ % elems.size()]));
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_ClassKeyHeisenberg);

void BM_BrittonReduce(benchmark::State& state) {
  auto e = cgw::build_engine("hnn(free(2), a='x', b='y')");
  std::mt19937_64 rng(2);
  const char* letters[] = {"x", "x^-1", "y", "y^-1", "t", "t^-1"};
  std::vector<cgw::Word> words;
  for (int i = 0; i < 256; ++i) {
    std::string text = "1";
    for (int j = 0; j < state.range(0); ++j) {
      text += std::string("*") + letters[rng() % 6];
    }
    words.push_back(cgw::parse_word(text, e->generators()));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    auto g = e->evaluate(words[i++ % words.size()]);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_BrittonReduce)->Arg(16)->Arg(64)->Arg(256);

}  // namespace
