#include <benchmark/benchmark.h>

#include <random>

#include "cgw/engine.hpp"
#include "cgw/smallcancel.hpp"

namespace {

cgw::SymmetrizedSet random_relators(std::size_t count, std::size_t len,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const cgw::Letter letters[] = {{"x", 1}, {"x", -1}, {"y", 1}, {"y", -1}};
  std::vector<cgw::Word> base;
  while (base.size() < count) {
    std::vector<cgw::Letter> w;
    while (w.size() < len) {
      const auto& l = letters[rng() % 4];
      if (w.empty() || !w.back().is_inverse_of(l)) {
        w.push_back(l);
      }
    }
    if (!w.front().is_inverse_of(w.back())) {
      base.emplace_back(std::move(w));
    }
  }
  return cgw::SymmetrizedSet::symmetrize(base);
}

void BM_FindPiecesFree2(benchmark::State& state) {
  auto e = cgw::build_engine("free(2)");
  cgw::RelativeAlphabet alphabet(*e, 0);
  auto S = random_relators(2, static_cast<std::size_t>(state.range(0)), 3);
  auto eps = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    auto pieces = cgw::find_pieces(alphabet, S, eps);
    benchmark::DoNotOptimize(pieces.size());
  }
}
BENCHMARK(BM_FindPiecesFree2)
    ->Args({16, 0})
    ->Args({16, 1})
    ->Args({32, 1})
    ->Unit(benchmark::kMillisecond);

void BM_WWordCheck(benchmark::State& state) {
  auto e = cgw::build_engine("product(cyclic(101),cyclic(103))");
  auto n = static_cast<std::size_t>(state.range(0));
  auto w = cgw::generate_W_word(*e, cgw::Word{}, n);
  cgw::RelativeAlphabet alphabet(*e, 1);
  auto S = cgw::SymmetrizedSet::symmetrize({w.word});
  cgw::SCParams p;
  p.eps = 1;
  p.mu = cgw::Rational(14, static_cast<std::int64_t>(n));
  p.lambda = cgw::Rational(1, 3);
  p.c = 2;
  p.rho = 2 * n + 1;
  for (auto _ : state) {
    auto rep = cgw::check_condition(alphabet, S, p);
    benchmark::DoNotOptimize(rep.pieces_found);
  }
}
BENCHMARK(BM_WWordCheck)->Arg(15)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
