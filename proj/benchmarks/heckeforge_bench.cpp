#include <benchmark/benchmark.h>

#include <random>

#include "heckeforge/bernstein.hpp"
#include "heckeforge/central_map.hpp"
#include "heckeforge/dual_weights.hpp"
#include "heckeforge/hecke.hpp"

using namespace heckeforge;

namespace {

const char* const kGroups[] = {"SL2", "SL3", "Sp4", "G2"};

std::vector<ExtAffineElement> up_to(const AffineWeylGroup& g, int len) {
  return g.enumerate(len, 0);
}

}  // namespace

static void BM_HeckeMul(benchmark::State& state) {
  auto g = AffineWeylGroup::create(preset(kGroups[state.range(0)]));
  const auto xs = up_to(*g, static_cast<int>(state.range(1)));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  for (auto _ : state) {
    const auto a = HeckeElement::basis(g, xs[pick(rng)]);
    const auto b = HeckeElement::basis(g, xs[pick(rng)]);
    benchmark::DoNotOptimize(a * b);
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_HeckeMul)->Args({0, 8})->Args({1, 5})->Args({2, 5})->Args({3, 4});

static void BM_Theta(benchmark::State& state) {
  auto g = AffineWeylGroup::create(preset(kGroups[state.range(0)]));
  const int k = static_cast<int>(state.range(1));
  Cocharacter lam = g->root_datum().zero();
  lam[0] = k;
  if (lam.rank() > 1) lam[lam.rank() - 1] -= k;
  for (auto _ : state) {
    Bernstein b(g);
    benchmark::DoNotOptimize(b.theta(lam));
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_Theta)->Args({0, -3})->Args({1, 1})->Args({1, 2})->Args({2, 1})->Unit(benchmark::kMillisecond);

static void BM_CentralVerify(benchmark::State& state) {
  auto g = AffineWeylGroup::create(preset(kGroups[state.range(0)]));
  for (auto _ : state) {
    CentralMap cm(g);
    benchmark::DoNotOptimize(cm.verify(static_cast<int>(state.range(1))));
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_CentralVerify)->Args({0, 8})->Args({1, 4})->Unit(benchmark::kMillisecond);

static void BM_Freudenthal(benchmark::State& state) {
  const auto rd = preset(kGroups[state.range(0)]);
  Cocharacter mu = rd->zero();
  for (std::size_t i = 0; i < mu.rank(); ++i) mu[i] = static_cast<int>(state.range(1));
  mu = rd->dominant_representative(mu).first;
  for (auto _ : state) benchmark::DoNotOptimize(freudenthal_multiplicities(*rd, mu));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_Freudenthal)->Args({1, 4})->Args({2, 3})->Args({3, 3});

BENCHMARK_MAIN();
