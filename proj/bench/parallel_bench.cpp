// Serial reference vs OpenMP for the two parallel kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "zvk/alexander.hpp"
#include "zvk/parse.hpp"
#include "zvk/presentation.hpp"

using namespace zvk;

namespace {

Presentation g1() {
  return parse_presentation("gens: p, g+, g-; rels: p^9, g+^-1 p g+ p^-4, g-^-1 p g- p^-7");
}

std::vector<Exponent> sweep(int n) {
  std::vector<Exponent> ks(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ks[static_cast<std::size_t>(i)] = i;
  return ks;
}

// Balanced random relators on n generators, so every generator maps to t.
LaurentMatrix random_alexander_matrix(int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Symbol> gens;
  for (int i = 0; i < n; ++i) gens.emplace_back("x" + std::to_string(i));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Word> rels;
  for (int r = 0; r < n; ++r) {
    Word w;
    for (int i = 0; i < 6; ++i) {
      const Symbol a = gens[static_cast<std::size_t>(pick(rng))];
      const Symbol b = gens[static_cast<std::size_t>(pick(rng))];
      const Exponent e = sign(rng) ? 1 : -1;
      w = w * Word{{a, e}, {b, -e}};
    }
    rels.push_back(w);
  }
  return alexander_matrix(WeightedPresentation::uniform(Presentation(gens, rels)));
}

void BM_PatchSweep(benchmark::State& state, Execution exec) {
  const Presentation p = g1();
  const auto ks = sweep(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(patch_sweep(p, Symbol("g+"), Symbol("g-"), ks, exec, Symbol("p")));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MinorsGcd(benchmark::State& state, Execution exec) {
  const int n = static_cast<int>(state.range(0));
  const LaurentMatrix m = random_alexander_matrix(n, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minors_gcd(m, static_cast<std::size_t>(n - 1), exec));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_PatchSweep, serial, Execution::Serial)->Arg(9)->Arg(72)->UseRealTime();
BENCHMARK_CAPTURE(BM_PatchSweep, parallel, Execution::Parallel)->Arg(9)->Arg(72)->UseRealTime();
BENCHMARK_CAPTURE(BM_MinorsGcd, serial, Execution::Serial)->Arg(6)->Arg(9)->UseRealTime();
BENCHMARK_CAPTURE(BM_MinorsGcd, parallel, Execution::Parallel)->Arg(6)->Arg(9)->UseRealTime();

BENCHMARK_MAIN();
