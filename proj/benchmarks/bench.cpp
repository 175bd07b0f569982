#include <benchmark/benchmark.h>

#include "twisted/chars.hpp"
#include "twisted/corpus.hpp"
#include "twisted/lattice.hpp"
#include "twisted/twisted.hpp"

using namespace twisted;

static void BM_ReidemeisterPartitionS4(benchmark::State& state) {
  FiniteGroup g = symmetric_group(4);
  Automorphism id = identity_automorphism(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(reidemeister_partition(g, id).count);
}
BENCHMARK(BM_ReidemeisterPartitionS4);

static void BM_ReidemeisterPartitionA5(benchmark::State& state) {
  FiniteGroup g = alternating_group(5);
  Automorphism id = identity_automorphism(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(reidemeister_partition(g, id).count);
}
BENCHMARK(BM_ReidemeisterPartitionA5);

static void BM_EnumerateAutomorphismsS4(benchmark::State& state) {
  FiniteGroup g = symmetric_group(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_automorphisms(g).size());
}
BENCHMARK(BM_EnumerateAutomorphismsS4);

static void BM_CharacterTableS4(benchmark::State& state) {
  FiniteGroup g = symmetric_group(4);
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g).k);
}
BENCHMARK(BM_CharacterTableS4);

static void BM_CharacterTableA5(benchmark::State& state) {
  FiniteGroup g = alternating_group(5);
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g).k);
}
BENCHMARK(BM_CharacterTableA5);

static void BM_CoinvariantsH27(benchmark::State& state) {
  FiniteGroup g = heisenberg_group(3);
  Automorphism id = identity_automorphism(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(twisted_coinvariants_dimension(g, id));
}
BENCHMARK(BM_CoinvariantsH27);

static void BM_SmithNormalForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  IntMatrix a(n);
  // deterministic pseudo-random entries
  long long x = 1;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      x = (x * 6364136223846793005LL + 1442695040888963407LL);
      a.at(r, c) = static_cast<long>((x >> 33) % 19 - 9);
    }
  for (auto _ : state)
    benchmark::DoNotOptimize(smith_normal_form(a).divisors.size());
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8);

static void BM_SpectrumZn(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        spectrum_search(SpectrumFamily::Zn, 2, 20, 1).realized.size());
}
BENCHMARK(BM_SpectrumZn);

BENCHMARK_MAIN();
