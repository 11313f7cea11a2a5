#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "nilloops/aut_action.hpp"
#include "nilloops/enumerator.hpp"
#include "nilloops/gfp.hpp"
#include "nilloops/isomorphism.hpp"
#include "nilloops/library.hpp"

using namespace nilloops;

namespace {

FieldMatrix random_matrix(int p, int n, std::mt19937& rng) {
  FieldMatrix m(p, n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m.set(r, c, static_cast<int>(rng() % p));
  }
  return m;
}

void BM_RrefGf2(benchmark::State& state) {
  std::mt19937 rng(1);
  const FieldMatrix m = random_matrix(2, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefGf2)->Arg(25)->Arg(81)->Arg(121);

void BM_RrefDenseGf2(benchmark::State& state) {
  std::mt19937 rng(1);
  const FieldMatrix m = random_matrix(2, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(detail::rref_dense(m));
}
BENCHMARK(BM_RrefDenseGf2)->Arg(25)->Arg(81)->Arg(121);

void BM_RrefGf3(benchmark::State& state) {
  std::mt19937 rng(1);
  const FieldMatrix m = random_matrix(3, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefGf3)->Arg(25)->Arg(81);

void BM_IsomorphicOrder10(benchmark::State& state) {
  const LoopLibrary lib = build_library(10);
  std::mt19937 rng(2);
  std::vector<std::pair<Loop, Loop>> pairs;
  for (int i = 0; i < 64; ++i) {
    const Loop& a = lib[rng() % lib.size()];
    Permutation perm(10);
    for (int k = 0; k < 10; ++k) perm[k] = k;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    pairs.emplace_back(a, relabel(a, perm));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(isomorphic(a, b));
  }
}
BENCHMARK(BM_IsomorphicOrder10);

void BM_AutomorphismGroupOrder8(benchmark::State& state) {
  const Loop l = direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(l));
}
BENCHMARK(BM_AutomorphismGroupOrder8);

void BM_BuildLibrary(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_library(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildLibrary)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_CountOrder(benchmark::State& state) {
  Enumerator e;
  const int n = static_cast<int>(state.range(0));
  for (int p : prime_divisors(n)) e.library(n / p);
  for (auto _ : state) benchmark::DoNotOptimize(e.count_order(n));
}
BENCHMARK(BM_CountOrder)->Arg(12)->Arg(15)->Arg(21)->Arg(22)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
