// Serial reference against the OpenMP column sweep on random sparse rational matrices.
#include <map>
#include <random>

#include <benchmark/benchmark.h>

#include "folindex/linalg.hpp"

using namespace folindex;

namespace {

// Banded rows with small rational entries, shaped like the multiplication
// matrices of truncated jet spaces: many rows share a leading column.
SparseMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::uniform_int_distribution<std::size_t> start(0, cols / 2), width(3, 12);
  SparseMatrix m(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::map<std::size_t, Rational> e;
    std::size_t s = start(rng), w = width(rng);
    for (std::size_t c = s; c < std::min(cols, s + w); ++c) {
      long n = num(rng);
      if (n) e[c] = Rational(n, den(rng));
    }
    if (!e.empty()) m.add_row(make_row(e));
  }
  return m;
}

void BM_RankSerial(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  SparseMatrix m = random_matrix(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank_serial(m));
  state.SetComplexityN(state.range(0));
}

void BM_RankParallel(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  SparseMatrix m = random_matrix(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank_parallel(m));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_RankSerial)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
