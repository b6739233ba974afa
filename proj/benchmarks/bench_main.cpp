#include <benchmark/benchmark.h>

#include "twoblock/embedder.hpp"
#include "twoblock/generators.hpp"
#include "twoblock/oracle.hpp"
#include "twoblock/search.hpp"
#include "twoblock/threshold.hpp"

namespace {

using namespace twoblock;

void bm_longest_path_tournament(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OrientedGraph g = random_tournament(n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(longest_directed_path(g));
  }
}
BENCHMARK(bm_longest_path_tournament)->Arg(11)->Arg(15)->Arg(19);

void bm_longest_path_sparse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OrientedGraph g = random_with_min_semidegree(n, 3, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(longest_directed_path(g));
  }
}
BENCHMARK(bm_longest_path_sparse)->Arg(12)->Arg(16)->Arg(20);

void bm_embed_two_block(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int ell = k / 2;
  const Rational thr = two_block_threshold(k, ell);
  const int d = static_cast<int>((thr.num + thr.den - 1) / thr.den);
  const OrientedGraph g = random_with_min_semidegree(2 * d + 3, d, 23);
  const TwoBlockSpec spec{k, ell, Orientation::BackFirst};
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed_two_block(g, spec));
  }
}
BENCHMARK(bm_embed_two_block)->Arg(4)->Arg(6)->Arg(8);

void bm_oracle_survey(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const OrientedGraph g = regular_tournament(k + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(contains_all_orientations(g, k));
  }
}
BENCHMARK(bm_oracle_survey)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
