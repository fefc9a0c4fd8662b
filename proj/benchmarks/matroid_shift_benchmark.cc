// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Micro-benchmarks for the oracle-driven solvers.

#include <cstdint>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "benchmark/benchmark.h"
#include "matroid_shift/constructions.h"
#include "matroid_shift/greedy.h"
#include "matroid_shift/intersection.h"
#include "matroid_shift/matroid.h"
#include "matroid_shift/shifted.h"

namespace matroid_shift {
namespace {

MatroidDesc CompleteGraph(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < vertices; ++a) {
    for (int b = a + 1; b < vertices; ++b) edges.emplace_back(a, b);
  }
  return MatroidDesc::Graphic(vertices, std::move(edges));
}

ProfitMatrix RandomProfits(int d, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-50, 50);
  std::vector<std::vector<std::int64_t>> rows(d, std::vector<std::int64_t>(n));
  for (auto& row : rows) {
    for (auto& v : row) v = entry(rng);
  }
  return IntMatrix::FromRows(rows);
}

void BM_GreedyMaxGraphic(benchmark::State& state) {
  const MatroidDesc graph = CompleteGraph(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<std::int64_t> w(graph.ground_size());
  for (auto& v : w) v = std::uniform_int_distribution<int>(-100, 100)(rng);
  for (auto _ : state) benchmark::DoNotOptimize(GreedyMax(graph, w, true));
}
BENCHMARK(BM_GreedyMaxGraphic)->Arg(8)->Arg(16)->Arg(32);

// Spanning tree packing: n lexicographically minimal trees of K_v.
void BM_SolveLexminComplete(benchmark::State& state) {
  const MatroidDesc graph = CompleteGraph(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(SolveLexmin(graph, n));
}
BENCHMARK(BM_SolveLexminComplete)
    ->Args({6, 2})
    ->Args({6, 4})
    ->Args({10, 3})
    ->Args({10, 6})
    ->Unit(benchmark::kMillisecond);

void BM_SolveShiftedUniform(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const MatroidDesc m = MatroidDesc::Uniform(d, d / 3);
  const ProfitMatrix c = RandomProfits(d, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(SolveShifted(m, n, c, false));
}
BENCHMARK(BM_SolveShiftedUniform)
    ->Args({12, 3})
    ->Args({24, 3})
    ->Args({24, 6})
    ->Unit(benchmark::kMillisecond);

void BM_ShuffleMembershipGraphic(benchmark::State& state) {
  const MatroidDesc graph = CompleteGraph(static_cast<int>(state.range(0)));
  const int n = 2;
  // Column sums of two greedy trees: a full member of the shuffle set.
  const ShiftedSolution trees = SolveLexmin(graph, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ShuffleIsIndependent(graph, n, trees.y));
  }
}
BENCHMARK(BM_ShuffleMembershipGraphic)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ShiftedValueIntersection(benchmark::State& state) {
  // Matchings of the complete bipartite graph K_{k,k}.
  const int k = static_cast<int>(state.range(0));
  BipartiteGraph g{k, k, {}};
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) g.edges.emplace_back(a, b);
  }
  const auto [m1, m2] = MatchingMatroids(g);
  const ProfitMatrix c = RandomProfits(g.ground_size(), 2, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ShiftedValueIntersection({m1, m2, 2, c}));
  }
}
BENCHMARK(BM_ShiftedValueIntersection)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace matroid_shift

BENCHMARK_MAIN();
