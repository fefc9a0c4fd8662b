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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "matroid_shift/bruteforce.h"
#include "matroid_shift/constructions.h"
#include "matroid_shift/error.h"
#include "matroid_shift/greedy.h"
#include "matroid_shift/intersection.h"
#include "test_corpus.h"

namespace matroid_shift {
namespace {

using testing::MatrixFromMask;
using testing::RandomGammoid;
using testing::RandomProfits;
using testing::SubsetFromMask;

// Path a - b - c with b on the left: e1 = (b, a), e2 = (b, c).
BipartiteGraph PathGraph() { return {1, 2, {{0, 0}, {0, 1}}}; }

// K_{2,2} with edges e11, e12, e21, e22.
BipartiteGraph K22() { return {2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}; }

std::int64_t BruteIntersectionValue(const MatroidDesc& m1, const MatroidDesc& m2,
                                    int n, const ProfitMatrix& c) {
  return brute::BruteShifted(brute::EnumerateCommonMembers(m1, m2), n, c).value;
}

TEST(WeightedMatroidIntersectionTest, Examples) {
  const MatroidDesc u = MatroidDesc::Uniform(3, 2);
  const std::vector<std::int64_t> w = {1, 2, 3};
  Subset01 s = WeightedMatroidIntersectionMax(u, u, w);
  EXPECT_EQ(s.Elements(), std::vector<int>({1, 2}));

  const auto [left, right] = MatchingMatroids(K22());
  const std::vector<std::int64_t> w2 = {5, 1, 1, 5};
  s = WeightedMatroidIntersectionMax(left, right, w2);
  EXPECT_EQ(s.Elements(), std::vector<int>({0, 3}));
  EXPECT_EQ(TotalWeight(s, w2), 10);

  const std::vector<std::int64_t> negative = {-1, -2, -3, -4};
  EXPECT_EQ(WeightedMatroidIntersectionMax(left, right, negative).Count(), 0);
}

TEST(WeightedMatroidIntersectionTest, MatchesBruteForce) {
  testing::Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 8);
    const MatroidDesc m1 = testing::RandomMatroid(rng, testing::ConcreteKinds()[rng() % 5], d);
    const MatroidDesc m2 = testing::RandomMatroid(rng, testing::ConcreteKinds()[rng() % 5], d);
    std::vector<std::int64_t> w(d);
    for (auto& v : w) v = static_cast<int>(rng() % 19) - 9;
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      const Subset01 s = SubsetFromMask(d, mask);
      if (m1.IsIndependent(s) && m2.IsIndependent(s)) {
        best = std::max(best, TotalWeight(s, w));
      }
    }
    const Subset01 got = WeightedMatroidIntersectionMax(m1, m2, w);
    ASSERT_TRUE(m1.IsIndependent(got) && m2.IsIndependent(got));
    ASSERT_EQ(TotalWeight(got, w), best)
        << testing::Describe(m1) << " & " << testing::Describe(m2);
  }
}

TEST(ShiftedValueIntersectionTest, Examples) {
  auto [left, right] = MatchingMatroids(PathGraph());
  EXPECT_EQ(ShiftedValueIntersection({left, right, 2, ProfitMatrix(2, 2, 1)}), 2);
  EXPECT_EQ(BruteIntersectionValue(left, right, 2, ProfitMatrix(2, 2, 1)), 2);

  auto [l22, r22] = MatchingMatroids(K22());
  // Row profit (1, 0) pays once per edge used at all; the two disjoint
  // perfect matchings cover all four edges.
  const ProfitMatrix c = IntMatrix::FromRows({{1, 0}, {1, 0}, {1, 0}, {1, 0}});
  ASSERT_EQ(BruteIntersectionValue(l22, r22, 2, c), 4);
  EXPECT_EQ(ShiftedValueIntersection({l22, r22, 2, c}), 4);
}

TEST(ShiftedValueIntersectionTest, SelfIntersectionEqualsShiftedSolver) {
  testing::Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 3);
    const MatroidDesc m = RandomGammoid(rng, d);
    const ProfitMatrix c = RandomProfits(rng, d, n, -5, 5);
    EXPECT_EQ(ShiftedValueIntersection({m, m, n, c}),
              SolveShifted(m, n, c, false).value);
  }
}

TEST(ShiftedValueIntersectionTest, RejectsGraphicKind) {
  try {
    ShiftedValueIntersection(
        {testing::Triangle(), MatroidDesc::Uniform(3, 1), 1, ProfitMatrix(3, 1)});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisallowedKind);
    EXPECT_NE(std::string(e.what()).find("strongly base orderable"), std::string::npos);
  }
}

TEST(ShiftedValueIntersectionTest, MatchesBruteForce) {
  testing::Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 3);
    const MatroidDesc m1 = RandomGammoid(rng, d);
    const MatroidDesc m2 = RandomGammoid(rng, d);
    const ProfitMatrix c = RandomProfits(rng, d, n, -5, 5);
    ASSERT_EQ(ShiftedValueIntersection({m1, m2, n, c}),
              BruteIntersectionValue(m1, m2, n, c))
        << testing::Describe(m1) << " & " << testing::Describe(m2) << " n=" << n;
  }
}

TEST(FiberBipartiteMatchingTest, Examples) {
  const Matrix01 x = Matrix01::FromRows({{1, 0}, {0, 1}});
  EXPECT_EQ(FiberBipartiteMatching(PathGraph(), 2, x), x);

  try {
    FiberBipartiteMatching(PathGraph(), 2, Matrix01::FromRows({{1, 1}, {1, 1}}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }

  const Matrix01 ones = Matrix01::FromRows({{1, 0}, {1, 0}, {1, 0}, {1, 0}});
  const Matrix01 y = FiberBipartiteMatching(K22(), 2, ones);
  EXPECT_TRUE(Equivalent(y, ones));
  for (int k = 0; k < 2; ++k) {
    EXPECT_TRUE(IsMatching(K22(), y.Column(k)));
    EXPECT_EQ(y.Column(k).Count(), 2);
  }
}

TEST(FiberBipartiteMatchingTest, ColorsEveryFeasibleMultiplicity) {
  for (const BipartiteGraph& g : testing::SmallBipartiteGraphs(5)) {
    const int d = g.ground_size();
    for (int n = 1; n <= 3; ++n) {
      if (d * n > 12) continue;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (d * n)); mask += 7) {
        const Matrix01 x = MatrixFromMask(d, n, mask);
        std::vector<int> left(g.left, 0), right(g.right, 0);
        for (int e = 0; e < d; ++e) {
          left[g.edges[e].first] += x.RowSum(e);
          right[g.edges[e].second] += x.RowSum(e);
        }
        const bool feasible = *std::max_element(left.begin(), left.end()) <= n &&
                              *std::max_element(right.begin(), right.end()) <= n;
        if (!feasible) {
          EXPECT_THROW(FiberBipartiteMatching(g, n, x), Error);
          continue;
        }
        const Matrix01 y = FiberBipartiteMatching(g, n, x);
        ASSERT_TRUE(Equivalent(x, y));
        for (int k = 0; k < n; ++k) ASSERT_TRUE(IsMatching(g, y.Column(k)));
      }
    }
  }
}

TEST(SolveShiftedBipartiteMatchingTest, Examples) {
  ShiftedSolution solution =
      SolveShiftedBipartiteMatching(PathGraph(), 2, ProfitMatrix(2, 2, 1));
  EXPECT_EQ(solution.value, 2);

  const BipartiteGraph single{1, 1, {{0, 0}}};
  solution = SolveShiftedBipartiteMatching(single, 3, IntMatrix::FromRows({{3, 2, 1}}));
  EXPECT_EQ(solution.value, 6);
  EXPECT_EQ(solution.y, Matrix01::FromRows({{1, 1, 1}}));

  const ProfitMatrix c = IntMatrix::FromRows({{4}, {1}, {2}, {6}});
  solution = SolveShiftedBipartiteMatching(K22(), 1, c);
  EXPECT_EQ(solution.value, 10);
  EXPECT_EQ(solution.y.Column(0).Elements(), std::vector<int>({0, 3}));
}

TEST(SolveShiftedBipartiteMatchingTest, MatchesBruteForce) {
  testing::Rng rng(29);
  const auto graphs = testing::SmallBipartiteGraphs(4);
  for (std::size_t t = 0; t < graphs.size(); t += 3) {
    const BipartiteGraph& g = graphs[t];
    const int n = 1 + static_cast<int>(rng() % 3);
    const ProfitMatrix c = RandomProfits(rng, g.ground_size(), n, -5, 5);
    const auto [left, right] = MatchingMatroids(g);
    const ShiftedSolution solution = SolveShiftedBipartiteMatching(g, n, c);
    ASSERT_EQ(solution.value, BruteIntersectionValue(left, right, n, c));
    for (int k = 0; k < n; ++k) ASSERT_TRUE(IsMatching(g, solution.y.Column(k)));
  }
}

TEST(BipartiteGraphTest, Validation) {
  EXPECT_THROW(ValidateBipartiteGraph({1, 1, {}}), Error);
  EXPECT_THROW(ValidateBipartiteGraph({1, 1, {{0, 1}}}), Error);
  EXPECT_NO_THROW(ValidateBipartiteGraph(K22()));
}

}  // namespace
}  // namespace matroid_shift
