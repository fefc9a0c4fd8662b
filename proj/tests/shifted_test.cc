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
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "matroid_shift/bruteforce.h"
#include "matroid_shift/constructions.h"
#include "matroid_shift/error.h"
#include "matroid_shift/greedy.h"
#include "matroid_shift/shifted.h"
#include "test_corpus.h"

namespace matroid_shift {
namespace {

using testing::K4;
using testing::MatrixFromMask;
using testing::RandomProfits;
using testing::SmallCorpus;
using testing::Triangle;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kInternal;
}

void ExpectColumnsIn(const MatroidDesc& s, const Matrix01& y, bool bases) {
  const int rank = Rank(s);
  for (int k = 0; k < y.cols(); ++k) {
    EXPECT_TRUE(s.IsIndependent(y.Column(k)));
    if (bases) {
      EXPECT_EQ(y.Column(k).Count(), rank);
    }
  }
}

TEST(ShiftTest, Examples) {
  EXPECT_EQ(Shift(Matrix01::FromRows({{0, 1}, {1, 1}})),
            Matrix01::FromRows({{1, 0}, {1, 1}}));
  const Matrix01 shifted = Matrix01::FromRows({{1, 1, 0}, {1, 0, 0}});
  EXPECT_EQ(Shift(shifted), shifted);
  EXPECT_EQ(Shift(Matrix01(2, 3)), Matrix01(2, 3));
  EXPECT_EQ(Shift(IntMatrix::FromRows({{-1, 4, 2}})),
            IntMatrix::FromRows({{4, 2, -1}}));
}

TEST(ShiftTest, IdempotentEquivalentAndSorted) {
  testing::Rng rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 4);
    const Matrix01 x = MatrixFromMask(d, n, rng());
    const Matrix01 xbar = Shift(x);
    EXPECT_EQ(Shift(xbar), xbar);
    EXPECT_TRUE(Equivalent(x, xbar));
    for (int i = 0; i < d; ++i) {
      for (int j = 1; j < n; ++j) EXPECT_GE(xbar.at(i, j - 1), xbar.at(i, j));
    }
  }
}

TEST(EquivalentTest, Examples) {
  EXPECT_TRUE(Equivalent(Matrix01::FromRows({{1, 0}}), Matrix01::FromRows({{0, 1}})));
  const Matrix01 x = Matrix01::FromRows({{1, 0, 1}, {0, 0, 1}});
  EXPECT_TRUE(Equivalent(x, x));
  EXPECT_FALSE(Equivalent(Matrix01::FromRows({{1, 1}}), Matrix01::FromRows({{1, 0}})));
  EXPECT_THROW(Equivalent(Matrix01(1, 2), Matrix01(2, 1)), Error);
}

TEST(EquivalentTest, EquivalentMatricesShareInvariants) {
  testing::Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 3;
    const int n = 3;
    const Matrix01 x = MatrixFromMask(d, n, rng());
    // Permute each row independently.
    Matrix01 y(d, n);
    for (int i = 0; i < d; ++i) {
      std::vector<int> row = x.ToRows()[i];
      std::shuffle(row.begin(), row.end(), rng);
      for (int j = 0; j < n; ++j) y.set(i, j, row[j]);
    }
    ASSERT_TRUE(Equivalent(x, y));
    EXPECT_EQ(VulnerabilityVector(x), VulnerabilityVector(y));
    const ProfitMatrix c = RandomProfits(rng, d, n, -5, 5);
    EXPECT_EQ(ShiftedValue(c, x), ShiftedValue(c, y));
  }
}

TEST(VulnerabilityVectorTest, Examples) {
  // Trees {e1,e2} and {e2,e3} of the triangle.
  EXPECT_EQ(VulnerabilityVector(Matrix01::FromRows({{1, 0}, {1, 1}, {0, 1}})),
            VulnVector({3, 1}));
  EXPECT_EQ(VulnerabilityVector(Matrix01::FromRows({{1, 1, 1}, {1, 1, 1}})),
            VulnVector({2, 2, 2}));
  EXPECT_EQ(VulnerabilityVector(Matrix01(3, 2)), VulnVector({0, 0}));
}

TEST(VulnerabilityVectorTest, EqualsColumnCountsOfShift) {
  testing::Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix01 x = MatrixFromMask(4, 3, rng());
    const Matrix01 xbar = Shift(x);
    const VulnVector v = VulnerabilityVector(x);
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(v[k], xbar.Column(k).Count());
      if (k > 0) {
        EXPECT_GE(v[k - 1], v[k]);
      }
    }
  }
}

TEST(LexLessTest, Examples) {
  EXPECT_TRUE(LexLess(VulnVector({3, 1}), VulnVector({2, 2})));
  EXPECT_FALSE(LexLess(VulnVector({2, 2}), VulnVector({3, 1})));
  EXPECT_FALSE(LexLess(VulnVector({3, 1}), VulnVector({3, 1})));
  EXPECT_TRUE(LexLess(VulnVector({5, 0}), VulnVector({4, 1})));
  EXPECT_THROW(LexLess(VulnVector({1}), VulnVector({1, 0})), Error);
}

TEST(SolveShufflingTest, Examples) {
  const MatroidDesc u21 = MatroidDesc::Uniform(2, 1);
  const ProfitMatrix cbar = IntMatrix::FromRows({{1, 0}, {1, 0}});
  const Matrix01 x = SolveShuffling(u21, 2, cbar, true);
  EXPECT_EQ(x.Count(), 2);
  EXPECT_EQ(Dot(cbar, x), 2);

  const Matrix01 trees = SolveShuffling(Triangle(), 2, ProfitMatrix(3, 2, 1), true);
  EXPECT_EQ(trees.Count(), 4);

  const Matrix01 none = SolveShuffling(MatroidDesc::Uniform(3, 1), 1,
                                       ProfitMatrix(3, 1, -1), false);
  EXPECT_EQ(none, Matrix01(3, 1));
}

TEST(SolveShufflingTest, RejectsUnshiftedProfits) {
  EXPECT_EQ(CodeOf([] {
              SolveShuffling(Triangle(), 2, IntMatrix::FromRows({{0, 1}, {0, 0}, {0, 0}}),
                             false);
            }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(CodeOf([] { SolveShuffling(Triangle(), 2, ProfitMatrix(2, 2), false); }),
            ErrorCode::kDimensionMismatch);
}

TEST(SolveShufflingTest, MatchesExhaustiveOptimumOverShuffleSet) {
  testing::Rng rng(8);
  for (const MatroidDesc& m : SmallCorpus(3, 31)) {
    const int d = m.ground_size();
    const int n = 2;
    const ShuffleOracle shuffle(m, n);
    ProfitMatrix cbar = Shift(RandomProfits(rng, d, n, -5, 5));
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (d * n)); ++mask) {
      const Matrix01 x = MatrixFromMask(d, n, mask);
      if (shuffle.IsIndependent(x.Flatten())) best = std::max(best, Dot(cbar, x));
    }
    EXPECT_EQ(Dot(cbar, SolveShuffling(m, n, cbar, false)), best);
  }
}

TEST(SolveFiberTest, Examples) {
  const MatroidDesc u21 = MatroidDesc::Uniform(2, 1);
  const Matrix01 y = SolveFiber(u21, 2, Matrix01::FromRows({{1, 0}, {1, 0}}));
  EXPECT_TRUE(y == Matrix01::FromRows({{1, 0}, {0, 1}}) ||
              y == Matrix01::FromRows({{0, 1}, {1, 0}}));

  const Matrix01 trees = Matrix01::FromRows({{1, 1}, {1, 0}, {0, 1}});
  const Matrix01 fiber = SolveFiber(Triangle(), 2, trees);
  EXPECT_TRUE(Equivalent(fiber, trees));
  ExpectColumnsIn(Triangle(), fiber, true);

  EXPECT_EQ(CodeOf([] { SolveFiber(Triangle(), 2, Matrix01::FromRows({{1, 1}, {1, 1}, {1, 1}})); }),
            ErrorCode::kInfeasible);
}

TEST(SolveShiftedTest, Examples) {
  const ProfitMatrix c = IntMatrix::FromRows({{3, 0}, {3, 0}, {0, 0}});
  ShiftedSolution solution = SolveShifted(Triangle(), 2, c, true);
  EXPECT_EQ(solution.value, 6);
  ExpectColumnsIn(Triangle(), solution.y, true);

  solution = SolveShifted(K4(), 2, ProfitMatrix(6, 2), true);
  EXPECT_EQ(solution.value, 0);
  ExpectColumnsIn(K4(), solution.y, true);

  // Spreading the three singletons wins: each row (1,0,0) earns 2.
  const ProfitMatrix spread = IntMatrix::FromRows({{2, 1, 0}, {2, 1, 0}, {2, 1, 0}});
  const brute::ExplicitSetSystem bases =
      brute::EnumerateMembers(MatroidDesc::Uniform(3, 1), true);
  ASSERT_EQ(brute::BruteShifted(bases, 3, spread).value, 6);
  EXPECT_EQ(SolveShifted(MatroidDesc::Uniform(3, 1), 3, spread, true).value, 6);
}

TEST(SolveShiftedTest, GuardsProfitRange) {
  ProfitMatrix c(3, 2);
  c.at(0, 0) = kProfitGuard;
  c.at(1, 0) = 1;
  EXPECT_EQ(CodeOf([&] { SolveShifted(Triangle(), 2, c, false); }), ErrorCode::kOverflow);
}

TEST(SolveShiftedTest, MatchesBruteForce) {
  testing::Rng rng(9);
  for (const MatroidDesc& m : SmallCorpus(6, 41)) {
    for (int n = 1; n <= 3; ++n) {
      for (bool bases : {false, true}) {
        const ProfitMatrix c = RandomProfits(rng, m.ground_size(), n, -5, 5);
        const ShiftedSolution solution = SolveShifted(m, n, c, bases);
        const brute::ShiftedOptimum expected =
            brute::BruteShifted(brute::EnumerateMembers(m, bases), n, c);
        ASSERT_EQ(solution.value, expected.value)
            << testing::Describe(m) << " n=" << n << " bases=" << bases;
        EXPECT_EQ(solution.value, ShiftedValue(c, solution.y));
        ExpectColumnsIn(m, solution.y, bases);
      }
    }
  }
}

TEST(SolveShiftedTest, NoSampledFeasiblePointBeatsTheOptimum) {
  testing::Rng rng(10);
  for (const MatroidDesc& m : SmallCorpus(5, 43)) {
    const int n = 3;
    const ProfitMatrix c = RandomProfits(rng, m.ground_size(), n, -5, 5);
    const ShiftedSolution solution = SolveShifted(m, n, c, false);
    const auto members = brute::EnumerateMembers(m, false).members();
    std::uniform_int_distribution<int> pick(0, static_cast<int>(members.size()) - 1);
    for (int sample = 0; sample < 1000; ++sample) {
      std::vector<Subset01> columns;
      for (int k = 0; k < n; ++k) columns.push_back(members[pick(rng)]);
      const Matrix01 z = Matrix01::FromColumns(m.ground_size(), columns);
      ASSERT_GE(solution.value, ShiftedValue(c, z));
    }
  }
}

// For bases x, y of [S^n] and w = c + 2|c| + 1: wx - wy = cx - cy.
TEST(BasesTransformTest, PreservesDifferencesBetweenBases) {
  testing::Rng rng(12);
  for (const MatroidDesc& m : SmallCorpus(4, 47)) {
    const int d = m.ground_size();
    const int n = 2;
    const ShuffleOracle shuffle(m, n);
    const ProfitMatrix c = RandomProfits(rng, d, n, -5, 5);
    std::int64_t abs_sum = 0;
    for (std::int64_t v : c.Flat()) abs_sum += std::abs(v);
    ProfitMatrix w = c;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < n; ++j) w.at(i, j) += 2 * abs_sum + 1;
    }
    std::vector<Matrix01> bases;
    const int top = n * Rank(m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (d * n)); ++mask) {
      if (__builtin_popcountll(mask) != top) continue;
      const Matrix01 x = MatrixFromMask(d, n, mask);
      if (shuffle.IsIndependent(x.Flatten())) bases.push_back(x);
    }
    for (int trial = 0; trial < 20 && bases.size() > 1; ++trial) {
      const Matrix01& x = bases[rng() % bases.size()];
      const Matrix01& y = bases[rng() % bases.size()];
      EXPECT_EQ(Dot(w, x) - Dot(w, y), Dot(c, x) - Dot(c, y));
    }
  }
}

TEST(SolveLexminTest, NamedInstances) {
  const brute::LexminOptimum triangle =
      brute::BruteLexmin(brute::EnumerateMembers(Triangle(), true), 2);
  ASSERT_EQ(triangle.vuln, VulnVector({3, 1}));
  EXPECT_EQ(SolveLexmin(Triangle(), 2).vuln, triangle.vuln);

  const brute::LexminOptimum k4 =
      brute::BruteLexmin(brute::EnumerateMembers(K4(), true), 2);
  ASSERT_EQ(k4.vuln, VulnVector({6, 0}));
  const ShiftedSolution solution = SolveLexmin(K4(), 2);
  EXPECT_EQ(solution.vuln, k4.vuln);
  ExpectColumnsIn(K4(), solution.y, true);
}

TEST(SolveLexminTest, TreeIsFullyVulnerable) {
  for (int n = 1; n <= 4; ++n) {
    const ShiftedSolution solution = SolveLexmin(testing::Path(3), n);
    EXPECT_EQ(solution.vuln, VulnVector(std::vector<int>(n, 3)));
  }
}

TEST(SolveLexminTest, RankZeroGivesEmptyColumns) {
  const ShiftedSolution solution = SolveLexmin(MatroidDesc::Uniform(3, 0), 2);
  EXPECT_EQ(solution.y, Matrix01(3, 2));
}

TEST(SolveLexminTest, MatchesBruteForce) {
  for (const MatroidDesc& m : SmallCorpus(6, 53)) {
    for (int n = 2; n <= 3; ++n) {
      const brute::LexminOptimum expected =
          brute::BruteLexmin(brute::EnumerateMembers(m, true), n);
      const ShiftedSolution solution = SolveLexmin(m, n);
      ASSERT_EQ(solution.vuln, expected.vuln) << testing::Describe(m) << " n=" << n;
      ExpectColumnsIn(m, solution.y, true);
    }
  }
}

TEST(SolveLexminTest, ReportsLexicographicObjective) {
  // vuln (3,1) with d = 3: -(3 + 1 * 4).
  EXPECT_EQ(SolveLexmin(Triangle(), 2).value, -7);
}

TEST(SolveLexminTest, LargeNStaysExact) {
  // The explicit weights 4^39 would not fit in 64 bits. The 80 edge uses
  // spread as multiplicities (27, 27, 26).
  const ShiftedSolution solution = SolveLexmin(Triangle(), 40);
  EXPECT_EQ(solution.vuln[27], 0);
  EXPECT_EQ(solution.vuln[26], 2);
  EXPECT_EQ(solution.vuln[25], 3);
  EXPECT_EQ(solution.value, 0);
  ExpectColumnsIn(Triangle(), solution.y, true);
}

// Ordered-tuple enumeration over integer members: the multiset reduction
// must not change the optimum.
std::int64_t OrderedTupleOptimum(const std::vector<std::vector<std::int64_t>>& members,
                                 int n, const ProfitMatrix& c) {
  const int d = static_cast<int>(members[0].size());
  const int m = static_cast<int>(members.size());
  std::int64_t best = INT64_MIN;
  std::vector<int> tuple(n, 0);
  while (true) {
    IntMatrix y(d, n);
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < d; ++i) y.at(i, k) = members[tuple[k]][i];
    }
    best = std::max(best, ShiftedValue(c, y));
    int k = 0;
    while (k < n && ++tuple[k] == m) tuple[k++] = 0;
    if (k == n) return best;
  }
}

TEST(SolveShiftedSmallTest, Examples) {
  const ProfitMatrix c = IntMatrix::FromRows({{2, 1, 0}, {2, 1, 0}});
  const SmallShiftedSolution solution = SolveShiftedSmall({{1, 0}, {0, 1}}, 3, c);
  EXPECT_EQ(solution.value, 5);
  EXPECT_TRUE(solution.counts == std::vector<int>({2, 1}) ||
              solution.counts == std::vector<int>({1, 2}));

  const SmallShiftedSolution single = SolveShiftedSmall({{1, 2}}, 3, c);
  EXPECT_EQ(single.y, IntMatrix::FromRows({{1, 1, 1}, {2, 2, 2}}));
  EXPECT_EQ(single.value, 3 + 6);

  EXPECT_EQ(SolveShiftedSmall({{0, 0}}, 2, IntMatrix::FromRows({{4, -1}, {3, 3}})).value, 0);
  EXPECT_THROW(SolveShiftedSmall({}, 2, c), Error);
}

TEST(SolveShiftedSmallTest, MatchesOrderedTuplesOnIntegerMembers) {
  testing::Rng rng(13);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<std::int64_t>> members(m, std::vector<std::int64_t>(d));
    for (auto& z : members) {
      for (auto& v : z) v = entry(rng);
    }
    const ProfitMatrix c = RandomProfits(rng, d, n, -5, 5);
    const SmallShiftedSolution solution = SolveShiftedSmall(members, n, c);
    ASSERT_EQ(solution.value, OrderedTupleOptimum(members, n, c));
    EXPECT_EQ(solution.value, ShiftedValue(c, solution.y));
  }
}

TEST(SolveShiftedSmallTest, GuardsObjectiveRange) {
  const ProfitMatrix c = IntMatrix::FromRows({{kProfitGuard / 2}});
  EXPECT_THROW(SolveShiftedSmall({{1000}}, 1, c), Error);
}

}  // namespace
}  // namespace matroid_shift
