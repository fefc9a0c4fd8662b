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

#ifndef MATROID_SHIFT_SHIFTED_H_
#define MATROID_SHIFT_SHIFTED_H_

#include <cstdint>
#include <vector>

#include "matroid_shift/constructions.h"
#include "matroid_shift/matroid.h"
#include "matroid_shift/types.h"

namespace matroid_shift {

// Sorts every row nonincreasing. The result is equivalent to the input.
Matrix01 Shift(const Matrix01& x);
IntMatrix Shift(const IntMatrix& c);

bool IsShifted(const IntMatrix& c);

// x ~ y: every row of x is a permutation of the same row of y. Throws on
// dimension mismatch.
bool Equivalent(const Matrix01& x, const Matrix01& y);

VulnVector VulnerabilityVector(const Matrix01& x);

// shift(c) . shift(x), the shifted objective.
std::int64_t ShiftedValue(const ProfitMatrix& c, const Matrix01& x);
// Plain inner product c . x.
std::int64_t Dot(const IntMatrix& c, const Matrix01& x);

// Sum of |c_ij| must not exceed 2^61, leaving room for the bases transform
// w = c + 2|c| + 1. Throws Error(kOverflow) otherwise.
inline constexpr std::int64_t kProfitGuard = std::int64_t{1} << 61;
void CheckProfitGuard(const ProfitMatrix& c);

struct ShiftedSolution {
  // Every column is a member of S (a basis of S when bases were requested).
  Matrix01 y;
  // shift(c) . shift(y), recomputed from y.
  std::int64_t value = 0;
  VulnVector vuln;
};

// max{ cbar . x : x in [S^n] } by greedy over the shuffle oracle. cbar must
// already be shifted. With bases == true the result is a basis of [S^n].
Matrix01 SolveShuffling(const MatroidDesc& s, int n, const ProfitMatrix& cbar,
                        bool bases);

// Finds y in S^n with y ~ x. Throws Error(kInfeasible) when x is not in
// [S^n].
Matrix01 SolveFiber(const MatroidDesc& s, int n, const Matrix01& x);

// max{ shift(c) . shift(x) : x in S^n }, over independent sets or, with
// bases == true, over n-tuples of bases.
ShiftedSolution SolveShifted(const MatroidDesc& s, int n, const ProfitMatrix& c,
                             bool bases);

// n bases of S whose vulnerability vector is minimal under LexLess. The
// value field holds the objective under c_ij = -(d+1)^j when it fits in 64
// bits and 0 otherwise.
ShiftedSolution SolveLexmin(const MatroidDesc& s, int n);

// The basis of [S^n] that SolveLexmin decomposes: greedy over the shuffle
// set in LexminOrder.
Matrix01 SolveLexminShuffling(const MatroidDesc& s, int n);

// The flattened element order used by SolveLexmin: all of column 0 (rows
// ascending), then column 1, and so on. This is the greedy order induced by
// the profit c_ij = -(d+1)^j after the bases transform.
std::vector<int> LexminOrder(int rows, int cols);

struct SmallShiftedSolution {
  IntMatrix y;
  std::int64_t value = 0;
  // counts[i] columns of y equal members[i]; columns appear in block order.
  std::vector<int> counts;
};

// Shifted optimization over an explicit list of m integer vectors by
// enumerating the (n+1)^(m-1)-bounded set of count tuples.
SmallShiftedSolution SolveShiftedSmall(
    const std::vector<std::vector<std::int64_t>>& members, int n,
    const ProfitMatrix& c);

// shift(c) . shift(y) for an integer matrix y.
std::int64_t ShiftedValue(const ProfitMatrix& c, const IntMatrix& y);

}  // namespace matroid_shift

#endif  // MATROID_SHIFT_SHIFTED_H_
