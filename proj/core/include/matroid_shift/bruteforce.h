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

#ifndef MATROID_SHIFT_BRUTEFORCE_H_
#define MATROID_SHIFT_BRUTEFORCE_H_

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "matroid_shift/matroid.h"
#include "matroid_shift/types.h"

// Exhaustive reference solvers. They only use the independence oracle and
// the problem definitions, never the constructions or solvers.
namespace matroid_shift::brute {

struct Limits {
  int max_ground_size = 20;
  std::uint64_t max_multisets = 10'000'000;

  // Defaults, with max_multisets replaced by MATROID_SHIFT_GUARD if set.
  static Limits FromEnvironment();
};

// An explicit list of distinct members of S (or of its bases).
class ExplicitSetSystem {
 public:
  ExplicitSetSystem(int ground_size, std::vector<Subset01> members);

  int ground_size() const { return ground_size_; }
  const std::vector<Subset01>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }

 private:
  int ground_size_;
  std::vector<Subset01> members_;
};

// Filters the power set through the oracle. Members are listed in
// increasing order of their bitmask.
ExplicitSetSystem EnumerateMembers(const IndependenceOracle& m, bool bases_only,
                                   const Limits& limits = {});

// Members independent in both matroids.
ExplicitSetSystem EnumerateCommonMembers(const IndependenceOracle& m1,
                                         const IndependenceOracle& m2,
                                         const Limits& limits = {});

// Number of multisets of size n drawn from m kinds, saturating at UINT64_MAX.
std::uint64_t MultisetCount(int m, int n);

// Visits every nondecreasing index tuple (i_1 <= ... <= i_n) over [m].
// Throws Error(kGuardExceeded) if the count exceeds limits.max_multisets.
void ForEachMultiset(int m, int n, const Limits& limits,
                     const std::function<void(std::span<const int>)>& visit);

// The matrix whose k-th column is members[picks[k]].
Matrix01 BlockMatrix(const ExplicitSetSystem& sys, std::span<const int> picks);

struct ShiftedOptimum {
  std::int64_t value = 0;
  Matrix01 witness;
};

ShiftedOptimum BruteShifted(const ExplicitSetSystem& sys, int n,
                            const ProfitMatrix& c, const Limits& limits = {});

struct LexminOptimum {
  VulnVector vuln;
  Matrix01 witness;
};

LexminOptimum BruteLexmin(const ExplicitSetSystem& sys, int n,
                          const Limits& limits = {});

// Whether some multiset of n members has element multiplicities equal to
// the row sums of x.
bool BruteShuffleMembership(const ExplicitSetSystem& sys, int n,
                            const Matrix01& x, const Limits& limits = {});

}  // namespace matroid_shift::brute

#endif  // MATROID_SHIFT_BRUTEFORCE_H_
