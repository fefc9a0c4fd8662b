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

#include "matroid_shift/bruteforce.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <string>

#include "matroid_shift/error.h"

namespace matroid_shift::brute {
namespace {

Subset01 FromMask(int d, std::uint64_t mask) {
  Subset01 s(d);
  for (int e = 0; e < d; ++e) s.Set(e, (mask >> e) & 1);
  return s;
}

void CheckGround(int d, const Limits& limits) {
  if (d > limits.max_ground_size || d > 62) {
    throw Error(ErrorCode::kGuardExceeded,
                "ground set of size " + std::to_string(d) +
                    " is too large to enumerate");
  }
}

// Multiplicity vector of a multiset of members.
std::vector<int> Multiplicities(const ExplicitSetSystem& sys,
                                std::span<const int> picks) {
  std::vector<int> mult(sys.ground_size(), 0);
  for (int p : picks) {
    for (int e : sys.members()[p].Elements()) ++mult[e];
  }
  return mult;
}

}  // namespace

Limits Limits::FromEnvironment() {
  Limits limits;
  if (const char* env = std::getenv("MATROID_SHIFT_GUARD")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) limits.max_multisets = cap;
  }
  return limits;
}

ExplicitSetSystem::ExplicitSetSystem(int ground_size,
                                     std::vector<Subset01> members)
    : ground_size_(ground_size), members_(std::move(members)) {
  std::set<std::vector<int>> seen;
  for (const Subset01& m : members_) {
    if (m.ground_size() != ground_size_) {
      throw Error(ErrorCode::kDimensionMismatch, "member has the wrong length");
    }
    if (!seen.insert(m.Elements()).second) {
      throw Error(ErrorCode::kInvalidInput, "duplicate member");
    }
  }
}

ExplicitSetSystem EnumerateMembers(const IndependenceOracle& m, bool bases_only,
                                   const Limits& limits) {
  const int d = m.ground_size();
  CheckGround(d, limits);
  std::vector<Subset01> members;
  int rank = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    Subset01 s = FromMask(d, mask);
    if (!m.IsIndependent(s)) continue;
    rank = std::max(rank, s.Count());
    members.push_back(std::move(s));
  }
  if (bases_only) {
    std::erase_if(members, [rank](const Subset01& s) { return s.Count() != rank; });
  }
  return ExplicitSetSystem(d, std::move(members));
}

ExplicitSetSystem EnumerateCommonMembers(const IndependenceOracle& m1,
                                         const IndependenceOracle& m2,
                                         const Limits& limits) {
  if (m1.ground_size() != m2.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch, "ground sets differ");
  }
  const int d = m1.ground_size();
  CheckGround(d, limits);
  std::vector<Subset01> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    Subset01 s = FromMask(d, mask);
    if (m1.IsIndependent(s) && m2.IsIndependent(s)) members.push_back(std::move(s));
  }
  return ExplicitSetSystem(d, std::move(members));
}

std::uint64_t MultisetCount(int m, int n) {
  // C(m + n - 1, n), built as a product of exact binomials.
  if (m <= 0) return n == 0 ? 1 : 0;
  unsigned __int128 count = 1;
  for (int k = 1; k <= n; ++k) {
    count = count * static_cast<unsigned>(m - 1 + k) / static_cast<unsigned>(k);
    if (count > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(count);
}

void ForEachMultiset(int m, int n, const Limits& limits,
                     const std::function<void(std::span<const int>)>& visit) {
  if (m < 1 || n < 1) {
    throw Error(ErrorCode::kInvalidInput, "need at least one member and copy");
  }
  const std::uint64_t count = MultisetCount(m, n);
  if (count > limits.max_multisets) {
    throw Error(ErrorCode::kGuardExceeded,
                std::to_string(count) + " multisets exceed the guard of " +
                    std::to_string(limits.max_multisets));
  }
  std::vector<int> picks(n, 0);
  while (true) {
    visit(picks);
    int k = n - 1;
    while (k >= 0 && picks[k] == m - 1) --k;
    if (k < 0) return;
    ++picks[k];
    std::fill(picks.begin() + k + 1, picks.end(), picks[k]);
  }
}

Matrix01 BlockMatrix(const ExplicitSetSystem& sys, std::span<const int> picks) {
  Matrix01 x(sys.ground_size(), static_cast<int>(picks.size()));
  for (int k = 0; k < x.cols(); ++k) {
    for (int e : sys.members()[picks[k]].Elements()) x.set(e, k);
  }
  return x;
}

ShiftedOptimum BruteShifted(const ExplicitSetSystem& sys, int n,
                            const ProfitMatrix& c, const Limits& limits) {
  if (c.rows() != sys.ground_size() || c.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "profit matrix shape mismatch");
  }
  // prefix[i][t] = the sum of the t largest entries of row i of c. A row of
  // the shifted solution with t ones picks exactly those.
  std::vector<std::vector<std::int64_t>> prefix(c.rows());
  for (int i = 0; i < c.rows(); ++i) {
    std::vector<std::int64_t> row(c.Row(i).begin(), c.Row(i).end());
    std::sort(row.rbegin(), row.rend());
    prefix[i].assign(n + 1, 0);
    for (int t = 0; t < n; ++t) prefix[i][t + 1] = prefix[i][t] + row[t];
  }
  ShiftedOptimum best;
  std::vector<int> best_picks;
  ForEachMultiset(sys.size(), n, limits, [&](std::span<const int> picks) {
    const std::vector<int> mult = Multiplicities(sys, picks);
    std::int64_t value = 0;
    for (int i = 0; i < c.rows(); ++i) value += prefix[i][mult[i]];
    if (best_picks.empty() || value > best.value) {
      best.value = value;
      best_picks.assign(picks.begin(), picks.end());
    }
  });
  best.witness = BlockMatrix(sys, best_picks);
  return best;
}

LexminOptimum BruteLexmin(const ExplicitSetSystem& sys, int n,
                          const Limits& limits) {
  LexminOptimum best;
  std::vector<int> best_picks;
  ForEachMultiset(sys.size(), n, limits, [&](std::span<const int> picks) {
    // Entry k counts the elements used at least k+1 times.
    std::vector<int> values(n, 0);
    for (int mult : Multiplicities(sys, picks)) {
      for (int k = 0; k < mult; ++k) ++values[k];
    }
    VulnVector vuln(std::move(values));
    if (best_picks.empty() || LexLess(vuln, best.vuln)) {
      best.vuln = std::move(vuln);
      best_picks.assign(picks.begin(), picks.end());
    }
  });
  best.witness = BlockMatrix(sys, best_picks);
  return best;
}

bool BruteShuffleMembership(const ExplicitSetSystem& sys, int n,
                            const Matrix01& x, const Limits& limits) {
  if (x.rows() != sys.ground_size() || x.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix shape mismatch");
  }
  const std::vector<int> target = x.RowSums();
  bool found = false;
  ForEachMultiset(sys.size(), n, limits, [&](std::span<const int> picks) {
    if (!found && Multiplicities(sys, picks) == target) found = true;
  });
  return found;
}

}  // namespace matroid_shift::brute
