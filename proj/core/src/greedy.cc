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

#include "matroid_shift/greedy.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "matroid_shift/error.h"

namespace matroid_shift {

OracleBackedSet::OracleBackedSet(const IndependenceOracle& oracle)
    : oracle_(oracle), current_(oracle.ground_size()) {}

bool OracleBackedSet::TryAdd(int e) {
  if (current_.Contains(e)) return false;
  current_.Set(e);
  if (oracle_.IsIndependent(current_)) return true;
  current_.Set(e, false);
  return false;
}

std::vector<int> GreedyOrder(std::span<const std::int64_t> weights) {
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weights[a] > weights[b];
  });
  return order;
}

Subset01 GreedyMax(const IndependenceOracle& m,
                   std::span<const std::int64_t> weights, bool force_basis) {
  OracleBackedSet set(m);
  return GreedyMax(set, weights, force_basis);
}

Subset01 GreedyMax(IncrementalIndependentSet& set,
                   std::span<const std::int64_t> weights, bool force_basis) {
  if (static_cast<int>(weights.size()) != set.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "weight vector length differs from ground size");
  }
  CheckWeightRange(weights);
  for (int e : GreedyOrder(weights)) {
    if (!force_basis && weights[e] <= 0) break;
    set.TryAdd(e);
  }
  return set.current();
}

void GreedyInOrder(IncrementalIndependentSet& set, std::span<const int> order) {
  for (int e : order) {
    if (e < 0 || e >= set.ground_size()) {
      throw Error(ErrorCode::kInvalidInput, "order names a missing element");
    }
    set.TryAdd(e);
  }
}

std::int64_t TotalWeight(const Subset01& s,
                         std::span<const std::int64_t> weights) {
  if (static_cast<int>(weights.size()) != s.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "weight vector length differs from ground size");
  }
  std::int64_t total = 0;
  for (int e = 0; e < s.ground_size(); ++e) {
    if (s.Contains(e)) total += weights[e];
  }
  return total;
}

void CheckWeightRange(std::span<const std::int64_t> weights,
                      std::int64_t limit) {
  std::int64_t budget = limit;
  for (std::int64_t w : weights) {
    if (w == std::numeric_limits<std::int64_t>::min() ||
        std::abs(w) > budget) {
      throw Error(ErrorCode::kOverflow,
                  "sum of absolute weights exceeds the supported range");
    }
    budget -= std::abs(w);
  }
}

}  // namespace matroid_shift
