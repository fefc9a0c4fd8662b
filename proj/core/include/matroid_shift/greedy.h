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

#ifndef MATROID_SHIFT_GREEDY_H_
#define MATROID_SHIFT_GREEDY_H_

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "matroid_shift/matroid.h"
#include "matroid_shift/types.h"

namespace matroid_shift {

// An independent set that grows one element at a time. Implementations may
// keep auxiliary state between insertions (see MatroidPartition).
class IncrementalIndependentSet {
 public:
  virtual ~IncrementalIndependentSet() = default;

  virtual int ground_size() const = 0;
  // Adds e if the result stays independent. Returns whether e was added.
  virtual bool TryAdd(int e) = 0;
  virtual const Subset01& current() const = 0;
};

// Tests current + e against a stateless oracle.
class OracleBackedSet final : public IncrementalIndependentSet {
 public:
  explicit OracleBackedSet(const IndependenceOracle& oracle);

  int ground_size() const override { return current_.ground_size(); }
  bool TryAdd(int e) override;
  const Subset01& current() const override { return current_; }

 private:
  const IndependenceOracle& oracle_;
  Subset01 current_;
};

// Elements sorted by nonincreasing weight, ties by ascending index.
std::vector<int> GreedyOrder(std::span<const std::int64_t> weights);

// Max-weight greedy. With force_basis == false an element is taken iff it
// keeps independence and its weight is positive; the result is a
// max-weight independent set. With force_basis == true nonpositive elements
// are taken too, so the result is a max-weight basis.
Subset01 GreedyMax(const IndependenceOracle& m,
                   std::span<const std::int64_t> weights, bool force_basis);
Subset01 GreedyMax(IncrementalIndependentSet& set,
                   std::span<const std::int64_t> weights, bool force_basis);

// Offers the elements to `set` in the given order.
void GreedyInOrder(IncrementalIndependentSet& set, std::span<const int> order);

std::int64_t TotalWeight(const Subset01& s,
                         std::span<const std::int64_t> weights);

// Throws Error(kOverflow) if the sum of |w_e| exceeds `limit`.
void CheckWeightRange(std::span<const std::int64_t> weights,
                      std::int64_t limit = std::numeric_limits<std::int64_t>::max());

}  // namespace matroid_shift

#endif  // MATROID_SHIFT_GREEDY_H_
