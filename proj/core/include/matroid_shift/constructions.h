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

#ifndef MATROID_SHIFT_CONSTRUCTIONS_H_
#define MATROID_SHIFT_CONSTRUCTIONS_H_

#include <memory>
#include <utility>
#include <vector>

#include "matroid_shift/greedy.h"
#include "matroid_shift/matroid.h"
#include "matroid_shift/types.h"

namespace matroid_shift {

// The n-lift of a matroid S over [d]: d x n 0/1 matrices x, flattened
// row-major onto [d*n], whose column sum is (the indicator of) a member of
// S. A row with two or more ones has a non-0/1 column sum and is dependent.
class LiftOracle final : public IndependenceOracle {
 public:
  LiftOracle(MatroidDesc base, int copies);

  int ground_size() const override { return base_.ground_size() * copies_; }
  bool IsIndependent(const Subset01& flat) const override;
  bool IsIndependent(const Matrix01& x) const;

  const MatroidDesc& base() const { return base_; }
  int copies() const { return copies_; }

 private:
  MatroidDesc base_;
  int copies_;
};

bool LiftIsIndependent(const MatroidDesc& base, int n, const Matrix01& x);

// Matroid partition: keeps a set split into `copies` color classes, each
// independent in the part matroid, and inserts elements by augmenting along
// a shortest path of the exchange digraph. An arc u -> v (v in class i)
// means class i stays independent when v is replaced by u. The search ends
// at the first element that some class can absorb outright.
//
// Single-threaded; distinct instances are independent.
class MatroidPartition final : public IncrementalIndependentSet {
 public:
  MatroidPartition(std::shared_ptr<const IndependenceOracle> part, int copies);

  int ground_size() const override { return current_.ground_size(); }
  bool TryAdd(int e) override;
  const Subset01& current() const override { return current_; }

  int copies() const { return copies_; }
  // Class of e, or -1 when e is not in the current set.
  int ColorOf(int e) const { return color_[e]; }
  const std::vector<Subset01>& Parts() const { return classes_; }

 private:
  bool CanAbsorb(int cls, int e) const;
  bool CanExchange(int cls, int out, int in) const;

  std::shared_ptr<const IndependenceOracle> part_;
  int copies_;
  std::vector<int> color_;
  std::vector<Subset01> classes_;
  Subset01 current_;
};

struct UnionResult {
  bool independent = false;
  // n pairwise disjoint parts summing to the input; empty when rejected.
  std::vector<Subset01> parts;
};

// Membership in the n-union of `part`, with a decomposition on success.
UnionResult UnionIsIndependent(std::shared_ptr<const IndependenceOracle> part,
                               int n, const Subset01& s);

// Stateless oracle for the n-union; every query runs a fresh partition.
class UnionOracle final : public IndependenceOracle {
 public:
  UnionOracle(std::shared_ptr<const IndependenceOracle> part, int copies);

  int ground_size() const override { return part_->ground_size(); }
  bool IsIndependent(const Subset01& s) const override;

 private:
  std::shared_ptr<const IndependenceOracle> part_;
  int copies_;
};

// x = parts[0] + ... + parts[n-1], each part independent in the n-lift.
struct Decomposition {
  std::vector<Matrix01> parts;
};

struct ShuffleResult {
  bool independent = false;
  Decomposition decomposition;
};

// The shuffle set [S^n] as the n-union of the n-lift, over the flattened
// ground set [d*n].
class ShuffleOracle final : public IndependenceOracle {
 public:
  ShuffleOracle(MatroidDesc base, int copies);

  int ground_size() const override { return lift_->ground_size(); }
  bool IsIndependent(const Subset01& flat) const override;

  const MatroidDesc& base() const { return lift_->base(); }
  int copies() const { return lift_->copies(); }
  std::shared_ptr<const LiftOracle> lift() const { return lift_; }

  // A partition instance over n copies of the lift, for incremental use.
  MatroidPartition NewPartition() const;

 private:
  std::shared_ptr<const LiftOracle> lift_;
};

ShuffleResult ShuffleIsIndependent(const MatroidDesc& base, int n,
                                   const Matrix01& x);

// Converts the color classes of a partition over the flattened ground set
// into d x n matrices.
Decomposition ToDecomposition(const MatroidPartition& partition, int rows,
                              int cols);

// (rank of the n-lift, rank of [S^n]), both computed through the oracles.
std::pair<int, int> UnionRankCheck(const MatroidDesc& base, int n);

}  // namespace matroid_shift

#endif  // MATROID_SHIFT_CONSTRUCTIONS_H_
