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

#include "matroid_shift/constructions.h"

#include <deque>
#include <string>
#include <utility>

#include "matroid_shift/error.h"

namespace matroid_shift {

LiftOracle::LiftOracle(MatroidDesc base, int copies)
    : base_(std::move(base)), copies_(copies) {
  if (copies < 1) {
    throw Error(ErrorCode::kInvalidInput, "number of copies must be positive");
  }
}

bool LiftOracle::IsIndependent(const Subset01& flat) const {
  const int d = base_.ground_size();
  Subset01 column_sum(d);
  for (int f = 0; f < flat.ground_size(); ++f) {
    if (!flat.Contains(f)) continue;
    const int row = f / copies_;
    if (column_sum.Contains(row)) return false;
    column_sum.Set(row);
  }
  return base_.IsIndependent(column_sum);
}

bool LiftOracle::IsIndependent(const Matrix01& x) const {
  if (x.rows() != base_.ground_size() || x.cols() != copies_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix shape differs from d x n of the lift");
  }
  return IsIndependent(x.Flatten());
}

bool LiftIsIndependent(const MatroidDesc& base, int n, const Matrix01& x) {
  return LiftOracle(base, n).IsIndependent(x);
}

MatroidPartition::MatroidPartition(
    std::shared_ptr<const IndependenceOracle> part, int copies)
    : part_(std::move(part)), copies_(copies) {
  if (!part_) throw Error(ErrorCode::kInvalidInput, "null oracle");
  if (copies < 1) {
    throw Error(ErrorCode::kInvalidInput, "number of copies must be positive");
  }
  const int size = part_->ground_size();
  color_.assign(size, -1);
  classes_.assign(copies, Subset01(size));
  current_ = Subset01(size);
}

bool MatroidPartition::CanAbsorb(int cls, int e) const {
  Subset01 s = classes_[cls];
  s.Set(e);
  return part_->IsIndependent(s);
}

bool MatroidPartition::CanExchange(int cls, int out, int in) const {
  Subset01 s = classes_[cls];
  s.Set(out, false);
  s.Set(in);
  return part_->IsIndependent(s);
}

bool MatroidPartition::TryAdd(int e) {
  if (e < 0 || e >= ground_size()) {
    throw Error(ErrorCode::kInvalidInput, "element outside the ground set");
  }
  if (current_.Contains(e)) return false;

  // Breadth-first search over elements. parent[v] = (u, c) records that u
  // takes v's place in class c, which is v's class before augmentation.
  const int size = ground_size();
  std::vector<std::pair<int, int>> parent(size, {-1, -1});
  std::vector<bool> visited(size, false);
  std::deque<int> queue{e};
  visited[e] = true;

  int end = -1;
  int end_class = -1;
  while (!queue.empty() && end < 0) {
    const int u = queue.front();
    queue.pop_front();
    for (int cls = 0; cls < copies_ && end < 0; ++cls) {
      if (cls == color_[u]) continue;
      if (CanAbsorb(cls, u)) {
        end = u;
        end_class = cls;
      }
    }
    if (end >= 0) break;
    for (int cls = 0; cls < copies_; ++cls) {
      if (cls == color_[u]) continue;
      for (int v : classes_[cls].Elements()) {
        if (visited[v] || !CanExchange(cls, v, u)) continue;
        visited[v] = true;
        parent[v] = {u, cls};
        queue.push_back(v);
      }
    }
  }
  if (end < 0) return false;

  // Walk back from the absorbed element, moving each element into the class
  // of its successor.
  std::vector<std::pair<int, int>> moves{{end, end_class}};
  for (int v = end; parent[v].first >= 0; v = parent[v].first) {
    moves.push_back(parent[v]);
  }
  // Vacate first, then fill, so no class is transiently over-full.
  for (const auto& [element, cls] : moves) {
    if (color_[element] >= 0) classes_[color_[element]].Set(element, false);
  }
  for (const auto& [element, cls] : moves) {
    color_[element] = cls;
    classes_[cls].Set(element);
  }
  current_.Set(e);
  return true;
}

UnionResult UnionIsIndependent(std::shared_ptr<const IndependenceOracle> part,
                               int n, const Subset01& s) {
  CheckGroundSize(*part, s);
  MatroidPartition partition(std::move(part), n);
  for (int e : s.Elements()) {
    if (!partition.TryAdd(e)) return {};
  }
  return {true, partition.Parts()};
}

UnionOracle::UnionOracle(std::shared_ptr<const IndependenceOracle> part,
                         int copies)
    : part_(std::move(part)), copies_(copies) {
  if (!part_) throw Error(ErrorCode::kInvalidInput, "null oracle");
  if (copies < 1) {
    throw Error(ErrorCode::kInvalidInput, "number of copies must be positive");
  }
}

bool UnionOracle::IsIndependent(const Subset01& s) const {
  return UnionIsIndependent(part_, copies_, s).independent;
}

ShuffleOracle::ShuffleOracle(MatroidDesc base, int copies)
    : lift_(std::make_shared<LiftOracle>(std::move(base), copies)) {}

bool ShuffleOracle::IsIndependent(const Subset01& flat) const {
  return UnionIsIndependent(lift_, lift_->copies(), flat).independent;
}

MatroidPartition ShuffleOracle::NewPartition() const {
  return MatroidPartition(lift_, lift_->copies());
}

Decomposition ToDecomposition(const MatroidPartition& partition, int rows,
                              int cols) {
  Decomposition out;
  for (const Subset01& part : partition.Parts()) {
    out.parts.push_back(Matrix01::Unflatten(part, rows, cols));
  }
  return out;
}

ShuffleResult ShuffleIsIndependent(const MatroidDesc& base, int n,
                                   const Matrix01& x) {
  if (x.rows() != base.ground_size() || x.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix shape differs from d x n");
  }
  ShuffleOracle shuffle(base, n);
  MatroidPartition partition = shuffle.NewPartition();
  for (int f : x.Flatten().Elements()) {
    if (!partition.TryAdd(f)) return {};
  }
  return {true, ToDecomposition(partition, x.rows(), n)};
}

std::pair<int, int> UnionRankCheck(const MatroidDesc& base, int n) {
  ShuffleOracle shuffle(base, n);
  MatroidPartition partition = shuffle.NewPartition();
  for (int f = 0; f < shuffle.ground_size(); ++f) partition.TryAdd(f);
  return {Rank(*shuffle.lift()), partition.current().Count()};
}

}  // namespace matroid_shift
