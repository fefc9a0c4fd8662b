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

#ifndef MATROID_SHIFT_SRC_DISJOINT_SETS_H_
#define MATROID_SHIFT_SRC_DISJOINT_SETS_H_

#include <numeric>
#include <utility>
#include <vector>

namespace matroid_shift::internal {

// Union by size with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(int size) : parent_(size), size_(size, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int i) {
    while (parent_[i] != i) {
      i = parent_[i] = parent_[parent_[i]];
    }
    return i;
  }

  // Returns false if i and j were already joined.
  bool Union(int i, int j) {
    int a = Find(i);
    int b = Find(j);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace matroid_shift::internal

#endif  // MATROID_SHIFT_SRC_DISJOINT_SETS_H_
