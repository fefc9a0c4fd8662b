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

#ifndef MATROID_SHIFT_MATROID_H_
#define MATROID_SHIFT_MATROID_H_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "matroid_shift/types.h"

namespace matroid_shift {

// Black-box membership test for the independent sets of a matroid over the
// ground set {0, ..., ground_size()-1}. Implementations are immutable and
// safe to query concurrently.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;

  virtual int ground_size() const = 0;
  virtual bool IsIndependent(const Subset01& s) const = 0;
};

enum class MatroidKind {
  kGraphic,
  kUniform,
  kPartition,
  kLinearGf2,
  kTransversal,
  kOracleComposite,
};

const char* MatroidKindName(MatroidKind kind);

// All vertex, block and agent indices below are 0-based. File formats use
// 1-based indices; the parsers in io.h translate.

struct GraphicParams {
  int vertices = 0;
  // Edge e of the ground set joins edges[e].first and edges[e].second.
  std::vector<std::pair<int, int>> edges;
};

struct UniformParams {
  int rank = 0;
};

struct PartitionParams {
  std::vector<int> block_of;   // one entry per ground element
  std::vector<int> capacity;   // one entry per block
};

struct LinearGf2Params {
  int rows = 0;
  // columns[e] holds the coordinates of vector e, packed 64 per word.
  std::vector<std::vector<std::uint64_t>> columns;
};

struct TransversalParams {
  int agents = 0;
  // adjacency[e] lists the agents that element e may be matched to.
  std::vector<std::vector<int>> adjacency;
};

struct CompositeParams {
  std::string label;
};

// Declarative description of a concrete matroid. A MatroidDesc is itself an
// independence oracle; copies share the underlying immutable oracle.
class MatroidDesc final : public IndependenceOracle {
 public:
  using Params = std::variant<GraphicParams, UniformParams, PartitionParams,
                              LinearGf2Params, TransversalParams,
                              CompositeParams>;

  // Each factory validates its parameters and throws Error(kInvalidInput).
  static MatroidDesc Graphic(int vertices,
                             std::vector<std::pair<int, int>> edges);
  static MatroidDesc Uniform(int ground_size, int rank);
  static MatroidDesc Partition(std::vector<int> block_of,
                               std::vector<int> capacity);
  // columns[e][r] in {0,1} is coordinate r of vector e.
  static MatroidDesc LinearGf2(int rows,
                               const std::vector<std::vector<int>>& columns);
  static MatroidDesc Transversal(int agents,
                                 std::vector<std::vector<int>> adjacency);
  // Wraps an externally supplied oracle (lift, union, restriction, ...).
  static MatroidDesc Composite(std::shared_ptr<const IndependenceOracle> oracle,
                               std::string label);

  MatroidKind kind() const { return kind_; }
  int ground_size() const override { return ground_size_; }
  const Params& params() const { return params_; }

  // Throws Error(kDimensionMismatch) when s has the wrong length.
  bool IsIndependent(const Subset01& s) const override;

  std::shared_ptr<const IndependenceOracle> oracle() const { return oracle_; }

 private:
  MatroidDesc(MatroidKind kind, int ground_size, Params params,
              std::shared_ptr<const IndependenceOracle> oracle);

  MatroidKind kind_;
  int ground_size_;
  Params params_;
  std::shared_ptr<const IndependenceOracle> oracle_;
};

bool IsIndependent(const IndependenceOracle& m, const Subset01& s);

// Size of a largest independent subset of s, by greedy insertion.
int Rank(const IndependenceOracle& m, const Subset01& s);
int Rank(const IndependenceOracle& m);

// Throws Error(kDimensionMismatch) unless s.ground_size() == m.ground_size().
void CheckGroundSize(const IndependenceOracle& m, const Subset01& s);

}  // namespace matroid_shift

#endif  // MATROID_SHIFT_MATROID_H_
