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

#include "matroid_shift/matroid.h"

#include <algorithm>
#include <string>
#include <utility>

#include "disjoint_sets.h"
#include "matroid_shift/error.h"

namespace matroid_shift {
namespace {

Error Invalid(const std::string& message) {
  return Error(ErrorCode::kInvalidInput, message);
}

class GraphicOracle final : public IndependenceOracle {
 public:
  explicit GraphicOracle(GraphicParams g) : g_(std::move(g)) {}

  int ground_size() const override {
    return static_cast<int>(g_.edges.size());
  }

  // Acyclic iff every selected edge joins two different components.
  bool IsIndependent(const Subset01& s) const override {
    internal::DisjointSets components(g_.vertices);
    for (int e = 0; e < s.ground_size(); ++e) {
      if (!s.Contains(e)) continue;
      if (!components.Union(g_.edges[e].first, g_.edges[e].second)) {
        return false;
      }
    }
    return true;
  }

 private:
  GraphicParams g_;
};

class UniformOracle final : public IndependenceOracle {
 public:
  UniformOracle(int ground_size, int rank)
      : ground_size_(ground_size), rank_(rank) {}

  int ground_size() const override { return ground_size_; }
  bool IsIndependent(const Subset01& s) const override {
    return s.Count() <= rank_;
  }

 private:
  int ground_size_;
  int rank_;
};

class PartitionOracle final : public IndependenceOracle {
 public:
  explicit PartitionOracle(PartitionParams p) : p_(std::move(p)) {}

  int ground_size() const override {
    return static_cast<int>(p_.block_of.size());
  }

  bool IsIndependent(const Subset01& s) const override {
    std::vector<int> used(p_.capacity.size(), 0);
    for (int e = 0; e < s.ground_size(); ++e) {
      if (s.Contains(e) && ++used[p_.block_of[e]] > p_.capacity[p_.block_of[e]]) {
        return false;
      }
    }
    return true;
  }

 private:
  PartitionParams p_;
};

class LinearGf2Oracle final : public IndependenceOracle {
 public:
  explicit LinearGf2Oracle(LinearGf2Params p) : p_(std::move(p)) {}

  int ground_size() const override {
    return static_cast<int>(p_.columns.size());
  }

  // Gaussian elimination: reduce each selected column against the pivots
  // collected so far; a column that reduces to zero is dependent.
  bool IsIndependent(const Subset01& s) const override {
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<int> pivots;
    for (int e = 0; e < s.ground_size(); ++e) {
      if (!s.Contains(e)) continue;
      std::vector<std::uint64_t> v = p_.columns[e];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (Bit(v, pivots[b])) Xor(v, basis[b]);
      }
      int pivot = LowestBit(v);
      if (pivot < 0) return false;
      basis.push_back(std::move(v));
      pivots.push_back(pivot);
    }
    return true;
  }

 private:
  static bool Bit(const std::vector<std::uint64_t>& v, int r) {
    return (v[r / 64] >> (r % 64)) & 1;
  }
  static void Xor(std::vector<std::uint64_t>& v,
                  const std::vector<std::uint64_t>& w) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] ^= w[k];
  }
  static int LowestBit(const std::vector<std::uint64_t>& v) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k]) return static_cast<int>(k) * 64 + __builtin_ctzll(v[k]);
    }
    return -1;
  }

  LinearGf2Params p_;
};

// Independent iff the selected elements can be matched to distinct agents.
class TransversalOracle final : public IndependenceOracle {
 public:
  explicit TransversalOracle(TransversalParams p) : p_(std::move(p)) {}

  int ground_size() const override {
    return static_cast<int>(p_.adjacency.size());
  }

  bool IsIndependent(const Subset01& s) const override {
    std::vector<int> owner(p_.agents, -1);
    std::vector<int> seen(p_.agents, -1);
    for (int e = 0; e < s.ground_size(); ++e) {
      if (!s.Contains(e)) continue;
      if (!Augment(e, e, owner, seen)) return false;
    }
    return true;
  }

 private:
  bool Augment(int e, int stamp, std::vector<int>& owner,
               std::vector<int>& seen) const {
    for (int a : p_.adjacency[e]) {
      if (seen[a] == stamp) continue;
      seen[a] = stamp;
      if (owner[a] < 0 || Augment(owner[a], stamp, owner, seen)) {
        owner[a] = e;
        return true;
      }
    }
    return false;
  }

  TransversalParams p_;
};

}  // namespace

const char* MatroidKindName(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kGraphic:
      return "graphic";
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kPartition:
      return "partition";
    case MatroidKind::kLinearGf2:
      return "linear_gf2";
    case MatroidKind::kTransversal:
      return "transversal";
    case MatroidKind::kOracleComposite:
      return "oracle_composite";
  }
  return "unknown";
}

MatroidDesc::MatroidDesc(MatroidKind kind, int ground_size, Params params,
                         std::shared_ptr<const IndependenceOracle> oracle)
    : kind_(kind),
      ground_size_(ground_size),
      params_(std::move(params)),
      oracle_(std::move(oracle)) {}

MatroidDesc MatroidDesc::Graphic(int vertices,
                                 std::vector<std::pair<int, int>> edges) {
  if (vertices < 1) throw Invalid("graphic matroid needs a vertex");
  if (edges.empty()) throw Invalid("graphic matroid needs an edge");
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertices || v < 0 || v >= vertices) {
      throw Invalid("edge endpoint is not a vertex");
    }
  }
  GraphicParams g{vertices, std::move(edges)};
  const int d = static_cast<int>(g.edges.size());
  auto oracle = std::make_shared<GraphicOracle>(g);
  return MatroidDesc(MatroidKind::kGraphic, d, std::move(g), std::move(oracle));
}

MatroidDesc MatroidDesc::Uniform(int ground_size, int rank) {
  if (ground_size < 1) throw Invalid("ground size must be positive");
  if (rank < 0 || rank > ground_size) throw Invalid("uniform rank out of range");
  return MatroidDesc(MatroidKind::kUniform, ground_size, UniformParams{rank},
                     std::make_shared<UniformOracle>(ground_size, rank));
}

MatroidDesc MatroidDesc::Partition(std::vector<int> block_of,
                                   std::vector<int> capacity) {
  if (block_of.empty()) throw Invalid("ground size must be positive");
  for (int b : block_of) {
    if (b < 0 || b >= static_cast<int>(capacity.size())) {
      throw Invalid("element assigned to a missing block");
    }
  }
  for (int k : capacity) {
    if (k < 0) throw Invalid("negative block capacity");
  }
  const int d = static_cast<int>(block_of.size());
  PartitionParams p{std::move(block_of), std::move(capacity)};
  auto oracle = std::make_shared<PartitionOracle>(p);
  return MatroidDesc(MatroidKind::kPartition, d, std::move(p),
                     std::move(oracle));
}

MatroidDesc MatroidDesc::LinearGf2(
    int rows, const std::vector<std::vector<int>>& columns) {
  if (columns.empty()) throw Invalid("ground size must be positive");
  if (rows < 1) throw Invalid("linear_gf2 needs at least one row");
  LinearGf2Params p;
  p.rows = rows;
  const std::size_t words = (static_cast<std::size_t>(rows) + 63) / 64;
  for (const auto& column : columns) {
    if (static_cast<int>(column.size()) != rows) {
      throw Invalid("linear_gf2 column has the wrong length");
    }
    std::vector<std::uint64_t> packed(words, 0);
    for (int r = 0; r < rows; ++r) {
      if (column[r] != 0 && column[r] != 1) {
        throw Invalid("linear_gf2 entry not in {0,1}");
      }
      if (column[r]) packed[r / 64] |= std::uint64_t{1} << (r % 64);
    }
    p.columns.push_back(std::move(packed));
  }
  const int d = static_cast<int>(columns.size());
  auto oracle = std::make_shared<LinearGf2Oracle>(p);
  return MatroidDesc(MatroidKind::kLinearGf2, d, std::move(p),
                     std::move(oracle));
}

MatroidDesc MatroidDesc::Transversal(int agents,
                                     std::vector<std::vector<int>> adjacency) {
  if (adjacency.empty()) throw Invalid("ground size must be positive");
  if (agents < 0) throw Invalid("negative agent count");
  for (const auto& list : adjacency) {
    for (int a : list) {
      if (a < 0 || a >= agents) throw Invalid("adjacency names a missing agent");
    }
  }
  const int d = static_cast<int>(adjacency.size());
  TransversalParams p{agents, std::move(adjacency)};
  auto oracle = std::make_shared<TransversalOracle>(p);
  return MatroidDesc(MatroidKind::kTransversal, d, std::move(p),
                     std::move(oracle));
}

MatroidDesc MatroidDesc::Composite(
    std::shared_ptr<const IndependenceOracle> oracle, std::string label) {
  if (!oracle) throw Invalid("null oracle");
  if (oracle->ground_size() < 1) throw Invalid("ground size must be positive");
  const int d = oracle->ground_size();
  return MatroidDesc(MatroidKind::kOracleComposite, d,
                     CompositeParams{std::move(label)}, std::move(oracle));
}

bool MatroidDesc::IsIndependent(const Subset01& s) const {
  CheckGroundSize(*this, s);
  return oracle_->IsIndependent(s);
}

void CheckGroundSize(const IndependenceOracle& m, const Subset01& s) {
  if (s.ground_size() != m.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "subset of length " + std::to_string(s.ground_size()) +
                    " over a ground set of size " +
                    std::to_string(m.ground_size()));
  }
}

bool IsIndependent(const IndependenceOracle& m, const Subset01& s) {
  CheckGroundSize(m, s);
  return m.IsIndependent(s);
}

int Rank(const IndependenceOracle& m, const Subset01& s) {
  CheckGroundSize(m, s);
  Subset01 current(m.ground_size());
  int rank = 0;
  for (int e = 0; e < s.ground_size(); ++e) {
    if (!s.Contains(e)) continue;
    current.Set(e);
    if (m.IsIndependent(current)) {
      ++rank;
    } else {
      current.Set(e, false);
    }
  }
  return rank;
}

int Rank(const IndependenceOracle& m) {
  return Rank(m, Subset01::Full(m.ground_size()));
}

}  // namespace matroid_shift
