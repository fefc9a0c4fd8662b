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

#include "matroid_shift/intersection.h"

#include <limits>
#include <string>
#include <utility>

#include "matroid_shift/constructions.h"
#include "matroid_shift/error.h"
#include "matroid_shift/greedy.h"

namespace matroid_shift {
namespace {

// Path length in the exchange digraph: total vertex length, then arc count.
struct PathCost {
  std::int64_t length = 0;
  int arcs = 0;

  bool operator<(const PathCost& other) const {
    return length != other.length ? length < other.length : arcs < other.arcs;
  }
};

bool WithSwap(const IndependenceOracle& m, Subset01& s, int out, int in) {
  s.Set(out, false);
  s.Set(in);
  const bool ok = m.IsIndependent(s);
  s.Set(in, false);
  s.Set(out);
  return ok;
}

bool WithAdd(const IndependenceOracle& m, Subset01& s, int in) {
  s.Set(in);
  const bool ok = m.IsIndependent(s);
  s.Set(in, false);
  return ok;
}

// One augmentation. Returns false when no augmenting path exists.
bool Augment(const IndependenceOracle& m1, const IndependenceOracle& m2,
             std::span<const std::int64_t> weights, Subset01& current) {
  const int size = current.ground_size();
  std::vector<int> inside = current.Elements();
  std::vector<int> outside;
  for (int e = 0; e < size; ++e) {
    if (!current.Contains(e)) outside.push_back(e);
  }

  // Vertex lengths: -w outside the set (gained), +w inside (lost).
  auto vertex_length = [&](int e) {
    return current.Contains(e) ? weights[e] : -weights[e];
  };

  std::vector<std::vector<int>> arcs(size);
  for (int y : inside) {
    for (int x : outside) {
      if (WithSwap(m1, current, y, x)) arcs[y].push_back(x);
      if (WithSwap(m2, current, y, x)) arcs[x].push_back(y);
    }
  }
  std::vector<bool> sink(size, false);
  std::vector<bool> reached(size, false);
  std::vector<PathCost> cost(size);
  std::vector<int> pred(size, -1);
  for (int x : outside) {
    sink[x] = WithAdd(m2, current, x);
    if (WithAdd(m1, current, x)) {
      reached[x] = true;
      cost[x] = {vertex_length(x), 0};
    }
  }

  // Bellman-Ford; the set is extreme, so there is no negative cycle.
  for (int round = 0; round < size; ++round) {
    bool changed = false;
    for (int u = 0; u < size; ++u) {
      if (!reached[u]) continue;
      for (int v : arcs[u]) {
        const PathCost candidate{cost[u].length + vertex_length(v),
                                 cost[u].arcs + 1};
        if (!reached[v] || candidate < cost[v]) {
          reached[v] = true;
          cost[v] = candidate;
          pred[v] = u;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }

  int end = -1;
  for (int x : outside) {
    if (sink[x] && reached[x] && (end < 0 || cost[x] < cost[end])) end = x;
  }
  if (end < 0) return false;
  for (int v = end; v >= 0; v = pred[v]) {
    current.Set(v, !current.Contains(v));
  }
  return true;
}

void CheckKind(const MatroidDesc& m) {
  if (!IsStronglyBaseOrderableKind(m.kind())) {
    throw Error(ErrorCode::kDisallowedKind,
                std::string("matroid kind '") + MatroidKindName(m.kind()) +
                    "' is not accepted: intersection requires strongly base "
                    "orderable matroids (uniform, partition, transversal)");
  }
}

struct IntersectionOptimum {
  Matrix01 x;
  std::int64_t value = 0;
};

IntersectionOptimum MaximizeOverShuffleIntersection(const MatroidDesc& m1,
                                                    const MatroidDesc& m2,
                                                    int n,
                                                    const ProfitMatrix& c) {
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "n must be positive");
  if (m1.ground_size() != m2.ground_size() || c.rows() != m1.ground_size() ||
      c.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matroids and profit matrix disagree on d x n");
  }
  CheckProfitGuard(c);
  const ProfitMatrix cbar = Shift(c);
  const ShuffleOracle shuffle1(m1, n);
  const ShuffleOracle shuffle2(m2, n);
  const Subset01 flat =
      WeightedMatroidIntersectionMax(shuffle1, shuffle2, cbar.Flat());
  IntersectionOptimum out;
  out.x = Matrix01::Unflatten(flat, c.rows(), n);
  out.value = Dot(cbar, out.x);
  return out;
}

}  // namespace

Subset01 WeightedMatroidIntersectionMax(const IndependenceOracle& m1,
                                        const IndependenceOracle& m2,
                                        std::span<const std::int64_t> weights) {
  if (m1.ground_size() != m2.ground_size() ||
      static_cast<int>(weights.size()) != m1.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matroids and weights disagree on the ground set");
  }
  CheckWeightRange(weights);
  Subset01 current(m1.ground_size());
  Subset01 best = current;
  std::int64_t best_weight = 0;
  while (Augment(m1, m2, weights, current)) {
    const std::int64_t weight = TotalWeight(current, weights);
    if (weight > best_weight) {
      best = current;
      best_weight = weight;
    }
  }
  return best;
}

bool IsStronglyBaseOrderableKind(MatroidKind kind) {
  return kind == MatroidKind::kUniform || kind == MatroidKind::kPartition ||
         kind == MatroidKind::kTransversal;
}

std::int64_t ShiftedValueIntersection(const IntersectionInstance& inst) {
  CheckKind(inst.m1);
  CheckKind(inst.m2);
  return MaximizeOverShuffleIntersection(inst.m1, inst.m2, inst.n, inst.c)
      .value;
}

void ValidateBipartiteGraph(const BipartiteGraph& g) {
  if (g.left < 1 || g.right < 1) {
    throw Error(ErrorCode::kInvalidInput, "bipartite graph needs both sides");
  }
  if (g.edges.empty()) {
    throw Error(ErrorCode::kInvalidInput, "bipartite graph needs an edge");
  }
  for (const auto& [l, r] : g.edges) {
    if (l < 0 || l >= g.left || r < 0 || r >= g.right) {
      throw Error(ErrorCode::kInvalidInput, "edge endpoint is not a vertex");
    }
  }
}

std::pair<MatroidDesc, MatroidDesc> MatchingMatroids(const BipartiteGraph& g) {
  ValidateBipartiteGraph(g);
  std::vector<int> left_block;
  std::vector<int> right_block;
  for (const auto& [l, r] : g.edges) {
    left_block.push_back(l);
    right_block.push_back(r);
  }
  return {MatroidDesc::Partition(std::move(left_block),
                                 std::vector<int>(g.left, 1)),
          MatroidDesc::Partition(std::move(right_block),
                                 std::vector<int>(g.right, 1))};
}

bool IsMatching(const BipartiteGraph& g, const Subset01& s) {
  std::vector<bool> left_used(g.left, false);
  std::vector<bool> right_used(g.right, false);
  for (int e : s.Elements()) {
    const auto [l, r] = g.edges[e];
    if (left_used[l] || right_used[r]) return false;
    left_used[l] = right_used[r] = true;
  }
  return true;
}

Matrix01 FiberBipartiteMatching(const BipartiteGraph& g, int n,
                                const Matrix01& x) {
  ValidateBipartiteGraph(g);
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "n must be positive");
  if (x.rows() != g.ground_size() || x.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix shape differs from edges x n");
  }
  std::vector<int> left_degree(g.left, 0);
  std::vector<int> right_degree(g.right, 0);
  struct Copy {
    int edge;
    int left;
    int right;
    int color = -1;
  };
  std::vector<Copy> copies;
  for (int e = 0; e < g.ground_size(); ++e) {
    const auto [l, r] = g.edges[e];
    for (int k = 0; k < x.RowSum(e); ++k) {
      copies.push_back({e, l, r});
      ++left_degree[l];
      ++right_degree[r];
    }
  }
  for (int degree : left_degree) {
    if (degree > n) throw Error(ErrorCode::kInfeasible, "not in shuffle set");
  }
  for (int degree : right_degree) {
    if (degree > n) throw Error(ErrorCode::kInfeasible, "not in shuffle set");
  }

  // at[side][vertex][color] is the copy using that color there, or -1.
  std::vector<std::vector<int>> left_at(g.left, std::vector<int>(n, -1));
  std::vector<std::vector<int>> right_at(g.right, std::vector<int>(n, -1));
  auto paint = [&](int id, int color) {
    Copy& copy = copies[id];
    if (copy.color >= 0) {
      left_at[copy.left][copy.color] = -1;
      right_at[copy.right][copy.color] = -1;
    }
    copy.color = color;
    if (color >= 0) {
      left_at[copy.left][color] = id;
      right_at[copy.right][color] = id;
    }
  };
  auto free_color = [n](const std::vector<int>& at) {
    for (int color = 0; color < n; ++color) {
      if (at[color] < 0) return color;
    }
    return -1;
  };

  for (int id = 0; id < static_cast<int>(copies.size()); ++id) {
    const int a = free_color(left_at[copies[id].left]);
    const int b = free_color(right_at[copies[id].right]);
    if (right_at[copies[id].right][a] >= 0) {
      // Swap a and b along the alternating path leaving the right endpoint
      // by its a-edge. In a bipartite graph that path cannot reach the left
      // endpoint, where a is free.
      std::vector<int> path;
      bool on_right = true;
      int vertex = copies[id].right;
      int color = a;
      while (true) {
        const int next = on_right ? right_at[vertex][color] : left_at[vertex][color];
        if (next < 0) break;
        path.push_back(next);
        vertex = on_right ? copies[next].left : copies[next].right;
        on_right = !on_right;
        color = color == a ? b : a;
      }
      std::vector<int> old_colors;
      for (int p : path) {
        old_colors.push_back(copies[p].color);
        paint(p, -1);
      }
      for (std::size_t k = 0; k < path.size(); ++k) {
        paint(path[k], old_colors[k] == a ? b : a);
      }
    }
    paint(id, a);
  }

  Matrix01 y(x.rows(), n);
  for (const Copy& copy : copies) y.set(copy.edge, copy.color);
  return y;
}

ShiftedSolution SolveShiftedBipartiteMatching(const BipartiteGraph& g, int n,
                                              const ProfitMatrix& c) {
  auto [left, right] = MatchingMatroids(g);
  const IntersectionOptimum optimum =
      MaximizeOverShuffleIntersection(left, right, n, c);

  ShiftedSolution solution;
  solution.y = FiberBipartiteMatching(g, n, optimum.x);
  for (int k = 0; k < n; ++k) {
    if (!IsMatching(g, solution.y.Column(k))) {
      throw Error(ErrorCode::kInternal, "recovered column is not a matching");
    }
  }
  solution.value = ShiftedValue(c, solution.y);
  solution.vuln = VulnerabilityVector(solution.y);
  if (solution.value != optimum.value) {
    throw Error(ErrorCode::kInternal,
                "recovered solution misses the intersection optimum");
  }
  return solution;
}

}  // namespace matroid_shift
