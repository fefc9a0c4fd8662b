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

#ifndef MATROID_SHIFT_INTERSECTION_H_
#define MATROID_SHIFT_INTERSECTION_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "matroid_shift/matroid.h"
#include "matroid_shift/shifted.h"
#include "matroid_shift/types.h"

namespace matroid_shift {

// Maximum-weight common independent set of two matroids on one ground set.
// Grows a max-weight common independent set of each cardinality by shortest
// augmenting paths (weight first, then arc count) and returns the best one
// seen; ties keep the smaller set.
Subset01 WeightedMatroidIntersectionMax(const IndependenceOracle& m1,
                                        const IndependenceOracle& m2,
                                        std::span<const std::int64_t> weights);

// Kinds accepted by the intersection solver. These are all gammoids and
// therefore strongly base orderable.
bool IsStronglyBaseOrderableKind(MatroidKind kind);

struct IntersectionInstance {
  MatroidDesc m1;
  MatroidDesc m2;
  int n = 1;
  ProfitMatrix c;
};

// max{ shift(c) . shift(x) : x in (S1 & S2)^n }, computed as the max of
// shift(c) . x over [S1^n] & [S2^n]. Value only.
std::int64_t ShiftedValueIntersection(const IntersectionInstance& inst);

struct BipartiteGraph {
  int left = 0;
  int right = 0;
  // Edge e joins left vertex edges[e].first and right vertex edges[e].second.
  std::vector<std::pair<int, int>> edges;

  int ground_size() const { return static_cast<int>(edges.size()); }
};

void ValidateBipartiteGraph(const BipartiteGraph& g);

// The two partition matroids (one block per left vertex, one per right
// vertex, capacity 1) whose common independent sets are the matchings.
std::pair<MatroidDesc, MatroidDesc> MatchingMatroids(const BipartiteGraph& g);

bool IsMatching(const BipartiteGraph& g, const Subset01& s);

// y ~ x with matching columns, by n-edge-coloring the multigraph in which
// edge e has multiplicity rowsum_e(x). Throws Error(kInfeasible) when that
// multigraph has a vertex of degree above n.
Matrix01 FiberBipartiteMatching(const BipartiteGraph& g, int n,
                                const Matrix01& x);

// Complete shifted solver over the matchings of a bipartite graph.
ShiftedSolution SolveShiftedBipartiteMatching(const BipartiteGraph& g, int n,
                                              const ProfitMatrix& c);

}  // namespace matroid_shift

#endif  // MATROID_SHIFT_INTERSECTION_H_
