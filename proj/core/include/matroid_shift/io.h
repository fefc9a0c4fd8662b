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

#ifndef MATROID_SHIFT_IO_H_
#define MATROID_SHIFT_IO_H_

#include <string>

#include "matroid_shift/intersection.h"
#include "matroid_shift/matroid.h"
#include "matroid_shift/types.h"

// Text formats. Every parser throws Error(kInvalidInput) on malformed input.
namespace matroid_shift::io {

// {"kind": "...", "d": int, "params": {...}}. Per kind, with 1-based indices:
//   graphic:     {"vertices": V, "edges": [[u, v], ...]}
//   uniform:     {"rank": r}
//   partition:   {"blocks": [b_1, ..., b_d], "capacities": [k_1, ...]}
//   linear_gf2:  {"rows": R, "columns": [[0/1 x R], ... d columns]}
//   transversal: {"agents": A, "adjacency": [[a, ...], ... d lists]}
MatroidDesc ParseMatroidJson(const std::string& text);
std::string MatroidToJson(const MatroidDesc& m);

// "p <vertices> <edges>" followed by one "e u v" line per edge, 1-based.
// Lines starting with 'c' and blank lines are ignored.
MatroidDesc ParseGraphText(const std::string& text);

// Whether every vertex of a graphic matroid's graph is reachable from
// vertex 0.
bool IsConnected(const GraphicParams& g);

// {"d": int, "n": int, "rows": [[n ints] x d]}
ProfitMatrix ParseProfitsJson(const std::string& text);
// Same layout, entries in {0,1}.
Matrix01 ParseMatrixJson(const std::string& text);

// {"left": int, "right": int, "edges": [[l, r], ...]}, 1-based.
BipartiteGraph ParseBipartiteJson(const std::string& text);

std::string ReadFile(const std::string& path);

}  // namespace matroid_shift::io

#endif  // MATROID_SHIFT_IO_H_
