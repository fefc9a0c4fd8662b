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

#include "matroid_shift/io.h"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "disjoint_sets.h"
#include "json.hpp"
#include "matroid_shift/error.h"

namespace matroid_shift::io {
namespace {

using nlohmann::json;

Error Invalid(const std::string& message) {
  return Error(ErrorCode::kInvalidInput, message);
}

json Parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Invalid(std::string("malformed JSON: ") + e.what());
  }
}

const json& Field(const json& object, const char* name) {
  if (!object.is_object() || !object.contains(name)) {
    throw Invalid(std::string("missing field '") + name + "'");
  }
  return object.at(name);
}

template <typename T>
T Get(const json& value, const char* what) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw Invalid(std::string("field '") + what + "' has the wrong type");
  }
}

// 1-based index in [1, limit] to 0-based.
int ZeroBased(int index, int limit, const char* what) {
  if (index < 1 || index > limit) {
    throw Invalid(std::string(what) + " index " + std::to_string(index) +
                  " out of range 1.." + std::to_string(limit));
  }
  return index - 1;
}

std::vector<std::pair<int, int>> ParseEdges(const json& edges, int left_limit,
                                            int right_limit) {
  std::vector<std::pair<int, int>> out;
  for (const json& edge : Get<std::vector<json>>(edges, "edges")) {
    auto pair = Get<std::vector<int>>(edge, "edges");
    if (pair.size() != 2) throw Invalid("an edge needs two endpoints");
    out.emplace_back(ZeroBased(pair[0], left_limit, "vertex"),
                     ZeroBased(pair[1], right_limit, "vertex"));
  }
  return out;
}

}  // namespace

MatroidDesc ParseMatroidJson(const std::string& text) {
  const json doc = Parse(text);
  const std::string kind = Get<std::string>(Field(doc, "kind"), "kind");
  const int d = Get<int>(Field(doc, "d"), "d");
  if (d < 1) throw Invalid("d must be positive");
  const json& params = Field(doc, "params");

  auto check_d = [d](std::size_t size, const char* what) {
    if (static_cast<int>(size) != d) {
      throw Error(ErrorCode::kDimensionMismatch,
                  std::string(what) + " has " + std::to_string(size) +
                      " entries but d = " + std::to_string(d));
    }
  };

  if (kind == "graphic") {
    const int vertices = Get<int>(Field(params, "vertices"), "vertices");
    auto edges = ParseEdges(Field(params, "edges"), vertices, vertices);
    check_d(edges.size(), "edges");
    return MatroidDesc::Graphic(vertices, std::move(edges));
  }
  if (kind == "uniform") {
    return MatroidDesc::Uniform(d, Get<int>(Field(params, "rank"), "rank"));
  }
  if (kind == "partition") {
    auto capacity =
        Get<std::vector<int>>(Field(params, "capacities"), "capacities");
    auto blocks = Get<std::vector<int>>(Field(params, "blocks"), "blocks");
    check_d(blocks.size(), "blocks");
    for (int& b : blocks) {
      b = ZeroBased(b, static_cast<int>(capacity.size()), "block");
    }
    return MatroidDesc::Partition(std::move(blocks), std::move(capacity));
  }
  if (kind == "linear_gf2") {
    const int rows = Get<int>(Field(params, "rows"), "rows");
    auto columns = Get<std::vector<std::vector<int>>>(Field(params, "columns"),
                                                      "columns");
    check_d(columns.size(), "columns");
    return MatroidDesc::LinearGf2(rows, columns);
  }
  if (kind == "transversal") {
    const int agents = Get<int>(Field(params, "agents"), "agents");
    auto adjacency = Get<std::vector<std::vector<int>>>(
        Field(params, "adjacency"), "adjacency");
    check_d(adjacency.size(), "adjacency");
    for (auto& list : adjacency) {
      for (int& a : list) a = ZeroBased(a, agents, "agent");
    }
    return MatroidDesc::Transversal(agents, std::move(adjacency));
  }
  throw Invalid("unknown matroid kind '" + kind + "'");
}

std::string MatroidToJson(const MatroidDesc& m) {
  json params = json::object();
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, GraphicParams>) {
          json edges = json::array();
          for (const auto& [u, v] : p.edges) edges.push_back({u + 1, v + 1});
          params = {{"vertices", p.vertices}, {"edges", edges}};
        } else if constexpr (std::is_same_v<P, UniformParams>) {
          params = {{"rank", p.rank}};
        } else if constexpr (std::is_same_v<P, PartitionParams>) {
          std::vector<int> blocks;
          for (int b : p.block_of) blocks.push_back(b + 1);
          params = {{"blocks", blocks}, {"capacities", p.capacity}};
        } else if constexpr (std::is_same_v<P, LinearGf2Params>) {
          json columns = json::array();
          for (const auto& packed : p.columns) {
            std::vector<int> column;
            for (int r = 0; r < p.rows; ++r) {
              column.push_back((packed[r / 64] >> (r % 64)) & 1);
            }
            columns.push_back(column);
          }
          params = {{"rows", p.rows}, {"columns", columns}};
        } else if constexpr (std::is_same_v<P, TransversalParams>) {
          json adjacency = json::array();
          for (const auto& list : p.adjacency) {
            std::vector<int> agents;
            for (int a : list) agents.push_back(a + 1);
            adjacency.push_back(agents);
          }
          params = {{"agents", p.agents}, {"adjacency", adjacency}};
        } else {
          throw Invalid("composite matroids have no file representation");
        }
      },
      m.params());
  json doc = {{"kind", MatroidKindName(m.kind())},
              {"d", m.ground_size()},
              {"params", params}};
  return doc.dump();
}

MatroidDesc ParseGraphText(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int vertices = -1;
  int declared_edges = -1;
  std::vector<std::pair<int, int>> edges;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag[0] == 'c') continue;
    const std::string where = "line " + std::to_string(line_number) + ": ";
    if (tag == "p") {
      if (vertices >= 0) throw Invalid(where + "duplicate problem line");
      if (!(fields >> vertices >> declared_edges) || vertices < 1 ||
          declared_edges < 0) {
        throw Invalid(where + "expected 'p <vertices> <edges>'");
      }
    } else if (tag == "e") {
      if (vertices < 0) throw Invalid(where + "edge before problem line");
      int u = 0;
      int v = 0;
      if (!(fields >> u >> v)) throw Invalid(where + "expected 'e <u> <v>'");
      edges.emplace_back(ZeroBased(u, vertices, "vertex"),
                         ZeroBased(v, vertices, "vertex"));
    } else {
      throw Invalid(where + "unknown line tag '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) throw Invalid(where + "trailing tokens");
  }
  if (vertices < 0) throw Invalid("missing problem line");
  if (static_cast<int>(edges.size()) != declared_edges) {
    throw Invalid("problem line declares " + std::to_string(declared_edges) +
                  " edges but " + std::to_string(edges.size()) + " follow");
  }
  return MatroidDesc::Graphic(vertices, std::move(edges));
}

bool IsConnected(const GraphicParams& g) {
  internal::DisjointSets components(g.vertices);
  int count = g.vertices;
  for (const auto& [u, v] : g.edges) {
    if (components.Union(u, v)) --count;
  }
  return count == 1;
}

namespace {

std::vector<std::vector<std::int64_t>> ParseRows(const std::string& text) {
  const json doc = Parse(text);
  const int d = Get<int>(Field(doc, "d"), "d");
  const int n = Get<int>(Field(doc, "n"), "n");
  if (d < 1 || n < 1) throw Invalid("d and n must be positive");
  auto rows = Get<std::vector<std::vector<std::int64_t>>>(Field(doc, "rows"),
                                                          "rows");
  if (static_cast<int>(rows.size()) != d) {
    throw Error(ErrorCode::kDimensionMismatch,
                "rows has " + std::to_string(rows.size()) + " entries, d = " +
                    std::to_string(d));
  }
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "a row has " + std::to_string(row.size()) +
                      " entries, n = " + std::to_string(n));
    }
  }
  return rows;
}

}  // namespace

ProfitMatrix ParseProfitsJson(const std::string& text) {
  return IntMatrix::FromRows(ParseRows(text));
}

Matrix01 ParseMatrixJson(const std::string& text) {
  std::vector<std::vector<int>> cells;
  for (const auto& row : ParseRows(text)) {
    std::vector<int> out;
    for (std::int64_t v : row) {
      if (v != 0 && v != 1) throw Invalid("matrix entry not in {0,1}");
      out.push_back(static_cast<int>(v));
    }
    cells.push_back(std::move(out));
  }
  return Matrix01::FromRows(cells);
}

BipartiteGraph ParseBipartiteJson(const std::string& text) {
  const json doc = Parse(text);
  BipartiteGraph g;
  g.left = Get<int>(Field(doc, "left"), "left");
  g.right = Get<int>(Field(doc, "right"), "right");
  g.edges = ParseEdges(Field(doc, "edges"), g.left, g.right);
  ValidateBipartiteGraph(g);
  return g;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Invalid("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace matroid_shift::io
