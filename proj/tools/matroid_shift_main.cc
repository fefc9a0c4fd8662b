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

// Command-line front end. stdout carries exactly one JSON report; human
// readable diagnostics go to stderr.
//
// Exit codes: 0 ok, 1 other failure, 2 graph not connected, 3 parse or
// dimension error, 4 verification or recheck mismatch, 5 overflow guard,
// 6 disallowed matroid kind, 7 matrix not in the shuffle set.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroid_shift/bruteforce.h"
#include "matroid_shift/error.h"
#include "matroid_shift/greedy.h"
#include "matroid_shift/intersection.h"
#include "matroid_shift/io.h"
#include "matroid_shift/shifted.h"

namespace ms = matroid_shift;
using nlohmann::json;

namespace {

enum ExitCode {
  kOk = 0,
  kFailure = 1,
  kNotConnected = 2,
  kBadInput = 3,
  kMismatch = 4,
  kOverflow = 5,
  kDisallowed = 6,
  kNotInShuffleSet = 7,
};

int ExitCodeFor(const ms::Error& e) {
  switch (e.code()) {
    case ms::ErrorCode::kInvalidInput:
    case ms::ErrorCode::kDimensionMismatch:
      return kBadInput;
    case ms::ErrorCode::kOverflow:
      return kOverflow;
    case ms::ErrorCode::kDisallowedKind:
      return kDisallowed;
    case ms::ErrorCode::kInfeasible:
      return kNotInShuffleSet;
    case ms::ErrorCode::kGuardExceeded:
    case ms::ErrorCode::kInternal:
      return kFailure;
  }
  return kFailure;
}

struct Options {
  int n = 0;
  bool bases = false;
  bool verify = false;
  bool recheck = false;
  std::uint64_t seed = 0;
  std::string bipartite;
  std::vector<std::string> files;
};

std::string Digest(const json& canonical_inputs) {
  // FNV-1a, 64 bit.
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char ch : canonical_inputs.dump()) {
    hash ^= ch;
    hash *= 0x100000001b3ull;
  }
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "fnv1a64:%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

nlohmann::ordered_json Columns(const ms::Matrix01& y) {
  nlohmann::ordered_json columns = nlohmann::ordered_json::array();
  for (int k = 0; k < y.cols(); ++k) {
    std::vector<int> elements;
    for (int e : y.Column(k).Elements()) elements.push_back(e + 1);
    columns.push_back(elements);
  }
  return columns;
}

ms::Matrix01 ColumnsToMatrix(const json& columns, int rows) {
  std::vector<ms::Subset01> list;
  for (const json& column : columns) {
    ms::Subset01 s(rows);
    for (int e : column.get<std::vector<int>>()) s.Set(e - 1);
    list.push_back(s);
  }
  return ms::Matrix01::FromColumns(rows, list);
}

json ProfitsJson(const ms::ProfitMatrix& c) {
  return {{"d", c.rows()}, {"n", c.cols()}, {"rows", c.ToRows()}};
}

class Report {
 public:
  Report(std::string command, const Options& options)
      : start_(std::chrono::steady_clock::now()) {
    doc_ = {{"schema", 1},
            {"command", std::move(command)},
            {"n", options.n},
            {"seed", options.seed},
            {"verification", "skipped"}};
    if (options.recheck) doc_["recheck"] = "pending";
  }

  nlohmann::ordered_json& operator[](const char* key) { return doc_[key]; }

  // Prints the report and returns `code`.
  int Emit(int code) {
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start_;
    doc_["wall_time_ms"] = elapsed.count();
    std::cout << doc_.dump(2) << std::endl;
    return code;
  }

  // The report as another process would read it.
  json Reparsed() const { return json::parse(doc_.dump()); }

 private:
  std::chrono::steady_clock::time_point start_;
  nlohmann::ordered_json doc_;
};

// Re-reads an emitted solution and validates it from scratch.
bool RecheckColumns(const json& emitted, const ms::MatroidDesc& m, bool bases) {
  const ms::Matrix01 y = ColumnsToMatrix(emitted.at("columns"), m.ground_size());
  const int rank = ms::Rank(m);
  for (int k = 0; k < y.cols(); ++k) {
    const ms::Subset01 column = y.Column(k);
    if (!m.IsIndependent(column)) return false;
    if (bases && column.Count() != rank) return false;
  }
  return ms::VulnerabilityVector(y).values() ==
         emitted.at("vulnerability").get<std::vector<int>>();
}

// Random members of S^n from greedy runs with random weights; none may beat
// the reported optimum.
bool SampledFeasibleAreNoBetter(const ms::MatroidDesc& m, int n,
                                const ms::ProfitMatrix& c, bool bases,
                                std::int64_t value, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(-3, 3);
  for (int sample = 0; sample < 100; ++sample) {
    std::vector<ms::Subset01> columns;
    for (int k = 0; k < n; ++k) {
      std::vector<std::int64_t> w(m.ground_size());
      for (auto& v : w) v = weight(rng);
      columns.push_back(ms::GreedyMax(m, w, bases));
    }
    const ms::Matrix01 z = ms::Matrix01::FromColumns(m.ground_size(), columns);
    if (ms::ShiftedValue(c, z) > value) return false;
  }
  return true;
}

// Runs `check` unless the brute-force guards refuse; returns the status.
template <typename Check>
std::string Verify(Check check) {
  try {
    return check() ? "ok" : "mismatch";
  } catch (const ms::Error& e) {
    if (e.code() != ms::ErrorCode::kGuardExceeded) throw;
    std::cerr << "verification skipped: " << e.what() << "\n";
    return "skipped";
  }
}

int FinishWithChecks(Report& report, const std::string& verification,
                     std::optional<bool> recheck_ok) {
  report["verification"] = verification;
  int code = kOk;
  if (verification == "mismatch") {
    std::cerr << "verification mismatch against the brute-force oracle\n";
    code = kMismatch;
  }
  if (recheck_ok.has_value()) {
    report["recheck"] = *recheck_ok ? "ok" : "mismatch";
    if (!*recheck_ok) {
      std::cerr << "recheck of the emitted solution failed\n";
      code = kMismatch;
    }
  }
  return report.Emit(code);
}

int LexminTrees(const Options& options) {
  if (options.files.size() != 1) {
    throw ms::Error(ms::ErrorCode::kInvalidInput,
                    "lexmin-trees expects one graph file");
  }
  const ms::MatroidDesc graph =
      ms::io::ParseGraphText(ms::io::ReadFile(options.files[0]));
  if (!ms::io::IsConnected(std::get<ms::GraphicParams>(graph.params()))) {
    std::cerr << "graph not connected\n";
    return kNotConnected;
  }
  Report report("lexmin-trees", options);
  report["input_digest"] =
      Digest({{"graph", json::parse(ms::io::MatroidToJson(graph))},
              {"n", options.n}});
  const ms::ShiftedSolution solution = ms::SolveLexmin(graph, options.n);
  report["columns"] = Columns(solution.y);
  report["vulnerability"] = solution.vuln.values();

  std::string verification = "skipped";
  if (options.verify) {
    verification = Verify([&] {
      const auto limits = ms::brute::Limits::FromEnvironment();
      const auto trees = ms::brute::EnumerateMembers(graph, true, limits);
      return ms::brute::BruteLexmin(trees, options.n, limits).vuln == solution.vuln;
    });
  }
  std::optional<bool> recheck;
  if (options.recheck) recheck = RecheckColumns(report.Reparsed(), graph, true);
  return FinishWithChecks(report, verification, recheck);
}

int Shifted(const Options& options) {
  if (options.files.size() != 2) {
    throw ms::Error(ms::ErrorCode::kInvalidInput,
                    "shifted expects a matroid file and a profits file");
  }
  const ms::MatroidDesc m =
      ms::io::ParseMatroidJson(ms::io::ReadFile(options.files[0]));
  const ms::ProfitMatrix c =
      ms::io::ParseProfitsJson(ms::io::ReadFile(options.files[1]));
  Report report("shifted", options);
  report["input_digest"] =
      Digest({{"matroid", json::parse(ms::io::MatroidToJson(m))},
              {"profits", ProfitsJson(c)},
              {"n", options.n},
              {"bases", options.bases}});
  const ms::ShiftedSolution solution =
      ms::SolveShifted(m, options.n, c, options.bases);
  report["bases"] = options.bases;
  report["columns"] = Columns(solution.y);
  report["value"] = solution.value;
  report["vulnerability"] = solution.vuln.values();

  std::string verification = "skipped";
  if (options.verify) {
    verification = Verify([&] {
      const auto limits = ms::brute::Limits::FromEnvironment();
      const auto members = ms::brute::EnumerateMembers(m, options.bases, limits);
      return ms::brute::BruteShifted(members, options.n, c, limits).value ==
             solution.value;
    });
  }
  std::optional<bool> recheck;
  if (options.recheck) {
    const json emitted = report.Reparsed();
    const ms::Matrix01 y = ColumnsToMatrix(emitted.at("columns"), m.ground_size());
    const std::int64_t value = emitted.at("value").get<std::int64_t>();
    recheck = RecheckColumns(emitted, m, options.bases) &&
              ms::ShiftedValue(c, y) == value &&
              SampledFeasibleAreNoBetter(m, options.n, c, options.bases, value,
                                         options.seed);
  }
  return FinishWithChecks(report, verification, recheck);
}

int IntersectValue(const Options& options) {
  const bool bipartite = !options.bipartite.empty();
  const std::size_t expected = bipartite ? 1 : 3;
  if (options.files.size() != expected) {
    throw ms::Error(ms::ErrorCode::kInvalidInput,
                    bipartite ? "intersect-value --bipartite expects a profits file"
                              : "intersect-value expects two matroid files and "
                                "a profits file");
  }
  const ms::ProfitMatrix c =
      ms::io::ParseProfitsJson(ms::io::ReadFile(options.files.back()));
  Report report("intersect-value", options);

  std::optional<ms::BipartiteGraph> graph;
  std::optional<ms::MatroidDesc> m1;
  std::optional<ms::MatroidDesc> m2;
  if (bipartite) {
    graph = ms::io::ParseBipartiteJson(ms::io::ReadFile(options.bipartite));
    auto matroids = ms::MatchingMatroids(*graph);
    m1 = matroids.first;
    m2 = matroids.second;
  } else {
    m1 = ms::io::ParseMatroidJson(ms::io::ReadFile(options.files[0]));
    m2 = ms::io::ParseMatroidJson(ms::io::ReadFile(options.files[1]));
  }
  report["input_digest"] =
      Digest({{"m1", json::parse(ms::io::MatroidToJson(*m1))},
              {"m2", json::parse(ms::io::MatroidToJson(*m2))},
              {"profits", ProfitsJson(c)},
              {"n", options.n}});

  std::int64_t value = 0;
  std::optional<ms::Matrix01> y;
  if (graph) {
    const ms::ShiftedSolution solution =
        ms::SolveShiftedBipartiteMatching(*graph, options.n, c);
    value = solution.value;
    y = solution.y;
    report["columns"] = Columns(solution.y);
    report["vulnerability"] = solution.vuln.values();
  } else {
    value = ms::ShiftedValueIntersection({*m1, *m2, options.n, c});
    report["columns"] = nullptr;
  }
  report["value"] = value;

  std::string verification = "skipped";
  if (options.verify) {
    verification = Verify([&] {
      const auto limits = ms::brute::Limits::FromEnvironment();
      const auto common = ms::brute::EnumerateCommonMembers(*m1, *m2, limits);
      return ms::brute::BruteShifted(common, options.n, c, limits).value == value;
    });
  }
  std::optional<bool> recheck;
  if (options.recheck && y) {
    const json emitted = report.Reparsed();
    const ms::Matrix01 back =
        ColumnsToMatrix(emitted.at("columns"), graph->ground_size());
    bool ok = ms::ShiftedValue(c, back) == emitted.at("value").get<std::int64_t>();
    for (int k = 0; k < back.cols(); ++k) {
      ok = ok && ms::IsMatching(*graph, back.Column(k));
    }
    recheck = ok;
  }
  return FinishWithChecks(report, verification, recheck);
}

int Fiber(const Options& options) {
  if (options.files.size() != 2) {
    throw ms::Error(ms::ErrorCode::kInvalidInput,
                    "fiber expects a matroid file and a matrix file");
  }
  const ms::MatroidDesc m =
      ms::io::ParseMatroidJson(ms::io::ReadFile(options.files[0]));
  const ms::Matrix01 x = ms::io::ParseMatrixJson(ms::io::ReadFile(options.files[1]));
  Report report("fiber", options);
  report["input_digest"] =
      Digest({{"matroid", json::parse(ms::io::MatroidToJson(m))},
              {"matrix", x.ToRows()},
              {"n", options.n}});
  ms::Matrix01 y;
  try {
    y = ms::SolveFiber(m, options.n, x);
  } catch (const ms::Error& e) {
    if (e.code() == ms::ErrorCode::kInfeasible) {
      std::cerr << "not in shuffle set\n";
      return kNotInShuffleSet;
    }
    throw;
  }
  report["columns"] = Columns(y);
  report["vulnerability"] = ms::VulnerabilityVector(y).values();
  report["row_sums"] = {{"x", x.RowSums()}, {"y", y.RowSums()}};

  std::string verification = "skipped";
  if (options.verify) {
    verification = Verify([&] {
      const auto limits = ms::brute::Limits::FromEnvironment();
      const auto members = ms::brute::EnumerateMembers(m, false, limits);
      return ms::brute::BruteShuffleMembership(members, options.n, x, limits);
    });
  }
  std::optional<bool> recheck;
  if (options.recheck) {
    const json emitted = report.Reparsed();
    const ms::Matrix01 back = ColumnsToMatrix(emitted.at("columns"), m.ground_size());
    recheck = RecheckColumns(emitted, m, false) && ms::Equivalent(back, x);
  }
  return FinishWithChecks(report, verification, recheck);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shifted and lexicographic optimization over matroids"};
  app.require_subcommand(1);
  Options options;

  auto add_common = [&](CLI::App* sub, const std::string& files_help) {
    sub->add_option("files", options.files, files_help)->required();
    sub->add_option("--n", options.n, "Number of copies (columns)")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_flag("--verify", options.verify,
                  "Cross-check against the brute-force oracle");
    sub->add_flag("--recheck", options.recheck,
                  "Re-parse and re-validate the emitted solution");
    sub->add_option("--seed", options.seed, "Seed for sampled checks")
        ->default_val(0);
  };

  CLI::App* lexmin = app.add_subcommand(
      "lexmin-trees", "n spanning trees with lexicographically minimal "
                      "vulnerability vector");
  add_common(lexmin, "Graph file ('p V E' then 'e u v' lines)");

  CLI::App* shifted = app.add_subcommand(
      "shifted", "Shifted optimization over a matroid");
  add_common(shifted, "Matroid JSON file, profits JSON file");
  shifted->add_flag("--bases", options.bases, "Optimize over bases only");

  CLI::App* intersect = app.add_subcommand(
      "intersect-value", "Shifted optimal value over a matroid intersection");
  add_common(intersect,
             "Two matroid JSON files and a profits JSON file, or only the "
             "profits file with --bipartite");
  intersect->add_option("--bipartite", options.bipartite,
                        "Bipartite graph JSON; also recovers a solution");

  CLI::App* fiber = app.add_subcommand(
      "fiber", "Find y in S^n equivalent to a matrix x in [S^n]");
  add_common(fiber, "Matroid JSON file, matrix JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*lexmin) return LexminTrees(options);
    if (*shifted) return Shifted(options);
    if (*intersect) return IntersectValue(options);
    if (*fiber) return Fiber(options);
  } catch (const ms::Error& e) {
    std::cerr << "error (" << ms::ErrorCodeName(e.code()) << "): " << e.what()
              << "\n";
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
