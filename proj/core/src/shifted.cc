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

#include "matroid_shift/shifted.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "matroid_shift/error.h"
#include "matroid_shift/greedy.h"

namespace matroid_shift {
namespace {

void CheckShape(const MatroidDesc& s, int n, int rows, int cols,
                const char* what) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidInput, "n must be positive");
  }
  if (rows != s.ground_size() || cols != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " is " + std::to_string(rows) + "x" +
                    std::to_string(cols) + ", expected " +
                    std::to_string(s.ground_size()) + "x" + std::to_string(n));
  }
}

// y^k is the column sum of part k. Each part lies in the n-lift, so every row
// of a part holds at most one 1 and y stays 0/1.
Matrix01 FiberFromDecomposition(const Decomposition& decomposition, int rows,
                                int cols) {
  Matrix01 y(rows, cols);
  for (int k = 0; k < cols; ++k) {
    const Matrix01& part = decomposition.parts[k];
    for (int i = 0; i < rows; ++i) {
      if (part.RowSum(i) > 0) y.set(i, k);
    }
  }
  return y;
}

void CheckFiber(const MatroidDesc& s, const Matrix01& x, const Matrix01& y,
                int required_size) {
  if (!Equivalent(x, y)) {
    throw Error(ErrorCode::kInternal, "fiber is not equivalent to its input");
  }
  for (int k = 0; k < y.cols(); ++k) {
    const Subset01 column = y.Column(k);
    if (!s.IsIndependent(column)) {
      throw Error(ErrorCode::kInternal, "fiber column is dependent");
    }
    if (required_size >= 0 && column.Count() != required_size) {
      throw Error(ErrorCode::kInternal, "fiber column is not a basis");
    }
  }
}

struct ShuffleRun {
  Matrix01 x;
  Decomposition decomposition;
};

ShuffleRun RunShuffling(const MatroidDesc& s, int n, const ProfitMatrix& cbar,
                        bool bases) {
  ShuffleOracle shuffle(s, n);
  MatroidPartition partition = shuffle.NewPartition();
  const Subset01 flat = GreedyMax(partition, cbar.Flat(), bases);
  return {Matrix01::Unflatten(flat, s.ground_size(), n),
          ToDecomposition(partition, s.ground_size(), n)};
}

// Lexicographic weights are constant within a column and strictly
// decreasing across columns, and the bases transform makes them all
// positive, so the greedy order is exactly LexminOrder.
ShuffleRun RunLexmin(const MatroidDesc& s, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "n must be positive");
  const int d = s.ground_size();
  ShuffleOracle shuffle(s, n);
  MatroidPartition partition = shuffle.NewPartition();
  GreedyInOrder(partition, LexminOrder(d, n));
  return {Matrix01::Unflatten(partition.current(), d, n),
          ToDecomposition(partition, d, n)};
}

}  // namespace

Matrix01 Shift(const Matrix01& x) {
  Matrix01 out(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i) {
    const int ones = x.RowSum(i);
    for (int j = 0; j < ones; ++j) out.set(i, j);
  }
  return out;
}

IntMatrix Shift(const IntMatrix& c) {
  std::vector<std::vector<std::int64_t>> rows = c.ToRows();
  for (auto& row : rows) std::sort(row.begin(), row.end(), std::greater<>());
  if (rows.empty()) return IntMatrix(0, c.cols());
  return IntMatrix::FromRows(rows);
}

bool IsShifted(const IntMatrix& c) {
  for (int i = 0; i < c.rows(); ++i) {
    auto row = c.Row(i);
    if (!std::is_sorted(row.begin(), row.end(), std::greater<>())) return false;
  }
  return true;
}

bool Equivalent(const Matrix01& x, const Matrix01& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrices differ in shape");
  }
  return x.RowSums() == y.RowSums();
}

VulnVector VulnerabilityVector(const Matrix01& x) {
  std::vector<int> values(x.cols(), 0);
  for (int i = 0; i < x.rows(); ++i) {
    const int sum = x.RowSum(i);
    for (int k = 0; k < sum; ++k) ++values[k];
  }
  return VulnVector(std::move(values));
}

std::int64_t Dot(const IntMatrix& c, const Matrix01& x) {
  if (c.rows() != x.rows() || c.cols() != x.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrices differ in shape");
  }
  std::int64_t total = 0;
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) {
      if (x.at(i, j)) total += c.at(i, j);
    }
  }
  return total;
}

std::int64_t ShiftedValue(const ProfitMatrix& c, const Matrix01& x) {
  return Dot(Shift(c), Shift(x));
}

std::int64_t ShiftedValue(const ProfitMatrix& c, const IntMatrix& y) {
  if (c.rows() != y.rows() || c.cols() != y.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrices differ in shape");
  }
  const IntMatrix cbar = Shift(c);
  const IntMatrix ybar = Shift(y);
  std::int64_t total = 0;
  for (int i = 0; i < c.rows(); ++i) {
    for (int j = 0; j < c.cols(); ++j) total += cbar.at(i, j) * ybar.at(i, j);
  }
  return total;
}

void CheckProfitGuard(const ProfitMatrix& c) {
  CheckWeightRange(c.Flat(), kProfitGuard);
}

Matrix01 SolveShuffling(const MatroidDesc& s, int n, const ProfitMatrix& cbar,
                        bool bases) {
  CheckShape(s, n, cbar.rows(), cbar.cols(), "profit matrix");
  if (!IsShifted(cbar)) {
    throw Error(ErrorCode::kInvalidInput,
                "profit rows must be nonincreasing; shift the matrix first");
  }
  CheckProfitGuard(cbar);
  return RunShuffling(s, n, cbar, bases).x;
}

Matrix01 SolveFiber(const MatroidDesc& s, int n, const Matrix01& x) {
  CheckShape(s, n, x.rows(), x.cols(), "matrix");
  ShuffleResult shuffle = ShuffleIsIndependent(s, n, x);
  if (!shuffle.independent) {
    throw Error(ErrorCode::kInfeasible, "not in shuffle set");
  }
  Matrix01 y = FiberFromDecomposition(shuffle.decomposition, x.rows(), n);
  CheckFiber(s, x, y, -1);
  return y;
}

ShiftedSolution SolveShifted(const MatroidDesc& s, int n, const ProfitMatrix& c,
                             bool bases) {
  CheckShape(s, n, c.rows(), c.cols(), "profit matrix");
  CheckProfitGuard(c);
  const ProfitMatrix cbar = Shift(c);
  ShuffleRun run = RunShuffling(s, n, cbar, bases);

  ShiftedSolution solution;
  solution.y = FiberFromDecomposition(run.decomposition, s.ground_size(), n);
  CheckFiber(s, run.x, solution.y, bases ? Rank(s) : -1);
  solution.value = ShiftedValue(c, solution.y);
  solution.vuln = VulnerabilityVector(solution.y);
  // At an optimum of the shuffling problem cbar . x equals cbar . shift(x).
  if (solution.value != Dot(cbar, run.x)) {
    throw Error(ErrorCode::kInternal,
                "shifted value disagrees with the shuffling optimum");
  }
  return solution;
}

std::vector<int> LexminOrder(int rows, int cols) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(rows) * cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) order.push_back(LiftedElement{i, j}.FlatIndex(cols));
  }
  return order;
}

Matrix01 SolveLexminShuffling(const MatroidDesc& s, int n) {
  return RunLexmin(s, n).x;
}

ShiftedSolution SolveLexmin(const MatroidDesc& s, int n) {
  const int d = s.ground_size();
  const ShuffleRun run = RunLexmin(s, n);
  ShiftedSolution solution;
  solution.y = FiberFromDecomposition(run.decomposition, d, n);
  CheckFiber(s, run.x, solution.y, Rank(s));
  solution.vuln = VulnerabilityVector(solution.y);

  // Report -sum_k |shift(y)^k| (d+1)^k when it fits; 0 otherwise.
  __int128 value = 0;
  __int128 scale = 1;
  bool fits = true;
  for (int k = 0; k < n && fits; ++k) {
    value -= scale * solution.vuln[k];
    scale *= d + 1;
    fits = value >= std::numeric_limits<std::int64_t>::min() &&
           (k + 1 == n || scale <= std::numeric_limits<std::int64_t>::max());
  }
  solution.value = fits ? static_cast<std::int64_t>(value) : 0;
  return solution;
}

SmallShiftedSolution SolveShiftedSmall(
    const std::vector<std::vector<std::int64_t>>& members, int n,
    const ProfitMatrix& c) {
  if (members.empty()) {
    throw Error(ErrorCode::kInvalidInput, "explicit set system is empty");
  }
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "n must be positive");
  const int d = static_cast<int>(members[0].size());
  if (c.rows() != d || c.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "profit matrix shape differs from d x n");
  }
  std::int64_t max_entry = 0;
  for (const auto& z : members) {
    if (static_cast<int>(z.size()) != d) {
      throw Error(ErrorCode::kDimensionMismatch, "members differ in length");
    }
    for (std::int64_t v : z) {
      if (v == std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorCode::kOverflow, "member entry out of range");
      }
      max_entry = std::max(max_entry, std::abs(v));
    }
  }
  CheckProfitGuard(c);
  __int128 bound = 0;
  for (std::int64_t v : c.Flat()) bound += std::abs(v);
  if (bound * max_entry > std::numeric_limits<std::int64_t>::max()) {
    throw Error(ErrorCode::kOverflow, "objective may exceed 64-bit range");
  }

  const int m = static_cast<int>(members.size());
  SmallShiftedSolution best;
  bool have_best = false;
  std::vector<int> counts(m, 0);

  auto evaluate = [&] {
    IntMatrix y(d, n);
    int col = 0;
    for (int t = 0; t < m; ++t) {
      for (int r = 0; r < counts[t]; ++r, ++col) {
        for (int i = 0; i < d; ++i) y.at(i, col) = members[t][i];
      }
    }
    const std::int64_t value = ShiftedValue(c, y);
    if (!have_best || value > best.value) {
      best = {std::move(y), value, counts};
      have_best = true;
    }
  };
  // counts[0..m-2] range freely; counts[m-1] takes the remainder.
  std::function<void(int, int)> recurse = [&](int t, int remaining) {
    if (t == m - 1) {
      counts[t] = remaining;
      evaluate();
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      counts[t] = k;
      recurse(t + 1, remaining - k);
    }
  };
  recurse(0, n);
  return best;
}

}  // namespace matroid_shift
