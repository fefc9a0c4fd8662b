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

#include "matroid_shift/types.h"

#include <algorithm>
#include <sstream>

#include "matroid_shift/error.h"

namespace matroid_shift {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "invalid_input";
    case ErrorCode::kDimensionMismatch:
      return "dimension_mismatch";
    case ErrorCode::kInfeasible:
      return "infeasible";
    case ErrorCode::kOverflow:
      return "overflow";
    case ErrorCode::kDisallowedKind:
      return "disallowed_kind";
    case ErrorCode::kGuardExceeded:
      return "guard_exceeded";
    case ErrorCode::kInternal:
      return "internal";
  }
  return "unknown";
}

Subset01::Subset01(int ground_size) {
  if (ground_size < 0) {
    throw Error(ErrorCode::kInvalidInput, "negative ground size");
  }
  bits_.assign(ground_size, 0);
}

Subset01 Subset01::FromElements(int ground_size, std::span<const int> elements) {
  Subset01 s(ground_size);
  for (int e : elements) {
    if (e < 0 || e >= ground_size) {
      throw Error(ErrorCode::kInvalidInput,
                  "element " + std::to_string(e) + " outside ground set");
    }
    s.Set(e);
  }
  return s;
}

Subset01 Subset01::Full(int ground_size) {
  Subset01 s(ground_size);
  std::fill(s.bits_.begin(), s.bits_.end(), 1);
  return s;
}

int Subset01::Count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<int> Subset01::Elements() const {
  std::vector<int> out;
  for (int e = 0; e < ground_size(); ++e) {
    if (bits_[e]) out.push_back(e);
  }
  return out;
}

bool Subset01::IsSubsetOf(const Subset01& other) const {
  if (other.ground_size() != ground_size()) return false;
  for (int e = 0; e < ground_size(); ++e) {
    if (bits_[e] && !other.bits_[e]) return false;
  }
  return true;
}

Matrix01::Matrix01(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw Error(ErrorCode::kInvalidInput, "negative matrix dimension");
  }
  cells_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

Matrix01 Matrix01::FromRows(const std::vector<std::vector<int>>& rows) {
  const int d = static_cast<int>(rows.size());
  const int n = d == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix01 x(d, n);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) {
        throw Error(ErrorCode::kInvalidInput, "matrix entry not in {0,1}");
      }
      x.set(i, j, rows[i][j] == 1);
    }
  }
  return x;
}

Matrix01 Matrix01::FromColumns(int rows, std::span<const Subset01> columns) {
  Matrix01 x(rows, static_cast<int>(columns.size()));
  for (int j = 0; j < x.cols(); ++j) {
    if (columns[j].ground_size() != rows) {
      throw Error(ErrorCode::kDimensionMismatch, "column length mismatch");
    }
    for (int i = 0; i < rows; ++i) x.set(i, j, columns[j].Contains(i));
  }
  return x;
}

Matrix01 Matrix01::Unflatten(const Subset01& flat, int rows, int cols) {
  if (flat.ground_size() != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch, "flat size mismatch");
  }
  Matrix01 x(rows, cols);
  for (int f = 0; f < flat.ground_size(); ++f) x.cells_[f] = flat.Contains(f);
  return x;
}

Subset01 Matrix01::Column(int j) const {
  Subset01 s(rows_);
  for (int i = 0; i < rows_; ++i) s.Set(i, at(i, j));
  return s;
}

int Matrix01::RowSum(int i) const {
  int sum = 0;
  for (int j = 0; j < cols_; ++j) sum += at(i, j);
  return sum;
}

std::vector<int> Matrix01::RowSums() const {
  std::vector<int> sums(rows_);
  for (int i = 0; i < rows_; ++i) sums[i] = RowSum(i);
  return sums;
}

int Matrix01::Count() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), 1));
}

Subset01 Matrix01::Flatten() const {
  Subset01 s(rows_ * cols_);
  for (int f = 0; f < rows_ * cols_; ++f) s.Set(f, cells_[f] != 0);
  return s;
}

std::vector<std::vector<int>> Matrix01::ToRows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[i][j] = at(i, j);
  }
  return out;
}

IntMatrix::IntMatrix(int rows, int cols, std::int64_t fill)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw Error(ErrorCode::kInvalidInput, "negative matrix dimension");
  }
  cells_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

IntMatrix IntMatrix::FromRows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const int d = static_cast<int>(rows.size());
  const int n = d == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix c(d, n);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    std::copy(rows[i].begin(), rows[i].end(),
              c.cells_.begin() + static_cast<std::ptrdiff_t>(i) * n);
  }
  return c;
}

std::vector<std::vector<std::int64_t>> IntMatrix::ToRows() const {
  std::vector<std::vector<std::int64_t>> out;
  for (int i = 0; i < rows_; ++i) {
    auto row = Row(i);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

std::string VulnVector::ToString() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) out << ',';
    out << values_[k];
  }
  out << ')';
  return out.str();
}

bool LexLess(const VulnVector& f, const VulnVector& g) {
  if (f.size() != g.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vulnerability vectors differ in length");
  }
  for (int k = f.size() - 1; k >= 0; --k) {
    if (f[k] != g[k]) return f[k] < g[k];
  }
  return false;
}

}  // namespace matroid_shift
