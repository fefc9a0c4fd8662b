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

#ifndef MATROID_SHIFT_TYPES_H_
#define MATROID_SHIFT_TYPES_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace matroid_shift {

// 0/1 indicator vector over a ground set {0, ..., ground_size-1}.
class Subset01 {
 public:
  Subset01() = default;
  explicit Subset01(int ground_size);

  static Subset01 FromElements(int ground_size, std::span<const int> elements);
  static Subset01 Full(int ground_size);

  int ground_size() const { return static_cast<int>(bits_.size()); }
  bool Contains(int e) const { return bits_[e] != 0; }
  void Set(int e, bool value = true) { bits_[e] = value ? 1 : 0; }

  int Count() const;
  std::vector<int> Elements() const;
  bool IsSubsetOf(const Subset01& other) const;

  bool operator==(const Subset01& other) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Index of cell (row, col) of a rows x cols matrix on the flattened ground
// set [rows] x [cols]. The layout is row-major: row * cols + col.
struct LiftedElement {
  int row = 0;
  int col = 0;

  int FlatIndex(int cols) const { return row * cols + col; }
  static LiftedElement FromFlat(int flat_index, int cols) {
    return {flat_index / cols, flat_index % cols};
  }
};

// d x n matrix with 0/1 entries; column j is one of n copies, row i a ground
// element.
class Matrix01 {
 public:
  Matrix01() = default;
  Matrix01(int rows, int cols);

  // Throws on ragged input or entries outside {0,1}.
  static Matrix01 FromRows(const std::vector<std::vector<int>>& rows);
  static Matrix01 FromColumns(int rows, std::span<const Subset01> columns);
  static Matrix01 Unflatten(const Subset01& flat, int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool at(int i, int j) const { return cells_[i * cols_ + j] != 0; }
  void set(int i, int j, bool value = true) {
    cells_[i * cols_ + j] = value ? 1 : 0;
  }

  Subset01 Column(int j) const;
  int RowSum(int i) const;
  std::vector<int> RowSums() const;
  // |x|, the number of ones.
  int Count() const;
  Subset01 Flatten() const;

  std::vector<std::vector<int>> ToRows() const;

  bool operator==(const Matrix01& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

// d x n matrix of signed 64-bit integers. Used for profit matrices c and for
// integer-valued solutions of the fixed-cardinality solver.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, std::int64_t fill = 0);

  static IntMatrix FromRows(const std::vector<std::vector<std::int64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t at(int i, int j) const { return cells_[i * cols_ + j]; }
  std::int64_t& at(int i, int j) { return cells_[i * cols_ + j]; }

  std::span<const std::int64_t> Row(int i) const {
    return {cells_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  // Row-major flattened view, same layout as LiftedElement.
  std::span<const std::int64_t> Flat() const { return cells_; }

  std::vector<std::vector<std::int64_t>> ToRows() const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> cells_;
};

using ProfitMatrix = IntMatrix;

// One signed weight per ground element.
using Weights = std::vector<std::int64_t>;

// (|shift(x)^1|, ..., |shift(x)^n|): entry k counts the elements used by at
// least k+1 of the n columns. Entries are nonincreasing.
class VulnVector {
 public:
  VulnVector() = default;
  explicit VulnVector(std::vector<int> values) : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int k) const { return values_[k]; }
  const std::vector<int>& values() const { return values_; }

  std::string ToString() const;

  bool operator==(const VulnVector& other) const = default;

 private:
  std::vector<int> values_;
};

// Order on vulnerability vectors: f precedes g iff f != g and, at the LAST
// index where they differ, f is smaller. The n-th entry is minimized first,
// then the (n-1)-th, and so on; this is the reverse of the naive
// lexicographic order. Throws on length mismatch.
bool LexLess(const VulnVector& f, const VulnVector& g);

}  // namespace matroid_shift

#endif  // MATROID_SHIFT_TYPES_H_
