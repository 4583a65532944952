// Copyright 2026 The quatcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUATCODE_LINALG_HPP
#define QUATCODE_LINALG_HPP

#include <span>
#include <vector>

#include "quatcode/galois.hpp"

namespace quatcode {

/// Row-major dense matrix over a binary field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> values);
  void append_rows(const Matrix& other);

  /// Reduces to reduced row echelon form in place (pivots equal to 1, zero
  /// rows dropped) and returns the rank. Pivot columns are recorded.
  std::size_t rref();
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_;
  std::vector<Elem> data_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(Matrix m);

}  // namespace quatcode

#endif  // QUATCODE_LINALG_HPP
