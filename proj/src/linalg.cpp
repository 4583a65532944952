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

#include "quatcode/linalg.hpp"

#include <algorithm>

#include "quatcode/error.hpp"

namespace quatcode {

void Matrix::append_row(std::span<const Elem> values) {
  if (values.size() != cols_) throw InvalidArgument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::append_rows(const Matrix& other) {
  if (other.cols_ != cols_) throw InvalidArgument("column count mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

std::size_t Matrix::rref() {
  const Field& F = *field_;
  pivots_.clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && at(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != r) std::swap_ranges(row(p).begin(), row(p).end(), row(r).begin());
    const Elem inv = F.inv(at(r, c));
    if (inv != 1) {
      for (std::size_t j = c; j < cols_; ++j) at(r, j) = F.mul(at(r, j), inv);
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Elem f = at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) at(i, j) ^= F.mul(f, at(r, j));
    }
    pivots_.push_back(c);
    ++r;
  }
  rows_ = r;
  data_.resize(rows_ * cols_);
  return r;
}

std::size_t rank(Matrix m) { return m.rref(); }

}  // namespace quatcode
