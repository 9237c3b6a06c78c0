// Copyright 2026 The l2alex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "l2alex/error.hpp"

namespace l2alex {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

inline Int abs_int(Int x) { return x < 0 ? -x : x; }

inline Int gcd_int(Int a, Int b) { return std::gcd(abs_int(a), abs_int(b)); }

/// Gcd of all entries; 0 for the zero vector.
inline Int content(std::span<const Int> v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, abs_int(x));
  return g;
}

inline Int dot(std::span<const Int> a, std::span<const Int> b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch,
          "dot product of vectors of length " + std::to_string(a.size()) +
              " and " + std::to_string(b.size()));
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(std::span<const Int> v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

/// Index of the first nonzero entry, or v.size() when there is none.
inline std::size_t leading_index(std::span<const Int> v) {
  std::size_t i = 0;
  while (i < v.size() && v[i] == 0) ++i;
  return i;
}

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Int> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  IntVector apply(std::span<const Int> v) const {
    require(v.size() == cols_, ErrorKind::DimensionMismatch,
            "matrix with " + std::to_string(cols_) +
                " columns applied to vector of length " +
                std::to_string(v.size()));
    IntVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
    return out;
  }

  IntVector apply_transpose(std::span<const Int> v) const {
    require(v.size() == rows_, ErrorKind::DimensionMismatch,
            "transpose of matrix with " + std::to_string(rows_) +
                " rows applied to vector of length " +
                std::to_string(v.size()));
    IntVector out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[c] += (*this)(r, c) * v[r];
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVector data_;
};

}  // namespace l2alex
