// Copyright 2026 The mdcsr Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mdcsr/error.hpp"

namespace mdcsr {

using Element = std::uint32_t;

/// A prime p with 2 < p < 2^16. Primality is checked by trial division.
class FieldModulus {
 public:
  static constexpr std::uint32_t kDefault = 257;

  explicit FieldModulus(std::uint32_t p = kDefault);

  std::uint32_t value() const noexcept { return p_; }

  Element reduce(std::uint64_t x) const noexcept { return static_cast<Element>(x % p_); }
  Element add(Element a, Element b) const noexcept { return reduce(std::uint64_t{a} + b); }
  Element sub(Element a, Element b) const noexcept { return reduce(std::uint64_t{a} + p_ - b); }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept { return reduce(std::uint64_t{a} * b); }
  Element pow(Element a, std::uint64_t e) const noexcept;
  // Throws ZeroInverse for a == 0.
  Element inv(Element a) const;

  friend bool operator==(const FieldModulus&, const FieldModulus&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p) noexcept;

/// Dense row-major matrix over GF(p).
class FieldMatrix {
 public:
  FieldMatrix(std::size_t rows, std::size_t cols, FieldModulus field);
  FieldMatrix(std::size_t rows, std::size_t cols, std::vector<Element> entries, FieldModulus field);

  static FieldMatrix identity(std::size_t n, FieldModulus field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldModulus& field() const noexcept { return field_; }
  const std::vector<Element>& entries() const noexcept { return entries_; }

  Element at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Element& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const Element> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Element> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

  // Appends one row; the span length must equal cols().
  void append_row(std::span<const Element> values);

  FieldMatrix transpose() const;
  FieldMatrix select_rows(std::span<const std::size_t> indices) const;
  FieldMatrix col_range(std::size_t first, std::size_t count) const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
  FieldModulus field_;
};

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix subtract(const FieldMatrix& a, const FieldMatrix& b);
// Rows of `top` followed by rows of `bottom`; column counts must agree.
FieldMatrix vstack(const FieldMatrix& top, const FieldMatrix& bottom);

struct EchelonForm {
  FieldMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Pivots are taken as the first nonzero entry
/// scanning columns left to right, rows top to bottom.
EchelonForm rref(const FieldMatrix& m);
std::size_t rank(const FieldMatrix& m);

// x with a * x = b. Throws SingularMatrix when a is not invertible.
FieldMatrix solve(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix inverse(const FieldMatrix& a);

/// Row i is (1, x_i, x_i^2, ..., x_i^(width-1)).
FieldMatrix vandermonde(std::span<const Element> points, std::size_t width, FieldModulus field);

}  // namespace mdcsr
