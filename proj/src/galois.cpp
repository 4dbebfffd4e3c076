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

#include "mdcsr/galois.hpp"

#include <algorithm>
#include <string>

namespace mdcsr {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::ZeroPoint: return "ZeroPoint";
    case Errc::BadParameters: return "BadParameters";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::SelfRepair: return "SelfRepair";
    case Errc::WrongHelperCount: return "WrongHelperCount";
    case Errc::WrongShareCount: return "WrongShareCount";
    case Errc::IndivisibleFileSize: return "IndivisibleFileSize";
    case Errc::UnknownLevel: return "UnknownLevel";
    case Errc::EmptySystem: return "EmptySystem";
    case Errc::OverlappingSets: return "OverlappingSets";
    case Errc::BadRange: return "BadRange";
    case Errc::SplitOutOfRegime: return "SplitOutOfRegime";
    case Errc::NotSquareSystem: return "NotSquareSystem";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidRates: return "InvalidRates";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_prime(std::uint32_t p) noexcept {
  if (p < 2) return false;
  for (std::uint32_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

FieldModulus::FieldModulus(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 16) || !is_prime(p)) {
    throw Error(Errc::NotPrime, "field modulus must be a prime in (2, 65536), got " + std::to_string(p));
  }
}

Element FieldModulus::pow(Element a, std::uint64_t e) const noexcept {
  Element result = 1 % p_;
  Element base = reduce(a);
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element FieldModulus::inv(Element a) const {
  a = reduce(a);
  if (a == 0) throw Error(Errc::ZeroInverse, "zero has no multiplicative inverse");
  return pow(a, p_ - 2);
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, FieldModulus field)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0), field_(field) {}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::vector<Element> entries,
                         FieldModulus field)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), field_(field) {
  if (entries_.size() != rows * cols) {
    throw Error(Errc::DimensionMismatch, "entry count does not match rows * cols");
  }
  for (Element& e : entries_) {
    if (e >= field_.value()) throw Error(Errc::DimensionMismatch, "entry not reduced modulo p");
  }
}

FieldMatrix FieldMatrix::identity(std::size_t n, FieldModulus field) {
  FieldMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void FieldMatrix::append_row(std::span<const Element> values) {
  if (values.size() != cols_) throw Error(Errc::DimensionMismatch, "row length mismatch");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

FieldMatrix FieldMatrix::select_rows(std::span<const std::size_t> indices) const {
  FieldMatrix out(0, cols_, field_);
  for (std::size_t r : indices) {
    if (r >= rows_) throw Error(Errc::IndexOutOfRange, "row index out of range");
    out.append_row(row(r));
  }
  return out;
}

FieldMatrix FieldMatrix::col_range(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw Error(Errc::IndexOutOfRange, "column range out of range");
  FieldMatrix out(rows_, count, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < count; ++c) out.at(r, c) = at(r, first + c);
  }
  return out;
}

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field())) {
    throw Error(Errc::DimensionMismatch, "incompatible matrix product");
  }
  const FieldModulus& f = a.field();
  FieldMatrix out(a.rows(), b.cols(), f);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = (acc + std::uint64_t{a.at(r, k)} * b.at(k, c)) % f.value();
      }
      out.at(r, c) = static_cast<Element>(acc);
    }
  }
  return out;
}

FieldMatrix subtract(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::DimensionMismatch, "incompatible matrix difference");
  }
  FieldMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.field().sub(a.at(r, c), b.at(r, c));
  }
  return out;
}

FieldMatrix vstack(const FieldMatrix& top, const FieldMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw Error(Errc::DimensionMismatch, "vstack column mismatch");
  FieldMatrix out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

EchelonForm rref(const FieldMatrix& m) {
  FieldMatrix a = m;
  const FieldModulus& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a.at(r, c) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row) {
      std::swap_ranges(a.row(r).begin(), a.row(r).end(), a.row(pivot_row).begin());
    }
    const Element scale = f.inv(a.at(pivot_row, c));
    for (Element& e : a.row(pivot_row)) e = f.mul(e, scale);
    for (std::size_t other = 0; other < a.rows(); ++other) {
      if (other == pivot_row) continue;
      const Element factor = a.at(other, c);
      if (factor == 0) continue;
      for (std::size_t k = c; k < a.cols(); ++k) {
        a.at(other, k) = f.sub(a.at(other, k), f.mul(factor, a.at(pivot_row, k)));
      }
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) {
  // Forward elimination only; same pivot rule as rref.
  FieldMatrix a = m;
  const FieldModulus& f = m.field();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a.at(r, c) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row) {
      std::swap_ranges(a.row(r).begin(), a.row(r).end(), a.row(pivot_row).begin());
    }
    const Element scale = f.inv(a.at(pivot_row, c));
    for (std::size_t below = pivot_row + 1; below < a.rows(); ++below) {
      const Element factor = f.mul(a.at(below, c), scale);
      if (factor == 0) continue;
      for (std::size_t k = c; k < a.cols(); ++k) {
        a.at(below, k) = f.sub(a.at(below, k), f.mul(factor, a.at(pivot_row, k)));
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

FieldMatrix solve(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != a.rows()) {
    throw Error(Errc::DimensionMismatch, "solve needs a square system with matching right-hand side");
  }
  const std::size_t n = a.rows();
  FieldMatrix augmented(n, n + b.cols(), a.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) augmented.at(r, n + c) = b.at(r, c);
  }
  EchelonForm ef = rref(augmented);
  if (ef.pivot_cols.size() < n || ef.pivot_cols[n - 1] != n - 1) {
    throw Error(Errc::SingularMatrix, "coefficient matrix is singular");
  }
  return ef.reduced.col_range(n, b.cols());
}

FieldMatrix inverse(const FieldMatrix& a) {
  return solve(a, FieldMatrix::identity(a.rows(), a.field()));
}

FieldMatrix vandermonde(std::span<const Element> points, std::size_t width, FieldModulus field) {
  if (points.empty()) throw Error(Errc::BadParameters, "vandermonde needs at least one point");
  std::vector<Element> seen;
  FieldMatrix out(points.size(), width, field);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Element x = points[i];
    if (x >= field.value()) throw Error(Errc::BadParameters, "point not reduced modulo p");
    if (x == 0) throw Error(Errc::ZeroPoint, "evaluation point 0 is not allowed");
    if (std::find(seen.begin(), seen.end(), x) != seen.end()) {
      throw Error(Errc::DuplicatePoint, "evaluation point " + std::to_string(x) + " repeated");
    }
    seen.push_back(x);
    Element power = 1;
    for (std::size_t c = 0; c < width; ++c) {
      out.at(i, c) = power;
      power = field.mul(power, x);
    }
  }
  return out;
}

}  // namespace mdcsr
