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
#include <optional>
#include <span>
#include <vector>

#include "mdcsr/galois.hpp"

namespace mdcsr {

using NodeId = std::size_t;  // 1-based

/// Enumeration of the free cells of the d x d symmetric message matrix
/// whose bottom-right (d-k) x (d-k) block is pinned to zero. Cells are
/// upper-triangle positions (row <= col), listed row-major. Cells in the
/// first `key_rows` rows hold keys, the rest hold message symbols.
class MessageMatrixLayout {
 public:
  struct Cell {
    std::size_t row;
    std::size_t col;
    friend bool operator==(const Cell&, const Cell&) = default;
  };

  MessageMatrixLayout(std::size_t d, std::size_t k, std::size_t key_rows);

  std::size_t dimension() const noexcept { return d_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const std::vector<std::size_t>& key_cells() const noexcept { return key_cells_; }
  const std::vector<std::size_t>& message_cells() const noexcept { return message_cells_; }

  // Index into cells() of matrix position (r, c) in either triangle, or
  // nullopt for a pinned-zero position.
  std::optional<std::size_t> index_of(std::size_t r, std::size_t c) const;

 private:
  std::size_t d_;
  std::vector<Cell> cells_;
  std::vector<std::size_t> key_cells_;
  std::vector<std::size_t> message_cells_;
  std::vector<std::optional<std::size_t>> lookup_;  // d*d
};

/// One secure (n, k, d, l) product-matrix MBR code, repeated over `stripes`
/// independent message matrices. Per stripe each node stores d symbols and
/// each helper sends one repair symbol.
class LevelCode {
 public:
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t l() const noexcept { return l_; }
  std::size_t stripes() const noexcept { return stripes_; }
  const FieldModulus& field() const noexcept { return field_; }
  const std::vector<Element>& eval_points() const noexcept { return eval_points_; }
  const MessageMatrixLayout& layout() const noexcept { return layout_; }

  std::size_t message_count() const noexcept { return layout_.message_cells().size(); }
  std::size_t key_count() const noexcept { return layout_.key_cells().size(); }
  std::size_t symbols_per_node() const noexcept { return d_ * stripes_; }

  // Row of the encoding matrix for a node (length d).
  std::span<const Element> encoding_row(NodeId node) const;

  /// Coefficients, over the free cells of one stripe, of the d symbols a
  /// node stores (d x cell_count).
  FieldMatrix stored_functionals(NodeId node) const;
  /// Coefficients of the single repair symbol helper -> target.
  std::vector<Element> repair_functional(NodeId helper, NodeId target) const;

  /// Negative-control copy whose encoding row for `node` is all zeros.
  /// The result no longer satisfies recovery or repair.
  LevelCode with_zeroed_row(NodeId node) const;

 private:
  friend LevelCode build_level_code(std::size_t, std::size_t, std::size_t, std::size_t,
                                    FieldModulus, std::size_t);
  LevelCode(std::size_t n, std::size_t k, std::size_t d, std::size_t l, FieldModulus field,
            std::size_t stripes);

  void check_node(NodeId node) const;

  std::size_t n_, k_, d_, l_;
  FieldModulus field_;
  std::size_t stripes_;
  std::vector<Element> eval_points_;
  FieldMatrix psi_;  // n x d
  MessageMatrixLayout layout_;
};

// Requires l < k <= d < n <= p - 1 and stripes >= 1.
LevelCode build_level_code(std::size_t n, std::size_t k, std::size_t d, std::size_t l,
                           FieldModulus field, std::size_t stripes);

struct NodeVector {
  NodeId node_id = 0;
  std::vector<Element> symbols;  // stripe-major, d per stripe
  friend bool operator==(const NodeVector&, const NodeVector&) = default;
};

struct RepairSymbol {
  NodeId helper = 0;
  NodeId target = 0;
  std::size_t stripe = 0;
  Element value = 0;
  friend bool operator==(const RepairSymbol&, const RepairSymbol&) = default;
};

/// Uniform keys from std::mt19937_64 seeded with `seed`, reduced to GF(p)
/// by rejection sampling, drawn stripe by stripe in key-cell order.
std::vector<Element> draw_keys(const LevelCode& code, std::uint64_t seed);

std::vector<NodeVector> encode_level(const LevelCode& code, std::span<const Element> message,
                                     std::uint64_t seed);
/// Encodes with explicitly supplied keys (key_count * stripes symbols).
std::vector<NodeVector> encode_level_with_keys(const LevelCode& code,
                                               std::span<const Element> message,
                                               std::span<const Element> keys);

std::vector<RepairSymbol> repair_symbol(const LevelCode& code, const NodeVector& helper_share,
                                        NodeId target);
NodeVector regenerate_node(const LevelCode& code, std::span<const RepairSymbol> packets,
                           NodeId target);
std::vector<Element> collect_level(const LevelCode& code, std::span<const NodeVector> shares);

}  // namespace mdcsr
