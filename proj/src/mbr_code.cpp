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

#include "mdcsr/mbr_code.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace mdcsr {

MessageMatrixLayout::MessageMatrixLayout(std::size_t d, std::size_t k, std::size_t key_rows)
    : d_(d), lookup_(d * d) {
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = r; c < d; ++c) {
      if (r >= k && c >= k) continue;
      const std::size_t idx = cells_.size();
      cells_.push_back({r, c});
      lookup_[r * d + c] = idx;
      lookup_[c * d + r] = idx;
      (r < key_rows ? key_cells_ : message_cells_).push_back(idx);
    }
  }
}

std::optional<std::size_t> MessageMatrixLayout::index_of(std::size_t r, std::size_t c) const {
  if (r >= d_ || c >= d_) throw Error(Errc::IndexOutOfRange, "matrix position out of range");
  return lookup_[r * d_ + c];
}

LevelCode::LevelCode(std::size_t n, std::size_t k, std::size_t d, std::size_t l,
                     FieldModulus field, std::size_t stripes)
    : n_(n), k_(k), d_(d), l_(l), field_(field), stripes_(stripes), psi_(0, d, field),
      layout_(d, k, l) {
  for (std::size_t i = 1; i <= n; ++i) eval_points_.push_back(static_cast<Element>(i));
  psi_ = vandermonde(eval_points_, d, field);
}

LevelCode build_level_code(std::size_t n, std::size_t k, std::size_t d, std::size_t l,
                           FieldModulus field, std::size_t stripes) {
  auto fail = [](const std::string& why) { throw Error(Errc::BadParameters, why); };
  if (!(l < k)) fail("l < k violated (l=" + std::to_string(l) + ", k=" + std::to_string(k) + ")");
  if (!(k <= d)) fail("k <= d violated (k=" + std::to_string(k) + ", d=" + std::to_string(d) + ")");
  if (!(d < n)) fail("d < n violated (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")");
  if (!(n <= field.value() - 1)) {
    fail("n <= p - 1 violated (n=" + std::to_string(n) + ", p=" + std::to_string(field.value()) + ")");
  }
  if (stripes == 0) fail("stripes >= 1 violated");
  return LevelCode(n, k, d, l, field, stripes);
}

void LevelCode::check_node(NodeId node) const {
  if (node < 1 || node > n_) {
    throw Error(Errc::IndexOutOfRange, "node id " + std::to_string(node) + " outside [1, n]");
  }
}

std::span<const Element> LevelCode::encoding_row(NodeId node) const {
  check_node(node);
  return psi_.row(node - 1);
}

FieldMatrix LevelCode::stored_functionals(NodeId node) const {
  const auto psi = encoding_row(node);
  FieldMatrix out(d_, layout_.cell_count(), field_);
  // Stored symbol r is sum_a psi[a] * M[a][r].
  for (std::size_t r = 0; r < d_; ++r) {
    for (std::size_t a = 0; a < d_; ++a) {
      if (auto idx = layout_.index_of(a, r)) out.at(r, *idx) = field_.add(out.at(r, *idx), psi[a]);
    }
  }
  return out;
}

std::vector<Element> LevelCode::repair_functional(NodeId helper, NodeId target) const {
  if (helper == target) throw Error(Errc::SelfRepair, "helper and target coincide");
  const auto from = encoding_row(helper);
  const auto to = encoding_row(target);
  std::vector<Element> out(layout_.cell_count(), 0);
  // psi_helper^T M psi_target.
  for (std::size_t a = 0; a < d_; ++a) {
    for (std::size_t b = 0; b < d_; ++b) {
      if (auto idx = layout_.index_of(a, b)) {
        out[*idx] = field_.add(out[*idx], field_.mul(from[a], to[b]));
      }
    }
  }
  return out;
}

LevelCode LevelCode::with_zeroed_row(NodeId node) const {
  check_node(node);
  LevelCode copy = *this;
  for (Element& e : copy.psi_.row(node - 1)) e = 0;
  return copy;
}

std::vector<Element> draw_keys(const LevelCode& code, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const std::uint64_t p = code.field().value();
  const std::uint64_t limit = (UINT64_MAX / p) * p;
  std::vector<Element> keys(code.key_count() * code.stripes());
  for (Element& key : keys) {
    std::uint64_t draw;
    do {
      draw = gen();
    } while (draw >= limit);
    key = static_cast<Element>(draw % p);
  }
  return keys;
}

std::vector<NodeVector> encode_level(const LevelCode& code, std::span<const Element> message,
                                     std::uint64_t seed) {
  if (message.size() != code.message_count() * code.stripes()) {
    throw Error(Errc::LengthMismatch, "level message needs " +
                                          std::to_string(code.message_count() * code.stripes()) +
                                          " symbols, got " + std::to_string(message.size()));
  }
  const auto keys = draw_keys(code, seed);
  return encode_level_with_keys(code, message, keys);
}

std::vector<NodeVector> encode_level_with_keys(const LevelCode& code,
                                               std::span<const Element> message,
                                               std::span<const Element> keys) {
  const std::size_t d = code.d();
  const auto& layout = code.layout();
  const FieldModulus& f = code.field();
  if (message.size() != code.message_count() * code.stripes()) {
    throw Error(Errc::LengthMismatch, "message length does not match the level layout");
  }
  if (keys.size() != code.key_count() * code.stripes()) {
    throw Error(Errc::LengthMismatch, "key length does not match the level layout");
  }
  for (Element e : message) {
    if (e >= f.value()) throw Error(Errc::LengthMismatch, "message symbol not reduced modulo p");
  }

  std::vector<NodeVector> shares(code.n());
  for (NodeId i = 1; i <= code.n(); ++i) {
    shares[i - 1].node_id = i;
    shares[i - 1].symbols.reserve(code.symbols_per_node());
  }

  std::vector<Element> cells(layout.cell_count());
  FieldMatrix m(d, d, f);
  for (std::size_t s = 0; s < code.stripes(); ++s) {
    for (std::size_t c = 0; c < layout.message_cells().size(); ++c) {
      cells[layout.message_cells()[c]] = message[s * code.message_count() + c];
    }
    for (std::size_t c = 0; c < layout.key_cells().size(); ++c) {
      cells[layout.key_cells()[c]] = keys[s * code.key_count() + c];
    }
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        auto idx = layout.index_of(r, c);
        m.at(r, c) = idx ? cells[*idx] : 0;
      }
    }
    for (NodeId i = 1; i <= code.n(); ++i) {
      const auto psi = code.encoding_row(i);
      for (std::size_t col = 0; col < d; ++col) {
        std::uint64_t acc = 0;
        for (std::size_t a = 0; a < d; ++a) acc += std::uint64_t{psi[a]} * m.at(a, col);
        shares[i - 1].symbols.push_back(f.reduce(acc));
      }
    }
  }
  return shares;
}

std::vector<RepairSymbol> repair_symbol(const LevelCode& code, const NodeVector& helper_share,
                                        NodeId target) {
  if (helper_share.node_id == target) throw Error(Errc::SelfRepair, "node cannot repair itself");
  if (helper_share.symbols.size() != code.symbols_per_node()) {
    throw Error(Errc::LengthMismatch, "helper share has the wrong length");
  }
  const auto psi = code.encoding_row(target);
  const FieldModulus& f = code.field();
  std::vector<RepairSymbol> out;
  for (std::size_t s = 0; s < code.stripes(); ++s) {
    std::uint64_t acc = 0;
    for (std::size_t a = 0; a < code.d(); ++a) {
      acc += std::uint64_t{helper_share.symbols[s * code.d() + a]} * psi[a];
    }
    out.push_back({helper_share.node_id, target, s, f.reduce(acc)});
  }
  return out;
}

NodeVector regenerate_node(const LevelCode& code, std::span<const RepairSymbol> packets,
                           NodeId target) {
  const std::size_t d = code.d();
  // stripe -> helper -> value
  std::vector<std::map<NodeId, Element>> by_stripe(code.stripes());
  for (const RepairSymbol& pkt : packets) {
    if (pkt.helper == target) throw Error(Errc::SelfRepair, "packet from the target itself");
    if (pkt.target != target) throw Error(Errc::BadParameters, "packet addressed to another node");
    if (pkt.stripe >= code.stripes()) throw Error(Errc::IndexOutOfRange, "stripe out of range");
    code.encoding_row(pkt.helper);
    if (!by_stripe[pkt.stripe].emplace(pkt.helper, pkt.value).second) {
      throw Error(Errc::WrongHelperCount, "duplicate packet from helper " + std::to_string(pkt.helper));
    }
  }

  NodeVector out{target, {}};
  out.symbols.reserve(code.symbols_per_node());
  for (std::size_t s = 0; s < code.stripes(); ++s) {
    const auto& received = by_stripe[s];
    if (received.size() != d) {
      throw Error(Errc::WrongHelperCount, "repair needs " + std::to_string(d) +
                                              " distinct helpers per stripe, got " +
                                              std::to_string(received.size()));
    }
    FieldMatrix helpers_psi(0, d, code.field());
    FieldMatrix rhs(0, 1, code.field());
    for (const auto& [helper, value] : received) {
      helpers_psi.append_row(code.encoding_row(helper));
      const Element v[1] = {value};
      rhs.append_row(v);
    }
    // Solves Psi_B (M psi_target) = received; M symmetric, so the result is
    // also the stored row psi_target^T M.
    const FieldMatrix column = solve(helpers_psi, rhs);
    for (std::size_t r = 0; r < d; ++r) out.symbols.push_back(column.at(r, 0));
  }
  return out;
}

std::vector<Element> collect_level(const LevelCode& code, std::span<const NodeVector> shares) {
  const std::size_t k = code.k();
  const std::size_t d = code.d();
  const FieldModulus& f = code.field();
  std::vector<NodeId> ids;
  for (const NodeVector& sh : shares) {
    code.encoding_row(sh.node_id);
    if (std::find(ids.begin(), ids.end(), sh.node_id) != ids.end()) {
      throw Error(Errc::WrongShareCount, "duplicate share for node " + std::to_string(sh.node_id));
    }
    if (sh.symbols.size() != code.symbols_per_node()) {
      throw Error(Errc::LengthMismatch, "share has the wrong length");
    }
    ids.push_back(sh.node_id);
  }
  if (ids.size() != k) {
    throw Error(Errc::WrongShareCount, "collection needs exactly " + std::to_string(k) +
                                           " shares, got " + std::to_string(ids.size()));
  }

  FieldMatrix psi(0, d, f);
  for (NodeId id : ids) psi.append_row(code.encoding_row(id));
  const FieldMatrix phi = psi.col_range(0, k);
  const FieldMatrix delta = psi.col_range(k, d - k);

  const auto& layout = code.layout();
  std::vector<Element> message;
  message.reserve(code.message_count() * code.stripes());
  for (std::size_t s = 0; s < code.stripes(); ++s) {
    FieldMatrix received(k, d, f);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < d; ++c) received.at(r, c) = shares[r].symbols[s * d + c];
    }
    // Shares are Psi_A M with M = [[S, T], [T^T, 0]]: the right block gives
    // T, then the left block gives S.
    const FieldMatrix upper_right = solve(phi, received.col_range(k, d - k));
    const FieldMatrix left = subtract(received.col_range(0, k), multiply(delta, upper_right.transpose()));
    const FieldMatrix upper_left = solve(phi, left);
    for (std::size_t idx : layout.message_cells()) {
      const auto cell = layout.cells()[idx];
      message.push_back(cell.col < k ? upper_left.at(cell.row, cell.col)
                                     : upper_right.at(cell.row, cell.col - k));
    }
  }
  return message;
}

}  // namespace mdcsr
