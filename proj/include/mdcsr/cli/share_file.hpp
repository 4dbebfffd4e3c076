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

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mdcsr/mdc_system.hpp"

namespace mdcsr::cli {

// On-disk node share:
//   "MDCS" | 0x01 | u32 LE header length | JSON header | u16 LE symbols
// The header carries node_id, params, stripe_plan and level_offsets; the
// payload is the flattened share (level-major, stripe-major, position).
inline constexpr char kShareMagic[4] = {'M', 'D', 'C', 'S'};
inline constexpr unsigned char kShareVersion = 0x01;

struct ShareFile {
  SystemParams params;
  NodeShare share;
};

std::string share_file_name(NodeId node);
std::vector<unsigned char> serialize_share(const System& system, const NodeShare& share);
// Rebuilds the system from the header and validates the payload against it.
ShareFile parse_share(const std::vector<unsigned char>& bytes);

void write_share(const std::filesystem::path& path, const System& system, const NodeShare& share);
ShareFile read_share(const std::filesystem::path& path);

// Message files hold 2-byte little-endian symbols; values >= p are rejected.
std::vector<Element> decode_symbols(const std::vector<unsigned char>& bytes, const FieldModulus& field);
std::vector<unsigned char> encode_symbols(std::span<const Element> symbols);

std::vector<unsigned char> read_bytes(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path, const std::vector<unsigned char>& bytes);

}  // namespace mdcsr::cli
