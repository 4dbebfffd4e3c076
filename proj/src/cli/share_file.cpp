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

#include "mdcsr/cli/share_file.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "json.hpp"
#include "mdcsr/error.hpp"

namespace mdcsr::cli {

namespace {

using nlohmann::json;

json params_to_json(const SystemParams& p) {
  json files = json::object();
  for (const auto& [level, size] : p.file_sizes) files[std::to_string(level)] = size;
  return {{"n", p.n}, {"d", p.d}, {"l1", p.l1}, {"l2", p.l2}, {"p", p.p}, {"files", files}};
}

SystemParams params_from_json(const json& j) {
  SystemParams p;
  p.n = j.at("n").get<std::size_t>();
  p.d = j.at("d").get<std::size_t>();
  p.l1 = j.at("l1").get<std::size_t>();
  p.l2 = j.at("l2").get<std::size_t>();
  p.p = j.at("p").get<std::uint32_t>();
  for (const auto& [key, value] : j.at("files").items()) {
    p.file_sizes[std::stoi(key)] = value.get<std::size_t>();
  }
  return p;
}

template <class Map>
json map_to_json(const Map& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

}  // namespace

std::string share_file_name(NodeId node) { return "node_" + std::to_string(node) + ".mdcs"; }

std::vector<unsigned char> serialize_share(const System& system, const NodeShare& share) {
  const json header = {{"node_id", share.node_id},
                       {"params", params_to_json(system.params())},
                       {"stripe_plan", map_to_json(system.stripe_plan())},
                       {"level_offsets", map_to_json(system.level_offsets())}};
  const std::string text = header.dump();
  std::vector<unsigned char> out(std::begin(kShareMagic), std::end(kShareMagic));
  out.push_back(kShareVersion);
  put_u32(out, static_cast<std::uint32_t>(text.size()));
  out.insert(out.end(), text.begin(), text.end());
  const auto payload = encode_symbols(share.flatten());
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

ShareFile parse_share(const std::vector<unsigned char>& bytes) {
  if (bytes.size() < 9 || !std::equal(std::begin(kShareMagic), std::end(kShareMagic), bytes.begin())) {
    throw Error(Errc::Parse, "share: bad magic");
  }
  if (bytes[4] != kShareVersion) throw Error(Errc::Parse, "share: unsupported version");
  std::uint32_t header_len = 0;
  for (int i = 0; i < 4; ++i) header_len |= static_cast<std::uint32_t>(bytes[5 + i]) << (8 * i);
  if (bytes.size() < 9 + static_cast<std::size_t>(header_len)) {
    throw Error(Errc::Parse, "share: truncated header");
  }
  json header;
  ShareFile out;
  try {
    header = json::parse(bytes.begin() + 9, bytes.begin() + 9 + header_len);
    out.params = params_from_json(header.at("params"));
    out.share.node_id = header.at("node_id").get<NodeId>();
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("share: bad header: ") + e.what());
  }
  const System system = build_system(out.params);
  if (header.at("stripe_plan") != map_to_json(system.stripe_plan()) ||
      header.at("level_offsets") != map_to_json(system.level_offsets())) {
    throw Error(Errc::Parse, "share: stripe plan does not match params");
  }
  if (out.share.node_id < 1 || out.share.node_id > system.n()) {
    throw Error(Errc::Parse, "share: node_id out of range");
  }
  const std::vector<unsigned char> payload(bytes.begin() + 9 + header_len, bytes.end());
  if (payload.size() != 2 * system.alpha()) {
    throw Error(Errc::LengthMismatch, "share: payload has " + std::to_string(payload.size()) +
                                          " bytes, expected " + std::to_string(2 * system.alpha()));
  }
  const auto symbols = decode_symbols(payload, system.field());
  out.share = unflatten_share(system, out.share.node_id, symbols);
  return out;
}

void write_share(const std::filesystem::path& path, const System& system, const NodeShare& share) {
  write_bytes(path, serialize_share(system, share));
}

ShareFile read_share(const std::filesystem::path& path) { return parse_share(read_bytes(path)); }

std::vector<Element> decode_symbols(const std::vector<unsigned char>& bytes, const FieldModulus& field) {
  if (bytes.size() % 2 != 0) throw Error(Errc::LengthMismatch, "odd number of bytes in symbol stream");
  std::vector<Element> out(bytes.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Element v = bytes[2 * i] | (static_cast<Element>(bytes[2 * i + 1]) << 8);
    if (v >= field.value()) {
      throw Error(Errc::BadParameters, "symbol " + std::to_string(i) + " has value " + std::to_string(v) +
                                           " >= p = " + std::to_string(field.value()));
    }
    out[i] = v;
  }
  return out;
}

std::vector<unsigned char> encode_symbols(std::span<const Element> symbols) {
  std::vector<unsigned char> out;
  out.reserve(2 * symbols.size());
  for (Element v : symbols) {
    out.push_back(static_cast<unsigned char>(v & 0xff));
    out.push_back(static_cast<unsigned char>(v >> 8));
  }
  return out;
}

std::vector<unsigned char> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::filesystem::path& path, const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Parse, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::Parse, "write failed for " + path.string());
}

}  // namespace mdcsr::cli
