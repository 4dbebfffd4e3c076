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

#include "mdcsr/cli/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "mdcsr/error.hpp"

namespace mdcsr::cli {

namespace {

using nlohmann::json;

std::size_t read_count(const json& doc, const char* key, bool required, std::size_t fallback = 0) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    if (required) throw Error(Errc::Parse, std::string("config: missing field '") + key + "'");
    return fallback;
  }
  if (!it->is_number_unsigned()) {
    throw Error(Errc::Parse, std::string("config: field '") + key + "' must be a nonnegative integer");
  }
  return it->get<std::size_t>();
}

}  // namespace

Config parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::Parse, "config: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "d" && key != "l1" && key != "l2" && key != "p" && key != "files" &&
        key != "seed") {
      throw Error(Errc::Parse, "config: unknown field '" + key + "'");
    }
  }

  Config cfg;
  cfg.params.n = read_count(doc, "n", true);
  cfg.params.d = read_count(doc, "d", true);
  cfg.params.l1 = read_count(doc, "l1", true);
  cfg.params.l2 = read_count(doc, "l2", true);
  const std::size_t p = read_count(doc, "p", false, FieldModulus::kDefault);
  if (p >= (1u << 16)) throw Error(Errc::Parse, "config: field 'p' must be below 65536");
  cfg.params.p = static_cast<std::uint32_t>(p);
  cfg.seed = doc.contains("seed") ? static_cast<std::uint64_t>(read_count(doc, "seed", true)) : 0;

  auto files = doc.find("files");
  if (files == doc.end()) throw Error(Errc::Parse, "config: missing field 'files'");
  if (!files->is_object()) throw Error(Errc::Parse, "config: field 'files' must be an object");
  for (const auto& [key, value] : files->items()) {
    int level = 0;
    std::istringstream in(key);
    if (!(in >> level) || !in.eof()) {
      throw Error(Errc::Parse, "config: files key '" + key + "' is not a level number");
    }
    if (!value.is_number_unsigned()) {
      throw Error(Errc::Parse, "config: files[" + key + "] must be a nonnegative integer");
    }
    cfg.params.file_sizes[level] = value.get<std::size_t>();
  }
  return cfg;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "config: cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace mdcsr::cli
