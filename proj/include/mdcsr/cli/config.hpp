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

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "mdcsr/mdc_system.hpp"

namespace mdcsr::cli {

struct Config {
  SystemParams params;
  std::uint64_t seed = 0;
};

// Accepted keys: n, d, l1, l2, p, files, seed. Anything else is a Parse
// error naming the key.
Config parse_config(std::string_view json_text);
Config load_config(const std::filesystem::path& path);

}  // namespace mdcsr::cli
