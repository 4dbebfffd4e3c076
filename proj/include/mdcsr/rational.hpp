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
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace mdcsr {

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);
// Accepts "a", "a/b", with optional leading sign.
Rational parse_rational(std::string_view text);

}  // namespace mdcsr
