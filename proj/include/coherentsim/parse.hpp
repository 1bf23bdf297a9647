// Copyright 2026 The coherentsim Authors
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

#include <complex>
#include <string>
#include <vector>

namespace coherentsim {

/// Parses "a+bi" complex literals: "2", "-0.5", "1i", "-2i", "i", "1+1i",
/// "1+i", "-0.5-2i". Scientific notation is accepted in either part. Throws
/// std::invalid_argument on malformed input.
std::complex<double> parse_alpha(const std::string& text);

/// Parses "14" (single value), "6:30" (inclusive, step 1), or "6:30:2"
/// (inclusive, explicit step >= 1). Throws std::invalid_argument on
/// malformed input or an empty range.
std::vector<int> parse_int_range(const std::string& text);

}  // namespace coherentsim
