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

#include "coherentsim/parse.hpp"

#include <charconv>
#include <stdexcept>
#include <string_view>

namespace coherentsim {

namespace {

[[noreturn]] void fail(const std::string& text, const char* what) {
  throw std::invalid_argument("cannot parse \"" + text + "\": " + what);
}

double parse_number(std::string_view sv, const std::string& full,
                    const char* what) {
  double sign = 1.0;
  if (!sv.empty() && (sv.front() == '+' || sv.front() == '-')) {
    if (sv.front() == '-') sign = -1.0;
    sv.remove_prefix(1);
  }
  if (sv.empty()) fail(full, what);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(),
                                         value);
  if (ec != std::errc{} || ptr != sv.data() + sv.size()) fail(full, what);
  return sign * value;
}

// Coefficient of the imaginary unit with the trailing 'i' removed; a bare
// sign (or nothing) means an implicit 1.
double parse_imag_coefficient(std::string_view sv, const std::string& full) {
  if (sv.empty() || sv == "+") return 1.0;
  if (sv == "-") return -1.0;
  return parse_number(sv, full, "bad imaginary part");
}

int parse_int(std::string_view sv, const std::string& full) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(),
                                         value);
  if (ec != std::errc{} || ptr != sv.data() + sv.size() || sv.empty()) {
    fail(full, "bad integer");
  }
  return value;
}

}  // namespace

std::complex<double> parse_alpha(const std::string& text) {
  std::string_view sv = text;
  while (!sv.empty() && sv.front() == ' ') sv.remove_prefix(1);
  while (!sv.empty() && sv.back() == ' ') sv.remove_suffix(1);
  if (sv.empty()) fail(text, "empty input");

  // Split before the last sign that does not follow an exponent marker; that
  // sign starts the imaginary term.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = 1; k < sv.size(); ++k) {
    if ((sv[k] == '+' || sv[k] == '-') && sv[k - 1] != 'e' && sv[k - 1] != 'E') {
      split = k;
    }
  }

  if (split == std::string_view::npos) {
    if (sv.back() == 'i') {
      sv.remove_suffix(1);
      return {0.0, parse_imag_coefficient(sv, text)};
    }
    return {parse_number(sv, text, "bad real part"), 0.0};
  }

  std::string_view imag_part = sv.substr(split);
  if (imag_part.back() != 'i') fail(text, "imaginary part must end in 'i'");
  imag_part.remove_suffix(1);
  return {parse_number(sv.substr(0, split), text, "bad real part"),
          parse_imag_coefficient(imag_part, text)};
}

std::vector<int> parse_int_range(const std::string& text) {
  std::string_view sv = text;
  std::vector<std::string_view> parts;
  while (true) {
    const std::size_t colon = sv.find(':');
    if (colon == std::string_view::npos) {
      parts.push_back(sv);
      break;
    }
    parts.push_back(sv.substr(0, colon));
    sv.remove_prefix(colon + 1);
  }
  if (parts.size() > 3) fail(text, "too many ':' separators");

  if (parts.size() == 1) {
    return {parse_int(parts[0], text)};
  }
  const int lo = parse_int(parts[0], text);
  const int hi = parse_int(parts[1], text);
  const int step = parts.size() == 3 ? parse_int(parts[2], text) : 1;
  if (step < 1) fail(text, "step must be at least 1");
  if (hi < lo) fail(text, "empty range");
  std::vector<int> values;
  for (int v = lo; v <= hi; v += step) values.push_back(v);
  return values;
}

}  // namespace coherentsim
