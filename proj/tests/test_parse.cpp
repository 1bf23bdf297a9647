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

#include <complex>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "coherentsim/parse.hpp"

using namespace coherentsim;
using cd = std::complex<double>;

TEST_SUITE("parse") {

TEST_CASE("complex literals cover real, imaginary and mixed forms") {
  CHECK(parse_alpha("1+1i") == cd(1, 1));
  CHECK(parse_alpha("-0.5-2i") == cd(-0.5, -2));
  CHECK(parse_alpha("2") == cd(2, 0));
  CHECK(parse_alpha("1i") == cd(0, 1));
  CHECK(parse_alpha("-1.5") == cd(-1.5, 0));
  CHECK(parse_alpha("+0.25+0.75i") == cd(0.25, 0.75));
  CHECK(parse_alpha("i") == cd(0, 1));
  CHECK(parse_alpha("-i") == cd(0, -1));
  CHECK(parse_alpha("3-i") == cd(3, -1));
  CHECK(parse_alpha("0") == cd(0, 0));
  CHECK(parse_alpha(" 1+1i ") == cd(1, 1));
}

TEST_CASE("exponent signs do not split the literal") {
  CHECK(parse_alpha("1e-3+2e-4i") == cd(1e-3, 2e-4));
  CHECK(parse_alpha("2.5E+2") == cd(250, 0));
  CHECK(parse_alpha("-1E-2i") == cd(0, -0.01));
}

TEST_CASE("malformed complex literals are rejected") {
  for (const char* bad : {"", "   ", "1+", "+", "1+2j", "1++2i", "2i+1",
                          "1 + 1i", "bogus", "1i2", "--2", "1+2ii"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_alpha(bad), std::invalid_argument);
  }
}

TEST_CASE("integer ranges are inclusive with optional stride") {
  CHECK(parse_int_range("5") == std::vector<int>{5});
  CHECK(parse_int_range("3:6") == std::vector<int>{3, 4, 5, 6});
  CHECK(parse_int_range("6:30:4") ==
        std::vector<int>{6, 10, 14, 18, 22, 26, 30});
  CHECK(parse_int_range("6:30:7") == std::vector<int>{6, 13, 20, 27});
  CHECK(parse_int_range("4:4") == std::vector<int>{4});
}

TEST_CASE("malformed ranges are rejected") {
  for (const char* bad : {"", "9:3", "1:5:0", "1:2:3:4", "a:b", "1:",
                          "1:5:-1", "2.5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_int_range(bad), std::invalid_argument);
  }
}

}  // TEST_SUITE
