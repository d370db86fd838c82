// Copyright 2026 The platcalc Authors
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

#include <doctest.h>

#include "platcalc/smith.hpp"

using namespace platcalc;

TEST_CASE("diagonal of small matrices") {
  CHECK(smith_normal_form(IntMatrix(2, 2, {5, -2, 0, 1})).diagonal() == std::vector<std::int64_t>{1, 5});
  CHECK(smith_normal_form(IntMatrix(2, 2, {0, 1, 0, 1})).diagonal() == std::vector<std::int64_t>{1, 0});
  CHECK(smith_normal_form(IntMatrix(2, 2, {2, 0, 0, 3})).diagonal() == std::vector<std::int64_t>{1, 6});
  CHECK(smith_normal_form(IntMatrix(2, 2, {4, 6, 6, 4})).diagonal() == std::vector<std::int64_t>{2, 10});
}

TEST_CASE("transforms are unimodular witnesses") {
  const IntMatrix a(3, 2, {2, 4, 6, 8, 10, 12});
  const SmithForm s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(s.diagonal() == std::vector<std::int64_t>{2, 4});
}
