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

#include "platcalc/invariants.hpp"
#include "platcalc/word.hpp"

using namespace platcalc;

TEST_CASE("strand permutations") {
  CHECK(permutation_of(parse_word("s2 s1^2 s2", {1, 4})).is_identity());
  CHECK(permutation_of(parse_word("s2 s3 s1 s2", {1, 4})).to_string() == "(1 3)(2 4)");
  CHECK(permutation_of(parse_word("a1 b1^-1", {1, 2})).is_identity());
  CHECK(permutation_of(parse_word("s1", {0, 2})).to_string() == "(1 2)");
}

TEST_CASE("winding tables") {
  const WindingTable a = winding_table(parse_word("a1", {1, 2}));
  CHECK(a.strand(1) == ClassVector{1, 0});
  CHECK(a.strand(2) == ClassVector{0, 0});
  const WindingTable m4 = winding_table(parse_word("a1 s1^-1 a1 s1^-1", {1, 2}));
  CHECK(m4.strand(1) == ClassVector{1, 0});
  CHECK(m4.strand(2) == ClassVector{1, 0});
  CHECK(winding_table(parse_word("b1^-1 a1^3 b1^-1 a1^2", {1, 2})).total() == ClassVector{5, -2});
}

TEST_CASE("component counts") {
  CHECK(component_count(BraidWord({1, 4}, {})) == 2);
  CHECK(component_count(parse_word("s2", {1, 4})) == 1);
  CHECK(component_count(parse_word("s2 s3 s1 s2", {1, 4})) == 2);
  CHECK(component_count(BraidWord({1, 6}, {})) == 3);
}

TEST_CASE("closure classes") {
  const ClosureReport a = closure_report(parse_word("a1", {1, 2}));
  REQUIRE(a.component_count() == 1);
  CHECK(a.class_pairs() == std::vector<ClassVector>{{1, 0}});
  const ClosureReport m4 = closure_report(parse_word("a1 s1^-1 a1 s1^-1", {1, 2}));
  REQUIRE(m4.component_count() == 1);
  CHECK(m4.class_pairs() == std::vector<ClassVector>{{0, 0}});
}

TEST_CASE("report serialization") {
  CHECK(closure_report(BraidWord({1, 4}, {})).serialize() == "components: 2\nclass: (0 | 0)\nclass: (0 | 0)\n");
  CHECK(closure_report(parse_word("a1", {1, 2})).serialize() == "components: 1\nclass: (1 | 0)\n");
}
