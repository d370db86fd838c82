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

#include <algorithm>

#include "platcalc/error.hpp"
#include "platcalc/presentation.hpp"

using namespace platcalc;

namespace {
std::size_t count_family(const std::vector<Relator>& rs, Family f) {
  return static_cast<std::size_t>(std::count_if(rs.begin(), rs.end(), [&](const Relator& r) { return r.family == f; }));
}
}  // namespace

TEST_CASE("catalog in B_{0,4}") {
  const auto rs = relator_catalog({0, 4});
  CHECK(rs.size() == 3);
  CHECK(count_family(rs, Family::BR1) == 2);
  CHECK(count_family(rs, Family::BR2) == 1);
}

TEST_CASE("catalog in B_{1,2}") {
  const auto rs = relator_catalog({1, 2});
  CHECK(count_family(rs, Family::BR1) == 0);
  CHECK(count_family(rs, Family::BR2) == 0);
  CHECK(count_family(rs, Family::R1) == 0);
  CHECK(count_family(rs, Family::R2) == 2);
  CHECK(count_family(rs, Family::R3) == 0);
  CHECK(count_family(rs, Family::R4) == 1);
  CHECK(count_family(rs, Family::TR) == 1);
}

TEST_CASE("catalog sizes") {
  CHECK(relator_catalog({1, 4}).size() == 11);
  CHECK(relator_catalog({2, 4}).size() == 22);
  CHECK(count_family(relator_catalog({3, 2}), Family::R3) == 12);
}

TEST_CASE("torus relation word") {
  const Relator tr = relator_by_name("TR", {1, 2});
  CHECK(format_word(tr.lhs) == "a1 b1^-1 a1^-1 b1");
  CHECK(format_word(tr.rhs) == "s1^2");
  CHECK(check_relator_trivial(tr).ok());
  CHECK(format_word(relator_by_name("TR", {1, 4}).rhs) == "s1 s2 s3^2 s2 s1");
}

TEST_CASE("every relator closes trivially") {
  for (int g = 0; g <= 2; ++g) {
    for (int n = 2; n <= 6; n += 2) {
      for (const Relator& r : relator_catalog({g, n})) CHECK_MESSAGE(check_relator_trivial(r).ok(), r.name);
    }
  }
}

TEST_CASE("relation rewrites") {
  const GroupContext g04{0, 4};
  const Relator br1 = relator_by_name("BR1(i=1)", g04);
  CHECK(format_word(apply_relation(parse_word("s1 s2 s1", g04), br1, 0, RewriteDirection::Forward)) == "s2 s1 s2");
  const Relator r1 = relator_by_name("R1.a(r=1,i=2)", {1, 4});
  CHECK(format_word(apply_relation(parse_word("a1 s2", {1, 4}), r1, 0, RewriteDirection::Forward)) == "s2 a1");
  CHECK_THROWS_AS(apply_relation(parse_word("s1 s2", g04), br1, 0, RewriteDirection::Forward), Error);
  CHECK_THROWS_AS(relator_by_name("R9", g04), Error);
}

TEST_CASE("cyclic variants are equalities of the same relator") {
  const Relator r4 = relator_by_name("R4(r=1)", {1, 2});
  const Relator v = cyclic_variant(r4, 3, 2);
  CHECK(v.lhs.size() == 2);
  CHECK(v.lhs.size() + v.rhs.size() == r4.word().size());
  CHECK(cyclic_variant(r4, 0, 0).lhs == r4.lhs);
  const Relator inv = inverted_relator(r4);
  CHECK(inv.lhs == invert(r4.lhs));
}
