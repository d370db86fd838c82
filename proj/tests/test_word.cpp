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

#include "platcalc/error.hpp"
#include "platcalc/word.hpp"

using namespace platcalc;

namespace {
const GroupContext g1s2{1, 2};
const GroupContext g1s4{1, 4};
}  // namespace

TEST_CASE("parse single sigma") {
  const BraidWord w = parse_word("s1", g1s4);
  REQUIRE(w.size() == 1);
  CHECK(w[0] == sigma(1));
}

TEST_CASE("parse expands exponents") {
  const BraidWord w = parse_word("b1^-1 a1^3 b1^-1 a1^2", g1s2);
  CHECK(w.size() == 7);
  CHECK(w == BraidWord(g1s2, {gen_b(1, -1), gen_a(1), gen_a(1), gen_a(1), gen_b(1, -1), gen_a(1), gen_a(1)}));
}

TEST_CASE("parse rejects out of range indices") {
  CHECK_THROWS_AS(parse_word("s3", {0, 2}), Error);
  CHECK_THROWS_AS(parse_word("a2", g1s2), Error);
  CHECK_THROWS_AS(parse_word("s1", {1, 3}), Error);
  CHECK_THROWS_AS(parse_word("x1", g1s2), Error);
}

TEST_CASE("format compresses runs") {
  CHECK(format_word(BraidWord(g1s2, {})) == "");
  CHECK(format_word(BraidWord(g1s2, {gen_a(1), gen_a(1), gen_a(1)})) == "a1^3");
  CHECK(format_word(BraidWord(g1s4, {sigma(2), sigma(1), sigma(1), sigma(2)})) == "s2 s1^2 s2");
  CHECK(format_word(parse_word("s1^-1 s1^-1 b1", g1s2)) == "s1^-2 b1");
}

TEST_CASE("format and parse round trip") {
  for (const char* text : {"", "s1", "a1^3 b1^-2 s3", "s2 s1^2 s2 a1^-1"}) {
    const BraidWord w = parse_word(text, g1s4);
    CHECK(parse_word(format_word(w), g1s4) == w);
  }
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(parse_word("s1 s1^-1", g1s2)).empty());
  CHECK(format_word(free_reduce(parse_word("a1 b2 b2^-1 a1^-1 s3", {2, 4}))) == "s3");
  const BraidWord alpha = parse_word("b1^-1 a1^3 b1^-1 a1^2", g1s2);
  CHECK(free_reduce(alpha) == alpha);
}

TEST_CASE("inversion") {
  CHECK(format_word(invert(parse_word("s1 s2", g1s4))) == "s2^-1 s1^-1");
  CHECK(invert(BraidWord(g1s2, {})).empty());
  CHECK(format_word(invert(parse_word("b1^-1 a1^3", g1s2))) == "a1^-3 b1");
}

TEST_CASE("concatenation") {
  const BraidWord u = parse_word("s1", g1s2);
  const BraidWord v = parse_word("s1^-1", g1s2);
  CHECK(concat(u, v).size() == 2);
  CHECK(concat(BraidWord(g1s2, {}), u) == u);
  CHECK_THROWS_AS(concat(u, parse_word("s1", g1s4)), Error);
}

TEST_CASE("strand padding") {
  const BraidWord w = embed_pad(parse_word("s1", g1s2), 6);
  CHECK(w.context() == GroupContext{1, 6});
  CHECK(format_word(w) == "s1");
  CHECK(embed_pad(parse_word("b1^-1 a1^5", g1s2), 8).size() == 6);
  CHECK_THROWS_AS(embed_pad(parse_word("s3", g1s4), 2), Error);
}
