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
#include "platcalc/invariants.hpp"
#include "platcalc/manifold.hpp"
#include "platcalc/normalization.hpp"

using namespace platcalc;

namespace {

void check_preserved(const BraidWord& in, const Normalized& out, const ManifoldPresentation& m) {
  CHECK(replay(in, out.witness, &m, ReplayMode::Reducing) == out.word);
  const ClosureReport a = closure_report(in);
  const ClosureReport b = closure_report(out.word);
  CHECK(a.component_count() == b.component_count());
  CHECK(class_in_manifold(a, m) == class_in_manifold(b, m));
}

}  // namespace

TEST_CASE("remove_b leaves b-free words alone") {
  const BraidWord w = parse_word("a1 s1", {1, 2});
  const Normalized out = remove_b(w, lens_space(5, 2));
  CHECK(out.word == w);
  CHECK(out.witness.empty());
}

TEST_CASE("remove_b slides off a trailing b") {
  const Normalized out = remove_b(parse_word("a1 b1", {1, 2}), lens_space(5, 2));
  CHECK(format_word(out.word) == "a1");
  CHECK(format_witness(out.witness) == "psl*(i=1)^-1");
}

TEST_CASE("remove_b pushes b past a") {
  const ManifoldPresentation m = lens_space(5, 2);
  const BraidWord w = parse_word("b1 a1", {1, 2});
  const Normalized out = remove_b(w, m);
  CHECK(out.word.count(Kind::B) == 0);
  check_preserved(w, out, m);
}

TEST_CASE("remove_b on longer words") {
  const ManifoldPresentation m = lens_space(3, 1);
  for (const char* text : {"b1 s1 a1^-1 s2", "s1 b1^-1 s3 a1 s2^-1", "a1 b1 s1^-1 b1 s2"}) {
    const BraidWord w = parse_word(text, {1, 4});
    const Normalized out = remove_b(w, m);
    CHECK(out.word.count(Kind::B) == 0);
    check_preserved(w, out, m);
    CHECK(remove_b(out.word, m).word == out.word);
  }
}

TEST_CASE("remove_b needs standard duals") {
  const ManifoldPresentation odd(1, {parse_word("a1", {1, 2})}, {parse_word("b1^2", {1, 2})});
  CHECK_THROWS_AS(remove_b(parse_word("b1", {1, 2}), odd), Error);
}

TEST_CASE("collapse over the three-sphere") {
  const ManifoldPresentation s3 = lens_space(1, 0);
  const Normalized a = remove_a_s3(parse_word("a1", {1, 2}));
  CHECK(a.word.empty());
  CHECK(format_witness(a.witness) == "psl(i=1)^-1");
  CHECK(remove_a_s3(parse_word("s1", {1, 2})).word == parse_word("s1", {1, 2}));
  const Normalized b = remove_a_s3(parse_word("b1", {1, 2}));
  CHECK(b.word.empty());
  CHECK(format_witness(b.witness) == "psl*(i=1)^-1");
  const BraidWord w = parse_word("s2 a1 s1^-1 b1 s3", {1, 4});
  const Normalized out = remove_a_s3(w);
  CHECK(out.word.count(Kind::A) + out.word.count(Kind::B) == 0);
  check_preserved(w, out, s3);
  CHECK_THROWS_AS(remove_a_s3(parse_word("a2", {2, 2})), Error);
}

TEST_CASE("shorten") {
  CHECK(format_word(shorten(parse_word("s1 s1^-1 a1", {1, 2}), 4)) == "a1");
  const BraidWord reduced = parse_word("a1 s1 b1", {1, 2});
  CHECK(shorten(reduced, 0) == reduced);
  CHECK(shorten(parse_word("a1 s2 s2^-1 a1^-1", {1, 4}), 4).empty());
  const BraidWord w = parse_word("s1 s2 s1 s2^-1 s1^-1", {0, 4});
  const BraidWord s = shorten(w, 8);
  CHECK(s.size() < w.size());
  CHECK(permutation_of(s) == permutation_of(w));
  CHECK(winding_table(s) == winding_table(w));
}
