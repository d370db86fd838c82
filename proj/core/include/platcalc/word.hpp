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

// Braid words over the mixed alphabet of the surface braid group B_{g,2n}:
// the classical generators s1..s(2n-1) plus the handle generators a1..ag
// (longitudes) and b1..bg (meridians). Everything here is syntactic.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace platcalc {

enum class Kind : std::uint8_t { Sigma, A, B };

struct Letter {
  Kind kind = Kind::Sigma;
  int index = 1;
  int sign = 1;

  constexpr Letter inverse() const { return {kind, index, -sign}; }
  constexpr bool cancels(const Letter& o) const {
    return kind == o.kind && index == o.index && sign == -o.sign;
  }
  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter sigma(int i, int sign = 1) { return {Kind::Sigma, i, sign}; }
constexpr Letter gen_a(int j, int sign = 1) { return {Kind::A, j, sign}; }
constexpr Letter gen_b(int j, int sign = 1) { return {Kind::B, j, sign}; }

/// The ambient group B_{g,2n}: genus g >= 0 and an even strand count >= 2.
struct GroupContext {
  int genus = 0;
  int strands = 2;

  int pairs() const { return strands / 2; }
  bool admits(const Letter& l) const;
  /// Throws Error if the context itself is malformed.
  void validate() const;

  friend bool operator==(const GroupContext&, const GroupContext&) = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  /// Validates the context and every letter against it.
  BraidWord(GroupContext ctx, std::vector<Letter> letters);
  BraidWord(GroupContext ctx, std::initializer_list<Letter> letters)
      : BraidWord(ctx, std::vector<Letter>(letters)) {}

  const GroupContext& context() const { return ctx_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  std::size_t count(Kind k) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  GroupContext ctx_{};
  std::vector<Letter> letters_;
};

/// Parses whitespace-separated tokens `s3`, `a1^-2`, ...; exponents expand
/// into repeated letters.
BraidWord parse_word(std::string_view input, GroupContext ctx);
/// Inverse of parse_word; runs of equal letters are written with exponents.
std::string format_word(const BraidWord& w);
std::string format_letters(std::span<const Letter> letters);

BraidWord free_reduce(const BraidWord& w);
void free_reduce_in_place(std::vector<Letter>& letters);
BraidWord invert(const BraidWord& w);
std::vector<Letter> invert_letters(std::span<const Letter> letters);
BraidWord concat(const BraidWord& u, const BraidWord& v);
/// Left-aligned inclusion into a group with more strands.
BraidWord embed_pad(const BraidWord& w, int new_strands);

struct BraidWordHash {
  std::size_t operator()(const BraidWord& w) const noexcept;
};

}  // namespace platcalc
