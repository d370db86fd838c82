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

#include "platcalc/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "platcalc/error.hpp"

namespace platcalc {

namespace {

char kind_char(Kind k) {
  switch (k) {
    case Kind::Sigma:
      return 's';
    case Kind::A:
      return 'a';
    case Kind::B:
      return 'b';
  }
  return '?';
}

std::string describe(const Letter& l) {
  return std::string(1, kind_char(l.kind)) + std::to_string(l.index);
}

bool parse_int(std::string_view s, long& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

bool GroupContext::admits(const Letter& l) const {
  if (l.sign != 1 && l.sign != -1) return false;
  if (l.kind == Kind::Sigma) return l.index >= 1 && l.index <= strands - 1;
  return l.index >= 1 && l.index <= genus;
}

void GroupContext::validate() const {
  if (genus < 0) throw Error("genus must be non-negative");
  if (strands < 2 || strands % 2 != 0) {
    throw Error("strand count must be even and at least 2, got " +
                std::to_string(strands));
  }
}

BraidWord::BraidWord(GroupContext ctx, std::vector<Letter> letters)
    : ctx_(ctx), letters_(std::move(letters)) {
  ctx_.validate();
  for (const auto& l : letters_) {
    if (!ctx_.admits(l)) {
      throw Error("letter " + describe(l) + " out of range for B_{" +
                  std::to_string(ctx_.genus) + "," +
                  std::to_string(ctx_.strands) + "}");
    }
  }
}

std::size_t BraidWord::count(Kind k) const {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(),
      [k](const Letter& l) { return l.kind == k; }));
}

BraidWord parse_word(std::string_view input, GroupContext ctx) {
  ctx.validate();
  std::vector<Letter> letters;
  std::istringstream in{std::string(input)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2) throw Error("malformed token '" + tok + "'");
    Letter l;
    switch (tok[0]) {
      case 's':
        l.kind = Kind::Sigma;
        break;
      case 'a':
        l.kind = Kind::A;
        break;
      case 'b':
        l.kind = Kind::B;
        break;
      default:
        throw Error("malformed token '" + tok + "'");
    }
    std::string_view body(tok);
    body.remove_prefix(1);
    std::string_view idx = body;
    long exponent = 1;
    if (auto caret = body.find('^'); caret != std::string_view::npos) {
      idx = body.substr(0, caret);
      if (!parse_int(body.substr(caret + 1), exponent) || exponent == 0) {
        throw Error("malformed exponent in token '" + tok + "'");
      }
    }
    long index = 0;
    if (idx.empty() || idx[0] == '+' || idx[0] == '-' ||
        !parse_int(idx, index) || index <= 0) {
      throw Error("malformed generator index in token '" + tok + "'");
    }
    l.index = static_cast<int>(index);
    l.sign = exponent > 0 ? 1 : -1;
    if (!ctx.admits(l)) {
      throw Error("index out of range in token '" + tok + "' for B_{" +
                  std::to_string(ctx.genus) + "," +
                  std::to_string(ctx.strands) + "}");
    }
    letters.insert(letters.end(), static_cast<std::size_t>(std::labs(exponent)),
                   l);
  }
  return BraidWord(ctx, std::move(letters));
}

std::string format_letters(std::span<const Letter> letters) {
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long run = static_cast<long>(j - i) * letters[i].sign;
    if (!out.empty()) out += ' ';
    out += describe(letters[i]);
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

std::string format_word(const BraidWord& w) { return format_letters(w.letters()); }

void free_reduce_in_place(std::vector<Letter>& letters) {
  std::size_t top = 0;
  for (const auto& l : letters) {
    if (top > 0 && letters[top - 1].cancels(l)) {
      --top;
    } else {
      letters[top++] = l;
    }
  }
  letters.resize(top);
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  free_reduce_in_place(out);
  return BraidWord(w.context(), std::move(out));
}

std::vector<Letter> invert_letters(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

BraidWord invert(const BraidWord& w) {
  return BraidWord(w.context(), invert_letters(w.letters()));
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (!(u.context() == v.context())) {
    throw Error("cannot concatenate words from different groups");
  }
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.context(), std::move(out));
}

BraidWord embed_pad(const BraidWord& w, int new_strands) {
  if (new_strands % 2 != 0) throw Error("strand count must be even");
  if (new_strands < w.context().strands) {
    throw Error("cannot embed into fewer strands");
  }
  return BraidWord({w.context().genus, new_strands},
                   std::vector<Letter>(w.letters().begin(), w.letters().end()));
}

std::size_t BraidWordHash::operator()(const BraidWord& w) const noexcept {
  std::size_t h = std::hash<int>{}(w.context().genus * 1009 + w.context().strands);
  for (const auto& l : w.letters()) {
    const std::size_t v = (static_cast<std::size_t>(l.kind) << 24) ^
                          (static_cast<std::size_t>(l.index) << 2) ^
                          (l.sign > 0 ? 1u : 2u);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace platcalc
