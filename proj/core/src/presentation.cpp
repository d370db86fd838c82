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

#include "platcalc/presentation.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "platcalc/error.hpp"
#include "platcalc/invariants.hpp"

namespace platcalc {

namespace {

std::string param(const char* key, int v) { return std::string(key) + "=" + std::to_string(v); }

Relator make(Family f, std::string name, GroupContext ctx,
             std::vector<Letter> lhs, std::vector<Letter> rhs) {
  return Relator{f, std::move(name), BraidWord(ctx, std::move(lhs)),
                 BraidWord(ctx, std::move(rhs))};
}

Letter handle(Kind k, int j, int sign = 1) { return {k, j, sign}; }

}  // namespace

BraidWord Relator::word() const { return concat(lhs, invert(rhs)); }

std::vector<Relator> relator_catalog(GroupContext ctx) {
  ctx.validate();
  std::vector<Relator> out;
  const int top = ctx.strands - 1;

  for (int i = 1; i + 1 <= top; ++i) {
    out.push_back(make(Family::BR1, "BR1(" + param("i", i) + ")", ctx,
                       {sigma(i), sigma(i + 1), sigma(i)},
                       {sigma(i + 1), sigma(i), sigma(i + 1)}));
  }
  for (int i = 1; i <= top; ++i) {
    for (int j = i + 2; j <= top; ++j) {
      out.push_back(make(Family::BR2,
                         "BR2(" + param("i", i) + "," + param("j", j) + ")", ctx,
                         {sigma(i), sigma(j)}, {sigma(j), sigma(i)}));
    }
  }

  const Kind kinds[] = {Kind::A, Kind::B};
  const char* kind_names[] = {"a", "b"};
  for (int k = 0; k < 2; ++k) {
    for (int r = 1; r <= ctx.genus; ++r) {
      for (int i = 2; i <= top; ++i) {
        out.push_back(make(Family::R1,
                           std::string("R1.") + kind_names[k] + "(" +
                               param("r", r) + "," + param("i", i) + ")",
                           ctx, {handle(kinds[k], r), sigma(i)},
                           {sigma(i), handle(kinds[k], r)}));
      }
    }
  }
  for (int k = 0; k < 2; ++k) {
    for (int r = 1; r <= ctx.genus; ++r) {
      const Letter x = handle(kinds[k], r);
      out.push_back(make(Family::R2,
                         std::string("R2.") + kind_names[k] + "(" + param("r", r) + ")",
                         ctx, {sigma(1, -1), x, sigma(1, -1), x},
                         {x, sigma(1, -1), x, sigma(1, -1)}));
    }
  }
  // sigma1^-1 X_s sigma1 Y_r = Y_r sigma1^-1 X_s sigma1 for s < r.
  const std::pair<int, int> r3_forms[] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
  for (const auto& [xs, yr] : r3_forms) {
    for (int r = 1; r <= ctx.genus; ++r) {
      for (int s = 1; s < r; ++s) {
        const Letter x = handle(kinds[xs], s);
        const Letter y = handle(kinds[yr], r);
        out.push_back(make(Family::R3,
                           std::string("R3.") + kind_names[xs] + kind_names[yr] +
                               "(" + param("s", s) + "," + param("r", r) + ")",
                           ctx, {sigma(1, -1), x, sigma(1), y},
                           {y, sigma(1, -1), x, sigma(1)}));
      }
    }
  }
  for (int r = 1; r <= ctx.genus; ++r) {
    const Letter a = handle(Kind::A, r);
    const Letter b = handle(Kind::B, r);
    out.push_back(make(Family::R4, "R4(" + param("r", r) + ")", ctx,
                       {sigma(1, -1), a, sigma(1, -1), b},
                       {b, sigma(1, -1), a, sigma(1)}));
  }
  if (ctx.genus > 0) {
    std::vector<Letter> lhs;
    for (int j = 1; j <= ctx.genus; ++j) {
      lhs.insert(lhs.end(), {handle(Kind::A, j), handle(Kind::B, j, -1),
                             handle(Kind::A, j, -1), handle(Kind::B, j)});
    }
    std::vector<Letter> rhs;
    for (int i = 1; i <= top; ++i) rhs.push_back(sigma(i));
    for (int i = top; i >= 1; --i) rhs.push_back(sigma(i));
    out.push_back(make(Family::TR, "TR", ctx, std::move(lhs), std::move(rhs)));
  }
  return out;
}

const std::vector<Relator>& shared_relator_catalog(GroupContext ctx) {
  thread_local std::map<std::pair<int, int>, std::vector<Relator>> cache;
  const auto key = std::make_pair(ctx.genus, ctx.strands);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, relator_catalog(ctx)).first;
  return it->second;
}

Relator inverted_relator(const Relator& r) {
  return Relator{r.family, r.name, invert(r.lhs), invert(r.rhs)};
}

Relator cyclic_variant(const Relator& r, int rotation, int split) {
  if (split == 0) return r;
  const BraidWord w = r.word();
  const auto n = static_cast<int>(w.size());
  if (rotation < 0 || rotation >= n || split < 1 || split >= n) {
    throw Error("cyclic variant out of range for " + r.name);
  }
  std::vector<Letter> x(w.letters().begin() + rotation, w.letters().end());
  x.insert(x.end(), w.letters().begin(), w.letters().begin() + rotation);
  std::vector<Letter> u(x.begin(), x.begin() + split);
  std::vector<Letter> v = invert_letters(std::span<const Letter>(x).subspan(static_cast<std::size_t>(split)));
  const GroupContext ctx = w.context();
  return Relator{r.family, r.name, BraidWord(ctx, std::move(u)), BraidWord(ctx, std::move(v))};
}

Relator relator_by_name(const std::string& name, GroupContext ctx) {
  for (const auto& r : shared_relator_catalog(ctx)) {
    if (r.name == name) return r;
  }
  throw Error("unknown relator '" + name + "' for B_{" + std::to_string(ctx.genus) +
              "," + std::to_string(ctx.strands) + "}");
}

RelatorCheck check_relator_trivial(const Relator& r) {
  const BraidWord w = r.word();
  RelatorCheck out;
  out.permutation_trivial = permutation_of(w).is_identity();
  out.winding_zero = winding_table(w).is_zero();
  return out;
}

bool relation_matches(const BraidWord& w, const Relator& r, std::size_t position,
                      RewriteDirection dir) {
  const BraidWord& src = dir == RewriteDirection::Forward ? r.lhs : r.rhs;
  if (!(w.context() == src.context())) return false;
  if (position + src.size() > w.size()) return false;
  return std::equal(src.letters().begin(), src.letters().end(),
                    w.letters().begin() + static_cast<std::ptrdiff_t>(position));
}

BraidWord apply_relation(const BraidWord& w, const Relator& r, std::size_t position,
                         RewriteDirection dir) {
  if (!relation_matches(w, r, position, dir)) {
    throw Error("relation " + r.name + " does not match at position " +
                std::to_string(position));
  }
  const BraidWord& src = dir == RewriteDirection::Forward ? r.lhs : r.rhs;
  const BraidWord& dst = dir == RewriteDirection::Forward ? r.rhs : r.lhs;
  std::vector<Letter> out(w.letters().begin(),
                          w.letters().begin() + static_cast<std::ptrdiff_t>(position));
  out.insert(out.end(), dst.letters().begin(), dst.letters().end());
  out.insert(out.end(),
             w.letters().begin() + static_cast<std::ptrdiff_t>(position + src.size()),
             w.letters().end());
  return BraidWord(w.context(), std::move(out));
}

}  // namespace platcalc
