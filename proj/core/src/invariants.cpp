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

#include "platcalc/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "platcalc/error.hpp"

namespace platcalc {

StrandPermutation::StrandPermutation(int strands) : images_(static_cast<std::size_t>(strands)) {
  std::iota(images_.begin(), images_.end(), 1);
}

StrandPermutation::StrandPermutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw Error("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

int StrandPermutation::preimage(int bottom) const {
  auto it = std::find(images_.begin(), images_.end(), bottom);
  return static_cast<int>(it - images_.begin()) + 1;
}

bool StrandPermutation::is_identity() const {
  for (int k = 1; k <= size(); ++k) {
    if ((*this)(k) != k) return false;
  }
  return true;
}

StrandPermutation StrandPermutation::then(const StrandPermutation& other) const {
  std::vector<int> out(images_.size());
  for (int k = 1; k <= size(); ++k) out[static_cast<std::size_t>(k - 1)] = other((*this)(k));
  return StrandPermutation(std::move(out));
}

std::string StrandPermutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int k = 1; k <= size(); ++k) {
    if (seen[static_cast<std::size_t>(k)] || (*this)(k) == k) continue;
    out += '(';
    int c = k;
    bool first = true;
    while (!seen[static_cast<std::size_t>(c)]) {
      seen[static_cast<std::size_t>(c)] = true;
      if (!first) out += ' ';
      out += std::to_string(c);
      first = false;
      c = (*this)(c);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

WindingTable::WindingTable(int strands, int genus)
    : strands_(strands), genus_(genus),
      data_(static_cast<std::size_t>(strands * 2 * genus), 0) {}

ClassVector WindingTable::strand(int s) const {
  auto first = data_.begin() + (s - 1) * 2 * genus_;
  return ClassVector(first, first + 2 * genus_);
}

ClassVector WindingTable::total() const {
  ClassVector out(static_cast<std::size_t>(2 * genus_), 0);
  for (int s = 1; s <= strands_; ++s) {
    for (int c = 0; c < 2 * genus_; ++c) out[static_cast<std::size_t>(c)] += at(s, c);
  }
  return out;
}

bool WindingTable::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

ClassVector canonical_sign(ClassVector v) {
  for (auto x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : v) y = -y;
    }
    break;
  }
  return v;
}

std::string format_class(const ClassVector& v, int genus) {
  std::ostringstream out;
  out << '(';
  for (int j = 0; j < genus; ++j) {
    if (j) out << ',';
    out << v[static_cast<std::size_t>(j)];
  }
  out << " | ";
  for (int j = 0; j < genus; ++j) {
    if (j) out << ',';
    out << v[static_cast<std::size_t>(genus + j)];
  }
  out << ')';
  return out.str();
}

StrandPermutation permutation_of(const BraidWord& w) {
  const int n = w.context().strands;
  // arrangement[p] = strand (top label) currently at position p+1.
  std::vector<int> arrangement(static_cast<std::size_t>(n));
  std::iota(arrangement.begin(), arrangement.end(), 1);
  for (const auto& l : w.letters()) {
    if (l.kind == Kind::Sigma) {
      std::swap(arrangement[static_cast<std::size_t>(l.index - 1)],
                arrangement[static_cast<std::size_t>(l.index)]);
    }
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) images[static_cast<std::size_t>(arrangement[static_cast<std::size_t>(p)] - 1)] = p + 1;
  return StrandPermutation(std::move(images));
}

WindingTable winding_table(const BraidWord& w) {
  const int n = w.context().strands;
  const int g = w.context().genus;
  WindingTable table(n, g);
  int front = 1;  // strand at position 1
  std::vector<int> arrangement(static_cast<std::size_t>(n));
  std::iota(arrangement.begin(), arrangement.end(), 1);
  for (const auto& l : w.letters()) {
    switch (l.kind) {
      case Kind::Sigma:
        std::swap(arrangement[static_cast<std::size_t>(l.index - 1)],
                  arrangement[static_cast<std::size_t>(l.index)]);
        front = arrangement[0];
        break;
      case Kind::A:
        table.at(front, l.index - 1) += l.sign;
        break;
      case Kind::B:
        table.at(front, g + l.index - 1) += l.sign;
        break;
    }
  }
  return table;
}

namespace {

int partner(int point) { return point % 2 == 1 ? point + 1 : point - 1; }

std::vector<PlatComponent> trace(const StrandPermutation& perm, const WindingTable* table) {
  const int n = perm.size();
  const int g = table ? table->genus() : 0;
  std::vector<bool> top_seen(static_cast<std::size_t>(n + 1), false);
  std::vector<PlatComponent> out;
  for (int start = 1; start <= n; ++start) {
    if (top_seen[static_cast<std::size_t>(start)]) continue;
    PlatComponent comp;
    comp.traversal_class.assign(static_cast<std::size_t>(2 * g), 0);
    int t = start;
    while (!top_seen[static_cast<std::size_t>(t)]) {
      // Down strand t.
      top_seen[static_cast<std::size_t>(t)] = true;
      comp.top_points.push_back(t);
      if (table) {
        for (int c = 0; c < 2 * g; ++c) comp.traversal_class[static_cast<std::size_t>(c)] += table->at(t, c);
      }
      const int bottom = perm(t);
      comp.bottom_points.push_back(bottom);
      const int other_bottom = partner(bottom);
      comp.bottom_points.push_back(other_bottom);
      // Up the strand ending at other_bottom.
      const int up = perm.preimage(other_bottom);
      top_seen[static_cast<std::size_t>(up)] = true;
      comp.top_points.push_back(up);
      if (table) {
        for (int c = 0; c < 2 * g; ++c) comp.traversal_class[static_cast<std::size_t>(c)] -= table->at(up, c);
      }
      t = partner(up);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<PlatComponent> plat_components(const BraidWord& w) {
  return trace(permutation_of(w), nullptr);
}

std::size_t component_count(const BraidWord& w) { return plat_components(w).size(); }

ClosureReport closure_report(const BraidWord& w) {
  const WindingTable table = winding_table(w);
  return ClosureReport{w.context(), trace(permutation_of(w), &table)};
}

std::vector<ClassVector> ClosureReport::class_pairs() const {
  std::vector<ClassVector> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(canonical_sign(c.traversal_class));
  std::sort(out.begin(), out.end());
  return out;
}

std::string ClosureReport::serialize() const {
  std::ostringstream out;
  out << "components: " << components.size() << '\n';
  for (const auto& c : components) {
    out << "class: " << format_class(canonical_sign(c.traversal_class), context.genus) << '\n';
  }
  return out.str();
}

}  // namespace platcalc
