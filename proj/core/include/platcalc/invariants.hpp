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

// Combinatorial invariants of a braid word and of its plat closure.
//
// Conventions: a word is read top to bottom. s_i exchanges the strands at
// positions i and i+1. a_j (b_j) adds +1 to the j-th longitude (meridian)
// coordinate of whichever strand sits at position 1 when the letter occurs.
// The plat closure joins points (2i-1, 2i) at the top and at the bottom.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "platcalc/word.hpp"

namespace platcalc {

using ClassVector = std::vector<std::int64_t>;

/// Maps top position k (1-based) to the bottom position of the same strand.
class StrandPermutation {
 public:
  explicit StrandPermutation(int strands);
  explicit StrandPermutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int top) const { return images_[static_cast<std::size_t>(top - 1)]; }
  /// Top position of the strand that ends at the given bottom position.
  int preimage(int bottom) const;
  bool is_identity() const;
  /// this followed by other.
  StrandPermutation then(const StrandPermutation& other) const;
  /// Cycle notation, e.g. "(1 3)(2 4)"; "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const StrandPermutation&, const StrandPermutation&) = default;

 private:
  std::vector<int> images_;
};

/// Per-strand winding vectors in Z^{2g}, strands labelled by top position.
class WindingTable {
 public:
  WindingTable(int strands, int genus);

  int strands() const { return strands_; }
  int genus() const { return genus_; }
  /// Coordinates (long_1..long_g, mer_1..mer_g) of strand s (1-based).
  ClassVector strand(int s) const;
  std::int64_t& at(int s, int coord) {
    return data_[static_cast<std::size_t>((s - 1) * 2 * genus_ + coord)];
  }
  std::int64_t at(int s, int coord) const {
    return data_[static_cast<std::size_t>((s - 1) * 2 * genus_ + coord)];
  }
  ClassVector total() const;
  bool is_zero() const;

  friend bool operator==(const WindingTable&, const WindingTable&) = default;

 private:
  int strands_;
  int genus_;
  std::vector<std::int64_t> data_;
};

struct PlatComponent {
  /// Top and bottom points visited, in traversal order.
  std::vector<int> top_points;
  std::vector<int> bottom_points;
  /// Traversal-oriented class; the unordered pair {v, -v} is what matters.
  ClassVector traversal_class;
};

struct ClosureReport {
  GroupContext context;
  std::vector<PlatComponent> components;

  std::size_t component_count() const { return components.size(); }
  /// Sorted list of canonical class representatives (first nonzero
  /// coordinate positive), one per component.
  std::vector<ClassVector> class_pairs() const;
  /// "components: k" then one "class: (x1,..,xg | y1,..,yg)" line each.
  std::string serialize() const;
};

/// Picks the representative of {v, -v} whose first nonzero entry is positive.
ClassVector canonical_sign(ClassVector v);
std::string format_class(const ClassVector& v, int genus);

StrandPermutation permutation_of(const BraidWord& w);
WindingTable winding_table(const BraidWord& w);
/// Components of the plat closure as cycles through top and bottom points.
std::vector<PlatComponent> plat_components(const BraidWord& w);
std::size_t component_count(const BraidWord& w);
ClosureReport closure_report(const BraidWord& w);

}  // namespace platcalc
