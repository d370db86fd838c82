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

// Heegaard data (g, c, c*) with every attaching circle stored as a braid word
// in B_{g,2}, the genus-one catalog, and first homology via Smith normal form.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "platcalc/invariants.hpp"
#include "platcalc/smith.hpp"
#include "platcalc/word.hpp"

namespace platcalc {

class ManifoldPresentation {
 public:
  /// dual_words defaults to the standard b_1..b_g when empty.
  ManifoldPresentation(int genus, std::vector<BraidWord> attaching,
                       std::vector<BraidWord> dual = {}, std::string label = {});

  int genus() const { return genus_; }
  const BraidWord& attaching(int i) const { return attaching_.at(static_cast<std::size_t>(i - 1)); }
  const BraidWord& dual(int i) const { return dual_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<BraidWord>& attaching_words() const { return attaching_; }
  const std::vector<BraidWord>& dual_words() const { return dual_; }
  const std::string& label() const { return label_; }
  /// True when c*_i = b_i for every i.
  bool has_standard_duals() const;

 private:
  int genus_;
  std::vector<BraidWord> attaching_;
  std::vector<BraidWord> dual_;
  std::string label_;
};

struct HomologyGroup {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // each > 1, each dividing the next

  std::int64_t torsion_order() const;
  /// "0", "Z", "Z^2 + Z/3", "Z/5", ...
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// alpha_{p,q}: q letters b1^-1 spread evenly among p letters a1.
BraidWord torus_braid(int p, int q);
ManifoldPresentation lens_space(int p, int q);

/// Parses the line-oriented config ("genus: g", "c1: <word>", optional
/// "cstar1: <word>", optional "label: <text>", '#' comments).
ManifoldPresentation parse_manifold(std::istream& in);
ManifoldPresentation load_manifold(const std::string& path);

/// Rows: classes of c_1..c_g then c*_1..c*_g, each in Z^{2g}.
IntMatrix relation_matrix(const ManifoldPresentation& m);
HomologyGroup h1_of_manifold(const ManifoldPresentation& m);

/// A class of Z^{2g} reduced into H_1(M). Coordinates follow the Smith
/// diagonal with unit entries dropped: torsion coordinates in [0, d), free
/// coordinates unrestricted. The pair {v, -v} is represented by the
/// lexicographically smaller of the two reductions.
struct ReducedClass {
  std::vector<std::int64_t> coords;
  std::vector<std::int64_t> moduli;  // 0 for a free coordinate
  friend bool operator==(const ReducedClass& a, const ReducedClass& b) { return a.coords == b.coords; }
  friend auto operator<=>(const ReducedClass& a, const ReducedClass& b) { return a.coords <=> b.coords; }
  std::string to_string() const;
};

/// Precomputed reduction map Z^{2g} -> H_1(M).
class HomologyReducer {
 public:
  explicit HomologyReducer(const ManifoldPresentation& m);
  ReducedClass reduce_pair(const ClassVector& v) const;
  const HomologyGroup& group() const { return group_; }

 private:
  std::vector<std::int64_t> reduce(const ClassVector& v) const;

  int genus_;
  IntMatrix transform_;  // V of U A V = D
  std::vector<std::int64_t> diagonal_;
  HomologyGroup group_;
};

/// Sorted multiset of reduced class pairs, one per closure component.
std::vector<ReducedClass> class_in_manifold(const ClosureReport& report,
                                            const ManifoldPresentation& m);
std::vector<ReducedClass> class_in_manifold(const ClosureReport& report,
                                            const HomologyReducer& reducer);

}  // namespace platcalc
