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

// Defining relations of B_{g,2n}: the two classical braid relations, the
// mixed relations R1..R4 and the total relation TR. Each relation is kept as
// an oriented rule lhs = rhs so it can be applied at a position of a word.

#pragma once

#include <string>
#include <vector>

#include "platcalc/word.hpp"

namespace platcalc {

enum class Family { BR1, BR2, R1, R2, R3, R4, TR };

struct Relator {
  Family family = Family::BR1;
  /// Stable text name, e.g. "BR1(i=2)", "R3.ab(s=1,r=2)", "TR".
  std::string name;
  BraidWord lhs;
  BraidWord rhs;

  /// lhs * rhs^-1 as a single word.
  BraidWord word() const;
};

enum class RewriteDirection { Forward, Backward };

/// Every relator instance admissible in the context, in a fixed order.
std::vector<Relator> relator_catalog(GroupContext ctx);

/// The same catalog, built once per context and thread.
const std::vector<Relator>& shared_relator_catalog(GroupContext ctx);

/// Looks up a relator by its stable name; throws Error if unknown.
Relator relator_by_name(const std::string& name, GroupContext ctx);

struct RelatorCheck {
  bool permutation_trivial = false;
  bool winding_zero = false;
  bool ok() const { return permutation_trivial && winding_zero; }
};

RelatorCheck check_relator_trivial(const Relator& r);

/// r with both sides inverted: lhs^-1 = rhs^-1.
Relator inverted_relator(const Relator& r);

/// The relation u = v read off the cyclic word lhs * rhs^-1 rotated left by
/// rotation letters, where u is its first split letters. split = 0 returns r.
Relator cyclic_variant(const Relator& r, int rotation, int split);

/// True when the source side of r occurs in w starting at position.
bool relation_matches(const BraidWord& w, const Relator& r, std::size_t position,
                      RewriteDirection dir);

/// Replaces the source side found at position by the target side. The result
/// is not free-reduced. Throws Error if the source side does not match.
BraidWord apply_relation(const BraidWord& w, const Relator& r,
                         std::size_t position, RewriteDirection dir);

}  // namespace platcalc
