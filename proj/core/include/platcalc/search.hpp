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


// Bounded bidirectional breadth-first search over the full move set. Words
// are keyed by their free reduction; the search only ever claims
// inequivalence through the closure invariants.

#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "platcalc/manifold.hpp"
#include "platcalc/moves.hpp"
#include "platcalc/word.hpp"

namespace platcalc {

struct SearchConfig {
  int max_depth = 4;
  /// Cap on the strand count reachable through M6.
  int max_strands = 6;
  int max_word_length = 24;
  std::size_t node_budget = 200000;
  int threads = 1;
  /// Include rewrites with inverted relations (lhs^-1 = rhs^-1).
  bool inverted_relations = true;

  void validate() const;
};

struct Successor {
  Move move;
  BraidWord word;
};

/// Every single-move successor of w inside the bounds, free-reduced, in a
/// fixed order: M1..M5 (left then right, + then -), M6 up then down, psl,
/// psl*, relation rewrites by catalog order, direction and position.
/// Relation rewrites whose result is not already freely reduced are skipped
/// so that every edge can be walked backwards by its inverse move.
std::vector<Successor> neighbors(const BraidWord& w, const ManifoldPresentation& m,
                                 const SearchConfig& cfg);

enum class SearchStatus { Equivalent, DistinguishedByInvariant, BoundsExhausted };

struct SearchStats {
  std::size_t nodes_expanded = 0;
  std::size_t visited_forward = 0;
  std::size_t visited_backward = 0;
  std::size_t frontier_forward = 0;
  std::size_t frontier_backward = 0;
  double elapsed_ms = 0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::BoundsExhausted;
  /// Replays from a to b in ReplayMode::Reducing when status is Equivalent.
  std::vector<Move> witness;
  SearchStats stats;
  std::string note;
};

SearchResult search_equivalent(const BraidWord& a, const BraidWord& b,
                               const ManifoldPresentation& m, const SearchConfig& cfg);

/// Component counts, then H_1(M)-reduced class multisets. Returns a message
/// naming the first invariant that differs, or an empty string.
std::string invariant_difference(const BraidWord& a, const BraidWord& b,
                                 const ManifoldPresentation& m);

std::string format_result(const SearchResult& r);

}  // namespace platcalc
