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


// Normal forms under the move calculus: elimination of meridian generators
// by pushing them to the bottom and sliding them off through the dual
// handles, the collapse of genus-1 words over S^3 to classical plats, and a
// length-reduction pass.

#pragma once

#include <cstddef>
#include <vector>

#include "platcalc/manifold.hpp"
#include "platcalc/moves.hpp"
#include "platcalc/word.hpp"

namespace platcalc {

struct NormalizeConfig {
  /// Nodes explored per eliminated letter before giving up.
  std::size_t node_budget = 5000;
  /// Cap on the strand count reachable through stabilization.
  int max_strands = 8;
  int max_word_length = 60;
};

struct Normalized {
  BraidWord word;
  /// Replays from the input to word in ReplayMode::Reducing.
  std::vector<Move> witness;
};

/// Removes every b-letter. Requires the standard dual words c*_i = b_i;
/// throws Error for other duals or when the budget runs out.
Normalized remove_b(const BraidWord& w, const ManifoldPresentation& m,
                    const NormalizeConfig& cfg = {});

/// Genus 1 over L(1,0): removes every a- and b-letter, leaving a classical
/// plat word. Throws Error when the genus is not 1.
Normalized remove_a_s3(const BraidWord& w, const NormalizeConfig& cfg = {});

/// Greedy free reduction and length-reducing single relation rewrites, at
/// most budget rewrites.
BraidWord shorten(const BraidWord& w, std::size_t budget);

}  // namespace platcalc
