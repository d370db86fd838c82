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

// The move calculus on plat representatives.
//
// M1..M5 multiply a word on the left or right by a Hilden generator (braid
// twist, arc exchange, slide under the second arc, slides around a longitude
// or a meridian). M6 is the stabilization beta <-> T_k(beta) s_{2k}. The plat
// slide psl_i prefixes the attaching word of the i-th 2-handle through the
// plat sum; the dual slide psl*_i appends the i-th dual word. Relation moves
// rewrite one defining relation in place and FreeCancel inserts or deletes a
// cancelling pair.
//
// Every move is invertible. The inverse of an M1..M5, psl or psl* move
// multiplies by the inverse word on the same side, which on a word carrying
// the generator literally at that end is exactly its removal.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "platcalc/manifold.hpp"
#include "platcalc/presentation.hpp"
#include "platcalc/word.hpp"

namespace platcalc {

enum class HildenKind { BraidTwist, ElementaryExchange, SlideUnderSecond, SlideLongitude, SlideMeridian };

/// The literal Hilden generator word in the given context.
BraidWord hilden_word(HildenKind kind, int index, GroupContext ctx);

enum class MoveKind { M1, M2, M3, M4, M5, M6, Relation, FreeCancel, Psl, PslStar };
enum class Side { Left, Right };

struct Move {
  MoveKind kind = MoveKind::M1;
  /// i for M2 and psl/psl*, j for M4/M5, k for M6. Unused otherwise.
  int index = 0;
  Side side = Side::Left;
  /// +1 applies the move as written (insert/stabilize/slide), -1 its inverse.
  int direction = 1;
  // Relation moves.
  std::string relator;
  RewriteDirection rewrite = RewriteDirection::Forward;
  /// Rewrites with the inverted relation lhs^-1 = rhs^-1.
  bool inverted = false;
  /// Nonzero split selects cyclic_variant(relation, rotation, split).
  int rotation = 0;
  int split = 0;
  // Relation and FreeCancel moves.
  std::size_t position = 0;
  // FreeCancel insertion: inserts letter, letter^-1 at position.
  Letter letter{};

  Move inverse() const;
  friend bool operator==(const Move&, const Move&) = default;
};

Move m_move(MoveKind kind, Side side, int direction, int index = 0);
Move m6_move(int k, int direction);
Move relation_move(std::string relator, std::size_t position, RewriteDirection dir,
                   bool inverted = false, int rotation = 0, int split = 0);
Move free_insert(std::size_t position, Letter letter);
Move free_delete(std::size_t position);
Move psl_move(int i, int direction);
Move psl_star_move(int i, int direction);

/// Serializations: "M1(L,+)", "M2(i=1,R,-)", "M6(k=2,+)", "psl(i=1)",
/// "psl*(i=1)^-1", "rel:R3.ab(s=1,r=2)@4,→", "rel:R4(r=1)^-1@0,←",
/// "free(s1)@3" (insert s1 s1^-1), "free@3" (delete a cancelling pair).
std::string format_move(const Move& m);
Move parse_move(const std::string& text);
std::string format_witness(const std::vector<Move>& moves);
std::vector<Move> parse_witness(const std::string& text);

/// T_k: B_{g,2n} -> B_{g,2n+2}.
BraidWord t_map(const BraidWord& w, int k);
BraidWord m6_stabilize(const BraidWord& w, int k);
/// Inverse of m6_stabilize, matching the literal image shape after free
/// reduction; the result is free-reduced.
BraidWord m6_destabilize(const BraidWord& w, int k);

BraidWord w_word(int m, int n, GroupContext ctx);
BraidWord plat_sum(const BraidWord& alpha, const BraidWord& beta);
BraidWord psl(const BraidWord& beta, const ManifoldPresentation& m, int i);
BraidWord psl_star(const BraidWord& beta, const ManifoldPresentation& m, int i);

/// Applies one move literally (no free reduction). psl and psl* need a
/// manifold; throws Error when the move does not apply.
BraidWord apply_move(const BraidWord& w, const Move& move,
                     const ManifoldPresentation* manifold = nullptr);

enum class ReplayMode {
  /// Free-reduce after every move (search witnesses).
  Reducing,
  /// Apply every move literally; FreeCancel steps do the bookkeeping.
  Literal,
};

BraidWord replay(const BraidWord& start, const std::vector<Move>& moves,
                 const ManifoldPresentation* manifold, ReplayMode mode);

/// The witness that undoes `moves`: reversed, each step inverted. Only
/// meaningful for witnesses whose steps are exactly invertible in Literal
/// mode, or for search witnesses replayed in Reducing mode.
std::vector<Move> inverse_witness(const std::vector<Move>& moves);

}  // namespace platcalc
