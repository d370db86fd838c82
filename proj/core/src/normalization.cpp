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


#include "platcalc/normalization.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <queue>
#include <tuple>
#include <unordered_set>

#include "platcalc/error.hpp"
#include "platcalc/presentation.hpp"

namespace platcalc {

namespace {

struct Rule {
  std::vector<Letter> lhs;
  std::vector<Letter> rhs;
  Move move;
};

struct RuleIndex {
  std::map<Letter, std::vector<Rule>> by_first;
  std::size_t longest = 0;
};

constexpr int kSlack = 4;

const RuleIndex& rules_for(GroupContext ctx) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, RuleIndex> cache;
  std::lock_guard lock(mu);
  auto [it, fresh] = cache.try_emplace({ctx.genus, ctx.strands});
  if (!fresh) return it->second;
  RuleIndex& idx = it->second;
  for (const Relator& base : shared_relator_catalog(ctx)) {
    for (int inv = 0; inv < 2; ++inv) {
      const Relator r = inv ? inverted_relator(base) : base;
      const int len = static_cast<int>(r.word().size());
      for (int rot = 0; rot < len; ++rot) {
        for (int split = 1; split < len; ++split) {
          const Relator c = cyclic_variant(r, rot, split);
          if (c.lhs.empty() || c.rhs.size() > c.lhs.size() + kSlack) continue;
          Rule rule{{c.lhs.letters().begin(), c.lhs.letters().end()},
                    {c.rhs.letters().begin(), c.rhs.letters().end()},
                    relation_move(base.name, 0, RewriteDirection::Forward, inv != 0, rot, split)};
          idx.longest = std::max(idx.longest, rule.lhs.size());
          idx.by_first[rule.lhs.front()].push_back(std::move(rule));
        }
      }
    }
  }
  return idx;
}

bool is_target(const Letter& l, Kind k) { return l.kind == k; }

int tracked_position(const BraidWord& w, Kind k, bool to_end) {
  const int n = static_cast<int>(w.size());
  if (to_end) {
    for (int i = n - 1; i >= 0; --i)
      if (is_target(w[static_cast<std::size_t>(i)], k)) return i;
  } else {
    for (int i = 0; i < n; ++i)
      if (is_target(w[static_cast<std::size_t>(i)], k)) return i;
  }
  return -1;
}

int target_count(const BraidWord& w, Kind k) { return static_cast<int>(w.count(k)); }

struct Pusher {
  const ManifoldPresentation& manifold;
  const NormalizeConfig& cfg;
  Kind kind;
  bool to_end;
  /// Letters of these kinds may not be created.
  std::vector<Kind> frozen;
  bool both_sides = false;

  int distance(const BraidWord& w) const {
    const int p = tracked_position(w, kind, to_end);
    return to_end ? static_cast<int>(w.size()) - 1 - p : p;
  }

  bool admissible(const BraidWord& w, const std::vector<int>& counts) const {
    if (static_cast<int>(w.size()) > cfg.max_word_length) return false;
    for (std::size_t i = 0; i < frozen.size(); ++i)
      if (target_count(w, frozen[i]) > counts[i]) return false;
    return true;
  }

  std::vector<Move> hilden_moves(GroupContext ctx) const {
    const Side near = to_end ? Side::Right : Side::Left;
    const Side far = to_end ? Side::Left : Side::Right;
    std::vector<Move> out;
    for (Side side : {near, far}) {
      if (side == far && !both_sides) continue;
      for (MoveKind k : {MoveKind::M1, MoveKind::M2, MoveKind::M3, MoveKind::M4, MoveKind::M5}) {
        const int count = k == MoveKind::M2 ? ctx.pairs() - 1 : (k == MoveKind::M4 || k == MoveKind::M5) ? ctx.genus : 1;
        for (int i = 1; i <= count; ++i) {
          for (int dir : {1, -1}) out.push_back(m_move(k, side, dir, i));
        }
      }
    }
    if (ctx.strands < cfg.max_strands) {
      for (int k = 1; k <= ctx.pairs(); ++k) out.push_back(m6_move(k, 1));
    }
    for (int k = 1; k < ctx.pairs(); ++k) out.push_back(m6_move(k, -1));
    return out;
  }

  /// Best-first search until the tracked letter sits at the chosen end.
  bool run(BraidWord& w, std::vector<Move>& witness) const {
    struct Node {
      BraidWord word;
      int parent;
      Move move;
    };
    std::vector<int> counts;
    for (Kind k : frozen) counts.push_back(target_count(w, k));
    std::vector<Node> nodes;
    std::unordered_set<BraidWord, BraidWordHash> seen;
    using Entry = std::tuple<int, int, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    auto add = [&](BraidWord nw, int parent, Move m) {
      if (!admissible(nw, counts) || !seen.insert(nw).second) return;
      const int d = distance(nw);
      const int len = static_cast<int>(nw.size());
      nodes.push_back({std::move(nw), parent, std::move(m)});
      open.emplace(d, len, static_cast<int>(nodes.size()) - 1);
    };
    add(w, -1, Move{});
    while (!open.empty() && nodes.size() < cfg.node_budget) {
      const auto [d, len, id] = open.top();
      open.pop();
      if (d == 0) {
        std::vector<Move> path;
        for (int c = id; nodes[static_cast<std::size_t>(c)].parent >= 0;
             c = nodes[static_cast<std::size_t>(c)].parent) {
          path.push_back(nodes[static_cast<std::size_t>(c)].move);
        }
        witness.insert(witness.end(), path.rbegin(), path.rend());
        w = nodes[static_cast<std::size_t>(id)].word;
        return true;
      }
      const BraidWord cur = nodes[static_cast<std::size_t>(id)].word;
      for (const Move& m : hilden_moves(cur.context())) {
        BraidWord nw;
        try {
          nw = free_reduce(apply_move(cur, m, &manifold));
        } catch (const Error&) {
          continue;
        }
        add(std::move(nw), id, m);
      }
      const RuleIndex& idx = rules_for(cur.context());
      const auto letters = cur.letters();
      const int p = tracked_position(cur, kind, to_end);
      const int lo = std::max(0, p - static_cast<int>(idx.longest) + 1);
      for (int s = lo; s <= p; ++s) {
        const auto found = idx.by_first.find(letters[static_cast<std::size_t>(s)]);
        if (found == idx.by_first.end()) continue;
        for (const Rule& r : found->second) {
          const std::size_t start = static_cast<std::size_t>(s);
          if (s + static_cast<int>(r.lhs.size()) <= p) continue;
          if (start + r.lhs.size() > letters.size()) continue;
          if (!std::equal(r.lhs.begin(), r.lhs.end(), letters.begin() + s)) continue;
          std::vector<Letter> next(letters.begin(), letters.begin() + s);
          next.insert(next.end(), r.rhs.begin(), r.rhs.end());
          next.insert(next.end(), letters.begin() + s + static_cast<std::ptrdiff_t>(r.lhs.size()),
                      letters.end());
          free_reduce_in_place(next);
          Move m = r.move;
          m.position = start;
          add(BraidWord(cur.context(), std::move(next)), id, std::move(m));
        }
      }
    }
    return false;
  }
};

/// Eliminates every letter of one kind, one at a time, with slide moves at
/// the chosen end.
void eliminate(Normalized& st, const ManifoldPresentation& m, const NormalizeConfig& cfg,
               Kind kind, bool to_end, std::vector<Kind> frozen) {
  while (target_count(st.word, kind) > 0) {
    bool done = false;
    for (bool both : {false, true}) {
      Pusher pusher{m, cfg, kind, to_end, frozen, both};
      BraidWord w = st.word;
      std::vector<Move> steps;
      if (!pusher.run(w, steps)) continue;
      const Letter l = to_end ? w[w.size() - 1] : w[0];
      const Move slide = to_end ? psl_star_move(l.index, -l.sign) : psl_move(l.index, -l.sign);
      w = free_reduce(apply_move(w, slide, &m));
      steps.push_back(slide);
      st.word = std::move(w);
      st.witness.insert(st.witness.end(), steps.begin(), steps.end());
      done = true;
      break;
    }
    if (!done) {
      throw Error(std::string("could not eliminate ") + (kind == Kind::B ? "b" : "a") +
                  "-letters within the node budget");
    }
  }
}

}  // namespace

Normalized remove_b(const BraidWord& w, const ManifoldPresentation& m, const NormalizeConfig& cfg) {
  if (!m.has_standard_duals()) throw Error("remove_b needs the standard dual words c*_i = b_i");
  if (w.context().genus != m.genus()) throw Error("word and manifold have different genus");
  Normalized st{free_reduce(w), {}};
  eliminate(st, m, cfg, Kind::B, true, {Kind::B});
  return st;
}

Normalized remove_a_s3(const BraidWord& w, const NormalizeConfig& cfg) {
  if (w.context().genus != 1) throw Error("remove_a_s3 needs genus 1");
  const ManifoldPresentation s3 = lens_space(1, 0);
  Normalized st = remove_b(w, s3, cfg);
  eliminate(st, s3, cfg, Kind::A, false, {Kind::A, Kind::B});
  return st;
}

BraidWord shorten(const BraidWord& w, std::size_t budget) {
  BraidWord cur = free_reduce(w);
  const RuleIndex& idx = rules_for(cur.context());
  for (std::size_t step = 0; step < budget; ++step) {
    const auto letters = cur.letters();
    std::optional<BraidWord> best;
    for (std::size_t s = 0; s < letters.size(); ++s) {
      const auto found = idx.by_first.find(letters[s]);
      if (found == idx.by_first.end()) continue;
      for (const Rule& r : found->second) {
        if (s + r.lhs.size() > letters.size()) continue;
        if (!std::equal(r.lhs.begin(), r.lhs.end(), letters.begin() + static_cast<std::ptrdiff_t>(s))) continue;
        std::vector<Letter> next(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(s));
        next.insert(next.end(), r.rhs.begin(), r.rhs.end());
        next.insert(next.end(), letters.begin() + static_cast<std::ptrdiff_t>(s + r.lhs.size()),
                     letters.end());
        free_reduce_in_place(next);
        if (next.size() < (best ? best->size() : cur.size())) best = BraidWord(cur.context(), std::move(next));
      }
    }
    if (!best) break;
    cur = std::move(*best);
  }
  return cur;
}

}  // namespace platcalc
