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


#include "platcalc/search.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "platcalc/error.hpp"
#include "platcalc/invariants.hpp"
#include "platcalc/presentation.hpp"

namespace platcalc {

void SearchConfig::validate() const {
  if (max_depth < 0) throw Error("max depth must be non-negative");
  if (max_strands < 2 || max_strands % 2 != 0) throw Error("max strands must be even and >= 2");
  if (max_word_length <= 0) throw Error("max word length must be positive");
  if (node_budget == 0) throw Error("node budget must be positive");
  if (threads < 1) throw Error("thread count must be positive");
}

namespace {

bool reduced_after(const BraidWord& w, std::size_t pos, std::size_t len, const BraidWord& dst) {
  if (dst.empty()) {
    return pos == 0 || pos + len >= w.size() || !w[pos - 1].cancels(w[pos + len]);
  }
  if (pos > 0 && w[pos - 1].cancels(dst[0])) return false;
  if (pos + len < w.size() && dst[dst.size() - 1].cancels(w[pos + len])) return false;
  return true;
}

void add_relation_successors(const BraidWord& w, const SearchConfig& cfg,
                             std::vector<Successor>& out) {
  const auto& catalog = shared_relator_catalog(w.context());
  const int variants = cfg.inverted_relations ? 2 : 1;
  for (const Relator& base : catalog) {
    for (int inv = 0; inv < variants; ++inv) {
      const Relator r = inv ? inverted_relator(base) : base;
      for (RewriteDirection dir : {RewriteDirection::Forward, RewriteDirection::Backward}) {
        const BraidWord& src = dir == RewriteDirection::Forward ? r.lhs : r.rhs;
        const BraidWord& dst = dir == RewriteDirection::Forward ? r.rhs : r.lhs;
        if (src.size() > w.size()) continue;
        if (static_cast<int>(w.size() - src.size() + dst.size()) > cfg.max_word_length) continue;
        for (std::size_t pos = 0; pos + src.size() <= w.size(); ++pos) {
          if (!relation_matches(w, r, pos, dir)) continue;
          if (!reduced_after(w, pos, src.size(), dst)) continue;
          out.push_back({relation_move(r.name, pos, dir, inv != 0),
                         apply_relation(w, r, pos, dir)});
        }
      }
    }
  }
}

void push_reduced(std::vector<Successor>& out, Move m, const BraidWord& w,
                  const SearchConfig& cfg) {
  BraidWord r = free_reduce(w);
  if (static_cast<int>(r.size()) > cfg.max_word_length) return;
  if (r.context().strands > cfg.max_strands) return;
  out.push_back({std::move(m), std::move(r)});
}

struct Tree {
  struct Node {
    BraidWord word;
    int parent;
    Move move;
    int depth;
  };
  std::vector<Node> nodes;
  std::unordered_map<BraidWord, int, BraidWordHash> index;
  std::vector<int> frontier;
  int depth = 0;

  explicit Tree(const BraidWord& root) {
    nodes.push_back({root, -1, Move{}, 0});
    index.emplace(root, 0);
    frontier.push_back(0);
  }

  std::vector<Move> path_from_root(int id) const {
    std::vector<Move> out;
    for (int x = id; nodes[static_cast<std::size_t>(x)].parent >= 0;
         x = nodes[static_cast<std::size_t>(x)].parent) {
      out.push_back(nodes[static_cast<std::size_t>(x)].move);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::vector<Move> path_to_root(int id) const {
    std::vector<Move> out;
    for (int x = id; nodes[static_cast<std::size_t>(x)].parent >= 0;
         x = nodes[static_cast<std::size_t>(x)].parent) {
      out.push_back(nodes[static_cast<std::size_t>(x)].move.inverse());
    }
    return out;
  }
};

std::vector<std::vector<Successor>> expand_all(const Tree& tree, const ManifoldPresentation& m,
                                               const SearchConfig& cfg) {
  const std::size_t count = tree.frontier.size();
  std::vector<std::vector<Successor>> results(count);
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < count; i += step) {
      results[i] = neighbors(tree.nodes[static_cast<std::size_t>(tree.frontier[i])].word, m, cfg);
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.threads), std::max<std::size_t>(count, 1));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  return results;
}

}  // namespace

std::vector<Successor> neighbors(const BraidWord& w, const ManifoldPresentation& m,
                                 const SearchConfig& cfg) {
  std::vector<Successor> out;
  const GroupContext ctx = w.context();
  const int n = ctx.pairs();

  for (Side side : {Side::Left, Side::Right}) {
    for (int dir : {1, -1}) {
      push_reduced(out, m_move(MoveKind::M1, side, dir), apply_move(w, m_move(MoveKind::M1, side, dir)), cfg);
      for (int i = 1; i <= n - 1; ++i) {
        const Move mv = m_move(MoveKind::M2, side, dir, i);
        push_reduced(out, mv, apply_move(w, mv), cfg);
      }
      if (n >= 2) {
        const Move mv = m_move(MoveKind::M3, side, dir);
        push_reduced(out, mv, apply_move(w, mv), cfg);
      }
      for (int j = 1; j <= ctx.genus; ++j) {
        for (MoveKind k : {MoveKind::M4, MoveKind::M5}) {
          const Move mv = m_move(k, side, dir, j);
          push_reduced(out, mv, apply_move(w, mv), cfg);
        }
      }
    }
  }
  if (ctx.strands + 2 <= cfg.max_strands) {
    for (int k = 1; k <= n; ++k) push_reduced(out, m6_move(k, 1), m6_stabilize(w, k), cfg);
  }
  for (int k = 1; k <= n - 1; ++k) {
    try {
      push_reduced(out, m6_move(k, -1), m6_destabilize(w, k), cfg);
    } catch (const Error&) {
    }
  }
  for (int i = 1; i <= m.genus(); ++i) {
    for (MoveKind kind : {MoveKind::Psl, MoveKind::PslStar}) {
      for (int dir : {1, -1}) {
        Move mv = kind == MoveKind::Psl ? psl_move(i, dir) : psl_star_move(i, dir);
        push_reduced(out, mv, apply_move(w, mv, &m), cfg);
      }
    }
  }
  add_relation_successors(w, cfg, out);
  return out;
}

std::string invariant_difference(const BraidWord& a, const BraidWord& b,
                                 const ManifoldPresentation& m) {
  const ClosureReport ra = closure_report(a);
  const ClosureReport rb = closure_report(b);
  if (ra.component_count() != rb.component_count()) {
    return "component counts differ (" + std::to_string(ra.component_count()) + " vs " +
           std::to_string(rb.component_count()) + ")";
  }
  const HomologyReducer reducer(m);
  if (class_in_manifold(ra, reducer) != class_in_manifold(rb, reducer)) {
    return "homology class multisets differ in H1 = " + reducer.group().to_string();
  }
  return {};
}

SearchResult search_equivalent(const BraidWord& a, const BraidWord& b,
                               const ManifoldPresentation& m, const SearchConfig& cfg) {
  cfg.validate();
  if (a.context().genus != b.context().genus || a.context().genus != m.genus()) {
    throw Error("search needs both words and the manifold to have the same genus");
  }
  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  auto finish = [&](SearchStatus s) {
    result.status = s;
    result.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
  };

  const std::string diff = invariant_difference(a, b, m);
  if (!diff.empty()) {
    result.note = "distinguished by invariant: " + diff;
    return finish(SearchStatus::DistinguishedByInvariant);
  }

  Tree fwd(free_reduce(a));
  Tree bwd(free_reduce(b));
  if (fwd.nodes[0].word == bwd.nodes[0].word) return finish(SearchStatus::Equivalent);

  auto meet = [&](int f, int g) {
    result.witness = fwd.path_from_root(f);
    const auto tail = bwd.path_to_root(g);
    result.witness.insert(result.witness.end(), tail.begin(), tail.end());
  };

  while (fwd.depth + bwd.depth < cfg.max_depth) {
    if (fwd.frontier.empty() && bwd.frontier.empty()) break;
    const bool forward =
        !fwd.frontier.empty() && (bwd.frontier.empty() || fwd.frontier.size() <= bwd.frontier.size());
    Tree& self = forward ? fwd : bwd;
    Tree& other = forward ? bwd : fwd;

    if (result.stats.nodes_expanded + self.frontier.size() > cfg.node_budget) {
      result.note = "node budget exhausted";
      break;
    }
    const auto expansions = expand_all(self, m, cfg);
    result.stats.nodes_expanded += self.frontier.size();

    std::vector<int> next;
    for (std::size_t i = 0; i < expansions.size(); ++i) {
      const int parent = self.frontier[i];
      for (const Successor& s : expansions[i]) {
        if (self.index.count(s.word)) continue;
        const int id = static_cast<int>(self.nodes.size());
        self.nodes.push_back({s.word, parent, s.move, self.depth + 1});
        self.index.emplace(s.word, id);
        next.push_back(id);
        auto hit = other.index.find(s.word);
        if (hit != other.index.end()) {
          if (forward) meet(id, hit->second);
          else meet(hit->second, id);
          result.stats.visited_forward = fwd.nodes.size();
          result.stats.visited_backward = bwd.nodes.size();
          return finish(SearchStatus::Equivalent);
        }
      }
    }
    self.frontier = std::move(next);
    ++self.depth;
    result.stats.frontier_forward = fwd.frontier.size();
    result.stats.frontier_backward = bwd.frontier.size();
  }
  if (result.note.empty()) result.note = "depth bound reached";
  result.stats.visited_forward = fwd.nodes.size();
  result.stats.visited_backward = bwd.nodes.size();
  return finish(SearchStatus::BoundsExhausted);
}

std::string format_result(const SearchResult& r) {
  std::ostringstream os;
  switch (r.status) {
    case SearchStatus::Equivalent:
      os << "status: equivalent\n";
      os << "depth: " << r.witness.size() << "\n";
      os << "witness: " << format_witness(r.witness) << "\n";
      break;
    case SearchStatus::DistinguishedByInvariant:
      os << "status: distinguished\n";
      os << "note: " << r.note << "\n";
      break;
    case SearchStatus::BoundsExhausted:
      os << "status: bounds exhausted\n";
      os << "note: " << r.note << "\n";
      break;
  }
  os << "nodes: " << r.stats.nodes_expanded << "\n";
  return os.str();
}

}  // namespace platcalc
