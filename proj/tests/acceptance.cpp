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


// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "platcalc/error.hpp"
#include "platcalc/invariants.hpp"
#include "platcalc/manifold.hpp"
#include "platcalc/moves.hpp"
#include "platcalc/normalization.hpp"
#include "platcalc/presentation.hpp"
#include "platcalc/search.hpp"
#include "platcalc/smith.hpp"

using namespace platcalc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

BraidWord random_word(std::mt19937& rng, GroupContext ctx, int max_len) {
  const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  const int sigmas = ctx.strands - 1;
  const int choices = sigmas + 2 * ctx.genus;
  std::vector<Letter> out;
  for (int i = 0; i < len; ++i) {
    const int c = std::uniform_int_distribution<int>(0, choices - 1)(rng);
    const int sign = rng() % 2 ? 1 : -1;
    if (c < sigmas) out.push_back(sigma(c + 1, sign));
    else if (c < sigmas + ctx.genus) out.push_back(gen_a(c - sigmas + 1, sign));
    else out.push_back(gen_b(c - sigmas - ctx.genus + 1, sign));
  }
  return BraidWord(ctx, std::move(out));
}

ManifoldPresentation genus_two_manifold() {
  const GroupContext c{2, 2};
  return ManifoldPresentation(2, {parse_word("b1^-1 a1^3", c), parse_word("b2^-1 a2^3 b2^-1 a2^2", c)}, {},
                              "L(3,1) # L(5,2)");
}

ManifoldPresentation manifold_for(int genus, std::mt19937& rng) {
  static const std::pair<int, int> lens[] = {{1, 0}, {0, 1}, {2, 1}, {3, 1}, {5, 2}, {7, 3}};
  if (genus == 0) return ManifoldPresentation(0, {}, {}, "S^3");
  if (genus == 2) return genus_two_manifold();
  const auto [p, q] = lens[rng() % std::size(lens)];
  return lens_space(p, q);
}

bool same_invariants(const BraidWord& a, const BraidWord& b, const HomologyReducer& reducer) {
  const ClosureReport ra = closure_report(a);
  const ClosureReport rb = closure_report(b);
  return ra.component_count() == rb.component_count() &&
         class_in_manifold(ra, reducer) == class_in_manifold(rb, reducer);
}

Outcome torus_braids() {
  Outcome o;
  if (format_word(torus_braid(5, 2)) != "b1^-1 a1^3 b1^-1 a1^2") return {false, "alpha_{5,2} mismatch"};
  int checked = 0;
  for (int p = 2; p <= 30; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const BraidWord w = torus_braid(p, q);
      ++checked;
      if (winding_table(w).total() != ClassVector{p, -q} || component_count(w) != 1) {
        return {false, "(" + std::to_string(p) + "," + std::to_string(q) + ") fails"};
      }
    }
  }
  o.detail = std::to_string(checked) + " coprime pairs";
  return o;
}

Outcome lens_homology() {
  int checked = 0;
  for (int p = 2; p <= 30; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const HomologyGroup h = h1_of_manifold(lens_space(p, q));
      ++checked;
      if (h.free_rank != 0 || h.torsion_order() != p) {
        return {false, "L(" + std::to_string(p) + "," + std::to_string(q) + ") = " + h.to_string()};
      }
    }
  }
  const HomologyGroup s2s1 = h1_of_manifold(lens_space(0, 1));
  const HomologyGroup s3 = h1_of_manifold(lens_space(1, 0));
  if (s2s1.free_rank != 1 || !s2s1.torsion.empty()) return {false, "L(0,1) = " + s2s1.to_string()};
  if (s3.free_rank != 0 || !s3.torsion.empty()) return {false, "L(1,0) = " + s3.to_string()};
  return {true, std::to_string(checked) + " lens spaces plus L(0,1), L(1,0)"};
}

Outcome relators_trivial() {
  int checked = 0;
  for (int g = 0; g <= 3; ++g) {
    for (int n = 1; n <= 4; ++n) {
      for (const Relator& r : relator_catalog({g, 2 * n})) {
        ++checked;
        if (!check_relator_trivial(r).ok()) return {false, r.name + " in genus " + std::to_string(g)};
      }
    }
  }
  return {true, std::to_string(checked) + " relator instances"};
}

Outcome move_invariance() {
  std::mt19937 rng(4);
  SearchConfig cfg;
  cfg.max_strands = 8;
  cfg.max_word_length = 64;
  std::size_t moves = 0;
  const int words = 1000;
  for (int t = 0; t < words; ++t) {
    const int g = t % 3;
    const int n = 1 + static_cast<int>(rng() % 3);
    const ManifoldPresentation m = manifold_for(g, rng);
    const HomologyReducer reducer(m);
    const BraidWord w = free_reduce(random_word(rng, {g, 2 * n}, 20));
    const ClosureReport base = closure_report(w);
    for (const Successor& s : neighbors(w, m, cfg)) {
      ++moves;
      if (!same_invariants(w, s.word, reducer)) {
        return {false, format_move(s.move) + " on " + format_word(w)};
      }
      const MoveKind k = s.move.kind;
      const bool m_move = k == MoveKind::M1 || k == MoveKind::M2 || k == MoveKind::M3 ||
                          k == MoveKind::M4 || k == MoveKind::M5 || k == MoveKind::M6;
      if (m_move && closure_report(s.word).class_pairs() != base.class_pairs()) {
        return {false, "raw classes change under " + format_move(s.move) + " on " + format_word(w)};
      }
    }
  }
  return {true, std::to_string(words) + " words, " + std::to_string(moves) + " moves"};
}

Outcome plat_sums() {
  std::mt19937 rng(5);
  const int pairs = 500;
  for (int t = 0; t < pairs; ++t) {
    const int g = static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 3);
    const BraidWord a = random_word(rng, {g, 2 * m}, 12);
    const BraidWord b = random_word(rng, {g, 2 * n}, 12);
    if (component_count(plat_sum(a, b)) + 1 != component_count(a) + component_count(b)) {
      return {false, format_word(a) + " # " + format_word(b)};
    }
  }
  return {true, std::to_string(pairs) + " pairs"};
}

std::vector<BraidWord> genus_one_corpus() {
  std::mt19937 rng(6);
  std::vector<BraidWord> out;
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    out.push_back(random_word(rng, {1, 2 * n}, 20));
  }
  return out;
}

Outcome b_removal() {
  static const std::pair<int, int> lens[] = {{1, 0}, {0, 1}, {2, 1}, {3, 1}, {5, 2}, {7, 3}};
  int ok = 0;
  int failed = 0;
  std::string first;
  const auto corpus = genus_one_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto [p, q] = lens[i % std::size(lens)];
    const ManifoldPresentation m = lens_space(p, q);
    const HomologyReducer reducer(m);
    std::string why;
    try {
      const Normalized r = remove_b(corpus[i], m);
      if (r.word.count(Kind::B) != 0) why = "b-letters remain";
      else if (!(replay(corpus[i], r.witness, &m, ReplayMode::Reducing) == r.word)) why = "witness does not replay";
      else if (!same_invariants(corpus[i], r.word, reducer)) why = "invariants changed";
    } catch (const Error& e) {
      why = e.what();
    }
    if (why.empty()) {
      ++ok;
    } else {
      ++failed;
      if (first.empty()) first = format_word(corpus[i]) + ": " + why;
    }
  }
  Outcome o{failed == 0, std::to_string(ok) + "/" + std::to_string(corpus.size()) + " words"};
  if (!first.empty()) o.detail += "; first failure " + first;
  return o;
}

Outcome s3_collapse() {
  const ManifoldPresentation s3 = lens_space(1, 0);
  const HomologyReducer reducer(s3);
  int ok = 0;
  std::string first;
  const auto corpus = genus_one_corpus();
  for (const BraidWord& w : corpus) {
    std::string why;
    try {
      const Normalized nb = remove_b(w, s3);
      const Normalized r = remove_a_s3(nb.word);
      std::vector<Move> all = nb.witness;
      all.insert(all.end(), r.witness.begin(), r.witness.end());
      if (r.word.count(Kind::A) + r.word.count(Kind::B) != 0) why = "handle letters remain";
      else if (!(replay(w, all, &s3, ReplayMode::Reducing) == r.word)) why = "witness does not replay";
      else if (!same_invariants(w, r.word, reducer)) why = "invariants changed";
    } catch (const Error& e) {
      why = e.what();
    }
    if (why.empty()) ++ok;
    else if (first.empty()) first = format_word(w) + ": " + why;
  }
  Outcome o{ok == static_cast<int>(corpus.size()), std::to_string(ok) + "/" + std::to_string(corpus.size()) + " words"};
  if (!first.empty()) o.detail += "; first failure " + first;
  return o;
}

Outcome search_sanity() {
  std::mt19937 rng(8);
  SearchConfig cfg;
  cfg.max_depth = 2;
  cfg.max_strands = 6;
  cfg.max_word_length = 40;
  cfg.node_budget = 2000000;
  const int pairs = 100;
  for (int t = 0; t < pairs; ++t) {
    const ManifoldPresentation m = manifold_for(1, rng);
    const int n = 1 + static_cast<int>(rng() % 2);
    const BraidWord b = free_reduce(random_word(rng, {1, 2 * n}, 8));
    const auto next = neighbors(b, m, cfg);
    const Successor& s = next[rng() % next.size()];
    const SearchResult r = search_equivalent(b, s.word, m, cfg);
    if (r.status != SearchStatus::Equivalent || r.witness.size() > 2) {
      return {false, format_word(b) + " via " + format_move(s.move) + ": " + r.note};
    }
    if (!(replay(b, r.witness, &m, ReplayMode::Reducing) == s.word)) return {false, "witness does not replay"};
    const SearchResult self = search_equivalent(b, b, m, cfg);
    if (self.status != SearchStatus::Equivalent || !self.witness.empty()) return {false, "reflexive pair"};
  }
  const SearchResult a1 = search_equivalent(parse_word("a1", {1, 2}), BraidWord({1, 2}, {}), lens_space(1, 0), cfg);
  if (a1.status != SearchStatus::Equivalent || a1.witness.size() != 1) return {false, "a1 and the empty word"};
  return {true, std::to_string(pairs) + " pairs, a1 ~ empty via " + format_witness(a1.witness)};
}

std::vector<std::int64_t> oracle_invariants(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const std::int64_t g = std::gcd(std::gcd(a, b), std::gcd(c, d));
  const std::int64_t det = a * d - b * c;
  if (g == 0) return {0, 0};
  if (det == 0) return {g, 0};
  return {g, (det < 0 ? -det : det) / g};
}

Outcome smith_oracle() {
  int checked = 0;
  for (int a = -5; a <= 5; ++a) {
    for (int b = -5; b <= 5; ++b) {
      for (int c = -5; c <= 5; ++c) {
        for (int d = -5; d <= 5; ++d) {
          const IntMatrix m(2, 2, {a, b, c, d});
          const SmithForm s = smith_normal_form(m);
          ++checked;
          if (s.diagonal() != oracle_invariants(a, b, c, d) || !(s.U * m * s.V == s.D)) {
            return {false, "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) +
                               "," + std::to_string(d) + "]]"};
          }
        }
      }
    }
  }
  return {true, std::to_string(checked) + " matrices"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "torus braid fidelity", 1, torus_braids},
      {2, "lens space homology", 1, lens_homology},
      {3, "relators close trivially", 1, relators_trivial},
      {4, "move invariance", 30, move_invariance},
      {5, "plat sum components", 5, plat_sums},
      {6, "b-generator removal", 60, b_removal},
      {7, "collapse over S^3", 60, s3_collapse},
      {8, "search sanity", 60, search_sanity},
      {9, "Smith normal form oracle", 10, smith_oracle},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %d %-26s %s  %.2fs  %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
