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


// platcalc: command-line access to plat words, closures, moves, manifolds,
// normalization and equivalence search.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "platcalc/error.hpp"
#include "platcalc/invariants.hpp"
#include "platcalc/manifold.hpp"
#include "platcalc/moves.hpp"
#include "platcalc/normalization.hpp"
#include "platcalc/presentation.hpp"
#include "platcalc/search.hpp"
#include "platcalc/word.hpp"

namespace {

using namespace platcalc;

constexpr int kExitEquivalent = 0;
constexpr int kExitError = 1;
constexpr int kExitDistinguished = 2;
constexpr int kExitBounds = 3;
constexpr int kExitUsage = 64;

struct ManifoldOptions {
  std::string file;
  std::vector<int> lens;

  void attach(CLI::App* app) {
    auto* f = app->add_option("--manifold", file, "manifold config file");
    auto* l = app->add_option("--lens", lens, "lens space L(p,q)")->expected(2);
    f->excludes(l);
  }
  bool given() const { return !file.empty() || !lens.empty(); }
  ManifoldPresentation load() const {
    if (!file.empty()) return load_manifold(file);
    if (!lens.empty()) return lens_space(lens[0], lens[1]);
    throw CLI::ValidationError("a manifold is required (--manifold FILE or --lens P Q)");
  }
};

struct WordOptions {
  int genus = 1;
  int strands = 2;

  void attach(CLI::App* app) {
    app->add_option("--genus,-g", genus, "genus of the surface")->check(CLI::NonNegativeNumber);
    app->add_option("--strands,-n", strands, "strand count 2n")->check(CLI::PositiveNumber);
  }
  GroupContext context() const { return {genus, strands}; }
};

void print_report(const BraidWord& w, const std::optional<ManifoldPresentation>& m) {
  const ClosureReport report = closure_report(w);
  std::cout << report.serialize();
  if (!m) return;
  const HomologyReducer reducer(*m);
  std::cout << "h1: " << reducer.group().to_string() << "\n";
  for (const ReducedClass& c : class_in_manifold(report, reducer)) {
    std::cout << "reduced: " << c.to_string() << "\n";
  }
}

void print_word(const BraidWord& w) {
  std::cout << "strands: " << w.context().strands << "\n";
  std::cout << "word: " << format_word(w) << "\n";
}

int run_repl(const BraidWord& start, const std::optional<ManifoldPresentation>& m, std::istream& in) {
  BraidWord cur = start;
  std::vector<Move> applied;
  std::vector<BraidWord> history;
  const ManifoldPresentation* mp = m ? &*m : nullptr;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (line == ":quit" || line == ":q") break;
    if (line == ":show") {
      print_word(cur);
    } else if (line == ":inv") {
      print_report(cur, m);
    } else if (line == ":witness") {
      std::cout << "witness: " << format_witness(applied) << "\n";
    } else if (line == ":undo") {
      if (history.empty()) {
        std::cout << "error: nothing to undo\n";
        continue;
      }
      cur = history.back();
      history.pop_back();
      applied.pop_back();
      print_word(cur);
    } else {
      try {
        const Move mv = parse_move(line);
        BraidWord next = free_reduce(apply_move(cur, mv, mp));
        history.push_back(cur);
        applied.push_back(mv);
        cur = std::move(next);
        print_word(cur);
      } catch (const Error& e) {
        std::cout << "error: " << e.what() << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"platcalc: plat representatives of links in 3-manifolds"};
  app.require_subcommand(1);
  int code = 0;

  WordOptions inv_word;
  ManifoldOptions inv_man;
  std::string inv_text;
  auto* inv = app.add_subcommand("invariants", "closure report of a word");
  inv_word.attach(inv);
  inv_man.attach(inv);
  inv->add_option("word", inv_text, "braid word")->required();
  inv->callback([&] {
    const BraidWord w = parse_word(inv_text, inv_word.context());
    std::optional<ManifoldPresentation> m;
    if (inv_man.given()) m = inv_man.load();
    print_report(w, m);
  });

  WordOptions ap_word;
  ManifoldOptions ap_man;
  std::string ap_text;
  std::vector<std::string> ap_moves;
  bool ap_literal = false;
  auto* ap = app.add_subcommand("apply", "apply serialized moves to a word");
  ap_word.attach(ap);
  ap_man.attach(ap);
  ap->add_flag("--literal", ap_literal, "skip free reduction after each move");
  ap->add_option("word", ap_text, "braid word")->required();
  ap->add_option("moves", ap_moves, "moves, e.g. \"M1(L,+)\" \"psl*(i=1)^-1\"")->required();
  ap->callback([&] {
    const BraidWord w = parse_word(ap_text, ap_word.context());
    std::optional<ManifoldPresentation> m;
    if (ap_man.given()) m = ap_man.load();
    std::vector<Move> moves;
    for (const auto& t : ap_moves) {
      for (const Move& mv : parse_witness(t)) moves.push_back(mv);
    }
    print_word(replay(w, moves, m ? &*m : nullptr,
                      ap_literal ? ReplayMode::Literal : ReplayMode::Reducing));
  });

  int tb_p = 0;
  int tb_q = 0;
  auto* tb = app.add_subcommand("torus-braid", "2-strand braid of the (p,q) torus curve");
  tb->add_option("p", tb_p)->required();
  tb->add_option("q", tb_q)->required();
  tb->callback([&] { std::cout << format_word(torus_braid(tb_p, tb_q)) << "\n"; });

  int ps_genus = 1;
  int ps_sa = 2;
  int ps_sb = 2;
  std::string ps_a;
  std::string ps_b;
  auto* ps = app.add_subcommand("plat-sum", "plat connected sum of two words");
  ps->add_option("--genus,-g", ps_genus)->check(CLI::NonNegativeNumber);
  ps->add_option("--strands-a", ps_sa, "strand count of the first word");
  ps->add_option("--strands-b", ps_sb, "strand count of the second word");
  ps->add_option("alpha", ps_a)->required();
  ps->add_option("beta", ps_b)->required();
  ps->callback([&] {
    print_word(plat_sum(parse_word(ps_a, {ps_genus, ps_sa}), parse_word(ps_b, {ps_genus, ps_sb})));
  });

  WordOptions nz_word;
  ManifoldOptions nz_man;
  std::string nz_text;
  bool nz_remove_b = false;
  bool nz_collapse = false;
  bool nz_witness = false;
  std::size_t nz_shorten = 0;
  std::size_t nz_budget = NormalizeConfig{}.node_budget;
  auto* nz = app.add_subcommand("normalize", "remove b-letters, collapse over S^3, or shorten");
  nz_word.attach(nz);
  nz_man.attach(nz);
  auto* f_rb = nz->add_flag("--remove-b", nz_remove_b, "remove every b-letter (default)");
  auto* f_cs = nz->add_flag("--collapse-s3", nz_collapse, "reduce to a classical plat over S^3");
  f_rb->excludes(f_cs);
  nz->add_flag("--emit-witness", nz_witness, "print the witness move sequence");
  nz->add_option("--shorten", nz_shorten, "only shorten, with this many rewrites");
  nz->add_option("--budget", nz_budget, "nodes per eliminated letter")->check(CLI::PositiveNumber);
  nz->add_option("word", nz_text, "braid word")->required();
  nz->callback([&] {
    const BraidWord w = parse_word(nz_text, nz_word.context());
    if (nz_shorten > 0) {
      print_word(shorten(w, nz_shorten));
      return;
    }
    NormalizeConfig cfg;
    cfg.node_budget = nz_budget;
    Normalized out;
    if (nz_collapse) {
      out = remove_a_s3(w, cfg);
    } else {
      const ManifoldPresentation m = nz_man.given() ? nz_man.load() : lens_space(1, 0);
      out = remove_b(w, m, cfg);
    }
    print_word(out.word);
    if (nz_witness) std::cout << "witness: " << format_witness(out.witness) << "\n";
  });

  int cr_genus = 1;
  int cr_strands = 2;
  auto* cr = app.add_subcommand("check-relations", "verify that every relator closes trivially");
  cr->add_option("--genus,-g", cr_genus)->required()->check(CLI::NonNegativeNumber);
  cr->add_option("--strands,-n", cr_strands)->required();
  cr->callback([&] {
    int bad = 0;
    const auto catalog = relator_catalog({cr_genus, cr_strands});
    for (const Relator& r : catalog) {
      const RelatorCheck c = check_relator_trivial(r);
      std::cout << r.name << ": " << (c.ok() ? "ok" : "FAIL") << "\n";
      if (!c.ok()) ++bad;
    }
    std::cout << "relators: " << catalog.size() << ", failures: " << bad << "\n";
    if (bad > 0) code = kExitError;
  });

  ManifoldOptions h1_man;
  auto* h1 = app.add_subcommand("h1", "first homology of a manifold");
  h1_man.attach(h1);
  h1->callback([&] { std::cout << h1_of_manifold(h1_man.load()).to_string() << "\n"; });

  ManifoldOptions se_man;
  int se_sa = 0;
  int se_sb = 0;
  int se_strands = 2;
  SearchConfig se_cfg;
  std::string se_a;
  std::string se_b;
  auto* se = app.add_subcommand("search-equiv", "bounded search for a move sequence between two words");
  se_man.attach(se);
  se->add_option("--strands,-n", se_strands, "strand count of both words");
  se->add_option("--strands-a", se_sa, "strand count of the first word");
  se->add_option("--strands-b", se_sb, "strand count of the second word");
  se->add_option("--max-depth", se_cfg.max_depth)->check(CLI::NonNegativeNumber);
  se->add_option("--max-strands", se_cfg.max_strands);
  se->add_option("--max-length", se_cfg.max_word_length);
  se->add_option("--budget", se_cfg.node_budget);
  se->add_option("--threads", se_cfg.threads)->check(CLI::PositiveNumber);
  se->add_option("wordA", se_a)->required();
  se->add_option("wordB", se_b)->required();
  se->callback([&] {
    const ManifoldPresentation m = se_man.load();
    const BraidWord a = parse_word(se_a, {m.genus(), se_sa > 0 ? se_sa : se_strands});
    const BraidWord b = parse_word(se_b, {m.genus(), se_sb > 0 ? se_sb : se_strands});
    const SearchResult r = search_equivalent(a, b, m, se_cfg);
    std::cout << format_result(r);
    code = r.status == SearchStatus::Equivalent         ? kExitEquivalent
           : r.status == SearchStatus::DistinguishedByInvariant ? kExitDistinguished
                                                             : kExitBounds;
  });

  WordOptions rp_word;
  ManifoldOptions rp_man;
  std::string rp_text;
  auto* rp = app.add_subcommand("repl", "apply moves read line by line from standard input");
  rp_word.attach(rp);
  rp_man.attach(rp);
  rp->add_option("word", rp_text, "starting word");
  rp->callback([&] {
    std::optional<ManifoldPresentation> m;
    if (rp_man.given()) m = rp_man.load();
    const BraidWord w = parse_word(rp_text, rp_word.context());
    print_word(w);
    code = run_repl(w, m, std::cin);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return code;
}
