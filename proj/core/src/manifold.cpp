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

#include "platcalc/manifold.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "platcalc/error.hpp"

namespace platcalc {

ManifoldPresentation::ManifoldPresentation(int genus, std::vector<BraidWord> attaching,
                                           std::vector<BraidWord> dual, std::string label)
    : genus_(genus), attaching_(std::move(attaching)), dual_(std::move(dual)),
      label_(std::move(label)) {
  if (genus_ < 0) throw Error("genus must be non-negative");
  if (dual_.empty()) {
    for (int i = 1; i <= genus_; ++i) dual_.push_back(BraidWord({genus_, 2}, {gen_b(i)}));
  }
  if (attaching_.size() != static_cast<std::size_t>(genus_) ||
      dual_.size() != static_cast<std::size_t>(genus_)) {
    throw Error("a genus " + std::to_string(genus_) +
                " manifold needs exactly that many attaching and dual words");
  }
  for (const auto* list : {&attaching_, &dual_}) {
    for (const auto& w : *list) {
      if (!(w.context() == GroupContext{genus_, 2})) {
        throw Error("attaching words must live in B_{g,2}");
      }
      if (component_count(w) != 1) throw Error("attaching word must close to a knot");
    }
  }
}

bool ManifoldPresentation::has_standard_duals() const {
  for (int i = 1; i <= genus_; ++i) {
    if (!(dual(i) == BraidWord({genus_, 2}, {gen_b(i)}))) return false;
  }
  return true;
}

std::int64_t HomologyGroup::torsion_order() const {
  std::int64_t p = 1;
  for (auto t : torsion) p *= t;
  return p;
}

std::string HomologyGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (auto t : torsion) parts.push_back("Z/" + std::to_string(t));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

BraidWord torus_braid(int p, int q) {
  const GroupContext ctx{1, 2};
  if (p == 1 && q == 0) return BraidWord(ctx, {gen_a(1)});
  if (p == 0 && q == 1) return BraidWord(ctx, {gen_b(1)});
  if (!(0 < q && q < p)) {
    throw Error("unsupported pair (" + std::to_string(p) + "," + std::to_string(q) +
                "): need 0 < q < p, or (1,0), or (0,1)");
  }
  if (std::gcd(p, q) != 1) {
    throw Error("(" + std::to_string(p) + "," + std::to_string(q) + ") not coprime");
  }
  const int r = p % q;
  const int lo = p / q;
  const int hi = lo + (r != 0 ? 1 : 0);
  std::vector<Letter> letters;
  auto block = [&](int count, int power) {
    for (int i = 0; i < count; ++i) {
      letters.push_back(gen_b(1, -1));
      letters.insert(letters.end(), static_cast<std::size_t>(power), gen_a(1));
    }
  };
  block(r, hi);
  block(q - r, lo);
  return BraidWord(ctx, std::move(letters));
}

ManifoldPresentation lens_space(int p, int q) {
  std::string label = "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (p == 0 && q == 1) label += " = S^2 x S^1";
  if (p == 1 && q == 0) label += " = S^3";
  return ManifoldPresentation(1, {torus_braid(p, q)}, {}, std::move(label));
}

ManifoldPresentation parse_manifold(std::istream& in) {
  std::optional<int> genus;
  std::map<int, std::string> c_text;
  std::map<int, std::string> cstar_text;
  std::string label;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw Error("manifold config line " + std::to_string(lineno) + ": expected 'key: value'");
    }
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    auto index_of = [&](std::size_t prefix) {
      const std::string digits = key.substr(prefix);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
        throw Error("manifold config line " + std::to_string(lineno) + ": bad key '" + key + "'");
      }
      return std::stoi(digits);
    };
    if (key == "genus") {
      genus = std::stoi(value);
    } else if (key == "label") {
      label = value;
    } else if (key.rfind("cstar", 0) == 0) {
      cstar_text[index_of(5)] = value;
    } else if (key.rfind("c", 0) == 0) {
      c_text[index_of(1)] = value;
    } else {
      throw Error("manifold config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!genus) throw Error("manifold config is missing 'genus'");
  const GroupContext ctx{*genus, 2};
  std::vector<BraidWord> attaching;
  std::vector<BraidWord> dual;
  for (int i = 1; i <= *genus; ++i) {
    auto it = c_text.find(i);
    if (it == c_text.end()) throw Error("manifold config is missing c" + std::to_string(i));
    attaching.push_back(parse_word(it->second, ctx));
    auto st = cstar_text.find(i);
    dual.push_back(st == cstar_text.end() ? BraidWord(ctx, {gen_b(i)})
                                          : parse_word(st->second, ctx));
  }
  for (const auto& [i, _] : c_text)
    if (i < 1 || i > *genus) throw Error("c" + std::to_string(i) + " exceeds the genus");
  for (const auto& [i, _] : cstar_text)
    if (i < 1 || i > *genus) throw Error("cstar" + std::to_string(i) + " exceeds the genus");
  return ManifoldPresentation(*genus, std::move(attaching), std::move(dual), std::move(label));
}

ManifoldPresentation load_manifold(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifold file '" + path + "'");
  return parse_manifold(in);
}

IntMatrix relation_matrix(const ManifoldPresentation& m) {
  const int g = m.genus();
  IntMatrix a(2 * g, 2 * g);
  int row = 0;
  for (const auto* list : {&m.attaching_words(), &m.dual_words()}) {
    for (const auto& w : *list) {
      const ClassVector v = closure_report(w).class_pairs().front();
      for (int c = 0; c < 2 * g; ++c) a(row, c) = v[static_cast<std::size_t>(c)];
      ++row;
    }
  }
  return a;
}

HomologyGroup h1_of_manifold(const ManifoldPresentation& m) {
  return HomologyReducer(m).group();
}

HomologyReducer::HomologyReducer(const ManifoldPresentation& m) : genus_(m.genus()) {
  const SmithForm f = smith_normal_form(relation_matrix(m));
  transform_ = f.V;
  diagonal_ = f.diagonal();
  for (auto d : diagonal_) {
    if (d == 0) ++group_.free_rank;
    if (d > 1) group_.torsion.push_back(d);
  }
}

std::vector<std::int64_t> HomologyReducer::reduce(const ClassVector& v) const {
  std::vector<std::int64_t> out;
  const int n = 2 * genus_;
  for (int j = 0; j < n; ++j) {
    const std::int64_t d = diagonal_[static_cast<std::size_t>(j)];
    if (d == 1) continue;
    std::int64_t y = 0;
    for (int i = 0; i < n; ++i) y += v[static_cast<std::size_t>(i)] * transform_(i, j);
    if (d > 1) y = ((y % d) + d) % d;
    out.push_back(y);
  }
  return out;
}

ReducedClass HomologyReducer::reduce_pair(const ClassVector& v) const {
  ClassVector neg(v);
  for (auto& x : neg) x = -x;
  auto a = reduce(v);
  auto b = reduce(neg);
  ReducedClass out;
  out.coords = std::min(a, b);
  for (auto d : diagonal_)
    if (d != 1) out.moduli.push_back(d);
  return out;
}

std::string ReducedClass::to_string() const {
  if (coords.empty()) return "0";
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(coords[i]);
    if (moduli[i] > 1) out += " mod " + std::to_string(moduli[i]);
  }
  return out + ")";
}

std::vector<ReducedClass> class_in_manifold(const ClosureReport& report,
                                            const HomologyReducer& reducer) {
  std::vector<ReducedClass> out;
  for (const auto& c : report.components) out.push_back(reducer.reduce_pair(c.traversal_class));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ReducedClass> class_in_manifold(const ClosureReport& report,
                                            const ManifoldPresentation& m) {
  if (report.context.genus != m.genus()) {
    throw Error("genus mismatch between closure and manifold");
  }
  return class_in_manifold(report, HomologyReducer(m));
}

}  // namespace platcalc
