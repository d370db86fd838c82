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


#include "platcalc/moves.hpp"

#include <sstream>
#include <utility>

#include "platcalc/error.hpp"

namespace platcalc {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(msg);
}

BraidWord move_word(const Move& m, GroupContext ctx) {
  switch (m.kind) {
    case MoveKind::M1: return hilden_word(HildenKind::BraidTwist, 1, ctx);
    case MoveKind::M2: return hilden_word(HildenKind::ElementaryExchange, m.index, ctx);
    case MoveKind::M3: return hilden_word(HildenKind::SlideUnderSecond, 0, ctx);
    case MoveKind::M4: return hilden_word(HildenKind::SlideLongitude, m.index, ctx);
    case MoveKind::M5: return hilden_word(HildenKind::SlideMeridian, m.index, ctx);
    default: break;
  }
  throw Error("not an M1-M5 move");
}

BraidWord multiply(const BraidWord& w, const BraidWord& h, Side side, int direction) {
  const BraidWord g = direction > 0 ? h : invert(h);
  return side == Side::Left ? concat(g, w) : concat(w, g);
}

const char* kind_tag(MoveKind k) {
  switch (k) {
    case MoveKind::M1: return "M1";
    case MoveKind::M2: return "M2";
    case MoveKind::M3: return "M3";
    case MoveKind::M4: return "M4";
    case MoveKind::M5: return "M5";
    case MoveKind::M6: return "M6";
    default: return "";
  }
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const std::string& ctx) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw Error("");
    return v;
  } catch (const std::exception&) {
    throw Error("bad integer '" + s + "' in move '" + ctx + "'");
  }
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

int parse_keyed(const std::string& arg, char key, const std::string& text) {
  require(arg.size() > 2 && arg[0] == key && arg[1] == '=',
          "expected '" + std::string(1, key) + "=' in move '" + text + "'");
  return parse_int(arg.substr(2), text);
}

int parse_sign(const std::string& arg, const std::string& text) {
  if (arg == "+") return 1;
  if (arg == "-") return -1;
  throw Error("expected '+' or '-' in move '" + text + "'");
}

Side parse_side(const std::string& arg, const std::string& text) {
  if (arg == "L") return Side::Left;
  if (arg == "R") return Side::Right;
  throw Error("expected 'L' or 'R' in move '" + text + "'");
}

bool strip_suffix(std::string& s, const std::string& suffix) {
  if (s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
    s.erase(s.size() - suffix.size());
    return true;
  }
  return false;
}

Letter parse_single_letter(const std::string& tok, const std::string& text) {
  require(!tok.empty(), "missing letter in move '" + text + "'");
  Letter l;
  std::size_t pos = 0;
  switch (tok[0]) {
    case 's': l.kind = Kind::Sigma; break;
    case 'a': l.kind = Kind::A; break;
    case 'b': l.kind = Kind::B; break;
    default: throw Error("bad letter '" + tok + "' in move '" + text + "'");
  }
  pos = 1;
  auto caret = tok.find('^');
  l.index = parse_int(tok.substr(pos, caret == std::string::npos ? std::string::npos : caret - pos), text);
  l.sign = 1;
  if (caret != std::string::npos) {
    const std::string e = tok.substr(caret + 1);
    if (e == "-1") l.sign = -1;
    else require(e == "1", "bad exponent in move '" + text + "'");
  }
  return l;
}

}  // namespace

BraidWord hilden_word(HildenKind kind, int index, GroupContext ctx) {
  ctx.validate();
  const int n = ctx.pairs();
  switch (kind) {
    case HildenKind::BraidTwist:
      require(index >= 1 && index <= n, "braid twist index out of range");
      return BraidWord(ctx, {sigma(2 * index - 1)});
    case HildenKind::ElementaryExchange:
      require(index >= 1 && index <= n - 1, "elementary exchange index out of range");
      return BraidWord(ctx, {sigma(2 * index), sigma(2 * index + 1), sigma(2 * index - 1),
                             sigma(2 * index)});
    case HildenKind::SlideUnderSecond:
      require(n >= 2, "slide under the second arc needs at least 4 strands");
      return BraidWord(ctx, {sigma(2), sigma(1), sigma(1), sigma(2)});
    case HildenKind::SlideLongitude:
      require(index >= 1 && index <= ctx.genus, "longitude index out of range");
      return BraidWord(ctx, {gen_a(index), sigma(1, -1), gen_a(index), sigma(1, -1)});
    case HildenKind::SlideMeridian:
      require(index >= 1 && index <= ctx.genus, "meridian index out of range");
      return BraidWord(ctx, {gen_b(index), sigma(1, -1), gen_b(index), sigma(1, -1)});
  }
  throw Error("unknown Hilden generator");
}

Move Move::inverse() const {
  Move m = *this;
  switch (kind) {
    case MoveKind::Relation:
      m.rewrite = rewrite == RewriteDirection::Forward ? RewriteDirection::Backward
                                                       : RewriteDirection::Forward;
      break;
    case MoveKind::FreeCancel:
      // Deleting at the same position restores the word; the inverse of a
      // deletion needs the deleted letter, which the caller has to supply.
      require(direction > 0, "the inverse of a free deletion is not determined by the move");
      m.direction = -1;
      break;
    default:
      m.direction = -direction;
      break;
  }
  return m;
}

Move m_move(MoveKind kind, Side side, int direction, int index) {
  require(kind == MoveKind::M1 || kind == MoveKind::M2 || kind == MoveKind::M3 ||
              kind == MoveKind::M4 || kind == MoveKind::M5,
          "m_move expects M1..M5");
  Move m;
  m.kind = kind;
  m.side = side;
  m.direction = direction;
  m.index = index;
  return m;
}

Move m6_move(int k, int direction) {
  Move m;
  m.kind = MoveKind::M6;
  m.index = k;
  m.direction = direction;
  return m;
}

Move relation_move(std::string relator, std::size_t position, RewriteDirection dir,
                   bool inverted, int rotation, int split) {
  Move m;
  m.kind = MoveKind::Relation;
  m.relator = std::move(relator);
  m.position = position;
  m.rewrite = dir;
  m.inverted = inverted;
  m.rotation = rotation;
  m.split = split;
  return m;
}

Move free_insert(std::size_t position, Letter letter) {
  Move m;
  m.kind = MoveKind::FreeCancel;
  m.position = position;
  m.letter = letter;
  m.direction = 1;
  return m;
}

Move free_delete(std::size_t position) {
  Move m;
  m.kind = MoveKind::FreeCancel;
  m.position = position;
  m.direction = -1;
  return m;
}

Move psl_move(int i, int direction) {
  Move m;
  m.kind = MoveKind::Psl;
  m.index = i;
  m.direction = direction;
  return m;
}

Move psl_star_move(int i, int direction) {
  Move m = psl_move(i, direction);
  m.kind = MoveKind::PslStar;
  return m;
}

std::string format_move(const Move& m) {
  const char* sign = m.direction > 0 ? "+" : "-";
  const char* side = m.side == Side::Left ? "L" : "R";
  switch (m.kind) {
    case MoveKind::M1:
    case MoveKind::M3:
      return std::string(kind_tag(m.kind)) + "(" + side + "," + sign + ")";
    case MoveKind::M2:
      return "M2(i=" + std::to_string(m.index) + "," + side + "," + sign + ")";
    case MoveKind::M4:
    case MoveKind::M5:
      return std::string(kind_tag(m.kind)) + "(j=" + std::to_string(m.index) + "," + side +
             "," + sign + ")";
    case MoveKind::M6:
      return "M6(k=" + std::to_string(m.index) + "," + sign + ")";
    case MoveKind::Relation:
      return "rel:" + m.relator + (m.inverted ? "^-1" : "") +
             (m.split > 0 ? "[" + std::to_string(m.rotation) + "/" + std::to_string(m.split) + "]"
                          : std::string()) +
             "@" +
             std::to_string(m.position) + "," +
             (m.rewrite == RewriteDirection::Forward ? "→" : "←");
    case MoveKind::FreeCancel:
      if (m.direction > 0) {
        return "free(" + format_letters(std::span<const Letter>(&m.letter, 1)) + ")@" +
               std::to_string(m.position);
      }
      return "free@" + std::to_string(m.position);
    case MoveKind::Psl:
    case MoveKind::PslStar:
      return std::string(m.kind == MoveKind::Psl ? "psl" : "psl*") + "(i=" +
             std::to_string(m.index) + ")" + (m.direction > 0 ? "" : "^-1");
  }
  return {};
}

Move parse_move(const std::string& raw) {
  const std::string text = trim(raw);
  require(!text.empty(), "empty move");

  if (text.rfind("rel:", 0) == 0) {
    const auto at = text.rfind('@');
    require(at != std::string::npos, "missing '@' in move '" + text + "'");
    std::string name = text.substr(4, at - 4);
    int rotation = 0;
    int split = 0;
    if (!name.empty() && name.back() == ']') {
      const auto open = name.rfind('[');
      const auto slash = name.find('/', open == std::string::npos ? 0 : open);
      require(open != std::string::npos && slash != std::string::npos,
              "bad cyclic variant in move '" + text + "'");
      rotation = parse_int(name.substr(open + 1, slash - open - 1), text);
      split = parse_int(name.substr(slash + 1, name.size() - slash - 2), text);
      require(split > 0 && rotation >= 0, "bad cyclic variant in move '" + text + "'");
      name.resize(open);
    }
    const bool inverted = strip_suffix(name, "^-1");
    const std::string rest = text.substr(at + 1);
    const auto comma = rest.find(',');
    require(comma != std::string::npos, "missing direction in move '" + text + "'");
    const std::size_t pos = static_cast<std::size_t>(parse_int(rest.substr(0, comma), text));
    const std::string dir = trim(rest.substr(comma + 1));
    RewriteDirection d;
    if (dir == "→" || dir == "->") d = RewriteDirection::Forward;
    else if (dir == "←" || dir == "<-") d = RewriteDirection::Backward;
    else throw Error("bad direction in move '" + text + "'");
    return relation_move(name, pos, d, inverted, rotation, split);
  }
  if (text.rfind("free", 0) == 0) {
    const auto at = text.rfind('@');
    require(at != std::string::npos, "missing '@' in move '" + text + "'");
    const std::size_t pos = static_cast<std::size_t>(parse_int(text.substr(at + 1), text));
    const std::string head = text.substr(0, at);
    if (head == "free") return free_delete(pos);
    require(head.size() > 6 && head[4] == '(' && head.back() == ')',
            "bad free move '" + text + "'");
    return free_insert(pos, parse_single_letter(head.substr(5, head.size() - 6), text));
  }
  if (text.rfind("psl", 0) == 0) {
    std::string body = text;
    const bool inverse = strip_suffix(body, "^-1");
    const bool star = body.rfind("psl*", 0) == 0;
    const std::size_t open = star ? 4 : 3;
    require(body.size() > open + 1 && body[open] == '(' && body.back() == ')',
            "bad plat slide move '" + text + "'");
    const std::string arg = trim(body.substr(open + 1, body.size() - open - 2));
    const int i = arg.rfind("i=", 0) == 0 ? parse_keyed(arg, 'i', text) : parse_int(arg, text);
    return star ? psl_star_move(i, inverse ? -1 : 1) : psl_move(i, inverse ? -1 : 1);
  }
  require(text.size() > 4 && text[0] == 'M' && text[2] == '(' && text.back() == ')',
          "unknown move '" + text + "'");
  const auto args = split_args(text.substr(3, text.size() - 4));
  switch (text[1]) {
    case '1':
    case '3':
      require(args.size() == 2, "bad arguments in move '" + text + "'");
      return m_move(text[1] == '1' ? MoveKind::M1 : MoveKind::M3, parse_side(args[0], text),
                    parse_sign(args[1], text));
    case '2':
    case '4':
    case '5': {
      require(args.size() == 3, "bad arguments in move '" + text + "'");
      const char key = text[1] == '2' ? 'i' : 'j';
      const MoveKind k = text[1] == '2' ? MoveKind::M2
                         : text[1] == '4' ? MoveKind::M4
                                          : MoveKind::M5;
      return m_move(k, parse_side(args[1], text), parse_sign(args[2], text),
                    parse_keyed(args[0], key, text));
    }
    case '6':
      require(args.size() == 2, "bad arguments in move '" + text + "'");
      return m6_move(parse_keyed(args[0], 'k', text), parse_sign(args[1], text));
    default:
      break;
  }
  throw Error("unknown move '" + text + "'");
}

std::string format_witness(const std::vector<Move>& moves) {
  std::string out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i) out += "; ";
    out += format_move(moves[i]);
  }
  return out;
}

std::vector<Move> parse_witness(const std::string& text) {
  std::vector<Move> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (!trim(item).empty()) out.push_back(parse_move(item));
  }
  return out;
}

BraidWord t_map(const BraidWord& w, int k) {
  const GroupContext ctx = w.context();
  require(k >= 1 && k <= ctx.pairs(), "stabilization index k out of range");
  const GroupContext big{ctx.genus, ctx.strands + 2};
  std::vector<Letter> out;
  out.reserve(w.size() + 4);
  for (const Letter& l : w.letters()) {
    if (l.kind != Kind::Sigma || l.index < 2 * k) {
      out.push_back(l);
    } else if (l.index > 2 * k) {
      out.push_back(sigma(l.index + 2, l.sign));
    } else if (l.sign > 0) {
      out.insert(out.end(), {sigma(2 * k), sigma(2 * k + 1), sigma(2 * k + 2),
                             sigma(2 * k + 1, -1), sigma(2 * k, -1)});
    } else {
      out.insert(out.end(), {sigma(2 * k), sigma(2 * k + 1), sigma(2 * k + 2, -1),
                             sigma(2 * k + 1, -1), sigma(2 * k, -1)});
    }
  }
  return BraidWord(big, std::move(out));
}

BraidWord m6_stabilize(const BraidWord& w, int k) {
  BraidWord t = t_map(w, k);
  std::vector<Letter> out(t.letters().begin(), t.letters().end());
  out.push_back(sigma(2 * k));
  return BraidWord(t.context(), std::move(out));
}

BraidWord m6_destabilize(const BraidWord& w, int k) {
  const GroupContext ctx = w.context();
  require(ctx.strands >= 4, "destabilization needs at least 4 strands");
  require(k >= 1 && k <= ctx.pairs() - 1, "stabilization index k out of range");
  const GroupContext small{ctx.genus, ctx.strands - 2};
  auto not_image = [&] {
    return Error("word is not in the image of M6 with k=" + std::to_string(k));
  };

  std::vector<Letter> u(w.letters().begin(), w.letters().end());
  u.push_back(sigma(2 * k, -1));
  free_reduce_in_place(u);

  const int lo = 2 * k;
  std::vector<Letter> out;
  for (std::size_t p = 0; p < u.size();) {
    const Letter l = u[p];
    if (l.kind != Kind::Sigma || l.index < lo) {
      out.push_back(l);
      ++p;
    } else if (l.index >= lo + 3) {
      out.push_back(sigma(l.index - 2, l.sign));
      ++p;
    } else if (l == sigma(lo) && p + 1 < u.size() && u[p + 1] == sigma(lo + 1)) {
      std::size_t q = p + 2;
      if (q >= u.size() || u[q].kind != Kind::Sigma || u[q].index != lo + 2) throw not_image();
      const int s = u[q].sign;
      std::size_t run = 0;
      while (q < u.size() && u[q] == sigma(lo + 2, s)) {
        ++q;
        ++run;
      }
      if (q + 1 >= u.size() || u[q] != sigma(lo + 1, -1) || u[q + 1] != sigma(lo, -1)) {
        throw not_image();
      }
      for (std::size_t r = 0; r < run; ++r) out.push_back(sigma(lo, s));
      p = q + 2;
    } else {
      throw not_image();
    }
  }
  BraidWord beta(small, std::move(out));
  if (!(free_reduce(m6_stabilize(beta, k)) == free_reduce(w))) throw not_image();
  return beta;
}

BraidWord w_word(int m, int n, GroupContext ctx) {
  require(m >= 1 && n >= 1, "plat sum sizes must be positive");
  require(ctx.strands == 2 * (m + n - 1), "context strand count does not match w_{m,n}");
  std::vector<Letter> out;
  for (int i = 0; i <= 2 * m - 3; ++i) {
    for (int j = 0; j <= 2 * n - 3; ++j) out.push_back(sigma(2 * m - i + j));
  }
  return BraidWord(ctx, std::move(out));
}

BraidWord plat_sum(const BraidWord& alpha, const BraidWord& beta) {
  require(alpha.context().genus == beta.context().genus, "plat sum of different genera");
  const int m = alpha.context().pairs();
  const int n = beta.context().pairs();
  const GroupContext ctx{alpha.context().genus, 2 * (m + n - 1)};
  return concat(concat(embed_pad(alpha, ctx.strands), w_word(m, n, ctx)),
                embed_pad(beta, ctx.strands));
}

BraidWord psl(const BraidWord& beta, const ManifoldPresentation& m, int i) {
  require(beta.context().genus == m.genus(), "word and manifold have different genus");
  require(i >= 1 && i <= m.genus(), "plat slide index out of range");
  return plat_sum(m.attaching(i), beta);
}

BraidWord psl_star(const BraidWord& beta, const ManifoldPresentation& m, int i) {
  require(beta.context().genus == m.genus(), "word and manifold have different genus");
  require(i >= 1 && i <= m.genus(), "plat slide index out of range");
  return plat_sum(beta, m.dual(i));
}

BraidWord apply_move(const BraidWord& w, const Move& move, const ManifoldPresentation* manifold) {
  const GroupContext ctx = w.context();
  switch (move.kind) {
    case MoveKind::M1:
    case MoveKind::M2:
    case MoveKind::M3:
    case MoveKind::M4:
    case MoveKind::M5:
      return multiply(w, move_word(move, ctx), move.side, move.direction);
    case MoveKind::M6:
      return move.direction > 0 ? m6_stabilize(w, move.index) : m6_destabilize(w, move.index);
    case MoveKind::Relation: {
      const Relator base = relator_by_name(move.relator, ctx);
      const Relator r =
          cyclic_variant(move.inverted ? inverted_relator(base) : base, move.rotation, move.split);
      return apply_relation(w, r, move.position, move.rewrite);
    }
    case MoveKind::FreeCancel: {
      std::vector<Letter> out(w.letters().begin(), w.letters().end());
      require(move.position <= out.size(), "free move position out of range");
      const auto at = out.begin() + static_cast<std::ptrdiff_t>(move.position);
      if (move.direction > 0) {
        require(ctx.admits(move.letter), "free insertion letter not in the group");
        out.insert(at, {move.letter, move.letter.inverse()});
      } else {
        require(move.position + 1 < out.size() && out[move.position].cancels(out[move.position + 1]),
                "no cancelling pair at position " + std::to_string(move.position));
        out.erase(at, at + 2);
      }
      return BraidWord(ctx, std::move(out));
    }
    case MoveKind::Psl:
    case MoveKind::PslStar: {
      require(manifold != nullptr, "plat slide moves need a manifold");
      require(ctx.genus == manifold->genus(), "word and manifold have different genus");
      require(move.index >= 1 && move.index <= manifold->genus(), "plat slide index out of range");
      const BraidWord& c = move.kind == MoveKind::Psl ? manifold->attaching(move.index)
                                                      : manifold->dual(move.index);
      const BraidWord g = embed_pad(c, ctx.strands);
      if (move.kind == MoveKind::Psl) return concat(move.direction > 0 ? g : invert(g), w);
      return concat(w, move.direction > 0 ? g : invert(g));
    }
  }
  throw Error("unknown move");
}

BraidWord replay(const BraidWord& start, const std::vector<Move>& moves,
                 const ManifoldPresentation* manifold, ReplayMode mode) {
  BraidWord w = mode == ReplayMode::Reducing ? free_reduce(start) : start;
  for (const Move& m : moves) {
    w = apply_move(w, m, manifold);
    if (mode == ReplayMode::Reducing) w = free_reduce(w);
  }
  return w;
}

std::vector<Move> inverse_witness(const std::vector<Move>& moves) {
  std::vector<Move> out;
  out.reserve(moves.size());
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) out.push_back(it->inverse());
  return out;
}

}  // namespace platcalc
