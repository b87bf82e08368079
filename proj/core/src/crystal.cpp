#include "cometq/crystal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cometq {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

void check_shape(const Steep& b, int r) {
  if ((int)b.p0.size() != r) bad("steep sequence has wrong color count");
  for (const SteepBlock& blk : b.blocks) {
    if ((int)blk.p.size() != r) bad("steep block has wrong color count");
    if (blk.c < 1) bad("block size must be >= 1");
  }
}

struct Token {
  Gen g{false, 1};
  int count = 1;
};

// "j", "j2", "j^3", "j2^3" (reals, optional exponent), "(i,4)" (imaginary).
Token parse_token(const std::string& tok, int r) {
  if (tok.empty()) bad("empty token");
  Token t;
  if (tok[0] == '(') {
    const size_t close = tok.find(')');
    if (close == std::string::npos || tok.compare(0, 3, "(i,") != 0)
      bad("malformed imaginary token '" + tok + "'");
    const std::string num = tok.substr(3, close - 3);
    if (num.empty() ||
        !std::all_of(num.begin(), num.end(),
                     [](unsigned char ch) { return std::isdigit(ch) != 0; }))
      bad("malformed imaginary token '" + tok + "'");
    if (close + 1 != tok.size()) bad("trailing characters in '" + tok + "'");
    const int c = std::stoi(num);
    if (c < 1) bad("loop size must be >= 1 in '" + tok + "'");
    t.g = Gen::loop(c);
    return t;
  }
  if (tok[0] != 'j') bad("unknown token '" + tok + "'");
  size_t pos = 1;
  const size_t dstart = pos;
  while (pos < tok.size() && std::isdigit((unsigned char)tok[pos]) != 0) ++pos;
  const int color = pos > dstart ? std::stoi(tok.substr(dstart, pos - dstart)) : 1;
  if (color < 1 || color > r) bad("real color out of range in '" + tok + "'");
  t.g = Gen::real(color);
  if (pos < tok.size()) {
    if (tok[pos] != '^') bad("unknown token '" + tok + "'");
    const std::string exp = tok.substr(pos + 1);
    if (exp.empty() ||
        !std::all_of(exp.begin(), exp.end(),
                     [](unsigned char ch) { return std::isdigit(ch) != 0; }))
      bad("malformed exponent in '" + tok + "'");
    t.count = std::stoi(exp);
    if (t.count < 1) bad("exponent must be >= 1 in '" + tok + "'");
  }
  return t;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Groups a word into the leading real block and per-imaginary-entry blocks
// without applying any rewrite.
Steep parse_blocks(const OpWord& w, int r) {
  Steep s;
  s.p0.assign(r, 0);
  for (const Gen& g : w) {
    if (g.imag) {
      if (g.a < 1) bad("loop size must be >= 1");
      s.blocks.push_back(SteepBlock{g.a, std::vector<int>(r, 0)});
    } else {
      if (g.a < 1 || g.a > r) bad("real color out of range");
      std::vector<int>& dst = s.blocks.empty() ? s.p0 : s.blocks.back().p;
      dst[g.a - 1] += 1;
    }
  }
  return s;
}

// Real multiplicities of one chunk as text; *any reports whether the chunk
// is nonempty.
std::string real_chunk(const std::vector<int>& p, int r, bool* any) {
  std::string out;
  *any = false;
  for (int k = 0; k < r; ++k) {
    if (p[k] == 0) continue;
    if (*any) out += ' ';
    *any = true;
    out += Gen::real(k + 1).str(r);
    if (p[k] > 1) out += '^' + std::to_string(p[k]);
  }
  return out;
}

void compositions_rec(int rem, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (int c = 1; c <= rem; ++c) {
    cur.push_back(c);
    compositions_rec(rem - c, cur, out);
    cur.pop_back();
  }
}

// All ways to fill the capped slots with at most `budget` items in total;
// the leftover budget belongs to the unconstrained leading block.
void place_rec(const std::vector<int>& caps, size_t idx, int budget,
               std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (idx == caps.size()) {
    out.push_back(cur);
    return;
  }
  const int hi = std::min(caps[idx], budget);
  for (int x = 0; x <= hi; ++x) {
    cur[idx] = x;
    place_rec(caps, idx + 1, budget - x, cur, out);
  }
  cur[idx] = 0;
}

}  // namespace

Degree opword_degree(const OpWord& w, int r) {
  Degree d{0, std::vector<int>(r, 0)};
  for (const Gen& g : w) d = d + g.weight(r);
  return d;
}

std::string opword_str(const OpWord& w, int r) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += w[k].str(r);
  }
  return out;
}

OpWord parse_opword(const std::string& s, int r) {
  const std::vector<std::string> toks = split_ws(s);
  OpWord w;
  if (toks.size() == 1 && toks[0] == "1") return w;
  for (const std::string& tok : toks) {
    const Token t = parse_token(tok, r);
    for (int q = 0; q < t.count; ++q) w.push_back(t.g);
  }
  return w;
}

Degree steep_degree(const Steep& b, int r) {
  check_shape(b, r);
  Degree d{0, std::vector<int>(r, 0)};
  for (int k = 0; k < r; ++k) d.m[k] += b.p0[k];
  for (const SteepBlock& blk : b.blocks) {
    d.n += blk.c;
    for (int k = 0; k < r; ++k) d.m[k] += blk.p[k];
  }
  return d;
}

bool is_steep(const OpWord& w, int r) {
  const Steep s = parse_blocks(w, r);
  for (const SteepBlock& blk : s.blocks)
    for (int k = 0; k < r; ++k)
      if (blk.p[k] > blk.c) return false;
  return true;
}

OpWord steep_word(const Steep& b, int r) {
  check_shape(b, r);
  OpWord w;
  auto push_reals = [&](const std::vector<int>& p) {
    for (int k = 0; k < r; ++k)
      for (int q = 0; q < p[k]; ++q) w.push_back(Gen::real(k + 1));
  };
  push_reals(b.p0);
  for (const SteepBlock& blk : b.blocks) {
    w.push_back(Gen::loop(blk.c));
    push_reals(blk.p);
  }
  return w;
}

Steep normalize(const OpWord& w, int r) {
  Steep s = parse_blocks(w, r);
  // Each block keeps at most c reals of every color; the excess moves past
  // the block's imaginary entry into the previous block. Excess only flows
  // leftward, so one right-to-left pass reaches the fixed point.
  for (size_t m = s.blocks.size(); m-- > 0;) {
    SteepBlock& blk = s.blocks[m];
    std::vector<int>& dst = (m == 0) ? s.p0 : s.blocks[m - 1].p;
    for (int k = 0; k < r; ++k) {
      const int excess = blk.p[k] - blk.c;
      if (excess > 0) {
        blk.p[k] = blk.c;
        dst[k] += excess;
      }
    }
  }
  return s;
}

Steep apply_f(const Gen& g, const Steep& b, int r) {
  check_shape(b, r);
  if (!g.imag) {
    if (g.a < 1 || g.a > r) bad("real color out of range");
    Steep out = b;
    out.p0[g.a - 1] += 1;
    return out;
  }
  OpWord w = steep_word(b, r);
  w.insert(w.begin(), g);
  return normalize(w, r);
}

std::optional<Steep> apply_e(const Gen& g, const Steep& b, int r) {
  check_shape(b, r);
  const Degree d = steep_degree(b, r);
  const Degree wt = g.weight(r);
  if (wt.n > d.n) return std::nullopt;
  for (int k = 0; k < r; ++k)
    if (wt.m[k] > d.m[k]) return std::nullopt;
  const Degree low = d - wt;
  std::optional<Steep> found;
  for (const Steep& x : enumerate_steep(low, r)) {
    if (apply_f(g, x, r) == b) {
      if (found)
        throw std::logic_error("operator has two preimages at " + steep_str(b, r));
      found = x;
    }
  }
  return found;
}

std::optional<Steep> apply_e_real_fast(int color, const Steep& b) {
  if (color < 1 || color > (int)b.p0.size()) bad("real color out of range");
  if (b.p0[color - 1] == 0) return std::nullopt;
  Steep out = b;
  out.p0[color - 1] -= 1;
  return out;
}

long epsilon_real(int color, const Steep& b) {
  if (color < 1 || color > (int)b.p0.size()) bad("real color out of range");
  return b.p0[color - 1];
}

std::vector<Steep> enumerate_steep(const Degree& d, int r) {
  if ((int)d.m.size() != r) bad("degree has wrong color count");
  std::vector<Steep> out;
  if (d.n < 0) return out;
  for (int k = 0; k < r; ++k)
    if (d.m[k] < 0) return out;

  std::vector<std::vector<int>> comps;
  {
    std::vector<int> cur;
    compositions_rec(d.n, cur, comps);
  }

  for (const std::vector<int>& parts : comps) {
    const size_t B = parts.size();
    std::vector<std::vector<std::vector<int>>> choices(r);
    for (int k = 0; k < r; ++k) {
      std::vector<int> cur(B, 0);
      place_rec(parts, 0, d.m[k], cur, choices[k]);
    }
    std::vector<size_t> pick(r, 0);
    while (true) {
      Steep s;
      s.p0.assign(r, 0);
      s.blocks.resize(B);
      for (size_t m = 0; m < B; ++m) {
        s.blocks[m].c = parts[m];
        s.blocks[m].p.assign(r, 0);
      }
      for (int k = 0; k < r; ++k) {
        const std::vector<int>& pl = choices[k][pick[k]];
        int used = 0;
        for (size_t m = 0; m < B; ++m) {
          s.blocks[m].p[k] = pl[m];
          used += pl[m];
        }
        s.p0[k] = d.m[k] - used;
      }
      out.push_back(std::move(s));
      int k = 0;
      while (k < r) {
        if (++pick[k] < choices[k].size()) break;
        pick[k] = 0;
        ++k;
      }
      if (k == r) break;
    }
  }

  std::sort(out.begin(), out.end(), [&](const Steep& a, const Steep& b2) {
    if (a.blocks.size() != b2.blocks.size())
      return a.blocks.size() < b2.blocks.size();
    return steep_str(a, r) < steep_str(b2, r);
  });
  return out;
}

std::string steep_str(const Steep& b, int r) {
  check_shape(b, r);
  std::vector<std::string> chunks;
  {
    bool any = false;
    std::string lead = real_chunk(b.p0, r, &any);
    if (any) chunks.push_back(std::move(lead));
  }
  for (const SteepBlock& blk : b.blocks) {
    std::string chunk = Gen::loop(blk.c).str(r);
    bool any = false;
    const std::string reals = real_chunk(blk.p, r, &any);
    if (any) {
      chunk += ' ';
      chunk += reals;
    }
    chunks.push_back(std::move(chunk));
  }
  if (chunks.empty()) return "1";
  std::string out;
  for (size_t k = 0; k < chunks.size(); ++k) {
    if (k) out += " | ";
    out += chunks[k];
  }
  return out;
}

Steep parse_steep(const std::string& s, int r) {
  std::vector<std::string> segs;
  {
    std::string cur;
    for (char ch : s) {
      if (ch == '|') {
        segs.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    segs.push_back(cur);
  }
  Steep out;
  out.p0.assign(r, 0);
  if (segs.size() == 1) {
    const std::vector<std::string> toks = split_ws(s);
    if (toks.size() == 1 && toks[0] == "1") return out;
  }
  for (size_t si = 0; si < segs.size(); ++si) {
    const std::vector<std::string> toks = split_ws(segs[si]);
    if (toks.empty()) bad("empty segment in steep sequence '" + s + "'");
    size_t start = 0;
    std::vector<int>* dst = nullptr;
    if (toks[0][0] == '(') {
      const Token t = parse_token(toks[0], r);
      out.blocks.push_back(SteepBlock{t.g.a, std::vector<int>(r, 0)});
      dst = &out.blocks.back().p;
      start = 1;
    } else {
      if (si != 0) bad("real-only segment must come first in '" + s + "'");
      dst = &out.p0;
    }
    for (size_t ti = start; ti < toks.size(); ++ti) {
      const Token t = parse_token(toks[ti], r);
      if (t.g.imag) bad("imaginary entry must start its segment in '" + s + "'");
      (*dst)[t.g.a - 1] += t.count;
    }
  }
  for (const SteepBlock& blk : out.blocks)
    for (int k = 0; k < r; ++k)
      if (blk.p[k] > blk.c)
        bad("sequence is not steep: block (i," + std::to_string(blk.c) +
            ") carries " + std::to_string(blk.p[k]) + " reals of one color");
  return out;
}

}  // namespace cometq
