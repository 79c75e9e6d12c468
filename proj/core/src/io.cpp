#include "pforge/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace pforge {

namespace {

using ordered_json = nlohmann::ordered_json;

// Greedy decomposition of a square set into disjoint rectangles, scanning by
// (c, r): grow a column run, then absorb identical runs from the columns to
// the right.
struct Rect {
  int c1, c2, r1, r2;
};

std::vector<Rect> rect_decompose(CellSet s, int k) {
  std::vector<Rect> out;
  CellSet left = s;
  for (int c = 0; c <= k && left; ++c) {
    for (int r = 0; r <= k && left; ++r) {
      if (!cell_in(left, k, c, r)) continue;
      int r2 = r;
      while (r2 + 1 <= k && cell_in(left, k, c, r2 + 1)) ++r2;
      int c2 = c;
      bool grow = true;
      while (grow && c2 + 1 <= k) {
        for (int rr = r; rr <= r2; ++rr) {
          if (!cell_in(left, k, c2 + 1, rr)) {
            grow = false;
            break;
          }
        }
        if (grow) ++c2;
      }
      out.push_back(Rect{c, c2, r, r2});
      left &= ~cell_rect(k, c, c2, r, r2);
    }
  }
  return out;
}

std::string shading_to_string(CellSet s, int k) {
  std::string out = "{";
  bool first = true;
  for (auto [c, r] : cells_of(s, k)) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(c) + "," + std::to_string(r) + ")";
  }
  return out + "}";
}

std::string region_to_string(CellSet s, int k) {
  std::string out;
  bool first = true;
  for (const Rect& r : rect_decompose(s, k)) {
    if (!first) out += "+";
    first = false;
    out += std::to_string(r.c1) + ".." + std::to_string(r.c2) + "," +
           std::to_string(r.r1) + ".." + std::to_string(r.r2);
  }
  return out;
}

std::string perm_digits(const Perm& p) {
  std::string out;
  for (int v : p) out += std::to_string(v);
  return out;
}

std::string mesh_to_string(const MeshPattern& mp) {
  std::string out = perm_digits(mp.pat);
  if (mp.shading) out += "|" + shading_to_string(mp.shading, mp.k());
  return out;
}

[[noreturn]] void parse_fail(const std::string& text, const std::string& why) {
  throw Error(Error::Kind::invalid_input, "parse error in '" + text + "': " + why);
}

// Recursive-descent parser over the pattern notation.
struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) parse_fail(text, std::string("expected '") + c + "'");
  }
  int number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      parse_fail(text, "expected a number");
    }
    int v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text[pos++] - '0');
    }
    return v;
  }

  Perm perm() {
    Perm p;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      p.push_back(text[pos++] - '0');
    }
    if (p.empty()) parse_fail(text, "expected a pattern");
    if (!is_permutation(p)) parse_fail(text, "pattern is not a permutation");
    if (static_cast<int>(p.size()) > kMaxPatternLen) {
      parse_fail(text, "pattern longer than the supported maximum of 7");
    }
    return p;
  }

  CellSet shading(int k) {
    expect('{');
    CellSet out = 0;
    while (!eat('}')) {
      expect('(');
      const int c = number();
      expect(',');
      const int r = number();
      expect(')');
      if (c > k || r > k) parse_fail(text, "shaded square outside the grid");
      out |= cell_mask(k, c, r);
      if (peek() == ',') ++pos;
    }
    return out;
  }

  CellSet region(int k) {
    CellSet out = 0;
    do {
      const int c1 = number();
      expect('.');
      expect('.');
      const int c2 = number();
      expect(',');
      const int r1 = number();
      expect('.');
      expect('.');
      const int r2 = number();
      if (c1 > c2 || r1 > r2 || c2 > k || r2 > k) {
        parse_fail(text, "bad region rectangle");
      }
      out |= cell_rect(k, c1, c2, r1, r2);
    } while (eat('+'));
    return out;
  }

  MeshPattern mesh() {
    MeshPattern mp;
    mp.pat = perm();
    if (eat('|')) mp.shading = shading(mp.k());
    return mp;
  }

  DecoratedPattern decorated() {
    DecoratedPattern dp;
    dp.pat = perm();
    const int k = dp.k();
    if (eat('|')) dp.shading = shading(k);
    while (!done()) {
      if (eat('[')) {
        const CellSet reg = region(k);
        expect(':');
        const int count = number();
        expect(']');
        dp.marks.push_back(Mark{reg, count});
      } else if (peek() == 'A' || peek() == 'C') {
        const char which = text[pos++];
        expect('[');
        const CellSet reg = region(k);
        expect(':');
        const MeshPattern q = mesh();
        expect(']');
        (which == 'A' ? dp.avoid : dp.contain).push_back(Decoration{reg, q});
      } else {
        parse_fail(text, std::string("unexpected character '") + peek() + "'");
      }
    }
    return dp;
  }
};

ordered_json cells_json(CellSet s, int k) {
  ordered_json arr = ordered_json::array();
  for (auto [c, r] : cells_of(s, k)) arr.push_back(ordered_json::array({c, r}));
  return arr;
}

ordered_json pattern_json(const DecoratedPattern& dp) {
  const int k = dp.k();
  ordered_json j;
  j["pattern"] = dp.pat;
  j["shading"] = cells_json(dp.shading, k);
  ordered_json marks = ordered_json::array();
  for (const Mark& m : dp.marks) {
    ordered_json mj;
    mj["region"] = cells_json(m.region, k);
    mj["min_count"] = m.min_count;
    marks.push_back(std::move(mj));
  }
  j["marks"] = std::move(marks);
  auto dec_json = [&](const std::vector<Decoration>& decs) {
    ordered_json arr = ordered_json::array();
    for (const Decoration& d : decs) {
      ordered_json dj;
      dj["region"] = cells_json(d.region, k);
      dj["pattern"] = d.q.pat;
      dj["shading"] = cells_json(d.q.shading, d.q.k());
      arr.push_back(std::move(dj));
    }
    return arr;
  };
  j["avoid_dec"] = dec_json(dp.avoid);
  j["contain_dec"] = dec_json(dp.contain);
  return j;
}

}  // namespace

std::string perm_to_string(const Perm& pi) {
  if (pi.size() <= 9) return perm_digits(pi);
  std::string out;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(pi[i]);
  }
  return out;
}

Perm parse_perm(const std::string& text) {
  // Trim whitespace at both ends.
  std::size_t lo = text.find_first_not_of(" \t\r\n");
  std::size_t hi = text.find_last_not_of(" \t\r\n");
  if (lo == std::string::npos) {
    throw Error(Error::Kind::invalid_input, "empty permutation");
  }
  const std::string body = text.substr(lo, hi - lo + 1);
  Perm p;
  if (body.find_first_of(" \t") == std::string::npos) {
    for (char ch : body) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw Error(Error::Kind::invalid_input,
                    "bad character in permutation: '" + body + "'");
      }
      p.push_back(ch - '0');
    }
  } else {
    std::istringstream ss(body);
    std::string tok;
    while (ss >> tok) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        p.push_back(v);
      } catch (const std::exception&) {
        throw Error(Error::Kind::invalid_input,
                    "bad token in permutation: '" + tok + "'");
      }
    }
  }
  if (!is_permutation(p)) {
    throw Error(Error::Kind::invalid_input, "not a permutation: '" + body + "'");
  }
  return p;
}

std::string pattern_to_string(const MeshPattern& mp) { return mesh_to_string(mp); }

std::string pattern_to_string(const MarkedMeshPattern& mmp) {
  return pattern_to_string(as_decorated(mmp));
}

std::string pattern_to_string(const DecoratedPattern& dp) {
  const int k = dp.k();
  std::string out = perm_digits(dp.pat);
  if (dp.shading) out += "|" + shading_to_string(dp.shading, k);
  for (const Mark& m : dp.marks) {
    out += "[" + region_to_string(m.region, k) + ":" + std::to_string(m.min_count) + "]";
  }
  for (const Decoration& d : dp.avoid) {
    out += "A[" + region_to_string(d.region, k) + ":" + mesh_to_string(d.q) + "]";
  }
  for (const Decoration& d : dp.contain) {
    out += "C[" + region_to_string(d.region, k) + ":" + mesh_to_string(d.q) + "]";
  }
  return out;
}

DecoratedPattern parse_pattern(const std::string& text) {
  std::string body;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) body += c;
  }
  Parser parser{body};
  return parser.decorated();
}

std::vector<DecoratedPattern> parse_pattern_list(const std::string& text) {
  std::vector<DecoratedPattern> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const std::size_t lo = item.find_first_not_of(" \t\r\n");
    if (lo == std::string::npos) continue;
    out.push_back(parse_pattern(item));
  }
  return out;
}

std::string pattern_to_json(const DecoratedPattern& dp) {
  return pattern_json(dp).dump();
}

std::string patterns_to_json(const std::vector<DecoratedPattern>& dps) {
  ordered_json arr = ordered_json::array();
  for (const DecoratedPattern& dp : dps) arr.push_back(pattern_json(dp));
  return arr.dump();
}

}  // namespace pforge
