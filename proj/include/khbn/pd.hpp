#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace khbn {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One crossing X(a,b,c,d): arcs listed counterclockwise starting from the
// incoming under-strand, so the under-strand runs a -> c and the over-strand
// occupies positions b and d. sign is +1/-1 once determined, 0 if unknown.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 0;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct LinkDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;
  // Arc id carrying the basepoint. When the diagram has no crossings the
  // basepoint sits on a free loop and this is the 1-based loop index.
  int basepoint_arc = 0;
  bool basepoint_on_loop = false;

  int n() const { return static_cast<int>(crossings.size()); }
  int n_plus() const {
    int k = 0;
    for (const auto& c : crossings) k += c.sign > 0;
    return k;
  }
  int n_minus() const {
    int k = 0;
    for (const auto& c : crossings) k += c.sign < 0;
    return k;
  }

  // Sorted distinct arc identifiers.
  std::vector<int> arcs() const {
    std::vector<int> out;
    for (const auto& c : crossings) out.insert(out.end(), c.arcs.begin(), c.arcs.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

namespace detail {

class ArcUnionFind {
 public:
  int find(int x) {
    parent_.try_emplace(x, x);
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::map<int, int> parent_;
};

inline void validate_arc_multiset(const LinkDiagram& d) {
  std::map<int, int> count;
  for (const auto& c : d.crossings) {
    for (int a : c.arcs) {
      if (a <= 0) throw ParseError("arc identifiers must be positive, got " + std::to_string(a));
      ++count[a];
    }
  }
  for (const auto& [arc, k] : count) {
    if (k != 2)
      throw ParseError("arc " + std::to_string(arc) + " appears " + std::to_string(k) +
                       " times; every arc must appear exactly twice");
  }
}

}  // namespace detail

// Assigns signs to unsigned crossings by the arc-successor rule: with arcs
// numbered consecutively along each component, the over-strand of X(a,b,c,d)
// runs d -> b at a positive crossing and b -> d at a negative one. Explicit
// annotations are kept and cross-checked. Idempotent.
inline LinkDiagram infer_signs(LinkDiagram d) {
  if (d.crossings.empty()) return d;
  detail::ArcUnionFind comps;
  for (const auto& c : d.crossings) {
    comps.unite(c.arcs[0], c.arcs[2]);
    comps.unite(c.arcs[1], c.arcs[3]);
  }
  std::map<int, std::vector<int>> members;
  for (int a : d.arcs()) members[comps.find(a)].push_back(a);
  auto successor = [&](int arc) {
    const auto& m = members.at(comps.find(arc));
    auto it = std::lower_bound(m.begin(), m.end(), arc);
    ++it;
    return it == m.end() ? m.front() : *it;
  };

  for (auto& c : d.crossings) {
    const int b = c.arcs[1], dd = c.arcs[3];
    const bool same_comp = comps.find(b) == comps.find(dd);
    const bool pos = same_comp && successor(dd) == b;  // over runs d -> b
    const bool neg = same_comp && successor(b) == dd;  // over runs b -> d
    if (c.sign != 0) {
      if (pos != neg) {  // unambiguous inference: cross-check the annotation
        const int inferred = pos ? +1 : -1;
        if (inferred != c.sign)
          throw ParseError("explicit sign annotation on crossing (" + std::to_string(c.arcs[0]) + "," +
                           std::to_string(b) + "," + std::to_string(c.arcs[2]) + "," + std::to_string(dd) +
                           ") contradicts the arc numbering");
      }
      continue;
    }
    if (!pos && !neg)
      throw ParseError("cannot infer the sign of crossing (" + std::to_string(c.arcs[0]) + "," + std::to_string(b) +
                       "," + std::to_string(c.arcs[2]) + "," + std::to_string(dd) +
                       "); annotate it as X+(...) or X-(...)");
    // When both rules fire (a two-arc over component) the positive reading wins.
    c.sign = pos ? +1 : -1;
  }
  return d;
}

// Parses a whitespace-separated PD code: X(a,b,c,d), X+(...), X-(...),
// O tokens for crossing-free loops, an optional @arc basepoint marker,
// and # line comments.
inline LinkDiagram parse_pd(std::string_view text) {
  LinkDiagram d;
  bool have_basepoint = false;
  int basepoint = 0;

  std::vector<std::string> tokens;
  std::string cur;
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '\n') in_comment = false;
    if (in_comment) continue;
    if (ch == '#') {
      in_comment = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));

  auto parse_int = [](const std::string& s, const std::string& tok) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("malformed token '" + tok + "'");
    return std::stoi(s);
  };

  for (const auto& tok : tokens) {
    if (tok == "O") {
      ++d.free_loops;
    } else if (tok[0] == '@') {
      if (have_basepoint) throw ParseError("multiple basepoint markers");
      basepoint = parse_int(tok.substr(1), tok);
      have_basepoint = true;
    } else if (tok[0] == 'X') {
      std::size_t pos = 1;
      int sign = 0;
      if (pos < tok.size() && (tok[pos] == '+' || tok[pos] == '-')) sign = tok[pos++] == '+' ? +1 : -1;
      if (pos >= tok.size() || tok[pos] != '(' || tok.back() != ')') throw ParseError("malformed token '" + tok + "'");
      std::string body = tok.substr(pos + 1, tok.size() - pos - 2);
      std::array<int, 4> arcs{};
      std::size_t start = 0;
      for (int i = 0; i < 4; ++i) {
        std::size_t comma = (i < 3) ? body.find(',', start) : body.size();
        if (comma == std::string::npos) throw ParseError("malformed token '" + tok + "'");
        arcs[i] = parse_int(body.substr(start, comma - start), tok);
        start = comma + 1;
      }
      d.crossings.push_back(Crossing{arcs, sign});
    } else {
      throw ParseError("malformed token '" + tok + "'");
    }
  }

  detail::validate_arc_multiset(d);
  if (d.crossings.empty() && d.free_loops == 0) throw ParseError("empty diagram");

  const auto arcs = d.arcs();
  if (have_basepoint) {
    if (!arcs.empty()) {
      if (!std::binary_search(arcs.begin(), arcs.end(), basepoint))
        throw ParseError("basepoint @" + std::to_string(basepoint) + " is not an arc of the diagram");
      d.basepoint_arc = basepoint;
    } else {
      if (basepoint < 1 || basepoint > d.free_loops)
        throw ParseError("basepoint @" + std::to_string(basepoint) + " does not designate a free loop");
      d.basepoint_arc = basepoint;
      d.basepoint_on_loop = true;
    }
  } else {
    if (!arcs.empty()) {
      d.basepoint_arc = arcs.front();
    } else {
      d.basepoint_arc = 1;
      d.basepoint_on_loop = true;
    }
  }
  return infer_signs(std::move(d));
}

// Canonical form: crossings sorted by quadruple.
inline LinkDiagram canonical(LinkDiagram d) {
  std::sort(d.crossings.begin(), d.crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a.arcs < b.arcs; });
  return d;
}

// Canonical serialization: signed crossings sorted by first arc, then O
// tokens, then the basepoint marker.
inline std::string serialize(const LinkDiagram& diagram) {
  LinkDiagram d = canonical(diagram);
  std::string out;
  for (const auto& c : d.crossings) {
    out += "X";
    if (c.sign > 0)
      out += "+";
    else if (c.sign < 0)
      out += "-";
    out += "(" + std::to_string(c.arcs[0]) + "," + std::to_string(c.arcs[1]) + "," + std::to_string(c.arcs[2]) + "," +
           std::to_string(c.arcs[3]) + ")";
    out += " ";
  }
  for (int i = 0; i < d.free_loops; ++i) out += "O ";
  out += "@" + std::to_string(d.basepoint_arc);
  return out;
}

}  // namespace khbn
