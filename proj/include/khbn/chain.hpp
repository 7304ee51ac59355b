#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "khbn/cube.hpp"
#include "khbn/poly.hpp"

namespace khbn {

// Basis element of the cube complex: a vertex alpha and a circle labeling.
// Bit c of labels set means circle c carries x, clear means 1.
struct Labeling {
  std::uint32_t alpha = 0;
  std::uint64_t labels = 0;

  friend bool operator==(const Labeling&, const Labeling&) = default;
  friend auto operator<=>(const Labeling&, const Labeling&) = default;
};

struct Bigrading {
  int i = 0;
  int q = 0;

  friend bool operator==(const Bigrading&, const Bigrading&) = default;
  friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

inline Bigrading grading(const Cube& cube, const Labeling& lab) {
  const auto& v = cube.vertex(lab.alpha);
  const int w = std::popcount(lab.alpha);
  const int xs = std::popcount(lab.labels);
  const int gr = (v.circle_count - xs) - xs;
  const int np = cube.diagram().n_plus();
  const int nm = cube.diagram().n_minus();
  return Bigrading{w - nm, gr + w + np - 2 * nm};
}

// F2[H]-linear combination of labelings, with cancelling addition.
class ChainBN {
 public:
  ChainBN() = default;
  explicit ChainBN(const Labeling& lab, PolyH coeff = PolyH::monomial(0)) { add(lab, std::move(coeff)); }

  void add(const Labeling& lab, const PolyH& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lab, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ChainBN& operator+=(const ChainBN& other) {
    for (const auto& [lab, c] : other.terms_) add(lab, c);
    return *this;
  }
  friend ChainBN operator+(ChainBN a, const ChainBN& b) {
    a += b;
    return a;
  }

  // Multiplication by H^k.
  ChainBN shifted(int k) const {
    ChainBN out;
    for (const auto& [lab, c] : terms_) out.add(lab, c.shifted(k));
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Labeling, PolyH>& terms() const { return terms_; }

  friend bool operator==(const ChainBN&, const ChainBN&) = default;

 private:
  std::map<Labeling, PolyH> terms_;
};

namespace detail {

// Target labeling with the carried-over circle labels filled in.
inline std::uint64_t carry_labels(const EdgeSurgery& e, std::uint64_t labels) {
  std::uint64_t out = 0;
  for (std::size_t c = 0; c < e.carry.size(); ++c)
    if (e.carry[c] >= 0 && ((labels >> c) & 1u)) out |= std::uint64_t{1} << e.carry[c];
  return out;
}

}  // namespace detail

// Khovanov edge map: merge by m (1*1=1, 1*x=x*1=x, x*x=0), split by
// Delta (1 -> 1|x + x|1, x -> x|x).
inline ChainBN edge_map_d(const Cube& cube, const EdgeSurgery& e, const Labeling& lab) {
  const std::uint32_t to_alpha = lab.alpha | (std::uint32_t{1} << e.crossing);
  const std::uint64_t base = detail::carry_labels(e, lab.labels);
  ChainBN out;
  const PolyH one = PolyH::monomial(0);
  if (e.is_merge) {
    const bool x1 = (lab.labels >> e.src1) & 1u;
    const bool x2 = (lab.labels >> e.src2) & 1u;
    if (x1 && x2) return out;
    std::uint64_t t = base;
    if (x1 || x2) t |= std::uint64_t{1} << e.dst;
    out.add(Labeling{to_alpha, t}, one);
  } else {
    const bool x = (lab.labels >> e.src) & 1u;
    const std::uint64_t b1 = std::uint64_t{1} << e.dst1;
    const std::uint64_t b2 = std::uint64_t{1} << e.dst2;
    if (x) {
      out.add(Labeling{to_alpha, base | b1 | b2}, one);
    } else {
      out.add(Labeling{to_alpha, base | b2}, one);
      out.add(Labeling{to_alpha, base | b1}, one);
    }
  }
  return out;
}

// Bar-Natan perturbation: merge by m' (only x*x=x), split by Delta'
// (only 1 -> 1|1).
inline ChainBN edge_map_h(const Cube& cube, const EdgeSurgery& e, const Labeling& lab) {
  const std::uint32_t to_alpha = lab.alpha | (std::uint32_t{1} << e.crossing);
  const std::uint64_t base = detail::carry_labels(e, lab.labels);
  ChainBN out;
  const PolyH one = PolyH::monomial(0);
  if (e.is_merge) {
    const bool x1 = (lab.labels >> e.src1) & 1u;
    const bool x2 = (lab.labels >> e.src2) & 1u;
    if (x1 && x2) out.add(Labeling{to_alpha, base | (std::uint64_t{1} << e.dst)}, one);
  } else {
    const bool x = (lab.labels >> e.src) & 1u;
    if (!x) out.add(Labeling{to_alpha, base}, one);
  }
  return out;
}

inline ChainBN apply_d(const Cube& cube, const ChainBN& chain) {
  ChainBN out;
  for (const auto& [lab, coeff] : chain.terms())
    for (int j = 0; j < cube.n(); ++j) {
      if ((lab.alpha >> j) & 1u) continue;
      const ChainBN image = edge_map_d(cube, cube.edge(lab.alpha, j), lab);
      for (const auto& [tlab, tc] : image.terms())
        for (int p : coeff.support()) out.add(tlab, tc.shifted(p));
    }
  return out;
}

inline ChainBN apply_h(const Cube& cube, const ChainBN& chain) {
  ChainBN out;
  for (const auto& [lab, coeff] : chain.terms())
    for (int j = 0; j < cube.n(); ++j) {
      if ((lab.alpha >> j) & 1u) continue;
      const ChainBN image = edge_map_h(cube, cube.edge(lab.alpha, j), lab);
      for (const auto& [tlab, tc] : image.terms())
        for (int p : coeff.support()) out.add(tlab, tc.shifted(p));
    }
  return out;
}

// Bar-Natan differential d + H*h.
inline ChainBN apply_dBN(const Cube& cube, const ChainBN& chain) {
  return apply_d(cube, chain) + apply_h(cube, chain).shifted(1);
}

inline bool basepoint_is_x(const Cube& cube, const Labeling& lab) {
  return (lab.labels >> cube.vertex(lab.alpha).basepoint_circle) & 1u;
}

// Splits a chain by the basepoint label: first the x part (the subcomplex
// C_x), then the 1 part (representing the quotient C_1).
inline std::pair<ChainBN, ChainBN> reduced_split(const Cube& cube, const ChainBN& chain) {
  ChainBN x_part, one_part;
  for (const auto& [lab, c] : chain.terms()) (basepoint_is_x(cube, lab) ? x_part : one_part).add(lab, c);
  return {x_part, one_part};
}

// Connecting map f : C_1 -> C_x, the component of d + H*h that flips the
// basepoint label from 1 to x.
inline ChainBN map_f(const Cube& cube, const ChainBN& chain) {
  for (const auto& [lab, c] : chain.terms())
    if (basepoint_is_x(cube, lab)) throw std::invalid_argument("map_f expects a chain with basepoint labeled 1");
  return reduced_split(cube, apply_dBN(cube, chain)).first;
}

// K_i: on a basis element with basepoint labeled 1, sum over (i+1)-element
// subsets S of its x-labeled circles of the relabeling that turns S to 1
// and the basepoint to x. Zero on basepoint-x elements.
inline ChainBN map_K(const Cube& cube, int i, const ChainBN& chain) {
  ChainBN out;
  for (const auto& [lab, coeff] : chain.terms()) {
    const int bp = cube.vertex(lab.alpha).basepoint_circle;
    if ((lab.labels >> bp) & 1u) continue;
    std::vector<int> xs;
    for (int c = 0; c < cube.vertex(lab.alpha).circle_count; ++c)
      if ((lab.labels >> c) & 1u) xs.push_back(c);
    const int m = static_cast<int>(xs.size());
    const int pick = i + 1;
    if (pick > m) continue;
    // Enumerate subsets of the x circles with popcount pick.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      if (std::popcount(mask) != pick) continue;
      std::uint64_t labels = lab.labels | (std::uint64_t{1} << bp);
      for (int t = 0; t < m; ++t)
        if ((mask >> t) & 1u) labels &= ~(std::uint64_t{1} << xs[t]);
      for (int p : coeff.support()) out.add(Labeling{lab.alpha, labels}, PolyH::monomial(p));
    }
  }
  return out;
}

// Truncation bound for K = K_0 + H*K_1 + ...: an element has at most
// max_circles - 1 non-basepoint circles labeled x.
inline int k_truncation_bound(const Cube& cube) { return cube.max_circles() - 1; }

// K = sum_i H^i K_i, a finite sum by the truncation bound.
inline ChainBN map_K_total(const Cube& cube, const ChainBN& chain) {
  ChainBN out;
  for (int i = 0; i < k_truncation_bound(cube); ++i) out += map_K(cube, i, chain).shifted(i);
  return out;
}

// I relabels the basepoint circle from 1 to x, and is zero on chains whose
// basepoint already carries x.
inline ChainBN map_I(const Cube& cube, const ChainBN& chain) {
  ChainBN out;
  for (const auto& [lab, c] : chain.terms()) {
    const int bp = cube.vertex(lab.alpha).basepoint_circle;
    if ((lab.labels >> bp) & 1u) continue;
    out.add(Labeling{lab.alpha, lab.labels | (std::uint64_t{1} << bp)}, c);
  }
  return out;
}

// iota = I + H*K.
inline ChainBN map_iota(const Cube& cube, const ChainBN& chain) {
  return map_I(cube, chain) + map_K_total(cube, chain).shifted(1);
}

// Bitstring with crossing 0 first; "-" for the crossing-free diagram.
inline std::string alpha_to_string(const Cube& cube, std::uint32_t alpha) {
  std::string s;
  for (int j = 0; j < cube.n(); ++j) s += ((alpha >> j) & 1u) ? '1' : '0';
  return s.empty() ? std::string("-") : s;
}

// 1/x string over circles in canonical order.
inline std::string labels_to_string(const Cube& cube, const Labeling& lab) {
  std::string s;
  for (int c = 0; c < cube.vertex(lab.alpha).circle_count; ++c) s += ((lab.labels >> c) & 1u) ? 'x' : '1';
  return s;
}

// Serialization "alpha:labels:poly", poly as comma-separated H powers.
inline std::string term_to_string(const Cube& cube, const Labeling& lab, const PolyH& coeff) {
  return alpha_to_string(cube, lab.alpha) + ":" + labels_to_string(cube, lab) + ":" + coeff.to_string();
}

inline std::string chain_to_string(const Cube& cube, const ChainBN& chain) {
  if (chain.is_zero()) return "0";
  std::string out;
  for (const auto& [lab, c] : chain.terms()) {
    if (!out.empty()) out += " + ";
    out += term_to_string(cube, lab, c);
  }
  return out;
}

}  // namespace khbn
