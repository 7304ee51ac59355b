#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "khbn/pd.hpp"

namespace khbn {

inline constexpr int kDefaultMaxCrossings = 16;

// One vertex alpha of the hypercube: the circles of the full resolution.
// Circles containing arcs come first, ordered by their smallest arc id;
// free loops follow, one circle each.
struct VertexResolution {
  std::uint32_t alpha = 0;
  int circle_count = 0;
  int arc_circle_count = 0;
  int basepoint_circle = 0;
  std::vector<int> circle_of_arc;   // indexed by position in diagram.arcs()
  std::vector<int> circle_min_arc;  // arc circles only

  friend bool operator==(const VertexResolution&, const VertexResolution&) = default;
};

// The surgery along crossing `crossing` from alpha (bit clear) to
// alpha | (1 << crossing). carry maps every unaffected circle of the source
// resolution to its circle index in the target; surgery circles map to -1.
struct EdgeSurgery {
  std::uint32_t from_alpha = 0;
  int crossing = -1;
  bool is_merge = false;
  int src1 = -1, src2 = -1, dst = -1;  // merge data
  int src = -1, dst1 = -1, dst2 = -1;  // split data
  std::vector<int> carry;

  friend bool operator==(const EdgeSurgery&, const EdgeSurgery&) = default;
};

namespace detail {

class IndexUnionFind {
 public:
  explicit IndexUnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

inline int arc_index(const std::vector<int>& arcs, int arc) {
  return static_cast<int>(std::lower_bound(arcs.begin(), arcs.end(), arc) - arcs.begin());
}

}  // namespace detail

// Circles of the full resolution D_alpha, by union-find over the arc
// pairings: the 0-resolution of X(a,b,c,d) joins (a,b) and (c,d), the
// 1-resolution joins (a,d) and (b,c).
inline VertexResolution resolve(const LinkDiagram& d, std::uint32_t alpha) {
  const auto arcs = d.arcs();
  const int na = static_cast<int>(arcs.size());
  detail::IndexUnionFind uf(na);
  for (int j = 0; j < d.n(); ++j) {
    const auto& x = d.crossings[j].arcs;
    const int a = detail::arc_index(arcs, x[0]);
    const int b = detail::arc_index(arcs, x[1]);
    const int c = detail::arc_index(arcs, x[2]);
    const int dd = detail::arc_index(arcs, x[3]);
    if ((alpha >> j) & 1u) {
      uf.unite(a, dd);
      uf.unite(b, c);
    } else {
      uf.unite(a, b);
      uf.unite(c, dd);
    }
  }

  VertexResolution v;
  v.alpha = alpha;
  v.circle_of_arc.assign(na, -1);
  // Canonical circle order: by smallest contained arc. Visiting arcs in
  // ascending order numbers each class at its minimum.
  std::vector<int> circle_of_root(na, -1);
  for (int i = 0; i < na; ++i) {
    const int r = uf.find(i);
    if (circle_of_root[r] < 0) {
      circle_of_root[r] = static_cast<int>(v.circle_min_arc.size());
      v.circle_min_arc.push_back(arcs[i]);
    }
    v.circle_of_arc[i] = circle_of_root[r];
  }

  v.arc_circle_count = static_cast<int>(v.circle_min_arc.size());
  v.circle_count = v.arc_circle_count + d.free_loops;
  if (d.basepoint_on_loop) {
    v.basepoint_circle = v.arc_circle_count + (d.basepoint_arc - 1);
  } else {
    v.basepoint_circle = v.circle_of_arc[detail::arc_index(arcs, d.basepoint_arc)];
  }
  return v;
}

// Classifies the edge out of alpha along crossing j: a merge when the two
// strands of the 0-resolution lie on distinct circles, a split otherwise.
inline EdgeSurgery edge(const LinkDiagram& d, std::uint32_t alpha, int j) {
  if ((alpha >> j) & 1u) throw std::invalid_argument("edge requires the crossing bit to be 0");
  const auto arcs = d.arcs();
  const VertexResolution from = resolve(d, alpha);
  const VertexResolution to = resolve(d, alpha | (std::uint32_t{1} << j));

  const auto& x = d.crossings[j].arcs;
  const int ia = detail::arc_index(arcs, x[0]);
  const int ib = detail::arc_index(arcs, x[1]);
  const int ic = detail::arc_index(arcs, x[2]);

  EdgeSurgery e;
  e.from_alpha = alpha;
  e.crossing = j;
  const int ca = from.circle_of_arc[ia];  // strand (a,b)
  const int cc = from.circle_of_arc[ic];  // strand (c,d)
  e.is_merge = ca != cc;

  e.carry.assign(from.circle_count, -1);
  auto carry_arc_circle = [&](int circle) {
    const int min_arc = from.circle_min_arc[circle];
    return to.circle_of_arc[detail::arc_index(arcs, min_arc)];
  };
  for (int c = 0; c < from.circle_count; ++c) {
    if (c >= from.arc_circle_count) {
      // Free loops keep their relative position after the arc circles.
      e.carry[c] = to.arc_circle_count + (c - from.arc_circle_count);
    } else if (e.is_merge ? (c != ca && c != cc) : (c != ca)) {
      e.carry[c] = carry_arc_circle(c);
    }
  }
  if (e.is_merge) {
    e.src1 = std::min(ca, cc);
    e.src2 = std::max(ca, cc);
    e.dst = to.circle_of_arc[ia];
  } else {
    e.src = ca;
    e.dst1 = to.circle_of_arc[ia];  // side through arc a (paired with d)
    e.dst2 = to.circle_of_arc[ib];  // side through arc b (paired with c)
  }
  return e;
}

// Fully materialized cube of resolutions: 2^n vertices, n*2^(n-1) edges.
class Cube {
 public:
  explicit Cube(LinkDiagram d, int max_crossings = kDefaultMaxCrossings) : diagram_(std::move(d)) {
    if (diagram_.n() > max_crossings)
      throw SizeLimitError("diagram has " + std::to_string(diagram_.n()) + " crossings, over the limit of " +
                           std::to_string(max_crossings));
    const int n = diagram_.n();
    const std::uint32_t count = std::uint32_t{1} << n;
    vertices_.reserve(count);
    for (std::uint32_t alpha = 0; alpha < count; ++alpha) vertices_.push_back(resolve(diagram_, alpha));
    edges_.resize(static_cast<std::size_t>(count) * std::max(n, 1));
    max_circles_ = 0;
    for (const auto& v : vertices_) max_circles_ = std::max(max_circles_, v.circle_count);
    for (std::uint32_t alpha = 0; alpha < count; ++alpha)
      for (int j = 0; j < n; ++j)
        if (!((alpha >> j) & 1u)) edges_[static_cast<std::size_t>(alpha) * n + j] = khbn::edge(diagram_, alpha, j);
  }

  const LinkDiagram& diagram() const { return diagram_; }
  int n() const { return diagram_.n(); }
  std::uint32_t vertex_count() const { return std::uint32_t{1} << n(); }
  const VertexResolution& vertex(std::uint32_t alpha) const { return vertices_[alpha]; }
  const EdgeSurgery& edge(std::uint32_t alpha, int j) const {
    return edges_[static_cast<std::size_t>(alpha) * n() + j];
  }
  int max_circles() const { return max_circles_; }

  // One line per vertex "alpha k basepoint_circle", one per edge
  // "alpha j kind", alphas as bitstrings with crossing 0 first.
  std::string dump() const {
    std::string out;
    auto bits = [&](std::uint32_t alpha) {
      std::string s;
      for (int j = 0; j < n(); ++j) s += ((alpha >> j) & 1u) ? '1' : '0';
      return s.empty() ? std::string("-") : s;
    };
    for (const auto& v : vertices_)
      out += bits(v.alpha) + " " + std::to_string(v.circle_count) + " " + std::to_string(v.basepoint_circle) + "\n";
    for (std::uint32_t alpha = 0; alpha < vertex_count(); ++alpha)
      for (int j = 0; j < n(); ++j)
        if (!((alpha >> j) & 1u))
          out += bits(alpha) + " " + std::to_string(j) + " " + (edge(alpha, j).is_merge ? "merge" : "split") + "\n";
    return out;
  }

 private:
  LinkDiagram diagram_;
  std::vector<VertexResolution> vertices_;
  std::vector<EdgeSurgery> edges_;
  int max_circles_ = 0;
};

}  // namespace khbn
