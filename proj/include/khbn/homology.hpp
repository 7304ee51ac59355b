#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "khbn/chain.hpp"
#include "khbn/cube.hpp"
#include "khbn/laurent.hpp"
#include "khbn/linalg.hpp"

namespace khbn {

enum class Reduction { full, x_sub, one_quot };

// Homology groups collected by bidegree. dims holds F2 dimensions (the
// Khovanov side); free_ranks and torsion hold the F2[H] decomposition
// (the Bar-Natan side), torsion summands F2[H]/(H^order) counted per order.
struct GradedModule {
  std::map<Bigrading, int> dims;
  std::map<Bigrading, int> free_ranks;
  std::map<Bigrading, std::map<int, int>> torsion;

  int total_dimension() const {
    int t = 0;
    for (const auto& [bg, d] : dims) t += d;
    return t;
  }
  int total_free_rank() const {
    int t = 0;
    for (const auto& [bg, r] : free_ranks) t += r;
    return t;
  }
  int total_torsion_count() const {
    int t = 0;
    for (const auto& [bg, m] : torsion)
      for (const auto& [order, c] : m) t += c;
    return t;
  }

  GradedModule q_shifted(int s) const {
    GradedModule out;
    for (const auto& [bg, d] : dims) out.dims[{bg.i, bg.q + s}] = d;
    for (const auto& [bg, r] : free_ranks) out.free_ranks[{bg.i, bg.q + s}] = r;
    for (const auto& [bg, m] : torsion) out.torsion[{bg.i, bg.q + s}] = m;
    return out;
  }

  GradedModule& operator+=(const GradedModule& o) {
    for (const auto& [bg, d] : o.dims) dims[bg] += d;
    for (const auto& [bg, r] : o.free_ranks) free_ranks[bg] += r;
    for (const auto& [bg, m] : o.torsion)
      for (const auto& [order, c] : m) torsion[bg][order] += c;
    return *this;
  }

  friend bool operator==(const GradedModule&, const GradedModule&) = default;
};

namespace detail {

inline std::vector<Labeling> all_labelings(const Cube& cube) {
  std::vector<Labeling> out;
  for (std::uint32_t alpha = 0; alpha < cube.vertex_count(); ++alpha) {
    const int k = cube.vertex(alpha).circle_count;
    for (std::uint64_t labels = 0; labels < (std::uint64_t{1} << k); ++labels)
      out.push_back(Labeling{alpha, labels});
  }
  return out;
}

inline bool in_reduction(const Cube& cube, const Labeling& lab, Reduction red) {
  switch (red) {
    case Reduction::full:
      return true;
    case Reduction::x_sub:
      return basepoint_is_x(cube, lab);
    case Reduction::one_quot:
      return !basepoint_is_x(cube, lab);
  }
  return true;
}

}  // namespace detail

// Khovanov homology over F2, dimension per bidegree. The differential
// preserves q, so each (i, q) slice is handled independently.
inline GradedModule kh_homology(const Cube& cube) {
  std::map<Bigrading, std::map<Labeling, int>> slice;
  for (const Labeling& lab : detail::all_labelings(cube)) {
    auto& s = slice[grading(cube, lab)];
    const int idx = static_cast<int>(s.size());
    s.emplace(lab, idx);
  }

  std::map<Bigrading, int> ranks;
  for (const auto& [bg, cols] : slice) {
    const Bigrading next{bg.i + 1, bg.q};
    auto it = slice.find(next);
    if (it == slice.end()) continue;
    const auto& rows = it->second;
    MatrixF2 m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (const auto& [lab, col] : cols) {
      for (int j = 0; j < cube.n(); ++j) {
        if ((lab.alpha >> j) & 1u) continue;
        const ChainBN image = edge_map_d(cube, cube.edge(lab.alpha, j), lab);
        for (const auto& [tlab, tc] : image.terms()) m.flip(rows.at(tlab), col);
      }
    }
    ranks[bg] = m.rank();
  }

  GradedModule out;
  for (const auto& [bg, basis] : slice) {
    auto r = [&](Bigrading g) {
      auto it = ranks.find(g);
      return it == ranks.end() ? 0 : it->second;
    };
    const int dim = static_cast<int>(basis.size()) - r(bg) - r({bg.i - 1, bg.q});
    if (dim > 0) out.dims[bg] = dim;
  }
  return out;
}

namespace detail {

// Sparse matrix over F2[H] whose entries are monomials, stored as H powers.
// Gradedness forces every entry at (row, col) to the single power
// (q_row - q_col) / 2, so additions are pure cancellations.
struct SparseMonoMatrix {
  std::vector<std::map<int, int>> col_entries;  // col -> row -> power
  std::vector<std::set<int>> row_cols;          // row -> cols with an entry

  void resize(int rows, int cols) {
    col_entries.assign(cols, {});
    row_cols.assign(rows, {});
  }

  void toggle(int row, int col, int power) {
    auto& ce = col_entries[col];
    auto it = ce.find(row);
    if (it == ce.end()) {
      ce.emplace(row, power);
      row_cols[row].insert(col);
    } else {
      assert(it->second == power);
      ce.erase(it);
      row_cols[row].erase(col);
    }
  }

  // col dst += H^t * col src
  void col_add(int dst, int src, int t) {
    for (const auto& [row, p] : std::map<int, int>(col_entries[src])) toggle(row, dst, p + t);
  }

  // row dst += H^t * row src
  void row_add(int dst, int src, int t) {
    for (int col : std::set<int>(row_cols[src])) toggle(dst, col, col_entries[col].at(src) + t);
  }

  void clear_row(int row) {
    for (int col : std::set<int>(row_cols[row])) toggle(row, col, col_entries[col].at(row));
  }
  void clear_col(int col) {
    for (const auto& [row, p] : std::map<int, int>(col_entries[col])) toggle(row, col, p);
  }
};

}  // namespace detail

// Bar-Natan homology over F2[H] with its decomposition into free summands
// and H-power torsion. The unreduced complex uses every labeling; x_sub is
// the subcomplex with basepoint labeled x, one_quot the quotient by it.
//
// Phase 1 cancels H^0 entries (a change of basis with no effect on
// homology). Phase 2 diagonalizes the remaining graded matrices in
// ascending homological degree; minimal-power pivots keep all elimination
// multipliers in F2[H], and d*d = 0 makes columns at earlier pivot rows
// vanish, so column operations never touch the previous matrix.
inline GradedModule bn_homology(const Cube& cube, Reduction red = Reduction::full, bool precancel = true) {
  const int n_minus = cube.diagram().n_minus();
  const int n = cube.n();

  // Basis per homological degree, with gradings.
  std::vector<std::vector<Labeling>> basis(n + 1);
  std::vector<std::map<Labeling, int>> index(n + 1);
  for (const Labeling& lab : detail::all_labelings(cube)) {
    if (!detail::in_reduction(cube, lab, red)) continue;
    const int w = std::popcount(lab.alpha);
    index[w].emplace(lab, static_cast<int>(basis[w].size()));
    basis[w].push_back(lab);
  }
  std::vector<std::vector<int>> q_of(n + 1);
  for (int w = 0; w <= n; ++w)
    for (const Labeling& lab : basis[w]) q_of[w].push_back(grading(cube, lab).q);

  // Differential matrices M[w] : C_w -> C_{w+1}, d + H*h projected back
  // into the chosen subquotient.
  std::vector<detail::SparseMonoMatrix> M(n);
  for (int w = 0; w < n; ++w) {
    M[w].resize(static_cast<int>(basis[w + 1].size()), static_cast<int>(basis[w].size()));
    for (std::size_t c = 0; c < basis[w].size(); ++c) {
      const ChainBN image = apply_dBN(cube, ChainBN(basis[w][c]));
      for (const auto& [tlab, coeff] : image.terms()) {
        if (!detail::in_reduction(cube, tlab, red)) continue;
        const int row = index[w + 1].at(tlab);
        for (int p : coeff.support()) M[w].toggle(row, static_cast<int>(c), p);
      }
    }
  }

  std::vector<std::vector<bool>> alive(n + 1);
  for (int w = 0; w <= n; ++w) alive[w].assign(basis[w].size(), true);

  if (precancel) {
    for (int w = 0; w < n; ++w) {
      bool progress = true;
      while (progress) {
        progress = false;
        int px = -1, py = -1;
        for (std::size_t c = 0; c < M[w].col_entries.size() && px < 0; ++c)
          for (const auto& [row, p] : M[w].col_entries[c])
            if (p == 0) {
              px = static_cast<int>(c);
              py = row;
              break;
            }
        if (px < 0) break;
        progress = true;
        // Cancel the pair (px in C_w, py in C_{w+1}) across the unit entry.
        auto col_x = std::map<int, int>(M[w].col_entries[px]);
        col_x.erase(py);
        auto row_y = std::set<int>(M[w].row_cols[py]);
        row_y.erase(px);
        for (int u : row_y) {
          const int pu = M[w].col_entries[u].at(py);
          for (const auto& [v, pv] : col_x) M[w].toggle(v, u, pu + pv);
        }
        if (w + 1 < n) M[w + 1].clear_col(py);
        M[w].clear_col(px);
        M[w].clear_row(py);
        if (w > 0) M[w - 1].clear_row(px);
        alive[w][px] = false;
        alive[w + 1][py] = false;
      }
    }
  }

  // pivot_in[w][b]  : order of the pivot hitting basis element b of C_w
  //                  from below (-1 if none)
  // pivot_out[w][b] : true when b is a pivot column of M[w]
  std::vector<std::vector<int>> pivot_in(n + 1);
  std::vector<std::vector<bool>> pivot_out(n + 1);
  for (int w = 0; w <= n; ++w) {
    pivot_in[w].assign(basis[w].size(), -1);
    pivot_out[w].assign(basis[w].size(), false);
  }

  for (int w = 0; w < n; ++w) {
    // Columns at pivot rows of the previous matrix must already be zero.
    for (std::size_t c = 0; c < basis[w].size(); ++c)
      if (pivot_in[w][c] >= 0) assert(M[w].col_entries[c].empty());

    while (true) {
      int best_p = -1, br = -1, bc = -1;
      for (std::size_t c = 0; c < M[w].col_entries.size(); ++c)
        for (const auto& [row, p] : M[w].col_entries[c])
          if (best_p < 0 || p < best_p) {
            best_p = p;
            br = row;
            bc = static_cast<int>(c);
          }
      if (best_p < 0) break;

      // Clear the pivot row with column operations; the matching row
      // operations on M[w-1] act on zero rows.
      for (int u : std::set<int>(M[w].row_cols[br])) {
        if (u == bc) continue;
        M[w].col_add(u, bc, M[w].col_entries[u].at(br) - best_p);
      }
      // Clear the pivot column with row operations, mirrored as column
      // operations on M[w+1].
      for (const auto& [v, pv] : std::map<int, int>(M[w].col_entries[bc])) {
        if (v == br) continue;
        const int t = pv - best_p;
        M[w].row_add(v, br, t);
        if (w + 1 < n) M[w + 1].col_add(br, v, t);
      }

      M[w].clear_row(br);
      M[w].clear_col(bc);
      pivot_out[w][bc] = true;
      pivot_in[w + 1][br] = best_p;
    }
  }

  GradedModule out;
  for (int w = 0; w <= n; ++w) {
    for (std::size_t b = 0; b < basis[w].size(); ++b) {
      if (!alive[w][b] || pivot_out[w][b]) continue;
      const Bigrading bg{w - n_minus, q_of[w][b]};
      const int p = pivot_in[w][b];
      if (p < 0)
        ++out.free_ranks[bg];
      else if (p >= 1)
        ++out.torsion[bg][p];
    }
  }
  return out;
}

// Graded Euler characteristic of Khovanov homology.
inline Laurent graded_euler(const GradedModule& kh) {
  Laurent out;
  for (const auto& [bg, d] : kh.dims) out.add_term((bg.i % 2 == 0 ? 1 : -1) * d, bg.q);
  return out;
}

// Jones polynomial by the Kauffman state sum, normalized so the unknot
// gives q + q^-1.
inline Laurent jones_state_sum(const LinkDiagram& d, int max_crossings = kDefaultMaxCrossings) {
  if (d.n() > max_crossings)
    throw SizeLimitError("diagram has " + std::to_string(d.n()) + " crossings, over the limit of " +
                         std::to_string(max_crossings));
  const int np = d.n_plus(), nm = d.n_minus();
  const Laurent circle = Laurent::term(1, 1) + Laurent::term(1, -1);
  Laurent out;
  for (std::uint32_t alpha = 0; alpha < (std::uint32_t{1} << d.n()); ++alpha) {
    const int w = std::popcount(alpha);
    const int k = resolve(d, alpha).circle_count;
    const int sign = (w - nm) % 2 == 0 ? 1 : -1;
    out += Laurent::term(sign, w + np - 2 * nm) * circle.pow(k);
  }
  return out;
}

}  // namespace khbn
