#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "khbn/chain.hpp"
#include "khbn/cube.hpp"
#include "khbn/homology.hpp"
#include "khbn/laurent.hpp"
#include "khbn/linalg.hpp"

namespace khbn {

struct CheckFailure {
  std::string alpha;
  std::string labels;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string check;
  bool pass = true;
  std::vector<CheckFailure> failures;

  static constexpr std::size_t kFailureCap = 8;

  void fail(std::string alpha, std::string labels, std::string lhs, std::string rhs) {
    pass = false;
    if (failures.size() < kFailureCap)
      failures.push_back(CheckFailure{std::move(alpha), std::move(labels), std::move(lhs), std::move(rhs)});
  }

  std::string line() const {
    if (pass) return "check " + check + ": pass";
    std::string s = "check " + check + ": FAIL";
    if (!failures.empty()) s += " (first at alpha=" + failures.front().alpha + " labels=" + failures.front().labels + ")";
    return s;
  }
};

// Injection points so the negative-control tests can corrupt a single map
// and watch the matching check fail.
struct VerifyHooks {
  std::function<ChainBN(const Cube&, const EdgeSurgery&, const Labeling&)> edge_d = edge_map_d;
  std::function<ChainBN(const Cube&, const EdgeSurgery&, const Labeling&)> edge_h = edge_map_h;
  std::function<ChainBN(const Cube&, int, const ChainBN&)> k_map = map_K;
  std::function<ChainBN(const Cube&, const ChainBN&)> iota = map_iota;
};

namespace detail {

template <typename EdgeFn>
inline ChainBN hook_apply(const Cube& cube, const ChainBN& chain, const EdgeFn& fn) {
  ChainBN out;
  for (const auto& [lab, coeff] : chain.terms())
    for (int j = 0; j < cube.n(); ++j) {
      if ((lab.alpha >> j) & 1u) continue;
      const ChainBN image = fn(cube, cube.edge(lab.alpha, j), lab);
      for (const auto& [tlab, tc] : image.terms())
        for (int p : coeff.support()) out.add(tlab, tc.shifted(p));
    }
  return out;
}

inline std::vector<Labeling> c1_basis(const Cube& cube) {
  std::vector<Labeling> out;
  for (const Labeling& lab : all_labelings(cube))
    if (!basepoint_is_x(cube, lab)) out.push_back(lab);
  return out;
}

}  // namespace detail

// d*d = 0 and (d + Hh)^2 = 0 on every labeling.
inline CheckReport check_d_squared(const Cube& cube, const VerifyHooks& hooks = {}) {
  CheckReport rep{"d_squared"};
  auto d = [&](const ChainBN& c) { return detail::hook_apply(cube, c, hooks.edge_d); };
  auto h = [&](const ChainBN& c) { return detail::hook_apply(cube, c, hooks.edge_h); };
  auto dbn = [&](const ChainBN& c) { return d(c) + h(c).shifted(1); };
  for (const Labeling& lab : detail::all_labelings(cube)) {
    const ChainBN b(lab);
    if (const ChainBN dd = d(d(b)); !dd.is_zero())
      rep.fail(alpha_to_string(cube, lab.alpha), labels_to_string(cube, lab) + " [d*d]", chain_to_string(cube, dd),
               "0");
    if (const ChainBN dd = dbn(dbn(b)); !dd.is_zero())
      rep.fail(alpha_to_string(cube, lab.alpha), labels_to_string(cube, lab) + " [(d+Hh)^2]",
               chain_to_string(cube, dd), "0");
  }
  return rep;
}

// Shumakovitch identity f = [K_0, d] on the basis of C_1, all maps
// extended by zero.
inline CheckReport check_k0(const Cube& cube, const VerifyHooks& hooks = {}) {
  CheckReport rep{"k0"};
  auto d = [&](const ChainBN& c) { return detail::hook_apply(cube, c, hooks.edge_d); };
  for (const Labeling& lab : detail::c1_basis(cube)) {
    const ChainBN b(lab);
    const ChainBN lhs = map_f(cube, b);
    const ChainBN rhs = hooks.k_map(cube, 0, d(b)) + d(hooks.k_map(cube, 0, b));
    if (lhs != rhs)
      rep.fail(alpha_to_string(cube, lab.alpha), labels_to_string(cube, lab), chain_to_string(cube, lhs),
               chain_to_string(cube, rhs));
  }
  return rep;
}

// Ladder identity [K_i, h] + [K_{i+1}, d] = 0 on the basis of C_1 for
// 0 <= i <= i_max (default: the K-truncation bound).
inline CheckReport check_ladder(const Cube& cube, int i_max = -1, const VerifyHooks& hooks = {}) {
  CheckReport rep{"ladder"};
  if (i_max < 0) i_max = k_truncation_bound(cube);
  auto d = [&](const ChainBN& c) { return detail::hook_apply(cube, c, hooks.edge_d); };
  auto h = [&](const ChainBN& c) { return detail::hook_apply(cube, c, hooks.edge_h); };
  for (const Labeling& lab : detail::c1_basis(cube)) {
    const ChainBN b(lab);
    for (int i = 0; i <= i_max; ++i) {
      const ChainBN lhs = hooks.k_map(cube, i, h(b)) + h(hooks.k_map(cube, i, b));
      const ChainBN rhs = hooks.k_map(cube, i + 1, d(b)) + d(hooks.k_map(cube, i + 1, b));
      if (lhs + rhs != ChainBN{})
        rep.fail(alpha_to_string(cube, lab.alpha), labels_to_string(cube, lab) + " i=" + std::to_string(i),
                 chain_to_string(cube, lhs), chain_to_string(cube, rhs));
    }
  }
  return rep;
}

// f = [K, d + Hh] with K = sum_i H^i K_i, on the basis of C_1.
inline CheckReport check_full_homotopy(const Cube& cube, const VerifyHooks& hooks = {}) {
  CheckReport rep{"full_homotopy"};
  auto d = [&](const ChainBN& c) { return detail::hook_apply(cube, c, hooks.edge_d); };
  auto h = [&](const ChainBN& c) { return detail::hook_apply(cube, c, hooks.edge_h); };
  auto dbn = [&](const ChainBN& c) { return d(c) + h(c).shifted(1); };
  auto K = [&](const ChainBN& c) {
    ChainBN out;
    for (int i = 0; i < k_truncation_bound(cube); ++i) out += hooks.k_map(cube, i, c).shifted(i);
    return out;
  };
  for (const Labeling& lab : detail::c1_basis(cube)) {
    const ChainBN b(lab);
    const ChainBN lhs = map_f(cube, b);
    const ChainBN rhs = K(dbn(b)) + dbn(K(b));
    if (lhs != rhs)
      rep.fail(alpha_to_string(cube, lab.alpha), labels_to_string(cube, lab), chain_to_string(cube, lhs),
               chain_to_string(cube, rhs));
  }
  return rep;
}

// iota = I + HK is a chain map ([iota, d + Hh] = 0), f = [I, h] holds
// directly, and iota is bijective in each bidegree.
inline CheckReport check_iota(const Cube& cube, const VerifyHooks& hooks = {}) {
  CheckReport rep{"iota"};
  auto d = [&](const ChainBN& c) { return detail::hook_apply(cube, c, hooks.edge_d); };
  auto h = [&](const ChainBN& c) { return detail::hook_apply(cube, c, hooks.edge_h); };
  auto dbn = [&](const ChainBN& c) { return d(c) + h(c).shifted(1); };

  const std::vector<Labeling> c1 = detail::c1_basis(cube);
  for (const Labeling& lab : c1) {
    const ChainBN b(lab);
    if (const ChainBN comm = hooks.iota(cube, dbn(b)) + dbn(hooks.iota(cube, b)); !comm.is_zero())
      rep.fail(alpha_to_string(cube, lab.alpha), labels_to_string(cube, lab) + " [iota,d+Hh]",
               chain_to_string(cube, comm), "0");
    const ChainBN lhs = map_f(cube, b);
    const ChainBN rhs = map_I(cube, h(b)) + h(map_I(cube, b));
    if (lhs != rhs)
      rep.fail(alpha_to_string(cube, lab.alpha), labels_to_string(cube, lab) + " f=[I,h]", chain_to_string(cube, lhs),
               chain_to_string(cube, rhs));
  }

  // Bidegree bijectivity. At homological degree i, the slice of C_1 at
  // quantum grading q has basis {H^p b : q(b) - 2p = q}; iota sends it to
  // the slice of C_x at q - 2. Below the smallest labeling grading both
  // towers are shifted copies of higher ones, so checking q down to
  // min q - 2 covers everything.
  std::map<int, std::vector<Labeling>> c1_by_i, cx_by_i;
  for (const Labeling& lab : detail::all_labelings(cube))
    (basepoint_is_x(cube, lab) ? cx_by_i : c1_by_i)[grading(cube, lab).i].push_back(lab);
  for (const auto& [i, dom] : c1_by_i) {
    int q_min = grading(cube, dom.front()).q, q_max = q_min;
    for (const Labeling& lab : dom) {
      const int q = grading(cube, lab).q;
      q_min = std::min(q_min, q);
      q_max = std::max(q_max, q);
    }
    static const std::vector<Labeling> kEmpty;
    const auto cod_it = cx_by_i.find(i);
    const std::vector<Labeling>& cod = cod_it == cx_by_i.end() ? kEmpty : cod_it->second;
    for (int q = q_max; q >= q_min - 2; --q) {
      std::vector<std::pair<Labeling, int>> dom_slice;  // (labeling, H power)
      for (const Labeling& lab : dom) {
        const int qb = grading(cube, lab).q;
        if (qb >= q && (qb - q) % 2 == 0) dom_slice.emplace_back(lab, (qb - q) / 2);
      }
      std::map<std::pair<Labeling, int>, int> cod_index;
      for (const Labeling& lab : cod) {
        const int qb = grading(cube, lab).q;
        if (qb >= q - 2 && (qb - (q - 2)) % 2 == 0) {
          const int idx = static_cast<int>(cod_index.size());
          cod_index.emplace(std::make_pair(lab, (qb - (q - 2)) / 2), idx);
        }
      }
      if (dom_slice.empty() && cod_index.empty()) continue;
      const std::string where = "i=" + std::to_string(i) + " q=" + std::to_string(q);
      if (dom_slice.size() != cod_index.size()) {
        rep.fail("-", where + " iota bijectivity", "dim C_1 slice = " + std::to_string(dom_slice.size()),
                 "dim C_x slice = " + std::to_string(cod_index.size()));
        continue;
      }
      MatrixF2 m(static_cast<int>(cod_index.size()), static_cast<int>(dom_slice.size()));
      for (std::size_t col = 0; col < dom_slice.size(); ++col) {
        const auto& [lab, p] = dom_slice[col];
        const ChainBN image = hooks.iota(cube, ChainBN(lab));
        for (const auto& [tlab, coeff] : image.terms())
          for (int tp : coeff.support()) m.flip(cod_index.at({tlab, tp + p}), static_cast<int>(col));
      }
      if (m.rank() != static_cast<int>(dom_slice.size()))
        rep.fail("-", where + " iota bijectivity", "rank " + std::to_string(m.rank()),
                 "dim " + std::to_string(dom_slice.size()));
    }
  }
  return rep;
}

// Splitting theorem: H(C_BN) = H(C_x) + H(C_1) over F2[H], and the two
// reduced theories agree up to the q-shift of -2 induced by iota.
inline CheckReport check_splitting(const Cube& cube) {
  CheckReport rep{"splitting"};
  const GradedModule full = bn_homology(cube, Reduction::full);
  const GradedModule hx = bn_homology(cube, Reduction::x_sub);
  const GradedModule h1 = bn_homology(cube, Reduction::one_quot);
  GradedModule sum = hx;
  sum += h1;
  if (!(full.free_ranks == sum.free_ranks && full.torsion == sum.torsion))
    rep.fail("-", "module decomposition", "H(C_BN)", "H(C_x) + H(C_1)");
  const GradedModule shifted = h1.q_shifted(-2);
  if (!(hx.free_ranks == shifted.free_ranks && hx.torsion == shifted.torsion))
    rep.fail("-", "reduced comparison", "H(C_x)", "H(C_1) shifted by q-2");
  return rep;
}

// Graded Euler characteristic of Khovanov homology against the Kauffman
// state sum for the Jones polynomial.
inline CheckReport check_euler_jones(const Cube& cube) {
  CheckReport rep{"euler_jones"};
  const Laurent jones = jones_state_sum(cube.diagram());
  const Laurent euler = graded_euler(kh_homology(cube));
  if (jones != euler) rep.fail("-", "graded Euler characteristic", euler.to_string(), jones.to_string());
  return rep;
}

// Same-link invariance: equal Khovanov dimensions and equal Bar-Natan
// free/torsion decompositions for two diagrams.
inline CheckReport check_invariance_pair(const Cube& a, const Cube& b) {
  CheckReport rep{"invariance_pair"};
  if (kh_homology(a) != kh_homology(b)) rep.fail("-", "khovanov dims", "diagram A", "diagram B");
  const GradedModule ba = bn_homology(a), bb = bn_homology(b);
  if (!(ba.free_ranks == bb.free_ranks && ba.torsion == bb.torsion))
    rep.fail("-", "bar-natan decomposition", "diagram A", "diagram B");
  return rep;
}

}  // namespace khbn
