#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "khbn/khbn.hpp"

namespace fixtures {

// 0-crossing unknot (one free loop).
inline constexpr const char* kUnknot = "O @1";
// Unknot with a single positive / negative kink.
inline constexpr const char* kKinkPos = "X+(1,1,2,2)";
inline constexpr const char* kKinkNeg = "X-(1,2,2,1)";
// Positive Hopf link.
inline constexpr const char* kHopf = "X(1,3,2,4) X(4,2,3,1)";
// Left-handed and right-handed trefoils.
inline constexpr const char* kTrefoilLeft = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
inline constexpr const char* kTrefoilRight = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
// Figure-eight knot.
inline constexpr const char* kFig8 = "X(5,1,6,8) X(1,5,2,4) X(7,2,8,3) X(3,6,4,7)";
// Left trefoil with one extra positive kink (4 crossings).
inline constexpr const char* kTrefoil4 = "X-(8,4,2,5) X-(3,6,4,1) X-(5,2,6,3) X+(1,8,7,7)";
// Left trefoil after a Reidemeister 2 move (5 crossings).
inline constexpr const char* kTrefoil5 = "X-(7,4,8,5) X-(5,8,6,9) X-(9,6,10,7) X+(1,3,2,2) X-(10,3,1,4)";
// Granny knot (left trefoil # left trefoil).
inline constexpr const char* kGranny = "X-(7,4,2,5) X-(3,6,4,1) X-(5,2,6,3) X-(1,10,8,11) X-(9,12,10,7) X-(11,8,12,9)";
// Granny knot with one positive and one negative kink (8 crossings).
inline constexpr const char* kKnot8 =
    "X-(7,4,2,5) X-(3,6,4,1) X-(5,16,6,3) X-(14,10,8,11) X-(9,12,10,7) X-(11,8,12,9) X+(1,14,13,13) X-(2,15,15,16)";
// Parseable non-planar garbage whose cube has d*d != 0.
inline constexpr const char* kCorrupted = "X+(1,1,2,3) X+(2,4,3,4) @1";

inline std::vector<const char*> core_suite() {
  return {kUnknot, kKinkPos, kKinkNeg, kHopf, kTrefoilLeft, kTrefoilRight, kFig8};
}

inline int max_arc(const khbn::LinkDiagram& d) {
  int m = 0;
  for (const auto& c : d.crossings)
    for (int a : c.arcs) m = std::max(m, a);
  return m;
}

// Position (crossing, slot) where the arc enters a crossing: the incoming
// under slot a, or the incoming over slot (d at positive crossings, b at
// negative ones).
inline std::pair<int, int> incoming_slot(const khbn::LinkDiagram& d, int arc) {
  for (std::size_t j = 0; j < d.crossings.size(); ++j) {
    const auto& c = d.crossings[j];
    if (c.arcs[0] == arc) return {static_cast<int>(j), 0};
    if (c.sign > 0 && c.arcs[3] == arc) return {static_cast<int>(j), 3};
    if (c.sign < 0 && c.arcs[1] == arc) return {static_cast<int>(j), 1};
  }
  throw std::logic_error("arc has no incoming slot");
}

// Arcs whose incoming slot is well defined. A two-arc over component (as in
// the Hopf code) can leave some arcs without one, so surgeries pick from
// this list.
inline std::vector<int> entry_arcs(const khbn::LinkDiagram& d) {
  std::vector<int> out;
  for (int a : d.arcs()) {
    bool found = false;
    for (const auto& c : d.crossings)
      found = found || c.arcs[0] == a || (c.sign > 0 && c.arcs[3] == a) || (c.sign < 0 && c.arcs[1] == a);
    if (found) out.push_back(a);
  }
  return out;
}

// Reidemeister 1: adds a kink of the given sign on the arc.
inline khbn::LinkDiagram add_kink(khbn::LinkDiagram d, int arc, int sign) {
  const int t = max_arc(d) + 1;
  const int v = max_arc(d) + 2;
  const auto [j, slot] = incoming_slot(d, arc);
  d.crossings[j].arcs[slot] = t;
  if (sign > 0)
    d.crossings.push_back(khbn::Crossing{{arc, t, v, v}, +1});
  else
    d.crossings.push_back(khbn::Crossing{{arc, v, v, t}, -1});
  return d;
}

inline khbn::LinkDiagram shift_arcs(khbn::LinkDiagram d, int by) {
  for (auto& c : d.crossings)
    for (int& a : c.arcs) a += by;
  if (!d.basepoint_on_loop) d.basepoint_arc += by;
  return d;
}

inline khbn::LinkDiagram disjoint_union(khbn::LinkDiagram a, const khbn::LinkDiagram& b) {
  const khbn::LinkDiagram bs = shift_arcs(b, max_arc(a));
  a.crossings.insert(a.crossings.end(), bs.crossings.begin(), bs.crossings.end());
  a.free_loops += bs.free_loops;
  return a;
}

// Splices the component of arc_a into the component of arc_b by swapping
// the two arcs at their incoming slots.
inline khbn::LinkDiagram connect_sum(khbn::LinkDiagram a, const khbn::LinkDiagram& b, int arc_a, int arc_b) {
  const int shift = max_arc(a);
  const khbn::LinkDiagram bs = shift_arcs(b, shift);
  arc_b += shift;
  const std::size_t split = a.crossings.size();
  a.crossings.insert(a.crossings.end(), bs.crossings.begin(), bs.crossings.end());
  const auto [ja, sa] = incoming_slot(a, arc_a);
  a.crossings[ja].arcs[sa] = arc_b;
  for (std::size_t j = split; j < a.crossings.size(); ++j) {
    auto& c = a.crossings[j];
    if (c.arcs[0] == arc_b && (j != static_cast<std::size_t>(ja) || sa != 0)) {
      c.arcs[0] = arc_a;
      return a;
    }
    if (c.sign > 0 && c.arcs[3] == arc_b) {
      c.arcs[3] = arc_a;
      return a;
    }
    if (c.sign < 0 && c.arcs[1] == arc_b) {
      c.arcs[1] = arc_a;
      return a;
    }
  }
  throw std::logic_error("connect_sum: no incoming slot in second summand");
}

// Valid diagrams grown from small seeds by Reidemeister 1 kinks, disjoint
// unions, and connected sums. Deterministic for a fixed seed.
inline std::vector<khbn::LinkDiagram> random_diagrams(int count, int max_crossings, unsigned seed) {
  std::mt19937 rng(seed);
  const std::vector<const char*> seeds = {kKinkPos, kKinkNeg, kHopf, kTrefoilLeft};
  std::vector<khbn::LinkDiagram> out;
  while (static_cast<int>(out.size()) < count) {
    khbn::LinkDiagram d = khbn::parse_pd(seeds[rng() % seeds.size()]);
    while (d.n() < max_crossings && rng() % 3 != 0) {
      const int op = rng() % 4;
      const auto arcs = entry_arcs(d);
      if (op == 0 && d.n() + 1 <= max_crossings) {
        d = add_kink(d, arcs[rng() % arcs.size()], rng() % 2 ? +1 : -1);
      } else if (op == 1 && d.n() + 1 <= max_crossings) {
        const khbn::LinkDiagram k = khbn::parse_pd(rng() % 2 ? kKinkPos : kKinkNeg);
        d = rng() % 2 ? disjoint_union(d, k) : connect_sum(d, k, arcs[rng() % arcs.size()], 1);
      } else if (op == 2 && d.n() + 2 <= max_crossings) {
        const khbn::LinkDiagram h = khbn::parse_pd(kHopf);
        d = connect_sum(d, h, arcs[rng() % arcs.size()], rng() % 2 ? 1 : 4);
      } else {
        break;
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace fixtures
