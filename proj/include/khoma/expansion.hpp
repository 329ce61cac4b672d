#pragma once

// Connectivity-pruned binary expansion of a connected diagram.
//
// Crossings are visited in a given numbering; a crossing is smoothed both
// ways only when both results stay connected, otherwise it is left in place
// and the walk moves on.  Every leaf is then connected with all remaining
// crossings splitting (R1-trivial), carries a unique single-circle Kauffman
// state, and the leaves are in bijection with the single-circle states of
// the diagram.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "khoma/diagram.hpp"

namespace khoma {

// Connected components of a partially smoothed diagram; returns the
// component id per arc index.
inline std::pair<int, std::vector<int>> smoothed_components(const PlanarDiagram& d,
                                                            const ResolutionWord& w) {
  detail::Dsu dsu(d.arc_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& q = d.quad(c);
    if (w[c] == UNSMOOTHED) {
      for (int k = 1; k < 4; ++k) dsu.unite(d.arc_index(q[0]), d.arc_index(q[k]));
    } else {
      for (const auto& [a, b] : smoothing_joins(q, w[c]))
        dsu.unite(d.arc_index(a), d.arc_index(b));
    }
  }
  std::map<int, int> root_id;
  std::vector<int> comp(d.arc_count());
  for (int i = 0; i < d.arc_count(); ++i) {
    int r = dsu.find(i);
    auto [it, fresh] = root_id.emplace(r, static_cast<int>(root_id.size()));
    comp[i] = it->second;
  }
  return {static_cast<int>(root_id.size()), comp};
}

// One untwisting step of an R1-trivial diagram.
struct Peel {
  int crossing = -1;
  int sign = 0;               // +1 positive kink, -1 negative kink
  int8_t disconnecting = -1;  // the smoothing that splits off the loop
  int loop_arc = -1;          // an arc on the split-off side
};

struct PeelResult {
  std::vector<Peel> peels;  // innermost kinks first
  int x = 0;                // negative kinks
  int y = 0;                // positive kinks
  ResolutionWord state;     // word after taking the connected smoothing at every kink
};

// Untwist a connected, R1-trivial partially smoothed diagram by repeatedly
// removing an innermost kink (one whose loop holds no other remaining
// crossing).  Signs are evaluated on the current diagram at peel time.
// Throws std::invalid_argument when a remaining crossing is not splitting.
inline PeelResult peel_kinks(const PlanarDiagram& d, ResolutionWord w) {
  PeelResult out;
  std::vector<int> remaining;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (w[c] == UNSMOOTHED) remaining.push_back(c);

  while (!remaining.empty()) {
    int picked = -1;
    Peel peel;
    for (int c : remaining) {
      ResolutionWord w0 = w, w1 = w;
      w0[c] = 0;
      w1[c] = 1;
      bool conn0 = is_connected(d, w0);
      bool conn1 = is_connected(d, w1);
      if (conn0 == conn1)
        throw std::invalid_argument("peel_kinks: diagram is not R1-trivial");
      int8_t disc = conn0 ? int8_t(1) : int8_t(0);
      ResolutionWord wd = w;
      wd[c] = disc;
      auto [ncomp, comp] = smoothed_components(d, wd);
      auto joins = smoothing_joins(d.quad(c), disc);
      int side0 = comp[d.arc_index(joins[0].first)];
      int side1 = comp[d.arc_index(joins[1].first)];
      // crossingless sides
      std::vector<bool> has_crossing(ncomp, false);
      for (int other : remaining)
        if (other != c) has_crossing[comp[d.arc_index(d.quad(other)[0])]] = true;
      int loop_side;
      if (!has_crossing[side0] && !has_crossing[side1]) {
        // both sides bare: take the side avoiding the smallest arc label
        std::vector<int> min_arc(ncomp, -1);
        for (int a = 0; a < d.arc_count(); ++a)
          if (min_arc[comp[a]] == -1) min_arc[comp[a]] = d.arcs()[a];
        loop_side = (min_arc[side0] > min_arc[side1]) ? side0 : side1;
      } else if (!has_crossing[side0]) {
        loop_side = side0;
      } else if (!has_crossing[side1]) {
        loop_side = side1;
      } else {
        continue;  // not innermost yet
      }
      peel.crossing = c;
      peel.sign = conn0 ? -1 : +1;
      peel.disconnecting = disc;
      peel.loop_arc = (loop_side == side0) ? joins[0].first : joins[1].first;
      picked = c;
      break;
    }
    if (picked == -1) throw std::logic_error("peel_kinks: no innermost kink found");
    (peel.sign > 0 ? out.y : out.x) += 1;
    out.peels.push_back(peel);
    w[picked] = int8_t(1 - peel.disconnecting);  // connected smoothing
    remaining.erase(std::find(remaining.begin(), remaining.end(), picked));
  }
  out.state = std::move(w);
  return out;
}

struct ExpansionLeaf {
  ResolutionWord branch;    // UNSMOOTHED at the skipped (splitting) crossings
  int r_leaf = 0;           // 1-smoothings applied along the branch
  std::vector<Peel> peels;  // untwisting of the leaf, innermost first
  int x = 0;                // negative kinks of the leaf
  int y = 0;                // positive kinks of the leaf
  int w = 0;                // x - y
  int r_state = 0;          // 1-smoothings in the leaf's single-circle state
  ResolutionWord state;     // that state, a total word
};

inline std::vector<int> identity_numbering(const PlanarDiagram& d) {
  std::vector<int> order(d.crossing_count());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

// Depth-first expansion in `numbering` order (0-branch first).
inline std::vector<ExpansionLeaf> expand(const PlanarDiagram& d,
                                         const std::vector<int>& numbering) {
  if (static_cast<int>(numbering.size()) != d.crossing_count())
    throw std::invalid_argument("expand: numbering size mismatch");
  if (!is_connected(d, empty_word(d)))
    throw std::invalid_argument("expand: diagram must be connected");

  std::vector<ExpansionLeaf> leaves;
  ResolutionWord w = empty_word(d);

  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == d.crossing_count()) {
      ExpansionLeaf leaf;
      leaf.branch = w;
      leaf.r_leaf = ones_count(w);
      PeelResult peeled = peel_kinks(d, w);
      leaf.peels = std::move(peeled.peels);
      leaf.x = peeled.x;
      leaf.y = peeled.y;
      leaf.w = leaf.x - leaf.y;
      leaf.state = std::move(peeled.state);
      leaf.r_state = ones_count(leaf.state);
      if (leaf.r_state != leaf.r_leaf + leaf.y)
        throw std::logic_error("expand: r(D,D_S) = r(D,S) - y(D_S) violated");
      if (count_circles(d, leaf.state) != 1)
        throw std::logic_error("expand: leaf state is not a single circle");
      leaves.push_back(std::move(leaf));
      return;
    }
    int c = numbering[idx];
    ResolutionWord w0 = w, w1 = w;
    w0[c] = 0;
    w1[c] = 1;
    bool conn0 = is_connected(d, w0);
    bool conn1 = is_connected(d, w1);
    if (conn0 && conn1) {
      w[c] = 0;
      self(self, idx + 1);
      w[c] = 1;
      self(self, idx + 1);
      w[c] = UNSMOOTHED;
    } else {
      if (!conn0 && !conn1)
        throw std::logic_error("expand: both smoothings disconnect a connected diagram");
      self(self, idx + 1);  // crossing is splitting here; leave it in place
    }
  };
  rec(rec, 0);
  return leaves;
}

inline std::vector<ExpansionLeaf> expand(const PlanarDiagram& d) {
  return expand(d, identity_numbering(d));
}

// Bigraded rank table of the module retained by the spanning-tree reduction:
// each leaf contributes rank 1 at (w + r, 2w + r -/+ 1) with r the number of
// 1-smoothings in its state.
inline std::map<std::pair<int, int>, long> spanning_tree_module_ranks(
    const PlanarDiagram& d, const std::vector<int>& numbering) {
  std::map<std::pair<int, int>, long> table;
  for (const auto& leaf : expand(d, numbering)) {
    int i = leaf.w + leaf.r_state;
    int center = 2 * leaf.w + leaf.r_state;
    table[{i, center - 1}] += 1;
    table[{i, center + 1}] += 1;
  }
  return table;
}

inline std::map<std::pair<int, int>, long> spanning_tree_module_ranks(const PlanarDiagram& d) {
  return spanning_tree_module_ranks(d, identity_numbering(d));
}

// Numbering that forces the expansion to isolate a chosen single-circle
// state at an extreme of the kink statistic: mode `lower` puts the
// 0-smoothings of `state` first (the isolated leaf then has w = -n1), mode
// `upper` puts the 1-smoothings first (w = n0).
enum class ExtremalMode { lower, upper };

inline std::vector<int> extremal_numbering(const PlanarDiagram& d, const ResolutionWord& state,
                                           ExtremalMode mode) {
  if (!is_alternating(d) || !is_knot(d))
    throw std::invalid_argument("extremal_numbering: need an alternating knot diagram");
  if (!is_reduced(d))
    throw std::invalid_argument("extremal_numbering: diagram has a splitting crossing");
  if (!word_is_total(state) || count_circles(d, state) != 1)
    throw std::invalid_argument("extremal_numbering: not a single-circle state");
  int8_t first = (mode == ExtremalMode::lower) ? 0 : 1;
  std::vector<int> order;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (state[c] == first) order.push_back(c);
  for (int c = 0; c < d.crossing_count(); ++c)
    if (state[c] != first) order.push_back(c);
  return order;
}

struct AlternatingInvariants {
  bool alternating = false;
  std::optional<int> n0, n1;                // set when alternating
  std::vector<std::pair<int, int>> per_state;  // (n0, n1) per single-circle state
};

// For alternating knot diagrams the number of 1-smoothings is the same in
// every single-circle state; report it (and its complement).
inline AlternatingInvariants alternating_invariants(const PlanarDiagram& d) {
  if (!is_connected(d, empty_word(d)))
    throw std::invalid_argument("alternating_invariants: diagram must be connected");
  AlternatingInvariants out;
  out.alternating = is_alternating(d);
  int n = d.crossing_count();
  for (const auto& s : enumerate_k1(d)) {
    int ones = ones_count(s);
    out.per_state.emplace_back(n - ones, ones);
  }
  if (out.alternating && !out.per_state.empty()) {
    int n1 = out.per_state.front().second;
    for (const auto& [n0s, n1s] : out.per_state)
      if (n1s != n1)
        throw std::logic_error("alternating_invariants: r(D,S) not constant on K1");
    out.n1 = n1;
    out.n0 = n - n1;
  }
  return out;
}

}  // namespace khoma
