#pragma once

// Smoothing combinatorics on planar diagrams: Kauffman states, circle
// counting, connectivity, splitting crossings, checkerboard coloring and the
// black graph, single-circle states, strand walks.
//
// Smoothing convention for a quadruple (s0,s1,s2,s3) listed counterclockwise
// from the incoming under-strand:
//   0-smoothing joins arc ends (s0,s3) and (s1,s2),
//   1-smoothing joins arc ends (s0,s1) and (s2,s3).
// This is the convention under which the graded Euler characteristic of the
// resolution cube is the unnormalized Jones polynomial of the diagram as
// labeled in the shipped corpus.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "khoma/pd_code.hpp"

namespace khoma {

// Per-crossing smoothing assignment: 0, 1, or UNSMOOTHED.
constexpr int8_t UNSMOOTHED = -1;
using ResolutionWord = std::vector<int8_t>;

inline ResolutionWord empty_word(const PlanarDiagram& d) {
  return ResolutionWord(d.crossing_count(), UNSMOOTHED);
}

inline bool word_is_total(const ResolutionWord& w) {
  return std::none_of(w.begin(), w.end(), [](int8_t s) { return s == UNSMOOTHED; });
}

// Number of 1-smoothings in a word.
inline int ones_count(const ResolutionWord& w) {
  return static_cast<int>(std::count(w.begin(), w.end(), int8_t(1)));
}

inline std::string word_str(const ResolutionWord& w) {
  std::string s;
  s.reserve(w.size());
  for (int8_t v : w) s.push_back(v == UNSMOOTHED ? '-' : char('0' + v));
  return s;
}

// The two arc-end joins produced by smoothing s at quadruple q.
inline std::array<std::pair<int, int>, 2> smoothing_joins(const std::array<int, 4>& q, int8_t s) {
  if (s == 0) return {{{q[0], q[3]}, {q[1], q[2]}}};
  return {{{q[0], q[1]}, {q[2], q[3]}}};
}

namespace detail {

struct Dsu {
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace detail

// Circles of a totally smoothed diagram, each listed as a sorted vector of
// the arc labels it traverses.  Circles are ordered by their minimal arc
// label; free circles are included.
inline std::vector<std::vector<int>> trace_circles(const PlanarDiagram& d,
                                                   const ResolutionWord& w) {
  if (!word_is_total(w)) throw std::invalid_argument("trace_circles: word is not total");
  detail::Dsu dsu(d.arc_count());
  for (int c = 0; c < d.crossing_count(); ++c)
    for (const auto& [a, b] : smoothing_joins(d.quad(c), w[c]))
      dsu.unite(d.arc_index(a), d.arc_index(b));
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < d.arc_count(); ++i) by_root[dsu.find(i)].push_back(d.arcs()[i]);
  std::vector<std::vector<int>> circles;
  for (auto& [root, arcs] : by_root) circles.push_back(std::move(arcs));
  for (int a : d.free_circles()) circles.push_back({a});
  std::sort(circles.begin(), circles.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return circles;
}

inline int count_circles(const PlanarDiagram& d, const ResolutionWord& w) {
  return static_cast<int>(trace_circles(d, w).size());
}

// Connectivity of a partially smoothed diagram: smoothed crossings become
// arc joins, unsmoothed crossings merge all four incident arcs.  Free
// circles count as components.
inline bool is_connected(const PlanarDiagram& d, const ResolutionWord& w) {
  if (d.crossing_count() == 0) return d.free_circles().size() == 1;
  if (!d.free_circles().empty()) return false;
  detail::Dsu dsu(d.arc_count());
  int parts = d.arc_count();
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& q = d.quad(c);
    if (w[c] == UNSMOOTHED) {
      for (int k = 1; k < 4; ++k)
        if (dsu.unite(d.arc_index(q[0]), d.arc_index(q[k]))) --parts;
    } else {
      for (const auto& [a, b] : smoothing_joins(q, w[c]))
        if (dsu.unite(d.arc_index(a), d.arc_index(b))) --parts;
    }
  }
  return parts == 1;
}

// A crossing is splitting when exactly one of its two smoothings disconnects
// the (connected) partially smoothed diagram.
inline bool is_splitting(const PlanarDiagram& d, const ResolutionWord& w, int c) {
  if (w[c] != UNSMOOTHED) throw std::invalid_argument("is_splitting: crossing already smoothed");
  ResolutionWord w0 = w, w1 = w;
  w0[c] = 0;
  w1[c] = 1;
  return is_connected(d, w0) != is_connected(d, w1);
}

// Sign of a splitting crossing: +1 (positive kink) when the 0-smoothing
// disconnects, -1 (negative kink) when the 1-smoothing disconnects.  Forced
// by requiring the bracket recursion to reproduce the R1 factors q^{-1} and
// -q^2.
inline int kink_sign(const PlanarDiagram& d, const ResolutionWord& w, int c) {
  if (w[c] != UNSMOOTHED) throw std::invalid_argument("kink_sign: crossing already smoothed");
  ResolutionWord w0 = w, w1 = w;
  w0[c] = 0;
  w1[c] = 1;
  bool conn0 = is_connected(d, w0);
  bool conn1 = is_connected(d, w1);
  if (conn0 == conn1) throw std::invalid_argument("kink_sign: crossing is not splitting");
  return conn0 ? -1 : +1;
}

// All total words with exactly one circle, in lexicographic word order
// (crossing 1 is the most significant position).
inline std::vector<ResolutionWord> enumerate_k1(const PlanarDiagram& d) {
  int n = d.crossing_count();
  std::vector<ResolutionWord> out;
  if (!d.free_circles().empty()) return out;
  for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
    ResolutionWord w(n);
    for (int c = 0; c < n; ++c) w[c] = int8_t((bits >> (n - 1 - c)) & 1);
    if (count_circles(d, w) == 1) out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Checkerboard coloring and the black graph.

struct BlackGraph {
  // Face indices (into PlanarDiagram::faces()) of the black regions.
  std::vector<int> vertices;
  // One edge per crossing, as indices into `vertices`; edges[c] belongs to
  // crossing c.
  std::vector<std::pair<int, int>> edges;
  // The smoothing (0 or 1) that joins the two black regions at each crossing.
  std::vector<int8_t> black_smoothing;
  int white_face = -1;  // the marked unbounded face
};

// Chessboard 2-coloring with the marked face white; one edge per crossing
// between the two black regions meeting there.  The marked face defaults to
// the face at the first corner of crossing 1.
inline BlackGraph black_graph(const PlanarDiagram& d) {
  if (d.crossing_count() == 0 || !is_connected(d, empty_word(d)))
    throw std::invalid_argument("black_graph: diagram must be connected with at least 1 crossing");
  const auto& faces = d.faces();
  int white = d.marked_face().value_or(0);

  // color faces across arcs: the two sides of the arc end (c,k) are the
  // corners k and k-1 at c.
  std::vector<int> color(faces.count, -1);
  color[white] = 0;  // 0 = white, 1 = black
  std::vector<int> queue{white};
  std::vector<std::vector<int>> adj(faces.count);
  for (int label : d.arcs()) {
    const Dart& e = d.arc_ends(label)[0];
    int f1 = faces.face_of_corner[e.crossing][e.slot];
    int f2 = faces.face_of_corner[e.crossing][(e.slot + 3) % 4];
    adj[f1].push_back(f2);
    adj[f2].push_back(f1);
  }
  while (!queue.empty()) {
    int f = queue.back();
    queue.pop_back();
    for (int g : adj[f]) {
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        queue.push_back(g);
      } else if (color[g] == color[f]) {
        throw std::logic_error("black_graph: checkerboard coloring failed");
      }
    }
  }

  BlackGraph bg;
  bg.white_face = white;
  std::map<int, int> vertex_of_face;
  for (int f = 0; f < faces.count; ++f)
    if (color[f] == 1) {
      vertex_of_face[f] = static_cast<int>(bg.vertices.size());
      bg.vertices.push_back(f);
    }
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& fc = faces.face_of_corner[c];
    // corners alternate colors around a crossing; the 0-smoothing merges the
    // regions at corners 0 and 2, the 1-smoothing those at corners 1 and 3.
    if (color[fc[0]] != color[fc[2]] || color[fc[1]] != color[fc[3]] ||
        color[fc[0]] == color[fc[1]])
      throw std::logic_error("black_graph: corner colors do not alternate");
    if (color[fc[0]] == 1) {
      bg.black_smoothing.push_back(0);
      bg.edges.emplace_back(vertex_of_face.at(fc[0]), vertex_of_face.at(fc[2]));
    } else {
      bg.black_smoothing.push_back(1);
      bg.edges.emplace_back(vertex_of_face.at(fc[1]), vertex_of_face.at(fc[3]));
    }
  }
  return bg;
}

// All spanning trees as sorted lists of edge (= crossing) indices, in
// lexicographic order.
inline std::vector<std::vector<int>> enumerate_spanning_trees(const BlackGraph& g) {
  int nv = static_cast<int>(g.vertices.size());
  int ne = static_cast<int>(g.edges.size());
  std::vector<std::vector<int>> trees;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int next_edge) -> void {
    if (static_cast<int>(chosen.size()) == nv - 1) {
      detail::Dsu dsu(nv);
      int merges = 0;
      for (int e : chosen)
        if (dsu.unite(g.edges[e].first, g.edges[e].second)) ++merges;
      if (merges == nv - 1) trees.push_back(chosen);
      return;
    }
    if (next_edge >= ne) return;
    if (ne - next_edge < nv - 1 - static_cast<int>(chosen.size())) return;
    chosen.push_back(next_edge);
    self(self, next_edge + 1);
    chosen.pop_back();
    self(self, next_edge + 1);
  };
  rec(rec, 0);
  return trees;
}

// Spanning tree <-> single-circle state: black smoothing exactly at the tree
// edges.  Verified to be a bijection onto enumerate_k1.
inline std::vector<std::pair<std::vector<int>, ResolutionWord>> tree_state_bijection(
    const PlanarDiagram& d) {
  BlackGraph g = black_graph(d);
  auto trees = enumerate_spanning_trees(g);
  std::vector<std::pair<std::vector<int>, ResolutionWord>> out;
  std::set<ResolutionWord> seen;
  for (const auto& tree : trees) {
    ResolutionWord w(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c) w[c] = int8_t(1 - g.black_smoothing[c]);
    for (int e : tree) w[e] = g.black_smoothing[e];
    if (count_circles(d, w) != 1)
      throw std::logic_error("tree_state_bijection: tree state has more than one circle");
    if (!seen.insert(w).second)
      throw std::logic_error("tree_state_bijection: duplicate state");
    out.emplace_back(tree, std::move(w));
  }
  auto k1 = enumerate_k1(d);
  if (seen.size() != k1.size() ||
      !std::all_of(k1.begin(), k1.end(), [&](const auto& w) { return seen.count(w); }))
    throw std::logic_error("tree_state_bijection: not a bijection onto K1");
  return out;
}

// ---------------------------------------------------------------------------
// Strand walks: components, alternation, orientation, writhe.

// Walks every strand; returns for each arc the component it belongs to and
// records per-component closed walks as sequences of (arc, entering dart).
struct StrandWalk {
  int component_count = 0;
  std::vector<int> arc_component;            // by arc index
  std::vector<std::vector<Dart>> entries;    // per component: darts entered, in walk order
  std::vector<std::vector<int>> walk_arcs;   // per component: arcs in walk order
};

inline StrandWalk walk_strands(const PlanarDiagram& d) {
  StrandWalk sw;
  sw.arc_component.assign(d.arc_count(), -1);
  for (int start = 0; start < d.arc_count(); ++start) {
    if (sw.arc_component[start] != -1) continue;
    int comp = sw.component_count++;
    sw.entries.emplace_back();
    sw.walk_arcs.emplace_back();
    int arc = start;
    Dart into = d.arc_ends(d.arcs()[arc])[1];  // travel ends[0] -> ends[1]
    while (true) {
      sw.arc_component[arc] = comp;
      sw.walk_arcs[comp].push_back(arc);
      sw.entries[comp].push_back(into);
      // pass straight through the crossing
      int out_slot = (into.slot + 2) % 4;
      int next_label = d.quad(into.crossing)[out_slot];
      const auto& e = d.arc_ends(next_label);
      Dart here{into.crossing, out_slot};
      into = (e[0] == here) ? e[1] : e[0];
      int next = d.arc_index(next_label);
      if (next == start) break;
      arc = next;
    }
  }
  return sw;
}

// Link components (free circles included).
inline int component_count(const PlanarDiagram& d) {
  int from_circles = static_cast<int>(d.free_circles().size());
  if (d.crossing_count() == 0) return from_circles;
  return walk_strands(d).component_count + from_circles;
}

inline bool is_knot(const PlanarDiagram& d) { return component_count(d) == 1; }

// True when every strand alternates over/under passes.
inline bool is_alternating(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) return true;
  StrandWalk sw = walk_strands(d);
  for (const auto& walk : sw.entries) {
    int m = static_cast<int>(walk.size());
    for (int t = 0; t < m; ++t) {
      bool under_now = walk[t].slot % 2 == 0;
      bool under_next = walk[(t + 1) % m].slot % 2 == 0;
      if (under_now == under_next) return false;
    }
  }
  return true;
}

// No splitting crossing (in particular no R1 kink).
inline bool is_reduced(const PlanarDiagram& d) {
  ResolutionWord w = empty_word(d);
  for (int c = 0; c < d.crossing_count(); ++c)
    if (is_splitting(d, w, c)) return false;
  return true;
}

// Crossing signs for the canonical orientation (each component traversed
// from its minimal arc, ends[0] -> ends[1]).  +1 when the over-strand enters
// at the slot counterclockwise-adjacent to the incoming under slot.
inline std::vector<int> crossing_signs(const PlanarDiagram& d) {
  StrandWalk sw = walk_strands(d);
  // incoming[c][slot] = true when the strand enters crossing c at this slot
  std::vector<std::array<bool, 4>> incoming(d.crossing_count(), {false, false, false, false});
  for (const auto& walk : sw.entries)
    for (const Dart& in : walk) incoming[in.crossing][in.slot] = true;
  std::vector<int> signs(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    int under_in = incoming[c][0] ? 0 : 2;
    int over_in = incoming[c][1] ? 1 : 3;
    signs[c] = (over_in == (under_in + 1) % 4) ? +1 : -1;
  }
  return signs;
}

inline int writhe(const PlanarDiagram& d) {
  auto s = crossing_signs(d);
  return std::accumulate(s.begin(), s.end(), 0);
}

// Through-plane mirror: switch every crossing (rotate each quadruple).
inline PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<std::array<int, 4>> quads;
  quads.reserve(d.crossing_count());
  for (const auto& q : d.crossings()) quads.push_back({q[1], q[2], q[3], q[0]});
  return PlanarDiagram(std::move(quads), d.free_circles(), std::nullopt);
}

// ---------------------------------------------------------------------------
// Diagram surgery.

// Connected sum: cut arc1 in d1 and arc2 in d2 and join the loose ends with
// two parallel strands.  d2's arcs are relabeled above d1's.
inline PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2, int arc1,
                                   int arc2) {
  if (!d1.has_arc(arc1) || !d2.has_arc(arc2))
    throw std::invalid_argument("connected_sum: arc label not present");
  int offset = d1.arcs().empty() ? 0 : *std::max_element(d1.arcs().begin(), d1.arcs().end());
  auto splice = [&](bool swap_pairing) {
    std::vector<std::array<int, 4>> quads = d1.crossings();
    for (const auto& q : d2.crossings()) {
      std::array<int, 4> shifted;
      for (int k = 0; k < 4; ++k) shifted[k] = q[k] + offset;
      quads.push_back(shifted);
    }
    int n1 = d1.crossing_count();
    Dart p2 = d1.arc_ends(arc1)[1];
    auto ends2 = d2.arc_ends(arc2);
    Dart q1{ends2[0].crossing + n1, ends2[0].slot};
    Dart q2{ends2[1].crossing + n1, ends2[1].slot};
    if (swap_pairing) std::swap(q1, q2);
    // strand p1 -> q1 keeps label arc1; strand p2 -> q2 takes label arc2+offset
    quads[q1.crossing][q1.slot] = arc1;
    quads[p2.crossing][p2.slot] = arc2 + offset;
    return PlanarDiagram(std::move(quads), {}, std::nullopt);
  };
  // One of the two end pairings matches the rotation systems planarly.
  try {
    return splice(false);
  } catch (const ParseError&) {
    return splice(true);
  }
}

// Replace crossing c by one of its smoothings, concatenating the joined
// arcs.  Arc classes left with no crossing ends become free circles.
inline PlanarDiagram smooth_crossing(const PlanarDiagram& d, int c, int8_t s) {
  detail::Dsu dsu(d.arc_count());
  for (const auto& [a, b] : smoothing_joins(d.quad(c), s))
    dsu.unite(d.arc_index(a), d.arc_index(b));
  // class representative = smallest member label
  std::vector<int> rep(d.arc_count());
  for (int i = 0; i < d.arc_count(); ++i) {
    int r = dsu.find(i);
    rep[i] = d.arcs()[r];
    for (int k = 0; k < d.arc_count(); ++k)
      if (dsu.find(k) == r) rep[i] = std::min(rep[i], d.arcs()[k]);
  }
  std::vector<std::array<int, 4>> quads;
  std::map<int, int> occurrences;
  for (int cc = 0; cc < d.crossing_count(); ++cc) {
    if (cc == c) continue;
    std::array<int, 4> q;
    for (int k = 0; k < 4; ++k) {
      q[k] = rep[d.arc_index(d.quad(cc)[k])];
      occurrences[q[k]] += 1;
    }
    quads.push_back(q);
  }
  std::vector<int> free_circles = d.free_circles();
  for (int i = 0; i < d.arc_count(); ++i) {
    int label = rep[i];
    if (label == d.arcs()[i] && occurrences.find(label) == occurrences.end())
      free_circles.push_back(label);
  }
  std::sort(free_circles.begin(), free_circles.end());
  free_circles.erase(std::unique(free_circles.begin(), free_circles.end()), free_circles.end());
  return PlanarDiagram(std::move(quads), std::move(free_circles), std::nullopt);
}

// Closure of a braid word on `strands` strands.  Letter +i is the generator
// with the strand at position i crossing over position i+1; -i its inverse.
inline PlanarDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("braid_closure: need at least one strand");
  std::vector<int> at(strands);        // current arc label per position
  std::iota(at.begin(), at.end(), 1);  // initial arcs 1..strands
  int next_arc = strands + 1;
  std::vector<std::array<int, 4>> quads;
  std::vector<bool> strand_used(strands, false);
  for (int letter : word) {
    int i = std::abs(letter) - 1;
    if (i < 0 || i + 1 >= strands) throw std::invalid_argument("braid_closure: bad letter");
    int a = at[i], b = at[i + 1];
    int e = next_arc++, f = next_arc++;
    if (letter > 0)
      quads.push_back({b, a, e, f});  // position i passes over
    else
      quads.push_back({a, e, f, b});  // position i passes under
    at[i] = e;
    at[i + 1] = f;
    strand_used[i] = strand_used[i + 1] = true;
  }
  // close up: final arc at position p is the same strand as initial arc p+1
  std::map<int, int> relabel;
  std::vector<int> free_circles;
  for (int p = 0; p < strands; ++p) {
    if (at[p] == p + 1) {
      free_circles.push_back(p + 1);  // strand never crossed anything
    } else {
      relabel[at[p]] = p + 1;
    }
  }
  for (auto& q : quads)
    for (int k = 0; k < 4; ++k)
      if (auto it = relabel.find(q[k]); it != relabel.end()) q[k] = it->second;
  return PlanarDiagram(std::move(quads), std::move(free_circles), std::nullopt);
}

}  // namespace khoma
