#pragma once

// The deformed differential d' = d + Phi on the resolution cube, its
// filtered homology, and the admissible-coloring decomposition over Q.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "khoma/complexes.hpp"
#include "khoma/khovanov.hpp"

namespace khoma {

struct LeeCube {
  ResolutionCube cube;           // generators, grading filtered
  GenMatrix d;                   // Khovanov differential
  GenMatrix phi;                 // degree (1,4) deformation
  explicit LeeCube(const PlanarDiagram& diag) : cube(diag, Grading::filtered) {
    d = cube.edge_entries(khovanov_maps());
    phi = cube.edge_entries(lee_deformation_maps());
    for (const auto& [key, v] : matrix_sum(d, phi)) cube.complex().add_entry(key.first, key.second, v);
    verify_structure();
  }

  // Phi has bidegree (1,4), anticommutes with d, and squares to zero; the
  // cube signs make d Phi + Phi d = 0 entrywise, so d' = d + Phi squares to
  // zero as well.
  void verify_structure() const {
    const BasedComplex& c = cube.complex();
    for (const auto& [key, v] : phi) {
      if (c.gen(key.second).i - c.gen(key.first).i != 1 ||
          c.gen(key.second).j - c.gen(key.first).j != 4)
        throw std::logic_error("lee deformation entry is not of bidegree (1,4)");
    }
    if (!compose(phi, phi).empty()) throw std::logic_error("lee deformation does not square to zero");
    if (!matrix_sum(compose(d, phi), compose(phi, d)).empty())
      throw std::logic_error("lee deformation does not anticommute with d");
    c.verify_d_squared();
  }
};

inline BasedComplex lee_complex(const PlanarDiagram& d) { return LeeCube(d).cube.complex(); }

struct LeeHomology {
  std::map<int, long> q_dims;        // dim over Q per primary degree
  FiltrationTable associated_graded; // dims of F^{i,j}/F^{i,j+1} over Q
  GradedHomology integral;           // integral homology per primary degree
};

inline LeeHomology lee_homology(const PlanarDiagram& d, bool want_integral = true) {
  BasedComplex c = lee_complex(d);
  LeeHomology out;
  out.q_dims = homology_q_dims(c);
  out.associated_graded = filtered_homology_q(c);
  if (want_integral) out.integral = homology_z_igraded(c);
  return out;
}

inline long total_q_dim(const LeeHomology& h) {
  long n = 0;
  for (const auto& [i, dim] : h.q_dims) n += dim;
  return n;
}

// For a one-component diagram the rational homology of d' is concentrated in
// a single primary degree.
inline CheckReport knot_degree_check(const PlanarDiagram& d) {
  if (!is_knot(d)) throw std::invalid_argument("knot_degree_check: diagram is not a knot");
  CheckReport rep;
  BasedComplex c = lee_complex(d);
  auto dims = homology_q_dims(c);
  rep.require(dims.size() == 1, "rational homology spread over several primary degrees");
  if (dims.size() == 1) {
    std::ostringstream msg;
    msg << "rational classes concentrated at i = " << dims.begin()->first;
    rep.note(msg.str());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Admissible colorings.

// Coloring of every strand label (crossing arcs, then free circles) by the
// diagonal basis colors, 0 = a, 1 = b.
using Coloring = std::vector<int8_t>;

inline std::vector<int> strand_labels(const PlanarDiagram& d) {
  std::vector<int> labels = d.arcs();
  labels.insert(labels.end(), d.free_circles().begin(), d.free_circles().end());
  return labels;
}

// Admissible: at every crossing the four incident arc ends are all one color
// or split into two adjacent monochromatic pairs.  Crossing arcs occupy the
// leading entries of the coloring, in arc-index order.
inline bool coloring_admissible(const PlanarDiagram& d, const Coloring& col) {
  for (const auto& q : d.crossings()) {
    int c0 = col[d.arc_index(q[0])], c1 = col[d.arc_index(q[1])];
    int c2 = col[d.arc_index(q[2])], c3 = col[d.arc_index(q[3])];
    bool mono = c0 == c1 && c1 == c2 && c2 == c3;
    bool pair01 = c0 == c1 && c2 == c3 && c0 != c2;
    bool pair03 = c0 == c3 && c1 == c2 && c0 != c1;
    if (!mono && !pair01 && !pair03) return false;
  }
  return true;
}

inline std::vector<Coloring> admissible_colorings(const PlanarDiagram& d) {
  int m = static_cast<int>(strand_labels(d).size());
  if (m > 24) throw std::invalid_argument("admissible_colorings: too many arcs");
  std::vector<Coloring> out;
  for (uint32_t bits = 0; bits < (uint32_t(1) << m); ++bits) {
    Coloring col(m);
    for (int a = 0; a < m; ++a) col[a] = int8_t((bits >> a) & 1);
    if (coloring_admissible(d, col)) out.push_back(std::move(col));
  }
  return out;
}

// The word positions forced by a coloring: two-color crossings take the
// smoothing whose joined pairs are monochromatic, one-color crossings stay.
inline ResolutionWord forced_smoothings(const PlanarDiagram& d, const Coloring& col) {
  ResolutionWord w = empty_word(d);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& q = d.quad(c);
    int c0 = col[d.arc_index(q[0])], c1 = col[d.arc_index(q[1])];
    int c2 = col[d.arc_index(q[2])], c3 = col[d.arc_index(q[3])];
    if (c0 == c1 && c1 == c2 && c2 == c3) continue;  // monochromatic crossing
    if (c0 == c1 && c2 == c3)
      w[c] = 1;  // 1-smoothing joins (s0,s1),(s2,s3)
    else if (c0 == c3 && c1 == c2)
      w[c] = 0;  // 0-smoothing joins (s0,s3),(s1,s2)
    else
      throw std::logic_error("forced_smoothings: coloring not admissible");
  }
  return w;
}

// Bookkeeping of the decomposition of the deformed complex over Q into
// admissible-coloring blocks.
inline CheckReport coloring_decomposition_check(const PlanarDiagram& d) {
  CheckReport rep;
  auto colorings = admissible_colorings(d);

  // (a) dimension bookkeeping: each block is spanned by one colored state
  // per free (monochromatic) crossing assignment
  long total = 0;
  for (const auto& col : colorings) {
    ResolutionWord forced = forced_smoothings(d, col);
    int free_crossings = static_cast<int>(std::count(forced.begin(), forced.end(), UNSMOOTHED));
    total += long(1) << free_crossings;
  }
  ResolutionCube modules(d, Grading::none);
  long cube_dim = modules.complex().alive_count();
  {
    std::ostringstream msg;
    msg << "sum of block dimensions " << total << " vs complex dimension " << cube_dim;
    rep.require(total == cube_dim, msg.str());
  }

  // (b) the differential in the diagonal color basis never connects states
  // with different induced colorings
  GenMatrix dprime = modules.edge_entries(lee_color_maps());
  std::vector<int> labels_list = strand_labels(d);
  std::map<int, int> strand_index;
  for (int k = 0; k < static_cast<int>(labels_list.size()); ++k)
    strand_index[labels_list[k]] = k;
  auto coloring_of_gen = [&](int g) {
    uint32_t word = modules.word(g);
    uint32_t labels = modules.labels(g);
    Coloring col(labels_list.size(), 0);
    const auto& circles = modules.circles(word);
    for (int k = 0; k < static_cast<int>(circles.size()); ++k)
      for (int arc : circles[k]) col[strand_index.at(arc)] = int8_t((labels >> k) & 1);
    return col;
  };
  std::map<Coloring, std::vector<int>> block_gens;
  for (int g = 0; g < modules.complex().gen_slots(); ++g) {
    Coloring col = coloring_of_gen(g);
    if (!coloring_admissible(d, col)) {
      rep.require(false, "colored state induces an inadmissible coloring");
      continue;
    }
    block_gens[col].push_back(g);
  }
  for (const auto& [key, v] : dprime)
    if (coloring_of_gen(key.first) != coloring_of_gen(key.second)) {
      rep.require(false, "deformed differential leaves a coloring block");
      break;
    }

  // (c) blocks with a remaining crossing are acyclic, crossingless blocks are
  // one-dimensional with zero differential
  long crossingless = 0;
  for (const auto& col : colorings) {
    auto it = block_gens.find(col);
    long dim = it == block_gens.end() ? 0 : static_cast<long>(it->second.size());
    ResolutionWord forced = forced_smoothings(d, col);
    bool has_crossing = std::any_of(forced.begin(), forced.end(),
                                    [](int8_t s) { return s == UNSMOOTHED; });
    if (!has_crossing) {
      ++crossingless;
      rep.require(dim == 1, "crossingless block is not one-dimensional");
      continue;
    }
    if (it == block_gens.end()) {
      rep.require(false, "coloring block with crossings is empty");
      continue;
    }
    // homology of the block per primary degree
    std::set<int> in_block(it->second.begin(), it->second.end());
    BasedComplex sub(Grading::none);
    std::map<int, int> local;
    for (int g : it->second)
      local[g] = sub.add_generator(modules.complex().gen(g).i, 0, 0);
    for (const auto& [key, v] : dprime)
      if (in_block.count(key.first) && in_block.count(key.second))
        sub.add_entry(local[key.first], local[key.second], v);
    auto dims = homology_q_dims(sub);
    if (!dims.empty()) {
      std::ostringstream msg;
      msg << "block with " << std::count(forced.begin(), forced.end(), UNSMOOTHED)
          << " crossings is not acyclic";
      rep.require(false, msg.str());
    }
  }

  // (d) crossingless blocks correspond to orientations: 2^k of them
  long k = component_count(d);
  {
    std::ostringstream msg;
    msg << "crossingless blocks " << crossingless << " vs 2^" << k;
    rep.require(crossingless == (long(1) << k), msg.str());
  }
  return rep;
}

}  // namespace khoma
