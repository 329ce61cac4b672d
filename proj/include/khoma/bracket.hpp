#pragma once

// The three routes to the Kauffman bracket (in the q-normalization with
// <O^k> = (q + q^-1)^k and <D> = <D_0> - q <D_1>):
//   * the full state sum over all 2^n Kauffman states,
//   * the closed form for R1-trivial diagrams,
//   * the spanning-tree sum over the leaves of the pruned expansion.

#include <stdexcept>
#include <vector>

#include "khoma/diagram.hpp"
#include "khoma/expansion.hpp"
#include "khoma/laurent.hpp"

namespace khoma {

// (-1)^x q^{2x-y} (q + q^-1)
inline Laurent r1_closed_form(int x, int y) {
  return Laurent::term((x % 2 == 0) ? 1 : -1, 2 * x - y) * Laurent::circle();
}

// Sum over all total words of (-q)^r (q+q^-1)^circles.
inline Laurent bracket_state_sum(const PlanarDiagram& d) {
  int n = d.crossing_count();
  Laurent total;
  for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
    ResolutionWord w(n);
    int r = 0;
    for (int c = 0; c < n; ++c) {
      w[c] = int8_t((bits >> (n - 1 - c)) & 1);
      r += w[c];
    }
    Laurent term = Laurent::circle().pow(count_circles(d, w));
    term.mul_term((r % 2 == 0) ? 1 : -1, r);
    total += term;
  }
  return total;
}

// Closed form for a connected diagram all of whose crossings are splitting.
inline Laurent bracket_r1_trivial(const PlanarDiagram& d) {
  if (!is_connected(d, empty_word(d)))
    throw std::invalid_argument("bracket_r1_trivial: diagram must be connected");
  PeelResult p = peel_kinks(d, empty_word(d));  // throws if not R1-trivial
  return r1_closed_form(p.x, p.y);
}

// Sum over the expansion leaves of (-q)^{r(D,D_S)} <D_S>.
inline Laurent bracket_spanning_tree(const PlanarDiagram& d, const std::vector<int>& numbering) {
  Laurent total;
  for (const auto& leaf : expand(d, numbering)) {
    Laurent term = r1_closed_form(leaf.x, leaf.y);
    term.mul_term((leaf.r_leaf % 2 == 0) ? 1 : -1, leaf.r_leaf);
    total += term;
  }
  return total;
}

inline Laurent bracket_spanning_tree(const PlanarDiagram& d) {
  return bracket_spanning_tree(d, identity_numbering(d));
}

}  // namespace khoma
