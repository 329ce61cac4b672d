#pragma once

// The shipped diagram corpus: small knots and links covering every checker's
// preconditions at <= 10 crossings.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "khoma/diagram.hpp"

namespace khoma {

struct CorpusEntry {
  std::string name;
  std::string pd;  // PD-code text
  bool alternating = false;
  bool reduced = false;
  int components = 0;
  int crossings = 0;

  PlanarDiagram diagram() const { return PlanarDiagram::parse(pd); }
};

namespace detail {

inline CorpusEntry make_entry(const std::string& name, const std::string& pd) {
  CorpusEntry e;
  e.name = name;
  e.pd = pd;
  PlanarDiagram d = PlanarDiagram::parse(pd);
  e.crossings = d.crossing_count();
  e.components = component_count(d);
  e.alternating = is_alternating(d);
  e.reduced = is_reduced(d);
  return e;
}

inline CorpusEntry make_entry(const std::string& name, const PlanarDiagram& d) {
  return make_entry(name, d.str());
}

}  // namespace detail

// Built once, deterministically.  Connected sums are spliced at the lowest
// arc labels of the summands.
inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    using detail::make_entry;
    std::vector<CorpusEntry> out;
    PlanarDiagram trefoil_left = PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    PlanarDiagram trefoil_right = mirror(trefoil_left);

    out.push_back(make_entry("unknot-circle", "O(1)"));
    out.push_back(make_entry("unknot-kink-positive", "X(1,2,2,1)"));
    out.push_back(make_entry("unknot-kink-negative", "X(1,1,2,2)"));
    out.push_back(make_entry("hopf-positive", braid_closure(2, {1, 1})));
    out.push_back(make_entry("hopf-negative", braid_closure(2, {-1, -1})));
    out.push_back(make_entry("trefoil-left", trefoil_left));
    out.push_back(make_entry("trefoil-right", trefoil_right));
    out.push_back(make_entry("figure-eight", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"));
    out.push_back(make_entry("5_1", braid_closure(2, {1, 1, 1, 1, 1})));
    out.push_back(make_entry("5_2", "X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)"));
    out.push_back(make_entry(
        "6_1", "X(1,4,2,5) X(7,10,8,11) X(3,9,4,8) X(9,3,10,2) X(5,12,6,1) X(11,6,12,7)"));
    out.push_back(make_entry(
        "6_2", "X(1,4,2,5) X(5,10,6,11) X(3,9,4,8) X(9,3,10,2) X(7,12,8,1) X(11,6,12,7)"));
    out.push_back(make_entry(
        "6_3", "X(4,2,5,1) X(8,4,9,3) X(12,9,1,10) X(10,5,11,6) X(6,11,7,12) X(2,8,3,7)"));
    out.push_back(make_entry("8-19-nonalternating", braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2})));
    out.push_back(make_entry("granny-sum", connected_sum(trefoil_left, trefoil_left, 1, 1)));
    out.push_back(make_entry("square-sum", connected_sum(trefoil_left, trefoil_right, 1, 1)));
    return out;
  }();
  return entries;
}

inline const CorpusEntry* corpus_find(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace khoma
