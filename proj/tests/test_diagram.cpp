#include <catch2/catch_amalgamated.hpp>

#include "khoma/diagram.hpp"
#include "oracles.hpp"

using namespace khoma;

namespace {
PlanarDiagram trefoil() { return PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"); }
PlanarDiagram figure_eight() {
  return PlanarDiagram::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
}
ResolutionWord word_of(const std::string& s) {
  ResolutionWord w;
  for (char c : s) w.push_back(c == '-' ? UNSMOOTHED : int8_t(c - '0'));
  return w;
}
}  // namespace

TEST_CASE("trefoil circle counts") {
  PlanarDiagram d = trefoil();
  CHECK(count_circles(d, word_of("000")) == 2);
  CHECK(count_circles(d, word_of("111")) == 3);
  CHECK(count_circles(d, word_of("100")) == 1);
}

TEST_CASE("kink circle counts cover one and two") {
  PlanarDiagram d = PlanarDiagram::parse("X(1,2,2,1)");
  int c0 = count_circles(d, word_of("0"));
  int c1 = count_circles(d, word_of("1"));
  CHECK(std::min(c0, c1) == 1);
  CHECK(std::max(c0, c1) == 2);
}

TEST_CASE("circle counts agree with the BFS oracle on all words") {
  for (const auto& d :
       {trefoil(), figure_eight(), PlanarDiagram::parse("X(1,2,2,1)"),
        PlanarDiagram::parse("X(1,1,2,2)"), braid_closure(2, {1, 1})}) {
    int n = d.crossing_count();
    for (uint32_t bits = 0; bits < (uint32_t(1) << n); ++bits) {
      ResolutionWord w(n);
      for (int c = 0; c < n; ++c) w[c] = int8_t((bits >> c) & 1);
      CHECK(count_circles(d, w) == oracle::count_circles_bfs(d, w));
    }
  }
}

TEST_CASE("connectivity") {
  PlanarDiagram d = trefoil();
  CHECK(is_connected(d, empty_word(d)));
  CHECK_FALSE(is_connected(d, word_of("000")));  // two circles
  PlanarDiagram two_kinks = PlanarDiagram::parse("X(1,2,2,1) X(3,4,4,3)");
  CHECK_FALSE(is_connected(two_kinks, empty_word(two_kinks)));
}

TEST_CASE("splitting crossings") {
  PlanarDiagram kink = PlanarDiagram::parse("X(1,2,2,1)");
  CHECK(is_splitting(kink, empty_word(kink), 0));

  PlanarDiagram d = trefoil();
  for (int c = 0; c < 3; ++c) CHECK_FALSE(is_splitting(d, empty_word(d), c));
  // after smoothing crossings 1 and 2 into a kinkless state, crossing 0 splits
  CHECK(is_splitting(d, word_of("-00"), 0));
  CHECK(kink_sign(d, word_of("-00"), 0) == +1);

  PlanarDiagram granny = connected_sum(trefoil(), trefoil(), 1, 1);
  REQUIRE(granny.crossing_count() == 6);
  for (int c = 0; c < 6; ++c) CHECK_FALSE(is_splitting(granny, empty_word(granny), c));
}

TEST_CASE("kink signs match the forced convention") {
  PlanarDiagram pos = PlanarDiagram::parse("X(1,2,2,1)");
  PlanarDiagram neg = PlanarDiagram::parse("X(1,1,2,2)");
  CHECK(kink_sign(pos, empty_word(pos), 0) == +1);
  CHECK(kink_sign(neg, empty_word(neg), 0) == -1);
  CHECK_THROWS_AS(kink_sign(trefoil(), empty_word(trefoil()), 0), std::invalid_argument);
}

TEST_CASE("black graph of the trefoil") {
  PlanarDiagram d = trefoil();
  BlackGraph g = black_graph(d);
  CHECK(g.edges.size() == 3);
  long long trees = oracle::spanning_tree_count_matrix_tree(g);
  CHECK(trees == 3);
  CHECK(enumerate_spanning_trees(g).size() == 3);
}

TEST_CASE("black graph of the kink") {
  PlanarDiagram d = PlanarDiagram::parse("X(1,2,2,1)");
  BlackGraph g = black_graph(d);
  CHECK(g.edges.size() == 1);
  CHECK(enumerate_spanning_trees(g).size() == 1);
  CHECK(oracle::spanning_tree_count_matrix_tree(g) == 1);
}

TEST_CASE("figure-eight has five spanning trees and five single-circle states") {
  PlanarDiagram d = figure_eight();
  BlackGraph g = black_graph(d);
  CHECK(oracle::spanning_tree_count_matrix_tree(g) == 5);
  CHECK(enumerate_spanning_trees(g).size() == 5);
  CHECK(enumerate_k1(d).size() == 5);
}

TEST_CASE("single-circle state counts") {
  CHECK(enumerate_k1(PlanarDiagram::parse("X(1,2,2,1)")).size() == 1);
  CHECK(enumerate_k1(trefoil()).size() == 3);
}

TEST_CASE("tree-state bijection holds on small diagrams") {
  for (const auto& d : {PlanarDiagram::parse("X(1,2,2,1)"), trefoil(), figure_eight()}) {
    auto pairs = tree_state_bijection(d);
    CHECK(pairs.size() == enumerate_k1(d).size());
  }
}

TEST_CASE("bijection works for either marked face") {
  PlanarDiagram d = trefoil();
  for (int f = 0; f < d.faces().count; ++f) {
    d.set_marked_face(f);
    auto pairs = tree_state_bijection(d);
    CHECK(pairs.size() == 3);
  }
}

TEST_CASE("clock consequence: black smoothing count constant over K1") {
  for (const auto& d : {trefoil(), figure_eight()}) {
    BlackGraph g = black_graph(d);
    std::set<int> counts;
    for (const auto& s : enumerate_k1(d)) {
      int blacks = 0;
      for (int c = 0; c < d.crossing_count(); ++c)
        if (s[c] == g.black_smoothing[c]) ++blacks;
      counts.insert(blacks);
    }
    CHECK(counts.size() == 1);
    CHECK(*counts.begin() == static_cast<int>(g.vertices.size()) - 1);
  }
}

TEST_CASE("strand walks: components and alternation") {
  CHECK(component_count(trefoil()) == 1);
  CHECK(is_knot(trefoil()));
  CHECK(component_count(braid_closure(2, {1, 1})) == 2);
  CHECK(component_count(PlanarDiagram::parse("O(1) O(2)")) == 2);
  CHECK(is_alternating(trefoil()));
  CHECK(is_alternating(figure_eight()));
  CHECK_FALSE(is_alternating(braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2})));
  CHECK(is_reduced(trefoil()));
  CHECK_FALSE(is_reduced(PlanarDiagram::parse("X(1,2,2,1)")));
}

TEST_CASE("crossing signs and writhe") {
  PlanarDiagram pos_kink = braid_closure(2, {1});
  CHECK(writhe(pos_kink) == 1);
  CHECK(kink_sign(pos_kink, empty_word(pos_kink), 0) == +1);
  PlanarDiagram neg_kink = braid_closure(2, {-1});
  CHECK(writhe(neg_kink) == -1);
  CHECK(writhe(trefoil()) == 3);
  CHECK(writhe(mirror(trefoil())) == -3);
  CHECK(writhe(figure_eight()) == 0);
}

TEST_CASE("mirror is an involution") {
  PlanarDiagram d = trefoil();
  CHECK(mirror(mirror(d)) == d);
}

TEST_CASE("braid closures are valid diagrams") {
  PlanarDiagram t = braid_closure(2, {1, 1, 1});
  CHECK(t.crossing_count() == 3);
  CHECK(is_knot(t));
  CHECK(is_alternating(t));
  CHECK(enumerate_k1(t).size() == 3);
  PlanarDiagram torus34 = braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2});
  CHECK(torus34.crossing_count() == 8);
  CHECK(is_knot(torus34));
  CHECK(is_reduced(torus34));
}

TEST_CASE("connected sum splices arcs") {
  PlanarDiagram g = connected_sum(trefoil(), trefoil(), 1, 1);
  CHECK(g.crossing_count() == 6);
  CHECK(is_knot(g));
  CHECK(is_connected(g, empty_word(g)));
  CHECK(is_alternating(g));
  CHECK_THROWS_AS(connected_sum(trefoil(), trefoil(), 99, 1), std::invalid_argument);
}

TEST_CASE("smoothing a crossing produces the skein diagrams") {
  PlanarDiagram kink = PlanarDiagram::parse("X(1,2,2,1)");
  PlanarDiagram s0 = smooth_crossing(kink, 0, 0);
  PlanarDiagram s1 = smooth_crossing(kink, 0, 1);
  int free0 = static_cast<int>(s0.free_circles().size());
  int free1 = static_cast<int>(s1.free_circles().size());
  CHECK(std::min(free0, free1) == 1);
  CHECK(std::max(free0, free1) == 2);

  PlanarDiagram d = trefoil();
  PlanarDiagram t0 = smooth_crossing(d, 0, 0);
  CHECK(t0.crossing_count() == 2);
  CHECK(t0.arc_count() == 4);
}
