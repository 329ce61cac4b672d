#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "khoma/bracket.hpp"
#include "khoma/corpus.hpp"

using namespace khoma;

namespace {
PlanarDiagram trefoil() { return PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"); }

Laurent unit_times_circle(Int coeff, int exp) {
  Laurent u = Laurent::term(coeff, exp);
  return u * Laurent::circle();
}
}  // namespace

TEST_CASE("laurent arithmetic basics") {
  Laurent p = Laurent::circle();
  CHECK(p.str() == "q^-1 + q");
  CHECK((p * p).coeff(0) == 2);
  CHECK((p - p).is_zero());
  Laurent m = Laurent::term(-1, 2) * p;
  CHECK(m.coeff(3) == -1);
  CHECK(m.coeff(1) == -1);
  CHECK(p.pow(0) == Laurent::one());
  // multiplying by a unit preserves exponent gaps mod 2
  Laurent shifted = p;
  shifted.mul_term(-1, 3);
  std::set<int> gaps, gaps2;
  int prev = 0;
  bool first = true;
  for (auto& [e, c] : p.coeffs()) {
    if (!first) gaps.insert((e - prev) % 2);
    prev = e;
    first = false;
  }
  first = true;
  for (auto& [e, c] : shifted.coeffs()) {
    if (!first) gaps2.insert((e - prev) % 2);
    prev = e;
    first = false;
  }
  CHECK(gaps == gaps2);
}

TEST_CASE("bracket of crossingless circles") {
  CHECK(bracket_state_sum(PlanarDiagram::parse("O(1)")) == Laurent::circle());
  CHECK(bracket_state_sum(PlanarDiagram::parse("O(1) O(2)")) == Laurent::circle().pow(2));
}

TEST_CASE("bracket of single kinks matches the R1 factors") {
  PlanarDiagram pos = PlanarDiagram::parse("X(1,2,2,1)");
  PlanarDiagram neg = PlanarDiagram::parse("X(1,1,2,2)");
  CHECK(bracket_state_sum(pos) == unit_times_circle(1, -1));
  CHECK(bracket_state_sum(neg) == unit_times_circle(-1, 2));
  CHECK(bracket_r1_trivial(pos) == unit_times_circle(1, -1));
  CHECK(bracket_r1_trivial(neg) == unit_times_circle(-1, 2));
}

TEST_CASE("stacked positive kinks") {
  PlanarDiagram d = PlanarDiagram::parse("X(1,2,2,3) X(3,4,4,1)");
  CHECK(bracket_r1_trivial(d) == unit_times_circle(1, -2));
  CHECK(bracket_state_sum(d) == unit_times_circle(1, -2));
}

TEST_CASE("r1 closed form rejects non-splitting crossings") {
  CHECK_THROWS_AS(bracket_r1_trivial(trefoil()), std::invalid_argument);
}

TEST_CASE("left trefoil bracket") {
  Laurent expect;
  expect += Laurent::term(-1, 6);
  expect += Laurent::term(1, 2);
  expect += Laurent::term(1, 0);
  expect += Laurent::term(1, -2);
  CHECK(bracket_state_sum(trefoil()) == expect);
  CHECK(bracket_spanning_tree(trefoil()) == expect);
}

TEST_CASE("spanning-tree bracket equals the state sum on the corpus") {
  std::mt19937 rng(7);
  for (const auto& entry : corpus()) {
    PlanarDiagram d = entry.diagram();
    if (entry.components > 0 && d.crossing_count() == 0) continue;
    if (!is_connected(d, empty_word(d))) continue;
    Laurent reference = bracket_state_sum(d);
    std::vector<int> numbering = identity_numbering(d);
    for (int trial = 0; trial < 3; ++trial) {
      CHECK(bracket_spanning_tree(d, numbering) == reference);
      std::shuffle(numbering.begin(), numbering.end(), rng);
    }
  }
}

TEST_CASE("skein relation at every crossing of small corpus diagrams") {
  for (const auto& name : {"trefoil-left", "figure-eight", "hopf-positive", "5_2"}) {
    PlanarDiagram d = corpus_find(name)->diagram();
    Laurent whole = bracket_state_sum(d);
    for (int c = 0; c < d.crossing_count(); ++c) {
      Laurent d0 = bracket_state_sum(smooth_crossing(d, c, 0));
      Laurent d1 = bracket_state_sum(smooth_crossing(d, c, 1));
      d1.mul_term(1, 1);  // q * <D_1>
      CHECK(whole == d0 - d1);
    }
  }
}
