#include <gtest/gtest.h>

#include "diagonals/koszul.hpp"
#include "diagonals/tables.hpp"

using namespace dg;

TEST(Koszul, SquaresToZero) {
  PolyRing R(4, 2);
  for (auto& nc : k4_classes()) {
    auto K = koszul_complex(R, nc.graph);
    for (int t = 0; t <= 3; ++t) EXPECT_TRUE(K.squares_to_zero(t)) << nc.name << " " << t;
  }
}

TEST(Koszul, RanksAreBinomial) {
  PolyRing R(3, 2);
  auto K = koszul_complex(R, SimpleGraph::complete(3));
  EXPECT_EQ(K.min_position(), 0);
  EXPECT_EQ(K.max_position(), 6);
  const std::size_t want[] = {1, 6, 15, 20, 15, 6, 1};
  for (int q = 0; q <= 6; ++q) EXPECT_EQ(K.generators(q).size(), want[q]) << q;
}

TEST(Koszul, ResolvesTheDiagonalOfOneEdge) {
  // a single edge is a complete intersection: only Tor_0
  PolyRing R(2, 2);
  SimpleGraph e(2, {{1, 2}});
  auto K = koszul_complex(R, e);
  for (int t = 0; t <= 4; ++t) {
    EXPECT_EQ(K.homology(0, t), diagonal_ring_hf(e, 2, t));
    EXPECT_EQ(K.homology(1, t), 0);
    EXPECT_EQ(K.homology(2, t), 0);
  }
}

TEST(DiagonalRing, HilbertFunction) {
  // K3 in X^4: two free points of dimension 2
  auto& g = k4_class("K3").graph;
  EXPECT_EQ(diagonal_ring_hf(g, 2, 0), 1);
  EXPECT_EQ(diagonal_ring_hf(g, 2, 1), 4);
  EXPECT_EQ(diagonal_ring_hf(g, 2, 2), 10);
  EXPECT_EQ(diagonal_ring_hf(g, 2, -1), 0);
}

TEST(Multitor, AcyclicGraphsHaveNoHigherTor) {
  for (auto& name : {"A1", "A2", "B3"}) {
    auto& g = k4_class(name).graph;
    for (int q = 1; q <= 2; ++q) {
      auto o = multitor_oracle(g, q, 4);
      for (auto v : o.dims) EXPECT_EQ(v, 0) << name << " q=" << q;
    }
  }
}

TEST(Multitor, TriangleMatchesFormula) {
  auto g = SimpleGraph(3, {{1, 2}, {1, 3}, {2, 3}});
  for (int q = 0; q <= 2; ++q) {
    auto o = multitor_oracle(g, q, 5);
    auto shifts = fit_shifts(g, 2, o.dims);
    ASSERT_TRUE(shifts.has_value()) << q;
    auto f = multitor_formula(g, q);
    EXPECT_EQ(static_cast<long long>(shifts->size()), f.rank) << q;
    for (int s : *shifts) EXPECT_EQ(s, q) << q;  // generated in degree q
  }
}

TEST(Multitor, FitShiftsRejectsGarbage) {
  auto& g = k4_class("K3").graph;
  EXPECT_FALSE(fit_shifts(g, 2, {1, 3}).has_value());
  EXPECT_EQ(fit_shifts(g, 2, {0, 0, 0})->size(), 0u);
}

TEST(E1, InvariantTermsForN3) {
  // only the triangle contributes in q = -1 and -2
  auto e = e1_page(3, 3, -1);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].multiplicities.at(Partition(std::vector<int>{1})), 1);
  EXPECT_TRUE(e1_page(3, 3, -2).empty());
  EXPECT_TRUE(e1_page(3, 2, -1).empty());
}
