#include <gtest/gtest.h>

#include "diagonals/character.hpp"
#include "diagonals/graph.hpp"
#include "diagonals/tables.hpp"

using namespace dg;

TEST(Enumerate, CountsAreBinomial) {
  EXPECT_EQ(enumerate_graphs(4, 3).size(), 20u);
  EXPECT_EQ(enumerate_graphs(4, 6).size(), 1u);
  EXPECT_EQ(enumerate_graphs(5, 2).size(), 45u);
  EXPECT_THROW(enumerate_graphs(3, 4), std::out_of_range);
}

TEST(IsoClasses, SmallN) {
  auto three = iso_classes(enumerate_graphs(4, 3));
  EXPECT_EQ(three.size(), 3u);  // triangle, star, path
  std::size_t total = 0;
  for (auto& c : three) total += c.members.size();
  EXPECT_EQ(total, 20u);
  // total over all l: 11 graphs on 4 vertices, one of them empty
  std::size_t classes = 0;
  for (int l = 1; l <= 6; ++l) classes += iso_classes(enumerate_graphs(4, l)).size();
  EXPECT_EQ(classes, 10u);
}

TEST(IsoClasses, OrbitStabilizer) {
  auto S4 = PermGroup::symmetric(4);
  for (int l = 1; l <= 6; ++l)
    for (auto& c : iso_classes(enumerate_graphs(4, l)))
      EXPECT_EQ(c.members.size() * stabilizer(S4, c.representative).order(), S4.order());
}

TEST(Graph, Invariants) {
  auto& K4 = k4_class("K4").graph;
  EXPECT_EQ(K4.cycle_rank(), 3);
  EXPECT_EQ(k4_class("C4uL").graph.cycle_rank(), 2);
  EXPECT_EQ(k4_class("K3uJ").graph.cycle_rank(), 1);
  EXPECT_TRUE(k4_class("B3").graph.acyclic());
  EXPECT_EQ(k4_class("B2").graph.k(), 2);
  EXPECT_EQ(canonical_form(SimpleGraph(4, {{3, 4}})), SimpleGraph(4, {{1, 2}}));
  EXPECT_EQ(SimpleGraph::from_json(4, "[[1,2],[2,3]]").to_json(), "[[1,2],[2,3]]");
}

TEST(Graph, BoundaryKernelIsCycleSpace) {
  for (auto& nc : k4_classes()) {
    auto d = boundary_matrix(nc.graph);
    EXPECT_EQ(static_cast<int>(matrix_rank(d)), nc.graph.v() - nc.graph.k()) << nc.name;
    auto cd = cycle_data(nc.graph);
    EXPECT_EQ(cd.c, nc.graph.cycle_rank());
    for (auto& cyc : cd.basis)
      for (int r = 0; r < d.rows; ++r) {
        Q s = 0;
        for (int e = 0; e < d.cols; ++e) s += d(r, e) * cyc.eta[e];
        EXPECT_EQ(s, 0) << nc.name;
      }
  }
}

TEST(Representations, AreHomomorphisms) {
  for (auto& nc : k4_nonacyclic_classes()) {
    auto G = stabilizer(PermGroup::symmetric(4), nc.graph);
    EXPECT_TRUE(edge_rep(nc.graph, G).is_homomorphism()) << nc.name;
    auto q = cycle_rep(nc.graph, G);
    EXPECT_TRUE(q.is_homomorphism()) << nc.name;
    EXPECT_EQ(q.dim(), nc.graph.cycle_rank());
  }
}

TEST(EpsilonSign, Examples) {
  SimpleGraph a(4, {{1, 2}}), b(4, {{1, 2}, {1, 3}});
  EXPECT_EQ(epsilon_sign(a, a), 1);
  EXPECT_EQ(epsilon_sign(a, b), -1);  // (1,3) inserted at position 2
  EXPECT_EQ(epsilon_sign(SimpleGraph(4, {{1, 3}}), b), 1);
  EXPECT_THROW(epsilon_sign(b, a), std::invalid_argument);
}

TEST(EpsilonSign, CocycleSquaresToZero) {
  // sum over the two paths small -> mid -> big of the sign products vanishes
  for (int l = 1; l <= 4; ++l)
    for (auto& g : enumerate_graphs(4, l))
      for (auto& e1 : enumerate_graphs(4, 1))
        for (auto& e2 : enumerate_graphs(4, 1)) {
          Edge a = e1.edges()[0], b = e2.edges()[0];
          if (!(a < b) || g.edge_index(a) >= 0 || g.edge_index(b) >= 0) continue;
          auto ga = g.with_edge(a), gb = g.with_edge(b), gab = ga.with_edge(b);
          EXPECT_EQ(epsilon_sign(g, ga) * epsilon_sign(ga, gab) + epsilon_sign(g, gb) * epsilon_sign(gb, gab), 0);
        }
}

TEST(EdgeSign, MatchesPermutationSign) {
  auto& C4 = k4_class("C4").graph;
  EXPECT_EQ(edge_permutation_sign(C4, Permutation::parse(4, "(1 2 3 4)")), -1);
  EXPECT_EQ(edge_permutation_sign(C4, Permutation::parse(4, "(2 4)")), 1);
  for (auto& nc : k4_classes()) {
    auto G = stabilizer(PermGroup::symmetric(4), nc.graph);
    auto eps = edge_sign_character(nc.graph, G);
    for (auto& g : G.elements()) EXPECT_EQ(eps.at(g), edge_permutation_sign(nc.graph, g));
  }
}
