#include <gtest/gtest.h>

#include "diagonals/character.hpp"
#include "diagonals/graph.hpp"
#include "diagonals/tables.hpp"

using namespace dg;

TEST(Partition, Basics) {
  EXPECT_EQ(Partition::all(4).size(), 5u);
  EXPECT_EQ(Partition::all(6).size(), 11u);
  EXPECT_EQ(Partition::all(4).front(), Partition(std::vector<int>{4}));
  EXPECT_EQ(Partition(std::vector<int>{3, 1}).conjugate(), Partition(std::vector<int>{2, 1, 1}));
  EXPECT_EQ(Partition(std::vector<int>{2, 2, 1}).to_string(), "(2,2,1)");
  EXPECT_THROW(Partition(std::vector<int>{1, 2}), std::invalid_argument);
}

TEST(CharacterTable, Orthonormal) {
  EXPECT_TRUE(CharacterTable::symmetric(4, {1, 2, 3, 4}).is_orthonormal());
  EXPECT_TRUE(CharacterTable::symmetric(4, {1, 2, 3}).is_orthonormal());
  EXPECT_TRUE(CharacterTable::symmetric_product(4, {{1, 2}, {3, 4}}).is_orthonormal());
  auto D4 = CharacterTable::dihedral4(Permutation::parse(4, "(2 4)"), Permutation::parse(4, "(1 2 3 4)"));
  EXPECT_TRUE(D4.is_orthonormal());
  EXPECT_EQ(D4.irreducibles().size(), 5u);
  for (auto& name : {"K3", "K3uJ", "C4", "C4uL", "K4"}) EXPECT_TRUE(stabilizer_table(name).is_orthonormal()) << name;
}

TEST(CharacterTable, DegreesSquareSum) {
  auto t = CharacterTable::symmetric(4, {1, 2, 3, 4});
  Q s = 0;
  for (auto& chi : t.irreducibles()) s += chi.degree() * chi.degree();
  EXPECT_EQ(s, 24);
  EXPECT_EQ(t["(3,1)"].degree(), 3);
}

TEST(Decompose, RejectsNonCharacters) {
  auto t = CharacterTable::symmetric(3, {1, 2, 3});
  auto half = ClassFunction::trivial(t.group()) * Q(1, 2);
  EXPECT_THROW(t.decompose(half), NotACharacter);
  EXPECT_THROW(t.decompose(ClassFunction::trivial(t.group()) * Q(-1)), NotACharacter);
}

TEST(Schur, ExteriorAgreesWithColumnPartitions) {
  auto G = PermGroup::symmetric(4);
  auto perm = ClassFunction::from_elements(G, [](const Permutation& g) { return Q(g.fixed_points()); });
  for (int q = 0; q <= 4; ++q) EXPECT_EQ(schur_character(Partition::column(q), perm), exterior_character(q, perm)) << q;
  // S^2 + Lambda^2 = V (x) V
  EXPECT_EQ(schur_character(Partition(std::vector<int>{2}), perm) + exterior_character(2, perm), perm * perm);
  EXPECT_EQ(exterior_character(5, perm), ClassFunction::trivial(G) * Q(0));
}

TEST(Schur, MatrixRepAgreesWithCharacter) {
  auto& g = k4_class("K4").graph;
  auto G = PermGroup::symmetric(4);
  auto rep = cycle_rep(g, G);
  for (auto& lam : Partition::all(3)) EXPECT_EQ(schur_character(lam, rep), schur_character(lam, rep.character()));
}

TEST(Linear, RejectsInconsistentValues) {
  auto G = PermGroup::symmetric(3);
  auto s = Permutation::parse(3, "(1 2)"), r = Permutation::parse(3, "(1 2 3)");
  auto sign = ClassFunction::linear(G, {s, r}, {-1, 1});
  EXPECT_EQ(sign.at(Permutation::parse(3, "(2 3)")), -1);
  EXPECT_THROW(ClassFunction::linear(G, {s, r}, {-1, -1}), std::invalid_argument);
  EXPECT_THROW(ClassFunction::linear(G, {s}, {-1}), std::invalid_argument);  // does not generate
}

TEST(Frobenius, CompleteGraphEdgeRep) {
  for (int n = 2; n <= 7; ++n) EXPECT_TRUE(frobenius_identity_check(n)) << n;
}

TEST(CycleRep, Classification) {
  // q_Gamma decomposed over the stabilizer
  std::map<std::string, std::string> expect = {{"K3", "(1,1,1)"},
                                               {"K3uJ", "(1,1)"},
                                               {"C4", "det"},
                                               {"C4uL", "(1,1)x(2) + (1,1)x(1,1)"},
                                               {"K4", "(2,1,1)"}};
  for (auto& [name, want] : expect) {
    auto t = stabilizer_table(name);
    auto q = cycle_rep(k4_class(name).graph, t.group()).character();
    EXPECT_EQ(t.describe(t.decompose(q)), want) << name;
  }
}

TEST(CycleRep, K4IsStandardTimesSign) {
  auto t = stabilizer_table("K4");
  auto& g = k4_class("K4").graph;
  EXPECT_EQ(edge_sign_character(g, t.group()), ClassFunction::trivial(t.group()));
  EXPECT_EQ(cycle_rep(g, t.group()).character(), t["(3,1)"] * t["(1,1,1,1)"]);
}

TEST(Isotypic, BoundsAreChecked) {
  EXPECT_THROW(isotypic_multiplicities(k4_class("K3").graph, 3, 2), std::out_of_range);
  EXPECT_THROW(isotypic_multiplicities(k4_class("K3").graph, -1, 2), std::out_of_range);
}
