#include <gtest/gtest.h>

#include <json.hpp>

#include "diagonals/surface.hpp"

using namespace dg;

namespace {

const SurfaceNumerics& P2() {
  static const SurfaceNumerics s = SurfaceNumerics::projective_plane();
  return s;
}
LineBundle O(long k) { return {{"H", k}}; }
Partition sym(int m) { return Partition(std::vector<int>{m}); }

}  // namespace

TEST(Surface, ProjectivePlaneNumerics) {
  EXPECT_EQ(P2().chiO(), 1);
  EXPECT_EQ(P2().K2(), 9);
  EXPECT_EQ(P2().c2(), 3);
  EXPECT_EQ(P2().dot(O(1), P2().canonical()), -3);
}

TEST(Surface, LineBundlesOnP2) {
  for (long k = -5; k <= 8; ++k) EXPECT_EQ(chi_line(P2(), O(k)), mpz_class((k + 1) * (k + 2) / 2)) << k;
}

TEST(Surface, CotangentTwists) {
  EXPECT_EQ(chi_schur_cotangent(P2(), sym(1), O(6)), 35);
  EXPECT_EQ(chi_schur_cotangent(P2(), sym(1), O(8)), 63);
  EXPECT_EQ(chi_schur_cotangent(P2(), sym(1), O(0)), -1);
  EXPECT_EQ(chi_schur_cotangent(P2(), Partition(std::vector<int>{1, 1}), O(0)), 1);  // K = O(-3)
}

TEST(Surface, BottOracleAgrees) {
  std::vector<Partition> lams = {sym(1), sym(2), sym(3), Partition(std::vector<int>{2, 1}), Partition(std::vector<int>{1, 1})};
  for (auto& lam : lams)
    for (long k = -5; k <= 8; ++k)
      EXPECT_EQ(bott_chi_schur_cotangent_p2(lam, k), chi_schur_cotangent(P2(), lam, O(k))) << lam.to_string() << " " << k;
  EXPECT_EQ(bott_chi_schur_cotangent_p2(sym(3), 8), 42);
}

TEST(Surface, EulerSequenceOracleAgrees) {
  for (int m = 0; m <= 4; ++m)
    for (long k = -2; k <= 10; ++k)
      EXPECT_EQ(euler_sequence_chi_sym_cotangent_p2(m, k), m ? chi_schur_cotangent(P2(), sym(m), O(k)) : chi_line(P2(), O(k)))
          << m << " " << k;
}

TEST(Surface, SchurChernCharacter) {
  auto ch = schur_cotangent_ch(P2(), sym(3));
  EXPECT_EQ(ch.rank, 4);
  EXPECT_EQ(P2().dot(ch.c1, O(1)), -18);  // c1 = 6 K
  EXPECT_THROW(schur_cotangent_ch(P2(), Partition(std::vector<int>{1, 1, 1})), std::invalid_argument);
}

TEST(Surface, FromJsonChecksNoether) {
  auto ok = SurfaceNumerics::from_json(
      R"({"chiO":1,"K2":9,"c2":3,"classes":["H","K"],"pairing":[[1,-3],[-3,9]],"bundles":{"L":{"H":1},"A":{}}})");
  EXPECT_EQ(ok.c2(), 3);
  EXPECT_EQ(ok.bundle("L"), O(1));
  EXPECT_THROW(SurfaceNumerics::from_json(R"({"chiO":1,"c2":4,"classes":["H","K"],"pairing":[[1,-3],[-3,9]]})"),
               std::invalid_argument);
  EXPECT_THROW(SurfaceNumerics::from_json(R"({"chiO":1,"classes":["H"],"pairing":[[1]]})"), std::invalid_argument);
  EXPECT_THROW(SurfaceNumerics(1, {"H", "K"}, {{1, 2}, {3, 4}}), std::invalid_argument);
}

TEST(Surface, DegenerateLattice) {
  // chi(O) = 1 with every pairing zero forces c2 = 12
  SurfaceNumerics s(1, {"K"}, {{0}});
  EXPECT_EQ(s.c2(), 12);
  auto r = euler_det2(s, {}, {}, 3);
  EXPECT_EQ(r.value, -10);
}

TEST(Euler, Det2OnP2) {
  auto r3 = euler_det2(P2(), O(1), {}, 3);
  EXPECT_EQ(r3.value, 1);
  ASSERT_EQ(r3.terms.size(), 3u);
  EXPECT_EQ(r3.terms[0].value, 6);
  EXPECT_EQ(r3.terms[1].value, 15);
  EXPECT_EQ(r3.terms[2].value, 35);
  auto r4 = euler_det2(P2(), O(1), {}, 4);
  EXPECT_EQ(r4.value, 0);
  EXPECT_EQ(r4.terms.back().name, "chi(S^3 Omega^1 L^8 A^4)");
  EXPECT_EQ(r4.terms.back().value, 42);
  EXPECT_THROW(euler_det2(P2(), O(1), {}, 5), std::out_of_range);
}

TEST(Euler, ReportsAreJson) {
  auto j = nlohmann::json::parse(euler_det2(P2(), O(1), {}, 3).to_json());
  EXPECT_EQ(j["value"], "1");
  EXPECT_EQ(j["terms"]["chi(L^2 A)"], "6");
}

TEST(Regularity, P2Examples) {
  EXPECT_EQ(regularity_bounds(3, 2, RegularityMode::invariant).bound, 8);
  EXPECT_EQ(regularity_bounds(3, 2, RegularityMode::product).bound, 10);
  EXPECT_EQ(regularity_bounds(2, 1, RegularityMode::invariant, 0, 1).bound, 7);
  EXPECT_THROW(regularity_bounds(8, 1, RegularityMode::product), std::out_of_range);
  EXPECT_NO_THROW(regularity_bounds(8, 1, RegularityMode::invariant));
}

TEST(Regularity, Monotone) {
  for (auto mode : {RegularityMode::invariant, RegularityMode::product})
    for (int n = 2; n <= 7; ++n)
      for (int k = 0; k <= 6; ++k) {
        auto a = regularity_bounds(n, k, mode).bound;
        EXPECT_LE(a, regularity_bounds(n, k + 1, mode).bound);
        if (n < 7) EXPECT_LE(a, regularity_bounds(n + 1, k, mode).bound);
        EXPECT_LE(a, regularity_bounds(n, k, mode, 0, 1).bound);
      }
}

TEST(Regularity, InvariantNeverExceedsProduct) {
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; k <= 8; ++k)
      EXPECT_LE(regularity_bounds(n, k, RegularityMode::invariant).bound, regularity_bounds(n, k, RegularityMode::product).bound);
}
