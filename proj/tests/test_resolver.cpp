#include <gtest/gtest.h>

#include "diagonals/ideal.hpp"
#include "diagonals/invariants.hpp"
#include "diagonals/resolver.hpp"

using namespace dg;

namespace {

void expect_exact(const ExactnessReport& r) {
  EXPECT_TRUE(r.verdict) << r.to_json();
  for (auto& d : r.per_degree) {
    EXPECT_TRUE(d.well_defined) << r.complex << " t=" << d.degree;
    EXPECT_TRUE(d.composes_to_zero) << r.complex << " t=" << d.degree;
    EXPECT_TRUE(d.degree_preserving) << r.complex << " t=" << d.degree;
  }
}

}  // namespace

TEST(Tuples, PackUnpackRoundTrip) {
  PolyRing R(2, 2);
  std::vector<Polynomial> f = {Polynomial::variable(0), {}, Polynomial::variable(3) * Q(5, 2)};
  auto g = unpack(pack(f), 3);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g, f);
  EXPECT_THROW(unpack(pack(f), 2), std::out_of_range);
}

TEST(Tuples, MergePoints) {
  PolyRing R3(3, 2), R2(2, 2);
  Polynomial f = Polynomial::variable(R3.var(3, 1)) - Polynomial::variable(R3.var(2, 1));
  EXPECT_TRUE(merge_points(f, R3, R2, {1, 2, 2}).is_zero());
  EXPECT_EQ(merge_points(f, R3, R2, {1, 1, 2}), Polynomial::variable(R2.var(2, 1)) - Polynomial::variable(R2.var(1, 1)));
}

TEST(Resolution, I3Exact) { expect_exact(exactness_check(resolution_complex(3), 8)); }

TEST(Resolution, I3KernelMatchesInvariants) {
  auto r = exactness_check(resolution_complex(3), 7);
  const long long want[] = {0, 0, 0, 0, 1, 6, 21, 46};
  for (auto& d : r.per_degree) {
    auto& p0 = d.positions.front();
    EXPECT_EQ(p0.dim - p0.rank_out, want[d.degree]) << d.degree;
    ASSERT_TRUE(p0.expected_kernel.has_value());
    EXPECT_EQ(*p0.expected_kernel, want[d.degree]);
  }
}

TEST(Resolution, I4ExactLowDegrees) { expect_exact(exactness_check(resolution_complex(4), 4)); }

TEST(Resolution, I4RecordsConstants) {
  auto c = resolution_complex(4);
  EXPECT_EQ(c.constants.at("C_correction"), "-1/4");
  EXPECT_EQ(c.stages.size(), 4u);
  EXPECT_THROW(resolution_complex(5), std::out_of_range);
}

TEST(Resolution, S23InvariantComplexExact) { expect_exact(exactness_check(s23_invariant_complex(), 7)); }

TEST(Resolution, S23JetSequenceExactAtLastTwoPositions) { expect_exact(exactness_check(s23_jet_sequence(), 7)); }

TEST(Resolution, TwistShiftsDegrees) {
  auto a = exactness_check(resolution_complex(3), 6);
  auto b = exactness_check(resolution_complex(3), 8, 1, 2);
  EXPECT_TRUE(b.verdict);
  for (int t = 0; t <= 6; ++t)
    for (std::size_t p = 0; p < a.per_degree[t].positions.size(); ++p)
      EXPECT_EQ(a.per_degree[t].positions[p].dim, b.per_degree[t + 2].positions[p].dim);
  EXPECT_EQ(b.per_degree[0].positions[0].dim, 0);
}

TEST(Resolution, ParallelMatchesSerial) {
  EXPECT_EQ(exactness_check(resolution_complex(3), 6, 1).to_json(), exactness_check(resolution_complex(3), 6, 3).to_json());
}

TEST(Resolution, ReportSchema) {
  auto j = exactness_check(s23_invariant_complex(), 2).to_json();
  for (auto key : {"\"schema\": 1", "\"per_degree\"", "\"verdict\": \"exact\"", "\"rank_in\"", "\"expected_kernel\""})
    EXPECT_NE(j.find(key), std::string::npos) << key;
}

TEST(Atilde, VanishesOnRestrictions) {
  auto A = map_Atilde();
  for (int t = 1; t <= 3; ++t)
    for (auto& m : monomials_of_degree(8, t)) EXPECT_TRUE(A.apply(restriction_tuple(Polynomial::term(m, Q(1)))).empty());
}

TEST(Atilde, ImageVanishesAtTheTriplePoint) {
  PolyRing R4(4, 2);
  const int triple[4][3] = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  const int other[4] = {4, 3, 2, 1};
  const std::size_t dims[] = {0, 8, 42, 152};
  for (int t = 1; t <= 3; ++t) {
    auto B = compatible_tuples(t);
    EXPECT_EQ(B.size(), dims[t]);
    for (auto& b : B) {
      auto img = unpack(map_Atilde().apply(b), 8);
      for (int h = 0; h < 4; ++h)
        for (int c = 0; c < 2; ++c) {
          std::vector<int> pm{1, 2, 3, 4};
          pm[other[h] - 1] = triple[h][0];
          EXPECT_TRUE(merge_points(img[2 * h + c], R4, R4, pm).is_zero());
        }
    }
  }
}

TEST(DlDelta, KernelIsNextOrder) {
  // invariants vanishing to order l whose l-th jets vanish: order l+1
  PolyRing R3(3, 2);
  auto S3 = PermGroup::symmetric(3);
  for (int l = 1; l <= 2; ++l) {
    Ideal J = ideal_power(diagonal_ideal(R3, 1, 2), l + 1);
    J = ideal_intersection(J, ideal_power(diagonal_ideal(R3, 1, 3), l + 1));
    J = ideal_intersection(J, ideal_power(diagonal_ideal(R3, 2, 3), l + 1));
    for (int t = 0; t <= 6; ++t) {
      auto B = diagonal_order_basis(3, l, S3, t);
      std::vector<SVec> im;
      for (auto& b : B) im.push_back(map_dlDelta(3, l).apply(b));
      EXPECT_EQ(static_cast<long long>(B.size() - rank_of(im)), invariant_dimension(Subquotient::submodule(J), S3, t))
          << "l=" << l << " t=" << t;
    }
  }
}

TEST(DiagonalOrder, OrderOneIsTheBigDiagonal) {
  PolyRing R3(3, 2);
  auto S3 = PermGroup::symmetric(3);
  Ideal I = big_diagonal_ideal(R3);
  for (int t = 0; t <= 6; ++t)
    EXPECT_EQ(static_cast<long long>(diagonal_order_basis(3, 1, S3, t).size()),
              invariant_dimension(Subquotient::submodule(I), S3, t));
}
