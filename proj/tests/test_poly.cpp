#include <gtest/gtest.h>

#include <random>

#include "diagonals/ideal.hpp"
#include "diagonals/poly.hpp"

using namespace dg;

namespace {

Polynomial x(const PolyRing& R, int j, int i) { return Polynomial::variable(R.var(j, i)); }

}  // namespace

TEST(Monomial, MultiplyDivide) {
  Monomial a = Monomial::variable(0, 2) * Monomial::variable(3);
  Monomial b = Monomial::variable(0);
  EXPECT_EQ(a.deg, 3);
  EXPECT_TRUE(b.divides(a));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(a.last_var(), 3);
  EXPECT_EQ(Monomial{}.last_var(), -1);
}

TEST(MonomialOrder, GrevlexBasics) {
  auto o = MonomialOrder::grevlex();
  // x0^2 > x0 x1 > x1^2 > x0 x2 in grevlex with x0 > x1 > x2
  auto m = [](int a, int b, int c) {
    Monomial r;
    r.set(0, a);
    r.set(1, b);
    r.set(2, c);
    return r;
  };
  EXPECT_TRUE(o.greater(m(2, 0, 0), m(1, 1, 0)));
  EXPECT_TRUE(o.greater(m(1, 1, 0), m(0, 2, 0)));
  EXPECT_TRUE(o.greater(m(0, 2, 0), m(1, 0, 1)));
  EXPECT_TRUE(o.greater(m(0, 0, 3), m(2, 0, 0)));  // degree first
  auto lex = MonomialOrder::lex();
  EXPECT_TRUE(lex.greater(m(1, 0, 1), m(0, 2, 0)));
}

TEST(PolyRing, VariableLayout) {
  PolyRing R(3, 2);
  EXPECT_EQ(R.nvars(), 6);
  EXPECT_EQ(R.var(1, 1), 0);
  EXPECT_EQ(R.var(2, 2), 3);
  EXPECT_EQ(R.var(3, 1), 4);
}

TEST(PolyRing, MonomialCountIsBinomial) {
  for (int n = 1; n <= 6; ++n)
    for (int t = 0; t <= 6; ++t) EXPECT_EQ(static_cast<long long>(monomials_of_degree(n, t).size()), monomial_count(n, t));
  EXPECT_EQ(monomial_count(6, 3), 56);
}

TEST(Polynomial, RingArithmetic) {
  PolyRing R(2, 2);
  Polynomial a = x(R, 1, 1) + x(R, 2, 1), b = x(R, 1, 1) - x(R, 2, 1);
  Polynomial p = a * b;
  EXPECT_EQ(p, x(R, 1, 1) * x(R, 1, 1) - x(R, 2, 1) * x(R, 2, 1));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(a.pow(3), a * a * a);
}

TEST(Polynomial, Derivative) {
  PolyRing R(1, 2);
  Polynomial f = x(R, 1, 1).pow(3) * x(R, 1, 2) * Q(2);
  EXPECT_EQ(f.derivative(R.var(1, 1)), x(R, 1, 1).pow(2) * x(R, 1, 2) * Q(6));
  EXPECT_TRUE(f.derivative(R.var(1, 1)).derivative(R.var(1, 2)).derivative(R.var(1, 2)).is_zero());
}

TEST(Polynomial, RenameAndSubstitute) {
  PolyRing R(2, 2);
  Polynomial f = x(R, 2, 1) - x(R, 1, 1);
  std::vector<int> collapse = {0, 1, 0, 1};
  EXPECT_TRUE(f.rename(collapse).is_zero());
  std::vector<Polynomial> img;
  for (int v = 0; v < 4; ++v) img.push_back(Polynomial::variable(v) * Q(2));
  EXPECT_EQ(f.substitute(img), f * Q(2));
}

TEST(Polynomial, TextRoundTrip) {
  PolyRing R(3, 2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-4, 4), v(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p;
    for (int k = 0; k < 5; ++k) p += Polynomial::variable(v(rng)) * Polynomial::variable(v(rng)) * [&] { Q q(c(rng), 3); q.canonicalize(); return q; }();
    EXPECT_EQ(parse_polynomial(R, p.to_string(R)), p) << p.to_string(R);
  }
  EXPECT_EQ(parse_polynomial(R, "-1 * x[1,1]^1 + 1 * x[2,1]^1"), x(R, 2, 1) - x(R, 1, 1));
  EXPECT_THROW(parse_polynomial(R, "x[1,1] x[2,1]"), std::invalid_argument);
}
