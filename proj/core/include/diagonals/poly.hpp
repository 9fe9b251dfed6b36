#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dg {

using Q = mpq_class;

std::string to_string(const Q& q);

// Exponent vectors are fixed width; rings with more variables are rejected.
inline constexpr int kMaxVars = 16;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  static Monomial variable(int idx, int power = 1);

  int operator[](int i) const { return e[i]; }
  void set(int i, int power);

  Monomial operator*(const Monomial& o) const;
  // Caller guarantees o divides *this.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  // Highest variable index with a nonzero exponent, or -1 for 1.
  int last_var() const;

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Positive when a > b in graded reverse lexicographic order.
int grevlex_cmp(const Monomial& a, const Monomial& b);

class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  // Variables with index >= split form the eliminated block: they are
  // compared first (grevlex within the block), ties broken by grevlex on
  // the remaining variables.
  static MonomialOrder block(int split) { return MonomialOrder(Kind::block, split); }

  Kind kind() const { return kind_; }
  int split() const { return split_; }
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  std::string name() const;

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && split_ == o.split_; }

 private:
  MonomialOrder(Kind k, int s) : kind_(k), split_(s) {}
  Kind kind_;
  int split_;
};

// Ambient ring of X^n: variables x[j,i] for point j in 1..n and coordinate
// i in 1..d, indexed (j-1)*d + (i-1).  Auxiliary variables (used only for
// elimination) come after them and are printed t[k].
class PolyRing {
 public:
  PolyRing(int n, int d = 2, int aux = 0);

  int n() const { return n_; }
  int d() const { return d_; }
  int aux() const { return aux_; }
  int nvars() const { return n_ * d_ + aux_; }
  int point_vars() const { return n_ * d_; }

  int var(int j, int i) const;
  std::string var_name(int idx) const;

  bool operator==(const PolyRing& o) const { return n_ == o.n_ && d_ == o.d_ && aux_ == o.aux_; }
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

 private:
  int n_, d_, aux_;
};

// All monomials of total degree t in the first nvars variables, in
// descending grevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int t);
// Number of monomials of degree t in nvars variables.
long long monomial_count(int nvars, int t);

class Polynomial {
 public:
  using Term = std::pair<Monomial, Q>;

  Polynomial() = default;
  static Polynomial constant(const Q& c);
  static Polynomial variable(int idx);
  static Polynomial term(const Monomial& m, const Q& c);
  // Terms may be unsorted and repeated; they are merged.
  static Polynomial from_terms(std::vector<Term> terms);

  // Sorted by descending grevlex, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  bool is_homogeneous() const;
  const Term& leading() const { return terms_.front(); }
  Q coefficient(const Monomial& m) const;
  Polynomial homogeneous_part(int t) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Q& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial mul_term(const Monomial& m, const Q& c) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial derivative(int var) const;
  // Variable i is replaced by var_map[i] (a plain renaming; collisions merge).
  Polynomial rename(const std::vector<int>& var_map) const;
  // Ring map: variable i goes to images[i].  images must cover every
  // variable that occurs.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Polynomial pow(int k) const;

  std::string to_string(const PolyRing& ring, const MonomialOrder& order = MonomialOrder::grevlex()) const;

 private:
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Q& c, const Polynomial& p) { return p * c; }

// Parses the text format written by Polynomial::to_string.
Polynomial parse_polynomial(const PolyRing& ring, std::string_view text);

}  // namespace dg
