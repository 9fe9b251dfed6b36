#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diagonals/poly.hpp"

namespace dg {

struct GroebnerOptions {
  // Ignore S-pairs (and generators) whose weighted degree exceeds the cap.
  // Only meaningful for input homogeneous w.r.t. the weights; the result is
  // then a Groebner basis through that degree.
  std::optional<int> degree_cap;
  // Per-variable weights for the cap and the pair selection; default 1.
  std::vector<int> weights;
};

// Reduced Groebner basis, monic, sorted by ascending leading monomial.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                   const GroebnerOptions& opts = {});

// Fully reduced remainder of f modulo a Groebner basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order);

// Leading monomial w.r.t. an arbitrary order.
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

class Ideal {
 public:
  // valid_through: if set, the generators are only claimed to generate the
  // ideal in degrees <= that bound (results of truncated computations).
  Ideal(PolyRing ring, std::vector<Polynomial> gens, std::optional<int> valid_through = {});

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::optional<int> valid_through() const { return valid_through_; }
  bool is_homogeneous() const;

  // Cached reduced basis for the order (truncated at valid_through if set).
  const std::vector<Polynomial>& groebner(const MonomialOrder& order = MonomialOrder::grevlex()) const;
  Polynomial normal_form(const Polynomial& f, const MonomialOrder& order = MonomialOrder::grevlex()) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  // Throws if deg is beyond the validity bound.
  void require_degree(int deg) const;

  std::string to_json(const MonomialOrder& order = MonomialOrder::grevlex()) const;

 private:
  struct Cache;
  PolyRing ring_;
  std::vector<Polynomial> gens_;
  std::optional<int> valid_through_;
  std::shared_ptr<Cache> cache_;
};

Ideal diagonal_ideal(const PolyRing& ring, int i, int j);
// Intersection of all pairwise diagonal ideals, computed by repeated
// elimination; with a cap the result is valid through that degree.
Ideal big_diagonal_ideal(const PolyRing& ring, std::optional<int> cap = {});
Ideal unit_ideal(const PolyRing& ring);

Ideal ideal_intersection(const Ideal& a, const Ideal& b, std::optional<int> cap = {});
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int k);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
// Equality of reduced grevlex bases.
bool ideals_equal(const Ideal& a, const Ideal& b);

// A graded piece of R, of an ideal I, or of R/I.
struct Subquotient {
  enum class Kind { whole, sub, quotient };
  Kind kind = Kind::whole;
  PolyRing ring;
  std::optional<Ideal> ideal;

  static Subquotient whole_ring(const PolyRing& r) { return {Kind::whole, r, std::nullopt}; }
  static Subquotient submodule(const Ideal& i) { return {Kind::sub, i.ring(), i}; }
  static Subquotient quotient(const Ideal& i) { return {Kind::quotient, i.ring(), i}; }
};

long long hilbert_function(const Subquotient& m, int deg);
// Monomials of degree deg not divisible by any leading monomial of the
// grevlex basis.
std::vector<Monomial> standard_monomials(const Ideal& ideal, int deg);

}  // namespace dg
