#pragma once

#include <vector>

#include "diagonals/ideal.hpp"
#include "diagonals/perm.hpp"
#include "diagonals/poly.hpp"

namespace dg {

// x[j,i] -> x[sigma(j),i]; auxiliary variables are fixed.
Polynomial act(const PolyRing& ring, const Permutation& sigma, const Polynomial& p);
// Variable renaming realizing act(), usable with Polynomial::rename.
std::vector<int> action_map(const PolyRing& ring, const Permutation& sigma);

// (1/|G|) sum_g g.p
Polynomial reynolds(const PolyRing& ring, const PermGroup& G, const Polynomial& p);

// Sums over the G-orbits of degree-t monomials (each is |Stab|^{-1}|G| times
// the Reynolds image of any orbit member).  Ordered by descending leading
// monomial, so the list is canonical.
std::vector<Polynomial> orbit_sums(const PolyRing& ring, const PermGroup& G, int t);

// Throws std::invalid_argument if some generator of G moves a generator of
// the ideal outside it.
void require_stable(const Subquotient& space, const PermGroup& G);

// Basis of the degree-t invariants of the subquotient.  For quotients the
// elements are normal forms; for ideals they are invariant members of the
// ideal.  Returned in reduced echelon form (canonical).
std::vector<Polynomial> invariant_basis(const Subquotient& space, const PermGroup& G, int t);
long long invariant_dimension(const Subquotient& space, const PermGroup& G, int t);

}  // namespace dg
