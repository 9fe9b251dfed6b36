#include "diagonals/invariants.hpp"

#include <stdexcept>
#include <unordered_set>

#include "diagonals/linalg.hpp"

namespace dg {

std::vector<int> action_map(const PolyRing& ring, const Permutation& sigma) {
  if (sigma.degree() != ring.n()) throw std::invalid_argument("act: permutation degree differs from ring point count");
  std::vector<int> map(kMaxVars);
  for (int v = 0; v < kMaxVars; ++v) map[v] = v;
  for (int j = 1; j <= ring.n(); ++j)
    for (int i = 1; i <= ring.d(); ++i) map[ring.var(j, i)] = ring.var(sigma(j), i);
  return map;
}

Polynomial act(const PolyRing& ring, const Permutation& sigma, const Polynomial& p) {
  return p.rename(action_map(ring, sigma));
}

Polynomial reynolds(const PolyRing& ring, const PermGroup& G, const Polynomial& p) {
  if (G.degree() != ring.n()) throw std::invalid_argument("reynolds: group degree differs from ring point count");
  std::vector<Polynomial::Term> acc;
  for (auto& g : G.elements()) {
    Polynomial q = act(ring, g, p);
    acc.insert(acc.end(), q.terms().begin(), q.terms().end());
  }
  return Polynomial::from_terms(std::move(acc)) * Q(1, static_cast<unsigned long>(G.order()));
}

namespace {

Monomial permute_monomial(const Monomial& m, const std::vector<int>& map) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i)
    if (m.e[i]) r.set(map[i], m.e[i]);
  return r;
}

Polynomial from_svec(const SVec& v) {
  std::vector<Polynomial::Term> t;
  for (auto& [k, c] : v) t.emplace_back(k.m, c);
  return Polynomial::from_terms(std::move(t));
}

}  // namespace

std::vector<Polynomial> orbit_sums(const PolyRing& ring, const PermGroup& G, int t) {
  if (G.degree() != ring.n()) throw std::invalid_argument("orbit_sums: group degree differs from ring point count");
  std::vector<std::vector<int>> maps;
  for (auto& g : G.elements()) maps.push_back(action_map(ring, g));
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Polynomial> out;
  for (auto& m : monomials_of_degree(ring.nvars(), t)) {
    if (seen.count(m)) continue;
    std::vector<Polynomial::Term> orbit;
    for (auto& mp : maps) {
      Monomial x = permute_monomial(m, mp);
      if (seen.insert(x).second) orbit.emplace_back(x, Q(1));
    }
    out.push_back(Polynomial::from_terms(std::move(orbit)));
  }
  return out;
}

void require_stable(const Subquotient& space, const PermGroup& G) {
  if (G.degree() != space.ring.n()) throw std::invalid_argument("group degree differs from ring point count");
  if (space.kind == Subquotient::Kind::whole) return;
  const Ideal& I = *space.ideal;
  for (auto& g : G.generators())
    for (auto& f : I.generators()) {
      if (I.valid_through() && f.degree() > *I.valid_through()) continue;
      if (!I.contains(act(space.ring, g, f)))
        throw std::invalid_argument("non-G-stable space: " + g.to_string() + " moves a generator out of the ideal");
    }
}

std::vector<Polynomial> invariant_basis(const Subquotient& space, const PermGroup& G, int t) {
  auto sums = orbit_sums(space.ring, G, t);
  if (space.kind == Subquotient::Kind::whole) return sums;
  require_stable(space, G);
  const Ideal& I = *space.ideal;
  I.require_degree(t);
  std::vector<SVec> images;
  for (auto& s : sums) images.push_back(svec_from_polynomial(I.normal_form(s)));
  Echelon ech;
  if (space.kind == Subquotient::Kind::quotient) {
    for (auto& v : images) ech.insert(v);
  } else {
    for (auto& rel : kernel_of(images)) {
      Polynomial p;
      for (auto& [idx, c] : rel) p += sums[idx] * c;
      ech.insert(svec_from_polynomial(p));
    }
  }
  std::vector<Polynomial> out;
  for (auto& v : ech.reduced_basis()) out.push_back(from_svec(v));
  return out;
}

long long invariant_dimension(const Subquotient& space, const PermGroup& G, int t) {
  if (t < 0) return 0;
  auto sums = orbit_sums(space.ring, G, t);
  if (space.kind == Subquotient::Kind::whole) return static_cast<long long>(sums.size());
  require_stable(space, G);
  const Ideal& I = *space.ideal;
  I.require_degree(t);
  Echelon ech;
  for (auto& s : sums) ech.insert(svec_from_polynomial(I.normal_form(s)));
  long long quotient_dim = static_cast<long long>(ech.rank());
  return space.kind == Subquotient::Kind::quotient ? quotient_dim
                                                   : static_cast<long long>(sums.size()) - quotient_dim;
}

}  // namespace dg
