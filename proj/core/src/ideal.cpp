#include "diagonals/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dg {

namespace {

using Term = Polynomial::Term;
using Terms = std::vector<Term>;

Terms sorted_terms(const Polynomial& p, const MonomialOrder& ord) {
  Terms t = p.terms();
  if (ord.kind() != MonomialOrder::Kind::grevlex)
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
  return t;
}

Polynomial to_poly(const Terms& t) { return Polynomial::from_terms(t); }

// f[fi..] - c * m * g[gi..], all sorted descending by ord.
Terms sub_mul(const Terms& f, std::size_t fi, const Q& c, const Monomial& m, const Terms& g, std::size_t gi,
              const MonomialOrder& ord) {
  Terms r;
  r.reserve(f.size() - fi + g.size() - gi);
  Q tmp;
  while (fi < f.size() && gi < g.size()) {
    Monomial gm = g[gi].first * m;
    int k = ord.compare(f[fi].first, gm);
    if (k > 0) {
      r.push_back(f[fi++]);
    } else if (k < 0) {
      r.emplace_back(gm, -c * g[gi].second);
      ++gi;
    } else {
      tmp = f[fi].second - c * g[gi].second;
      if (tmp != 0) r.emplace_back(gm, tmp);
      ++fi;
      ++gi;
    }
  }
  for (; fi < f.size(); ++fi) r.push_back(f[fi]);
  for (; gi < g.size(); ++gi) r.emplace_back(g[gi].first * m, -c * g[gi].second);
  return r;
}

int find_divisor(const Monomial& m, const std::vector<Terms>& basis, const std::vector<int>& active) {
  for (int idx : active)
    if (basis[idx].front().first.divides(m)) return idx;
  return -1;
}

// Full (top + tail) reduction of f by the active elements.
Terms reduce(Terms f, const std::vector<Terms>& basis, const std::vector<int>& active, const MonomialOrder& ord) {
  Terms r;
  std::size_t i = 0;
  while (i < f.size()) {
    int d = find_divisor(f[i].first, basis, active);
    if (d < 0) {
      r.push_back(f[i]);
      ++i;
      continue;
    }
    const Terms& g = basis[d];
    Q c = f[i].second / g.front().second;
    Monomial m = f[i].first / g.front().first;
    f = sub_mul(f, i + 1, c, m, g, 1, ord);
    i = 0;
  }
  return r;
}

void make_monic(Terms& t) {
  if (t.empty()) return;
  Q inv = 1 / t.front().second;
  for (auto& x : t) x.second *= inv;
}

int wdeg(const Monomial& m, const std::vector<int>& w) {
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (m.e[i]) d += m.e[i] * (i < static_cast<int>(w.size()) ? w[i] : 1);
  return d;
}

struct Pair {
  int i, j;
  Monomial lcm;
  int deg;
};

}  // namespace

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw std::invalid_argument("leading_monomial of zero");
  Monomial best = f.terms().front().first;
  for (auto& t : f.terms())
    if (ord.greater(t.first, best)) best = t.first;
  return best;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                   const GroebnerOptions& opts) {
  const auto& w = opts.weights;
  auto homogeneous = [&](const Polynomial& p) {
    for (auto& t : p.terms())
      if (wdeg(t.first, w) != wdeg(p.terms().front().first, w)) return false;
    return true;
  };

  std::vector<Terms> basis;
  std::vector<int> active;
  std::vector<Pair> pairs;

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ord.compare(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  // Gebauer-Moeller update with the new element h.
  auto update = [&](int h) {
    const Monomial& lh = basis[h].front().first;
    std::vector<Pair> cand;
    for (int g : active) {
      const Monomial& lg = basis[g].front().first;
      Monomial l = lh.lcm(lg);
      cand.push_back({g, h, l, wdeg(l, w)});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      const Monomial& lg = basis[cand[a].i].front().first;
      if (lh.coprime(lg)) {
        kept.push_back(cand[a]);
        continue;
      }
      bool redundant = false;
      for (std::size_t b = 0; b < cand.size() && !redundant; ++b) {
        if (a == b) continue;
        if (!cand[b].lcm.divides(cand[a].lcm)) continue;
        // strict divisibility, or equal lcm with a deterministic tiebreak
        if (cand[b].lcm != cand[a].lcm) {
          redundant = true;
        } else if (b < a) {
          // keep only the first among equal lcms, unless that one is coprime
          const Monomial& lb = basis[cand[b].i].front().first;
          if (!lh.coprime(lb)) redundant = true;
        }
      }
      if (!redundant) kept.push_back(cand[a]);
    }
    // Drop coprime pairs (first criterion) from the new ones.
    std::vector<Pair> fresh;
    for (auto& p : kept)
      if (!lh.coprime(basis[p.i].front().first)) fresh.push_back(p);
    // Chain criterion on the old pairs.
    std::vector<Pair> old;
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && basis[p.i].front().first.lcm(lh) != p.lcm &&
                  basis[p.j].front().first.lcm(lh) != p.lcm;
      if (!drop) old.push_back(p);
    }
    pairs = std::move(old);
    for (auto& p : fresh)
      if (!opts.degree_cap || p.deg <= *opts.degree_cap) pairs.push_back(p);
    std::vector<int> next;
    for (int g : active)
      if (!lh.divides(basis[g].front().first)) next.push_back(g);
    next.push_back(h);
    active = std::move(next);
  };

  // Seed with generators in increasing degree.
  std::vector<Terms> seeds;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (opts.degree_cap && !homogeneous(g))
      throw std::invalid_argument("buchberger: degree cap requires homogeneous generators");
    Terms t = sorted_terms(g, ord);
    if (opts.degree_cap && wdeg(t.front().first, w) > *opts.degree_cap) continue;
    seeds.push_back(std::move(t));
  }
  std::stable_sort(seeds.begin(), seeds.end(), [&](const Terms& a, const Terms& b) {
    int da = wdeg(a.front().first, w), db = wdeg(b.front().first, w);
    if (da != db) return da < db;
    return ord.compare(a.front().first, b.front().first) < 0;
  });
  for (auto& s : seeds) {
    Terms r = reduce(s, basis, active, ord);
    if (r.empty()) continue;
    make_monic(r);
    basis.push_back(std::move(r));
    update(static_cast<int>(basis.size()) - 1);
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *it;
    pairs.erase(it);
    const Terms& f = basis[p.i];
    const Terms& g = basis[p.j];
    Terms s = sub_mul(Terms{}, 0, Q(-1), p.lcm / f.front().first, f, 1, ord);
    s = sub_mul(s, 0, Q(1), p.lcm / g.front().first, g, 1, ord);
    Terms r = reduce(std::move(s), basis, active, ord);
    if (r.empty()) continue;
    make_monic(r);
    basis.push_back(std::move(r));
    update(static_cast<int>(basis.size()) - 1);
  }

  // Interreduce the minimal basis.
  std::vector<Terms> minimal;
  for (int g : active) minimal.push_back(basis[g]);
  std::sort(minimal.begin(), minimal.end(),
            [&](const Terms& a, const Terms& b) { return ord.compare(a.front().first, b.front().first) < 0; });
  std::vector<Terms> reduced(minimal.size());
  std::vector<int> all;
  for (std::size_t k = 0; k < minimal.size(); ++k) all.push_back(static_cast<int>(k));
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<int> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(static_cast<int>(m));
    Terms tail(minimal[k].begin() + 1, minimal[k].end());
    Terms r = reduce(std::move(tail), minimal, others, ord);
    r.insert(r.begin(), minimal[k].front());
    make_monic(r);
    reduced[k] = std::move(r);
  }
  std::vector<Polynomial> out;
  for (auto& t : reduced) out.push_back(to_poly(t));
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb, const MonomialOrder& ord) {
  std::vector<Terms> basis;
  std::vector<int> active;
  for (auto& g : gb) {
    basis.push_back(sorted_terms(g, ord));
    active.push_back(static_cast<int>(basis.size()) - 1);
  }
  return to_poly(reduce(sorted_terms(f, ord), basis, active, ord));
}

struct Ideal::Cache {
  std::mutex mu;
  std::map<std::pair<int, int>, std::vector<Polynomial>> bases;
};

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> gens, std::optional<int> valid_through)
    : ring_(ring), gens_(std::move(gens)), valid_through_(valid_through), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens_)
    for (auto& [m, c] : g.terms())
      if (m.last_var() >= ring_.nvars()) throw std::invalid_argument("Ideal: generator outside ring");
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& p) { return p.is_homogeneous(); });
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& order) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto key = std::make_pair(static_cast<int>(order.kind()), order.split());
  auto it = cache_->bases.find(key);
  if (it != cache_->bases.end()) return it->second;
  GroebnerOptions opts;
  opts.degree_cap = valid_through_;
  auto res = cache_->bases.emplace(key, buchberger(gens_, order, opts));
  return res.first->second;
}

Polynomial Ideal::normal_form(const Polynomial& f, const MonomialOrder& order) const {
  if (valid_through_ && f.degree() > *valid_through_)
    throw std::out_of_range("Ideal::normal_form: degree beyond validity bound");
  return dg::normal_form(f, groebner(order), order);
}

void Ideal::require_degree(int deg) const {
  if (valid_through_ && deg > *valid_through_)
    throw std::out_of_range("ideal only known through degree " + std::to_string(*valid_through_) +
                            ", requested " + std::to_string(deg));
}

std::string Ideal::to_json(const MonomialOrder& order) const {
  nlohmann::json j = nlohmann::json::array();
  for (auto& g : gens_) j.push_back(g.to_string(ring_, order));
  return j.dump();
}

Ideal diagonal_ideal(const PolyRing& ring, int i, int j) {
  if (i == j) throw std::invalid_argument("diagonal_ideal: need a 2-subset");
  if (i > j) std::swap(i, j);
  if (i < 1 || j > ring.n()) throw std::out_of_range("diagonal_ideal: index out of range");
  std::vector<Polynomial> g;
  for (int c = 1; c <= ring.d(); ++c)
    g.push_back(Polynomial::variable(ring.var(j, c)) - Polynomial::variable(ring.var(i, c)));
  return Ideal(ring, std::move(g));
}

Ideal unit_ideal(const PolyRing& ring) { return Ideal(ring, {Polynomial::constant(1)}); }

namespace {

std::optional<int> min_cap(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b, std::optional<int> cap) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ideal_intersection: ring mismatch");
  const PolyRing& R = a.ring();
  cap = min_cap(cap, min_cap(a.valid_through(), b.valid_through()));
  int t = R.nvars();
  if (t >= kMaxVars) throw std::invalid_argument("ideal_intersection: no room for the elimination variable");
  Polynomial T = Polynomial::variable(t);
  Polynomial one_minus_t = Polynomial::constant(1) - T;
  std::vector<Polynomial> gens;
  for (auto& f : a.generators()) gens.push_back(T * f);
  for (auto& g : b.generators()) gens.push_back(one_minus_t * g);
  GroebnerOptions opts;
  opts.degree_cap = cap;
  if (cap) {
    if (!a.is_homogeneous() || !b.is_homogeneous())
      throw std::invalid_argument("ideal_intersection: degree cap needs homogeneous ideals");
    opts.weights.assign(kMaxVars, 1);
    opts.weights[t] = 0;
  }
  auto gb = buchberger(gens, MonomialOrder::block(t), opts);
  std::vector<Polynomial> out;
  for (auto& g : gb) {
    bool has_t = false;
    for (auto& [m, c] : g.terms())
      if (m[t]) has_t = true;
    if (!has_t) out.push_back(g);
  }
  return Ideal(R, std::move(out), cap);
}

Ideal big_diagonal_ideal(const PolyRing& ring, std::optional<int> cap) {
  if (ring.n() < 2) throw std::invalid_argument("big_diagonal_ideal: need n >= 2");
  std::optional<Ideal> acc;
  for (int i = 1; i <= ring.n(); ++i)
    for (int j = i + 1; j <= ring.n(); ++j) {
      Ideal d = diagonal_ideal(ring, i, j);
      acc = acc ? ideal_intersection(*acc, d, cap) : d;
    }
  if (cap && !acc->valid_through()) return Ideal(ring, acc->generators(), cap);
  return *acc;
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ideal_product: ring mismatch");
  std::vector<Polynomial> g;
  for (auto& f : a.generators())
    for (auto& h : b.generators()) {
      Polynomial p = f * h;
      if (!p.is_zero() && std::find(g.begin(), g.end(), p) == g.end()) g.push_back(std::move(p));
    }
  return Ideal(a.ring(), std::move(g), min_cap(a.valid_through(), b.valid_through()));
}

Ideal ideal_power(const Ideal& a, int k) {
  if (k < 0) throw std::invalid_argument("ideal_power: negative exponent");
  Ideal r = unit_ideal(a.ring());
  for (int i = 0; i < k; ++i) r = ideal_product(r, a);
  return r;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("ideal_sum: ring mismatch");
  std::vector<Polynomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(g), min_cap(a.valid_through(), b.valid_through()));
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) return false;
  if (a.valid_through() != b.valid_through()) {
    // compare as truncated ideals through the smaller bound
    auto cap = min_cap(a.valid_through(), b.valid_through());
    Ideal ta(a.ring(), a.generators(), cap), tb(b.ring(), b.generators(), cap);
    return ta.groebner() == tb.groebner();
  }
  return a.groebner() == b.groebner();
}

std::vector<Monomial> standard_monomials(const Ideal& ideal, int deg) {
  ideal.require_degree(deg);
  const auto& gb = ideal.groebner();
  std::vector<Monomial> lts;
  for (auto& g : gb) lts.push_back(g.leading().first);
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(ideal.ring().nvars(), deg)) {
    bool hit = false;
    for (auto& l : lts)
      if (l.divides(m)) {
        hit = true;
        break;
      }
    if (!hit) out.push_back(m);
  }
  return out;
}

long long hilbert_function(const Subquotient& m, int deg) {
  if (deg < 0) return 0;
  long long total = monomial_count(m.ring.nvars(), deg);
  if (m.kind == Subquotient::Kind::whole) return total;
  if (!m.ideal) throw std::invalid_argument("hilbert_function: missing ideal");
  long long std_count = static_cast<long long>(standard_monomials(*m.ideal, deg).size());
  return m.kind == Subquotient::Kind::quotient ? std_count : total - std_count;
}

}  // namespace dg
