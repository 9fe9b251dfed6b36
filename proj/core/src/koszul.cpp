#include "diagonals/koszul.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

#include "diagonals/parallel.hpp"
#include "diagonals/tables.hpp"
#include "json.hpp"

namespace dg {

FreeComplex::FreeComplex(PolyRing ring, int min_position) : ring_(std::move(ring)), min_pos_(min_position) {}

const std::vector<FreeComplex::Generator>& FreeComplex::generators(int position) const {
  static const std::vector<Generator> none;
  int k = position - min_pos_;
  if (k < 0 || k >= static_cast<int>(gens_.size())) return none;
  return gens_[k];
}

void FreeComplex::push(std::vector<Generator> gens, std::vector<Column> diff) {
  if (gens_.empty() && !diff.empty() && !diff.front().empty())
    throw std::invalid_argument("FreeComplex: first position has no target");
  if (diff.size() != gens.size() && !gens_.empty())
    throw std::invalid_argument("FreeComplex: one differential column per generator required");
  for (auto& g : gens)
    if (static_cast<int>(g.weight.size()) != ring_.d()) throw std::invalid_argument("FreeComplex: weight length");
  gens_.push_back(std::move(gens));
  diff.resize(gens_.back().size());
  diff_.push_back(std::move(diff));
}

namespace {

// Monomials in the point variables with prescribed degree in each
// coordinate direction.
std::vector<Monomial> monomials_of_weight(const PolyRing& ring, const std::vector<int>& w) {
  std::vector<Monomial> out{Monomial{}};
  for (int i = 1; i <= ring.d(); ++i) {
    if (w[i - 1] < 0) return {};
    std::vector<Monomial> next;
    for (auto& m : monomials_of_degree(ring.n(), w[i - 1])) {
      Monomial r;
      for (int j = 1; j <= ring.n(); ++j)
        if (m.e[j - 1]) r.set(ring.var(j, i), m.e[j - 1]);
      for (auto& o : out) next.push_back(o * r);
    }
    out = std::move(next);
  }
  return out;
}

void for_each_weight(int d, int t, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> w(d);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == d - 1) {
      w[i] = left;
      fn(w);
      return;
    }
    for (int a = left; a >= 0; --a) {
      w[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (d > 0) rec(0, t);
}

}  // namespace

std::vector<std::pair<Key, Q>> FreeComplex::basis(int position, const std::vector<int>& weight) const {
  std::vector<std::pair<Key, Q>> out;
  const auto& gens = generators(position);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::vector<int> rest(weight.size());
    for (std::size_t i = 0; i < weight.size(); ++i) rest[i] = weight[i] - gens[g].weight[i];
    for (auto& m : monomials_of_weight(ring_, rest)) out.push_back({Key{static_cast<std::uint32_t>(g), m}, Q(1)});
  }
  return out;
}

std::size_t FreeComplex::dim(int position, const std::vector<int>& weight) const {
  std::size_t n = 0;
  const auto& gens = generators(position);
  for (auto& g : gens) {
    long long c = 1;
    for (std::size_t i = 0; i < weight.size(); ++i) {
      int r = weight[i] - g.weight[i];
      if (r < 0) {
        c = 0;
        break;
      }
      c *= monomial_count(ring_.n(), r);
    }
    n += static_cast<std::size_t>(c);
  }
  return n;
}

long long FreeComplex::dim(int position, int t) const {
  long long n = 0;
  for_each_weight(ring_.d(), t, [&](const std::vector<int>& w) { n += static_cast<long long>(dim(position, w)); });
  return n;
}

SVec FreeComplex::apply(int position, const SVec& v) const {
  int k = position - min_pos_;
  SVec out;
  if (k <= 0 || k >= static_cast<int>(gens_.size())) return out;
  for (auto& [key, c] : v)
    for (auto& [target, poly] : diff_[k][key.slot])
      for (auto& [m, pc] : poly.terms()) out.push_back({Key{static_cast<std::uint32_t>(target), m * key.m}, c * pc});
  svec_normalize(out);
  return out;
}

std::vector<SVec> FreeComplex::basis_images(int position, const std::vector<int>& weight) const {
  std::vector<SVec> out;
  for (auto& b : basis(position, weight)) out.push_back(apply(position, SVec{b}));
  return out;
}

std::size_t FreeComplex::rank(int position, const std::vector<int>& weight) const {
  if (position <= min_pos_ || position > max_position()) return 0;
  Echelon e;
  for (auto& b : basis(position, weight)) e.insert(apply(position, SVec{b}));
  return e.rank();
}

long long FreeComplex::homology(int position, int t, long long monomial_cap) const {
  long long h = 0;
  for_each_weight(ring_.d(), t, [&](const std::vector<int>& w) {
    std::size_t dm = dim(position, w);
    if (static_cast<long long>(dm) > monomial_cap || static_cast<long long>(dim(position + 1, w)) > monomial_cap)
      throw std::length_error("homology: graded piece exceeds the monomial cap");
    if (dm == 0) return;
    h += static_cast<long long>(dm) - static_cast<long long>(rank(position, w)) -
         static_cast<long long>(rank(position + 1, w));
  });
  return h;
}

bool FreeComplex::squares_to_zero(int t) const {
  bool ok = true;
  for (int p = min_pos_ + 2; p <= max_position() && ok; ++p)
    for_each_weight(ring_.d(), t, [&](const std::vector<int>& w) {
      for (auto& b : basis(p, w))
        if (!apply(p - 1, apply(p, SVec{b})).empty()) ok = false;
    });
  return ok;
}

FreeComplex koszul_complex(const PolyRing& ring, const SimpleGraph& g) {
  if (g.n() != ring.n()) throw std::invalid_argument("koszul_complex: graph and ring disagree on n");
  int d = ring.d(), l = g.l();
  if (d * l > 24) throw std::length_error("koszul_complex: too many exterior generators");
  // A generator is a tuple of subsets S_1..S_l of {0..d-1}, packed as one
  // bitmask with d bits per edge (edge m in bits m*d .. m*d+d-1).
  int total = 1 << (d * l);
  std::vector<std::vector<std::uint32_t>> by_pos(d * l + 1);
  std::vector<int> index(total);
  for (int mask = 0; mask < total; ++mask) {
    int q = std::popcount(static_cast<unsigned>(mask));
    index[mask] = static_cast<int>(by_pos[q].size());
    by_pos[q].push_back(static_cast<std::uint32_t>(mask));
  }
  auto section = [&](int m, int i) {
    auto [a, b] = g.edges()[m];
    return Polynomial::variable(ring.var(b, i + 1)) - Polynomial::variable(ring.var(a, i + 1));
  };
  FreeComplex cx(ring, 0);
  for (int q = 0; q <= d * l; ++q) {
    std::vector<FreeComplex::Generator> gens;
    std::vector<FreeComplex::Column> diff;
    for (std::uint32_t mask : by_pos[q]) {
      FreeComplex::Generator gen{q, std::vector<int>(d)};
      for (int m = 0; m < l; ++m)
        for (int i = 0; i < d; ++i)
          if (mask >> (m * d + i) & 1) ++gen.weight[i];
      gens.push_back(gen);
      FreeComplex::Column col;
      int before = 0;  // sum of |S_J| over earlier edges
      for (int m = 0; m < l; ++m) {
        int pos_in_s = 0;
        for (int i = 0; i < d; ++i) {
          int bit = m * d + i;
          if (!(mask >> bit & 1)) continue;
          int sign = ((before + pos_in_s) % 2) ? -1 : 1;
          std::uint32_t target = mask & ~(1u << bit);
          col.emplace_back(index[target], section(m, i) * Q(sign));
          ++pos_in_s;
        }
        before += pos_in_s;
      }
      diff.push_back(std::move(col));
    }
    cx.push(std::move(gens), std::move(diff));
  }
  return cx;
}

std::string MultitorOracle::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["graph"] = nlohmann::json::parse(graph.to_json());
  j["n"] = graph.n();
  j["q"] = q;
  nlohmann::json dm = nlohmann::json::object();
  for (std::size_t t = 0; t < dims.size(); ++t) dm[std::to_string(t)] = dims[t];
  j["dims"] = dm;
  return j.dump(2);
}

MultitorOracle multitor_oracle(const SimpleGraph& g, int q, int D, int d, int jobs, long long monomial_cap) {
  if (q < 0 || q > d * g.l()) throw std::out_of_range("multitor_oracle: q must lie in 0..d*l");
  PolyRing ring(g.n(), d);
  FreeComplex cx = koszul_complex(ring, g);
  MultitorOracle out{g, q, std::vector<long long>(D + 1)};
  parallel_for(D + 1, jobs, [&](int t) { out.dims[t] = cx.homology(q, t, monomial_cap); });
  return out;
}

long long diagonal_ring_hf(const SimpleGraph& g, int d, int t) {
  if (t < 0) return 0;
  int points = g.n() - g.v() + g.k();
  return monomial_count(points * d, t);
}

std::optional<std::vector<int>> fit_shifts(const SimpleGraph& g, int d, const std::vector<long long>& dims) {
  std::vector<int> shifts;
  for (int t = 0; t < static_cast<int>(dims.size()); ++t) {
    long long r = dims[t];
    for (int s : shifts) r -= diagonal_ring_hf(g, d, t - s);
    if (r < 0) return std::nullopt;
    for (long long k = 0; k < r; ++k) shifts.push_back(t);
  }
  return shifts;
}

MultitorFormula multitor_formula(const SimpleGraph& g, int q, int d) {
  PermGroup G = stabilizer(PermGroup::symmetric(g.n()), g);
  int c = g.cycle_rank();
  long long rank = 0;
  if (q >= 0 && q <= d * c) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(d * c), static_cast<unsigned long>(q));
    rank = b.get_si();
  }
  ClassFunction chi = cycle_rep(g, G).character() * Q(d);
  ClassFunction ext = exterior_character(q < 0 ? 0 : q, chi);
  if (q < 0 || q > d * c) ext = ext * Q(0);
  return {rank, ext * edge_sign_character(g, G)};
}

std::vector<E1Entry> e1_page(int n, int p, int q, int d) {
  if (n < 1 || n > 5) throw std::out_of_range("e1_page: n must be in 1..5");
  if (q > 0) throw std::out_of_range("e1_page: q must be <= 0");
  PermGroup Sn = PermGroup::symmetric(n);
  std::vector<SimpleGraph> reps;
  if (p == 0) {
    reps.emplace_back(n, std::vector<Edge>{});
  } else {
    for (auto& cls : iso_classes(enumerate_graphs(n, p))) reps.push_back(cls.representative);
  }
  std::vector<E1Entry> out;
  for (auto& g : reps) {
    int c = g.cycle_rank();
    if (-q > d * c) continue;
    PermGroup G = stabilizer(Sn, g);
    auto mult = isotypic_multiplicities(g, G, -q, d);
    bool any = false;
    for (auto& [lambda, m] : mult) any = any || m != 0;
    if (any) out.push_back({g, G, std::move(mult)});
  }
  return out;
}

}  // namespace dg
