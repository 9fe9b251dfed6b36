#include "diagonals/surface.hpp"

#include <map>
#include <stdexcept>

#include "json.hpp"

namespace dg {

SurfaceNumerics::SurfaceNumerics(long chiO, std::vector<std::string> classes, std::vector<std::vector<long>> pairing)
    : chiO_(chiO), classes_(std::move(classes)), pairing_(std::move(pairing)) {
  std::size_t n = classes_.size();
  if (pairing_.size() != n) throw std::invalid_argument("SurfaceNumerics: pairing size");
  for (std::size_t i = 0; i < n; ++i) {
    if (pairing_[i].size() != n) throw std::invalid_argument("SurfaceNumerics: pairing size");
    for (std::size_t j = 0; j < n; ++j)
      if (pairing_[i][j] != pairing_[j][i]) throw std::invalid_argument("SurfaceNumerics: pairing not symmetric");
  }
  index("K");
}

int SurfaceNumerics::index(const std::string& name) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("SurfaceNumerics: unknown class " + name);
}

SurfaceNumerics SurfaceNumerics::projective_plane() {
  SurfaceNumerics s(1, {"H", "K"}, {{1, -3}, {-3, 9}});
  s.bundles_["L"] = {{"H", 1}};
  s.bundles_["A"] = {};
  return s;
}

SurfaceNumerics SurfaceNumerics::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  SurfaceNumerics s(j.at("chiO").get<long>(), j.at("classes").get<std::vector<std::string>>(),
                    j.at("pairing").get<std::vector<std::vector<long>>>());
  if (j.contains("K2") && j["K2"].get<long>() != s.K2())
    throw std::invalid_argument("SurfaceNumerics: K2 disagrees with the pairing");
  if (j.contains("c2") && j["c2"].get<long>() + s.K2() != 12 * s.chiO())
    throw std::invalid_argument("SurfaceNumerics: Noether's formula fails (12 chi(O) != K^2 + c2)");
  if (j.contains("bundles"))
    for (auto& [name, comb] : j["bundles"].items()) {
      LineBundle b;
      for (auto& [cls, k] : comb.items()) {
        s.index(cls);
        b[cls] = k.get<long>();
      }
      s.bundles_[name] = b;
    }
  return s;
}

LineBundle SurfaceNumerics::bundle(const std::string& name) const {
  auto it = bundles_.find(name);
  if (it == bundles_.end()) throw std::invalid_argument("SurfaceNumerics: no bundle named " + name);
  return it->second;
}

std::vector<Q> SurfaceNumerics::coords(const LineBundle& m) const {
  std::vector<Q> c(classes_.size());
  for (auto& [name, k] : m) c[index(name)] += k;
  return c;
}

long SurfaceNumerics::dot(const LineBundle& a, const LineBundle& b) const {
  long s = 0;
  for (auto& [x, i] : a)
    for (auto& [y, j] : b) s += i * j * pairing_[index(x)][index(y)];
  return s;
}

Q SurfaceNumerics::dot(const std::vector<Q>& a, const LineBundle& b) const {
  Q s;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (auto& [y, j] : b) s += a[i] * j * pairing_[i][index(y)];
  return s;
}

LineBundle operator+(const LineBundle& a, const LineBundle& b) {
  LineBundle r = a;
  for (auto& [k, v] : b) r[k] += v;
  return r;
}

LineBundle operator*(long k, const LineBundle& a) {
  LineBundle r;
  for (auto& [c, v] : a) r[c] = k * v;
  return r;
}

ChernPoly ChernPoly::tensor(const SurfaceNumerics& s, const LineBundle& m) const {
  ChernPoly r = *this;
  auto mc = s.coords(m);
  for (std::size_t i = 0; i < r.c1.size(); ++i) r.c1[i] += rank * mc[i];
  Q half(rank * s.dot(m, m), 2);
  half.canonicalize();
  r.ch2 = ch2 + s.dot(c1, m) + half;
  return r;
}

ChernPoly schur_cotangent_ch(const SurfaceNumerics& s, const Partition& lambda) {
  if (lambda.rows() > 2) throw std::invalid_argument("schur_cotangent_ch: at most two rows on a surface");
  // Chern roots of Omega^1 are a, b with a + b = K, ab = c2; S^lambda has
  // roots i a + (m - i) b + l2 (a + b), i = 0..m, m = l1 - l2.
  long l1 = lambda.rows() > 0 ? lambda.parts[0] : 0;
  long l2 = lambda.rows() > 1 ? lambda.parts[1] : 0;
  long m = l1 - l2;
  long sum_a = 0, saa = 0, sab = 0;
  for (long i = 0; i <= m; ++i) {
    long A = i + l2, B = m - i + l2;
    sum_a += A;
    saa += A * A;
    sab += A * B;
  }
  ChernPoly r;
  r.rank = m + 1;
  r.c1 = s.coords(static_cast<long>(sum_a) * s.canonical());
  // sum r_i^2 = saa (a^2 + b^2) + 2 sab ab, using the symmetry A <-> B
  r.ch2 = Q(saa * (s.K2() - 2 * s.c2()) + 2 * sab * s.c2(), 2);
  return r;
}

mpz_class chi(const SurfaceNumerics& s, const ChernPoly& e) {
  Q v = Q(e.rank * s.chiO()) - s.dot(e.c1, s.canonical()) / 2 + e.ch2;
  v.canonicalize();
  if (v.get_den() != 1) throw std::domain_error("chi: non-integral Euler characteristic " + to_string(v));
  return v.get_num();
}

mpz_class chi_line(const SurfaceNumerics& s, const LineBundle& m) {
  ChernPoly o{1, std::vector<Q>(s.classes().size()), Q(0)};
  return chi(s, o.tensor(s, m));
}

mpz_class chi_schur_cotangent(const SurfaceNumerics& s, const Partition& lambda, const LineBundle& m) {
  return chi(s, schur_cotangent_ch(s, lambda).tensor(s, m));
}

namespace {

// Laurent polynomial in t with integer coefficients.
struct Laurent {
  std::map<long, mpz_class> c;

  static Laurent mono(long e, const mpz_class& k = 1) {
    Laurent r;
    if (k != 0) r.c[e] = k;
    return r;
  }
  Laurent operator+(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, k] : o.c)
      if ((r.c[e] += k) == 0) r.c.erase(e);
    return r;
  }
  Laurent operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [a, x] : c)
      for (auto& [b, y] : o.c)
        if ((r.c[a + b] += x * y) == 0) r.c.erase(a + b);
    return r;
  }
  // Exact division; throws if there is a remainder.
  Laurent divexact(const Laurent& d) const {
    if (d.c.empty()) throw std::domain_error("Laurent: division by zero");
    Laurent rem = *this, q;
    auto [dl, dk] = *d.c.rbegin();
    long floor = c.empty() ? 0 : c.begin()->first - d.c.begin()->first;
    while (!rem.c.empty()) {
      auto [rl, rk] = *rem.c.rbegin();
      if (rl - dl < floor || rk % dk != 0) throw std::domain_error("Laurent: inexact division");
      Laurent t = mono(rl - dl, rk / dk);
      q = q + t;
      rem = rem + t * d * mono(0, -1);
    }
    return q;
  }
  mpz_class at_one() const {
    mpz_class s = 0;
    for (auto& [e, k] : c) s += k;
    return s;
  }
};

}  // namespace

mpz_class bott_chi_schur_cotangent_p2(const Partition& lambda, long k) {
  if (lambda.rows() > 2) throw std::invalid_argument("bott: at most two rows");
  long l1 = lambda.rows() > 0 ? lambda.parts[0] : 0;
  long l2 = lambda.rows() > 1 ? lambda.parts[1] : 0;
  const long w[3] = {0, 1, 3};
  // Fixed point p_i: local coordinates x_j/x_i span the cotangent space
  // with characters t^{w_j - w_i}; O(k) has fiber character t^{k w_i}.
  // Contribution E_p / prod_c (1 - t^c) over cotangent characters c.
  Laurent num, den = Laurent::mono(0);
  std::vector<std::pair<Laurent, Laurent>> parts;
  for (int i = 0; i < 3; ++i) {
    std::vector<long> cot;
    for (int j = 0; j < 3; ++j)
      if (j != i) cot.push_back(w[j] - w[i]);
    Laurent fiber;
    long m = l1 - l2;
    for (long a = 0; a <= m; ++a) fiber = fiber + Laurent::mono(a * cot[0] + (m - a) * cot[1] + l2 * (cot[0] + cot[1]));
    fiber = fiber * Laurent::mono(k * w[i]);
    Laurent d = Laurent::mono(0);
    for (long c : cot) d = d * (Laurent::mono(0) + Laurent::mono(c, -1));
    parts.push_back({fiber, d});
  }
  for (auto& [f, d] : parts) den = den * d;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Laurent term = parts[i].first;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) term = term * parts[j].second;
    num = num + term;
  }
  return num.divexact(den).at_one();
}

mpz_class euler_sequence_chi_sym_cotangent_p2(int m, long k) {
  auto chi_o = [](long a) {
    mpz_class b;
    mpz_bin_ui(b.get_mpz_t(), mpz_class(a + 2).get_mpz_t(), 2);
    return b;
  };
  if (m == 0) return chi_o(k);
  mpz_class c1, c2;
  mpz_bin_uiui(c1.get_mpz_t(), m + 2, 2);
  mpz_bin_uiui(c2.get_mpz_t(), m + 1, 2);
  return c1 * chi_o(k - m) - c2 * chi_o(k - m + 1);
}

std::string EulerReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = n;
  nlohmann::json t = nlohmann::json::object();
  for (auto& e : terms) t[e.name] = e.value.get_str();
  j["terms"] = t;
  j["value"] = value.get_str();
  return j.dump(2);
}

namespace {

mpz_class binom(const mpz_class& top, unsigned long k) {
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
  return r;
}

}  // namespace

EulerReport euler_det2(const SurfaceNumerics& s, const LineBundle& L, const LineBundle& A, int n) {
  if (n != 3 && n != 4) throw std::out_of_range("euler_det2: n must be 3 or 4");
  auto LA = [&](long a, long b) { return a * L + b * A; };
  Partition one(std::vector<int>{1}), three(std::vector<int>{3});
  EulerReport r;
  r.n = n;
  mpz_class x2 = chi_line(s, LA(2, 1));
  mpz_class x4 = chi_line(s, LA(4, 2));
  mpz_class w6 = chi_schur_cotangent(s, one, LA(6, 3));
  r.terms = {{"chi(L^2 A)", x2}, {"chi(L^4 A^2)", x4}, {"chi(Omega^1 L^6 A^3)", w6}};
  if (n == 3) {
    r.value = binom(x2 + 2, 3) - x4 * x2 + w6;
    return r;
  }
  mpz_class w8 = chi_schur_cotangent(s, one, LA(8, 4));
  mpz_class k8 = chi_line(s, s.canonical() + LA(8, 4));
  mpz_class s8 = chi_schur_cotangent(s, three, LA(8, 4));
  r.terms.push_back({"chi(Omega^1 L^8 A^4)", w8});
  r.terms.push_back({"chi(K L^8 A^4)", k8});
  r.terms.push_back({"chi(S^3 Omega^1 L^8 A^4)", s8});
  r.value = binom(x2 + 3, 4) - x4 * binom(x2 + 1, 2) + binom(x4, 2) + w6 * x2 - w8 - k8 - s8;
  return r;
}

std::string RegularityReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = n;
  j["k"] = k;
  j["mode"] = mode == RegularityMode::invariant ? "invariant" : "product";
  j["w"] = w;
  j["r"] = r;
  j["bound"] = bound;
  j["formula"] = formula;
  return j.dump(2);
}

RegularityReport regularity_bounds(int n, int k, RegularityMode mode, long w, long r) {
  if (n < 2 || k < 0 || r <= 0) throw std::out_of_range("regularity_bounds: need n >= 2, k >= 0, r > 0");
  RegularityReport rep{n, k, mode, w, r, 0, ""};
  long ceil_wr = w >= 0 ? (w + r - 1) / r : -((-w) / r);
  if (mode == RegularityMode::invariant) {
    long h = (k + 1) / 2;
    rep.bound = 2L * n * (h + 1) - 2 * h + 1 + ceil_wr;
    rep.formula = "2n([(k+1)/2]+1) - 2[(k+1)/2] + 1 + ceil(w/r)";
  } else {
    if (n > 7)
      throw std::out_of_range(
          "regularity_bounds: product mode needs 2 <= n <= 7; the argument uses log-canonical singularities of "
          "B^n, which fail for n >= 9 and are only conjectured for n = 8");
    rep.bound = static_cast<long>(k + 3) * n - k + ceil_wr;
    rep.formula = "(k+3)n - k + ceil(w/r)";
  }
  return rep;
}

}  // namespace dg
