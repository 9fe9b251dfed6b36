#include "diagonals/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dg {

std::string to_string(const Q& q) { return q.get_str(); }

Monomial Monomial::variable(int idx, int power) {
  Monomial m;
  m.set(idx, power);
  return m;
}

void Monomial::set(int i, int power) {
  if (i < 0 || i >= kMaxVars) throw std::out_of_range("monomial variable index");
  if (power < 0 || power > 255) throw std::out_of_range("monomial exponent");
  deg = static_cast<std::uint16_t>(deg - e[i] + power);
  e[i] = static_cast<std::uint8_t>(power);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = e[i] + o.e[i];
    if (s > 255) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = static_cast<std::uint16_t>(deg + o.deg);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
  r.deg = static_cast<std::uint16_t>(deg - o.deg);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(e[i], o.e[i]);
    d += r.e[i];
  }
  r.deg = static_cast<std::uint16_t>(d);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] && o.e[i]) return false;
  return true;
}

int Monomial::last_var() const {
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (e[i]) return i;
  return -1;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t a, b;
  static_assert(kMaxVars == 16);
  std::memcpy(&a, m.e.data(), 8);
  std::memcpy(&b, m.e.data() + 8, 8);
  std::uint64_t h = a * 0x9E3779B97F4A7C15ULL ^ (b + 0x632BE59BD9B4E019ULL + (a << 6) + (a >> 2));
  return static_cast<std::size_t>(h ^ (h >> 29));
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_cmp(a, b);
    case Kind::lex:
      for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    case Kind::block: {
      int c = grevlex_range(a, b, split_, kMaxVars);
      if (c) return c;
      return grevlex_range(a, b, 0, split_);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::block: return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

PolyRing::PolyRing(int n, int d, int aux) : n_(n), d_(d), aux_(aux) {
  if (n < 1 || d < 1 || aux < 0) throw std::invalid_argument("PolyRing: n, d must be positive");
  if (n * d + aux > kMaxVars)
    throw std::invalid_argument("PolyRing: at most " + std::to_string(kMaxVars) + " variables supported");
}

int PolyRing::var(int j, int i) const {
  if (j < 1 || j > n_ || i < 1 || i > d_) throw std::out_of_range("PolyRing::var index");
  return (j - 1) * d_ + (i - 1);
}

std::string PolyRing::var_name(int idx) const {
  if (idx < 0 || idx >= nvars()) throw std::out_of_range("PolyRing::var_name");
  if (idx >= n_ * d_) return "t[" + std::to_string(idx - n_ * d_ + 1) + "]";
  return "x[" + std::to_string(idx / d_ + 1) + "," + std::to_string(idx % d_ + 1) + "]";
}

namespace {

void monomials_rec(int nvars, int var, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.set(var, left);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int k = left; k >= 0; --k) {
    cur.set(var, k);
    monomials_rec(nvars, var + 1, left - k, cur, out);
  }
  cur.set(var, 0);
}

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return grevlex_cmp(a.first, b.first) > 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int t) {
  std::vector<Monomial> out;
  if (t < 0) return out;
  if (nvars == 0) {
    if (t == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  monomials_rec(nvars, 0, t, cur, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
  return out;
}

long long monomial_count(int nvars, int t) {
  if (t < 0) return 0;
  if (nvars == 0) return t == 0 ? 1 : 0;
  // C(t + nvars - 1, nvars - 1)
  long long r = 1;
  for (int k = 1; k < nvars; ++k) r = r * (t + k) / k;
  return r;
}

Polynomial Polynomial::constant(const Q& c) { return term(Monomial{}, c); }

Polynomial Polynomial::variable(int idx) { return term(Monomial::variable(idx), 1); }

Polynomial Polynomial::term(const Monomial& m, const Q& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max<int>(d, t.first.deg);
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (auto& t : terms_)
    if (t.first.deg != terms_.front().first.deg) return false;
  return true;
}

Q Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grevlex_cmp(t.first, x) > 0; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Polynomial Polynomial::homogeneous_part(int t) const {
  Polynomial p;
  for (auto& x : terms_)
    if (x.first.deg == t) p.terms_.push_back(x);
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grevlex_cmp(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Q s = terms_[i].second + o.terms_[j].second;
      if (s != 0) r.terms_.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Q& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Q& c) const {
  if (c == 0) return {};
  Polynomial r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
  return r;  // multiplication by a monomial preserves the order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].first, o.terms_[0].second);
  if (terms_.size() == 1) return o.mul_term(terms_[0].first, terms_[0].second);
  std::unordered_map<Monomial, Q, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_) acc[a.first * b.first] += a.second * b.second;
  std::vector<Term> v;
  v.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) v.emplace_back(m, c);
  std::sort(v.begin(), v.end(), term_greater);
  Polynomial r;
  r.terms_ = std::move(v);
  return r;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Polynomial r = constant(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> v;
  for (auto& t : terms_) {
    int e = t.first[var];
    if (!e) continue;
    Monomial m = t.first;
    m.set(var, e - 1);
    v.emplace_back(m, t.second * e);
  }
  return from_terms(std::move(v));
}

Polynomial Polynomial::rename(const std::vector<int>& var_map) const {
  std::vector<Term> v;
  v.reserve(terms_.size());
  for (auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
      if (!t.first.e[i]) continue;
      if (i >= static_cast<int>(var_map.size())) throw std::out_of_range("rename: variable not mapped");
      int j = var_map[i];
      m.set(j, m[j] + t.first.e[i]);
    }
    v.emplace_back(m, t.second);
  }
  return from_terms(std::move(v));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  // cache powers per variable
  std::vector<std::vector<Polynomial>> pw(images.size());
  auto power = [&](int i, int e) -> const Polynomial& {
    auto& cache = pw[i];
    if (cache.empty()) cache.push_back(constant(1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  std::unordered_map<Monomial, Q, MonomialHash> acc;
  for (auto& t : terms_) {
    Polynomial prod = constant(t.second);
    for (int i = 0; i < kMaxVars; ++i) {
      if (!t.first.e[i]) continue;
      if (i >= static_cast<int>(images.size())) throw std::out_of_range("substitute: variable not mapped");
      prod = prod * power(i, t.first.e[i]);
    }
    for (auto& x : prod.terms_) acc[x.first] += x.second;
  }
  std::vector<Term> v;
  for (auto& [m, c] : acc)
    if (c != 0) v.emplace_back(m, c);
  std::sort(v.begin(), v.end(), term_greater);
  Polynomial r;
  r.terms_ = std::move(v);
  return r;
}

std::string Polynomial::to_string(const PolyRing& ring, const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<Term> v = terms_;
  std::stable_sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return order.greater(a.first, b.first); });
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int i = 0; i < kMaxVars; ++i) {
      if (!m[i]) continue;
      if (i >= ring.nvars()) throw std::out_of_range("to_string: monomial outside ring");
      os << " * " << ring.var_name(i) << "^" << m[i];
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool at_end() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  long integer() {
    skip();
    std::size_t st = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (st == pos) throw std::invalid_argument("parse_polynomial: expected integer at " + std::to_string(st));
    return std::stol(std::string(s.substr(st, pos - st)));
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse_polynomial: " + what + " at offset " + std::to_string(pos));
  }
};

}  // namespace

Polynomial parse_polynomial(const PolyRing& ring, std::string_view text) {
  Cursor c{text};
  std::vector<Polynomial::Term> terms;
  if (c.at_end()) c.fail("empty input");
  for (;;) {
    Q coef = 1;
    bool have_coef = false;
    c.skip();
    if (c.peek() == '-' || std::isdigit(static_cast<unsigned char>(c.peek()))) {
      std::size_t st = c.pos;
      if (c.s[c.pos] == '-') ++c.pos;
      while (c.pos < c.s.size() && (std::isdigit(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '/')) ++c.pos;
      std::string num(c.s.substr(st, c.pos - st));
      if (num == "-") {
        coef = -1;
      } else {
        coef = Q(num);
        coef.canonicalize();
        have_coef = true;
      }
    }
    Monomial m;
    bool need_factor = !have_coef;
    for (;;) {
      if (have_coef || !need_factor) {
        if (!c.eat('*')) break;
      }
      need_factor = false;
      have_coef = true;
      char v = c.peek();
      if (v != 'x' && v != 't') c.fail("expected variable");
      ++c.pos;
      if (!c.eat('[')) c.fail("expected [");
      int idx;
      if (v == 'x') {
        long j = c.integer();
        if (!c.eat(',')) c.fail("expected ,");
        long i = c.integer();
        idx = ring.var(static_cast<int>(j), static_cast<int>(i));
      } else {
        long k = c.integer();
        if (k < 1 || k > ring.aux()) c.fail("aux index out of range");
        idx = ring.point_vars() + static_cast<int>(k) - 1;
      }
      if (!c.eat(']')) c.fail("expected ]");
      int e = 1;
      if (c.eat('^')) e = static_cast<int>(c.integer());
      m.set(idx, m[idx] + e);
    }
    terms.emplace_back(m, coef);
    if (c.at_end()) break;
    if (!c.eat('+')) c.fail("expected +");
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace dg
