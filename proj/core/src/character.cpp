#include "diagonals/character.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dg {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Q& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

Q Matrix::trace() const {
  Q t = 0;
  for (int i = 0; i < std::min(rows, cols); ++i) t += (*this)(i, i);
  return t;
}

Q determinant(Matrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
  int n = m.rows;
  Q det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Q f = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::size_t matrix_rank(Matrix m) {
  std::size_t rank = 0;
  for (int c = 0; c < m.cols && static_cast<int>(rank) < m.rows; ++c) {
    int p = static_cast<int>(rank);
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(static_cast<int>(rank), j));
    for (int r = 0; r < m.rows; ++r) {
      if (r == static_cast<int>(rank) || m(r, c) == 0) continue;
      Q f = m(r, c) / m(static_cast<int>(rank), c);
      for (int j = c; j < m.cols; ++j) m(r, j) -= f * m(static_cast<int>(rank), j);
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= columns(); ++j) {
    int cnt = 0;
    for (int p : parts)
      if (p >= j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::vector<Partition> Partition::all(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

// ---------------------------------------------------------------------------

ClassFunction::ClassFunction(PermGroup group, std::vector<Q> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.classes().size())
    throw std::invalid_argument("ClassFunction: one value per conjugacy class required");
}

ClassFunction ClassFunction::from_elements(const PermGroup& G, const std::function<Q(const Permutation&)>& f) {
  std::vector<Q> v;
  for (auto& c : G.classes()) v.push_back(f(c.representative));
  return ClassFunction(G, std::move(v));
}

ClassFunction ClassFunction::trivial(const PermGroup& G) {
  return ClassFunction(G, std::vector<Q>(G.classes().size(), Q(1)));
}

ClassFunction ClassFunction::linear(const PermGroup& G, const std::vector<Permutation>& elems,
                                    const std::vector<int>& values) {
  if (elems.size() != values.size()) throw std::invalid_argument("linear character: size mismatch");
  const auto& all = G.elements();
  std::vector<int> val(all.size(), 0);
  val[G.index_of(Permutation(G.degree()))] = 1;
  std::vector<int> frontier{G.index_of(Permutation(G.degree()))};
  for (std::size_t k = 0; k < elems.size(); ++k)
    if (!G.contains(elems[k])) throw std::invalid_argument("linear character: element not in group");
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int i : frontier)
      for (std::size_t k = 0; k < elems.size(); ++k) {
        int j = G.index_of(elems[k] * all[i]);
        int v = values[k] * val[i];
        if (val[j] == 0) {
          val[j] = v;
          next.push_back(j);
        } else if (val[j] != v) {
          throw std::invalid_argument("linear character: inconsistent values");
        }
      }
    frontier = std::move(next);
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    if (val[i] == 0) throw std::invalid_argument("linear character: elements do not generate the group");
  return from_elements(G, [&](const Permutation& g) { return Q(val[G.index_of(g)]); });
}

void ClassFunction::require_same_group(const ClassFunction& o) const {
  if (group_.degree() != o.group_.degree() || group_.elements() != o.group_.elements())
    throw std::invalid_argument("ClassFunction: different groups");
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  require_same_group(o);
  auto v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const { return *this + o * Q(-1); }

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  require_same_group(o);
  auto v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= o.values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator*(const Q& c) const {
  auto v = values_;
  for (auto& x : v) x *= c;
  return ClassFunction(group_, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return group_.elements() == o.group_.elements() && values_ == o.values_;
}

Q ClassFunction::inner(const ClassFunction& o) const {
  require_same_group(o);
  Q s = 0;
  const auto& cls = group_.classes();
  for (std::size_t k = 0; k < cls.size(); ++k) {
    int inv = group_.class_of(cls[k].representative.inverse());
    s += Q(static_cast<long>(cls[k].members.size())) * values_[k] * o.values_[inv];
  }
  return s / Q(static_cast<long>(group_.order()));
}

Q ClassFunction::invariant_dim() const { return inner(trivial(group_)); }

std::string ClassFunction::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += dg::to_string(values_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

MatrixRep::MatrixRep(PermGroup group, std::vector<Matrix> mats) : group_(std::move(group)), mats_(std::move(mats)) {
  if (mats_.size() != group_.order()) throw std::invalid_argument("MatrixRep: one matrix per element required");
}

MatrixRep MatrixRep::from_function(const PermGroup& G, const std::function<Matrix(const Permutation&)>& f) {
  std::vector<Matrix> m;
  for (auto& g : G.elements()) m.push_back(f(g));
  return MatrixRep(G, std::move(m));
}

MatrixRep MatrixRep::from_generators(const PermGroup& G, const std::vector<Matrix>& gen_mats) {
  const auto& gens = G.generators();
  if (gens.size() != gen_mats.size()) throw std::invalid_argument("MatrixRep: one matrix per generator required");
  int dim = gen_mats.empty() ? 0 : gen_mats.front().rows;
  const auto& all = G.elements();
  std::vector<Matrix> m(all.size());
  std::vector<bool> have(all.size());
  int e = G.index_of(Permutation(G.degree()));
  m[e] = Matrix::identity(dim);
  have[e] = true;
  std::vector<int> frontier{e};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int i : frontier)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int j = G.index_of(gens[k] * all[i]);
        Matrix prod = gen_mats[k] * m[i];
        if (!have[j]) {
          m[j] = std::move(prod);
          have[j] = true;
          next.push_back(j);
        } else if (!(m[j] == prod)) {
          throw std::invalid_argument("MatrixRep: generator matrices do not define a representation");
        }
      }
    frontier = std::move(next);
  }
  return MatrixRep(G, std::move(m));
}

const Matrix& MatrixRep::of(const Permutation& g) const {
  int i = group_.index_of(g);
  if (i < 0) throw std::invalid_argument("MatrixRep: element not in group");
  return mats_[i];
}

bool MatrixRep::is_homomorphism() const {
  const auto& all = group_.elements();
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b)
      if (!(mats_[group_.index_of(all[a] * all[b])] == mats_[a] * mats_[b])) return false;
  return true;
}

ClassFunction MatrixRep::character() const {
  return ClassFunction::from_elements(group_, [&](const Permutation& g) { return of(g).trace(); });
}

// ---------------------------------------------------------------------------

std::vector<Q> complete_from_power(const std::vector<Q>& p, int m) {
  std::vector<Q> h(m + 1);
  h[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Q s = 0;
    for (int i = 1; i <= k; ++i) s += p[i - 1] * h[k - i];
    h[k] = s / k;
  }
  return h;
}

std::vector<Q> elementary_from_power(const std::vector<Q>& p, int m) {
  std::vector<Q> e(m + 1);
  e[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Q s = 0;
    for (int i = 1; i <= k; ++i) s += (i % 2 ? 1 : -1) * p[i - 1] * e[k - i];
    e[k] = s / k;
  }
  return e;
}

namespace {

std::vector<Q> power_traces(const ClassFunction& chi, const Permutation& g, int m) {
  std::vector<Q> p;
  for (int k = 1; k <= m; ++k) p.push_back(chi.at(g.pow(k)));
  return p;
}

}  // namespace

ClassFunction schur_character(const Partition& lambda, const ClassFunction& chi) {
  int w = lambda.weight();
  int r = lambda.rows();
  return ClassFunction::from_elements(chi.group(), [&](const Permutation& g) {
    if (r == 0) return Q(1);
    auto h = complete_from_power(power_traces(chi, g, w), w);
    Matrix jt(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        int idx = lambda.parts[i] - i + j;
        jt(i, j) = idx < 0 ? Q(0) : (idx > w ? Q(0) : h[idx]);
      }
    return determinant(jt);
  });
}

ClassFunction schur_character(const Partition& lambda, const MatrixRep& rep) {
  return schur_character(lambda, rep.character());
}

ClassFunction exterior_character(int q, const ClassFunction& chi) {
  return ClassFunction::from_elements(chi.group(), [&](const Permutation& g) {
    if (q == 0) return Q(1);
    return elementary_from_power(power_traces(chi, g, q), q)[q];
  });
}

// ---------------------------------------------------------------------------

CharacterTable::CharacterTable(PermGroup group, std::vector<std::string> names, std::vector<ClassFunction> irreps)
    : group_(std::move(group)), names_(std::move(names)), irreps_(std::move(irreps)) {
  if (names_.size() != irreps_.size()) throw std::invalid_argument("CharacterTable: names and characters differ");
}

namespace {

// Irreducible characters of S_k (k <= 4) keyed by cycle type.
const std::map<std::vector<int>, std::vector<std::pair<std::string, std::vector<int>>>>& symmetric_values() {
  // cycle types listed per k; each irrep: name, values in that order
  static const std::map<std::vector<int>, std::vector<std::pair<std::string, std::vector<int>>>> t = {
      {{1}, {{"(1)", {1}}}},
      {{2}, {{"(2)", {1, 1}}, {"(1,1)", {1, -1}}}},
      {{3}, {{"(3)", {1, 1, 1}}, {"(1,1,1)", {1, -1, 1}}, {"(2,1)", {2, 0, -1}}}},
      {{4},
       {{"(4)", {1, 1, 1, 1, 1}},
        {"(1,1,1,1)", {1, -1, 1, 1, -1}},
        {"(3,1)", {3, 1, -1, 0, -1}},
        {"(2,1,1)", {3, -1, -1, 0, 1}},
        {"(2,2)", {2, 0, 2, -1, 0}}}},
  };
  return t;
}

const std::vector<std::vector<int>>& symmetric_class_types(int k) {
  static const std::vector<std::vector<std::vector<int>>> types = {
      {},
      {{1}},
      {{1, 1}, {2}},
      {{1, 1, 1}, {2, 1}, {3}},
      {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}},
  };
  return types.at(k);
}

// Cycle type of g restricted to a g-stable support.
std::vector<int> support_cycle_type(const Permutation& g, const std::vector<int>& support) {
  std::vector<int> out;
  std::set<int> seen;
  for (int s : support) {
    if (seen.count(s)) continue;
    int len = 0;
    for (int x = s; !seen.count(x); x = g(x)) {
      seen.insert(x);
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// The part of g acting on support, identity elsewhere.
Permutation restrict_to(const Permutation& g, const std::vector<int>& support) {
  std::vector<int> img(g.degree());
  for (int j = 1; j <= g.degree(); ++j) img[j - 1] = j;
  for (int s : support) img[s - 1] = g(s);
  return Permutation::from_images(img);
}

}  // namespace

CharacterTable CharacterTable::symmetric(int n, const std::vector<int>& support) {
  int k = static_cast<int>(support.size());
  if (k < 1 || k > 4) throw std::invalid_argument("CharacterTable::symmetric: built-in tables cover S_1..S_4");
  PermGroup G = PermGroup::symmetric_on(n, support);
  const auto& types = symmetric_class_types(k);
  const auto& irr = symmetric_values().at({k});
  std::vector<std::string> names;
  std::vector<ClassFunction> chars;
  for (auto& [name, vals] : irr) {
    names.push_back(name);
    chars.push_back(ClassFunction::from_elements(G, [&](const Permutation& g) {
      auto ct = support_cycle_type(g, support);
      auto it = std::find(types.begin(), types.end(), ct);
      return Q(vals[it - types.begin()]);
    }));
  }
  return CharacterTable(G, std::move(names), std::move(chars));
}

CharacterTable CharacterTable::symmetric_product(int n, const std::vector<std::vector<int>>& supports) {
  std::vector<Permutation> gens;
  for (auto& s : supports)
    for (std::size_t k = 0; k + 1 < s.size(); ++k) gens.push_back(Permutation::from_cycles(n, {{s[k], s[k + 1]}}));
  PermGroup G(n, gens);
  std::vector<std::string> names{""};
  std::vector<std::function<Q(const Permutation&)>> fns{[](const Permutation&) { return Q(1); }};
  for (auto& s : supports) {
    auto factor = symmetric(n, s);
    std::vector<std::string> nn;
    std::vector<std::function<Q(const Permutation&)>> nf;
    for (std::size_t a = 0; a < names.size(); ++a)
      for (std::size_t b = 0; b < factor.names().size(); ++b) {
        nn.push_back(names[a].empty() ? factor.names()[b] : names[a] + "x" + factor.names()[b]);
        auto prev = fns[a];
        auto chi = factor.irreducibles()[b];
        auto supp = s;
        nf.push_back([prev, chi, supp](const Permutation& g) -> Q { return prev(g) * chi.at(restrict_to(g, supp)); });
      }
    names = std::move(nn);
    fns = std::move(nf);
  }
  std::vector<ClassFunction> chars;
  for (auto& f : fns) chars.push_back(ClassFunction::from_elements(G, f));
  return CharacterTable(G, std::move(names), std::move(chars));
}

CharacterTable CharacterTable::dihedral4(const Permutation& sigma, const Permutation& rho) {
  PermGroup G(sigma.degree(), {sigma, rho});
  if (G.order() != 8 || rho.order() != 4 || sigma.order() != 2)
    throw std::invalid_argument("dihedral4: sigma, rho do not generate a dihedral group of order 8");
  // classes 1, sigma, sigma*rho, rho, rho^2
  std::vector<Permutation> reps{Permutation(sigma.degree()), sigma, sigma * rho, rho, rho * rho};
  const std::vector<std::pair<std::string, std::vector<int>>> vals = {
      {"triv", {1, 1, 1, 1, 1}},       {"det", {1, -1, -1, 1, 1}},     {"l(1s,-1r)", {1, 1, -1, -1, 1}},
      {"l(-1s,-1r)", {1, -1, 1, -1, 1}}, {"theta", {2, 0, 0, 0, -2}},
  };
  std::vector<int> rep_class;
  for (auto& r : reps) rep_class.push_back(G.class_of(r));
  std::vector<std::string> names;
  std::vector<ClassFunction> chars;
  for (auto& [name, v] : vals) {
    std::vector<Q> per_class(G.classes().size());
    for (std::size_t k = 0; k < reps.size(); ++k) per_class[rep_class[k]] = v[k];
    names.push_back(name);
    chars.emplace_back(G, std::move(per_class));
  }
  return CharacterTable(G, std::move(names), std::move(chars));
}

const ClassFunction& CharacterTable::operator[](const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::out_of_range("CharacterTable: no irreducible named " + name);
  return irreps_[it - names_.begin()];
}

std::vector<long long> CharacterTable::decompose(const ClassFunction& chi) const {
  std::vector<long long> out;
  for (std::size_t i = 0; i < irreps_.size(); ++i) {
    Q m = chi.inner(irreps_[i]);
    if (m.get_den() != 1 || m < 0)
      throw NotACharacter("multiplicity of " + names_[i] + " is " + dg::to_string(m) + ": not a character");
    out.push_back(m.get_num().get_si());
  }
  return out;
}

std::string CharacterTable::describe(const std::vector<long long>& mult) const {
  std::string s;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (!mult[i]) continue;
    if (!s.empty()) s += " + ";
    if (mult[i] > 1) s += std::to_string(mult[i]) + " ";
    s += names_[i];
  }
  return s.empty() ? "0" : s;
}

bool CharacterTable::is_orthonormal() const {
  for (std::size_t i = 0; i < irreps_.size(); ++i)
    for (std::size_t j = 0; j < irreps_.size(); ++j)
      if (irreps_[i].inner(irreps_[j]) != (i == j ? 1 : 0)) return false;
  return irreps_.size() == group_.classes().size();
}

namespace {

std::vector<Permutation> ordered_reps(const PermGroup& G, const std::vector<Permutation>& order) {
  if (!order.empty()) return order;
  std::vector<Permutation> r;
  for (auto& c : G.classes()) r.push_back(c.representative);
  return r;
}

}  // namespace

std::string CharacterTable::to_csv(const std::vector<Permutation>& class_order) const {
  auto reps = ordered_reps(group_, class_order);
  std::ostringstream os;
  os << "irreducible";
  for (auto& r : reps) os << "," << r.to_string();
  os << "\n";
  for (std::size_t i = 0; i < irreps_.size(); ++i) {
    os << names_[i];
    for (auto& r : reps) os << "," << dg::to_string(irreps_[i].at(r));
    os << "\n";
  }
  return os.str();
}

std::string CharacterTable::to_json(const std::vector<Permutation>& class_order) const {
  auto reps = ordered_reps(group_, class_order);
  nlohmann::json j;
  j["group"] = group_.to_string();
  j["order"] = group_.order();
  for (auto& r : reps) {
    j["classes"].push_back(
        {{"representative", r.to_string()}, {"size", group_.classes()[group_.class_of(r)].members.size()}});
  }
  for (std::size_t i = 0; i < irreps_.size(); ++i) {
    nlohmann::json row;
    for (auto& r : reps) row.push_back(dg::to_string(irreps_[i].at(r)));
    j["characters"][names_[i]] = row;
  }
  return j.dump(2);
}

bool frobenius_identity_check(int n) {
  if (n < 2 || n > 7) throw std::invalid_argument("frobenius_identity_check: n must be in 2..7");
  for (auto& type : Partition::all(n)) {
    // representative with the given cycle type
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int len : type.parts) {
      std::vector<int> c;
      for (int k = 0; k < len; ++k) c.push_back(next++);
      if (len > 1) cycles.push_back(c);
    }
    Permutation g = Permutation::from_cycles(n, cycles);
    Permutation g2 = g * g;
    long i1 = std::count(type.parts.begin(), type.parts.end(), 1);
    long i2 = std::count(type.parts.begin(), type.parts.end(), 2);
    Q rho = g.fixed_points() - 1;
    Q rho_sq = g2.fixed_points() - 1;
    Q lambda2 = (rho * rho - rho_sq) / 2;
    Q closed = Q(i1 * (i1 - 1) / 2 - i2);
    // trace of the signed edge action on W_{K_n}
    Q w = 0;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        int ga = g(a), gb = g(b);
        if (std::min(ga, gb) == a && std::max(ga, gb) == b) w += ga < gb ? 1 : -1;
      }
    if (rho + lambda2 != closed || w != closed) return false;
  }
  return true;
}

}  // namespace dg
