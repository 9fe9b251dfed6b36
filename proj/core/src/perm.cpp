#include "diagonals/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dg {

Permutation::Permutation(int n) : img_(n) {
  if (n < 1 || n > 255) throw std::invalid_argument("Permutation: bad degree");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  Permutation p(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    int v = images[j] - 1;
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[v] = true;
    p.img_[j] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p(n);
  std::vector<bool> used(n);
  for (auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      int a = c[k], b = c[(k + 1) % c.size()];
      if (a < 1 || a > n || b < 1 || b > n) throw std::out_of_range("Permutation: cycle entry out of range");
      if (used[a - 1]) throw std::invalid_argument("Permutation: cycles overlap");
      used[a - 1] = true;
      p.img_[a - 1] = static_cast<std::uint8_t>(b - 1);
    }
  }
  return p;
}

Permutation Permutation::parse(int n, std::string_view s) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("Permutation::parse: expected (");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip();
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      std::size_t st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (st == i) throw std::invalid_argument("Permutation::parse: expected number");
      cyc.push_back(std::stoi(std::string(s.substr(st, i - st))));
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip();
  }
  return from_cycles(n, cycles);
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (degree() != o.degree()) throw std::invalid_argument("Permutation: degree mismatch");
  Permutation r(degree());
  for (int j = 0; j < degree(); ++j) r.img_[j] = img_[o.img_[j]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (int j = 0; j < degree(); ++j) r.img_[img_[j]] = static_cast<std::uint8_t>(j);
  return r;
}

Permutation Permutation::pow(int k) const {
  Permutation r(degree());
  Permutation b = k >= 0 ? *this : inverse();
  for (int e = std::abs(k); e; e >>= 1) {
    if (e & 1) r = r * b;
    b = b * b;
  }
  return r;
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

bool Permutation::is_identity() const {
  for (int j = 0; j < degree(); ++j)
    if (img_[j] != j) return false;
  return true;
}

int Permutation::fixed_points() const {
  int c = 0;
  for (int j = 0; j < degree(); ++j)
    if (img_[j] == j) ++c;
  return c;
}

int Permutation::order() const {
  int o = 1;
  for (int len : cycle_type()) o = std::lcm(o, len);
  return o;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> out;
  std::vector<bool> seen(degree());
  for (int j = 0; j < degree(); ++j) {
    if (seen[j]) continue;
    int len = 0;
    for (int k = j; !seen[k]; k = img_[k]) {
      seen[k] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(degree());
  for (int j = 0; j < degree(); ++j) {
    if (seen[j] || img_[j] == j) continue;
    out += "(";
    bool first = true;
    for (int k = j; !seen[k]; k = img_[k]) {
      seen[k] = true;
      if (!first) out += " ";
      first = false;
      out += std::to_string(k + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

struct PermGroup::Data {
  std::once_flag once;
  std::vector<Permutation> elements;
  std::map<Permutation, int> index;
  std::vector<ConjugacyClass> classes;
  std::vector<int> class_of;
};

PermGroup::PermGroup(int n, std::vector<Permutation> generators)
    : n_(n), gens_(std::move(generators)), data_(std::make_shared<Data>()) {
  if (n < 1 || n > kMaxGroupDegree)
    throw std::invalid_argument("PermGroup: degree must be in 1.." + std::to_string(kMaxGroupDegree) +
                                " (explicit enumeration cap)");
  for (auto& g : gens_)
    if (g.degree() != n) throw std::invalid_argument("PermGroup: generator degree mismatch");
}

PermGroup PermGroup::symmetric(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return symmetric_on(n, all);
}

PermGroup PermGroup::symmetric_on(int n, const std::vector<int>& support) {
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k + 1 < support.size(); ++k)
    gens.push_back(Permutation::from_cycles(n, {{support[k], support[k + 1]}}));
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::trivial(int n) { return PermGroup(n, {}); }

void PermGroup::ensure() const {
  std::call_once(data_->once, [this] {
    std::set<Permutation> seen{Permutation(n_)};
    std::vector<Permutation> frontier{Permutation(n_)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (auto& g : frontier)
        for (auto& h : gens_) {
          Permutation k = h * g;
          if (seen.insert(k).second) next.push_back(k);
        }
      frontier = std::move(next);
    }
    auto& d = *data_;
    d.elements.assign(seen.begin(), seen.end());
    for (std::size_t i = 0; i < d.elements.size(); ++i) d.index[d.elements[i]] = static_cast<int>(i);
    d.class_of.assign(d.elements.size(), -1);
    for (std::size_t i = 0; i < d.elements.size(); ++i) {
      if (d.class_of[i] >= 0) continue;
      ConjugacyClass c{d.elements[i], {}};
      int cid = static_cast<int>(d.classes.size());
      for (auto& h : d.elements) {
        int k = d.index.at(h * d.elements[i] * h.inverse());
        if (d.class_of[k] < 0) {
          d.class_of[k] = cid;
          c.members.push_back(k);
        }
      }
      std::sort(c.members.begin(), c.members.end());
      d.classes.push_back(std::move(c));
    }
  });
}

const std::vector<Permutation>& PermGroup::elements() const {
  ensure();
  return data_->elements;
}

int PermGroup::index_of(const Permutation& g) const {
  ensure();
  auto it = data_->index.find(g);
  return it == data_->index.end() ? -1 : it->second;
}

const std::vector<PermGroup::ConjugacyClass>& PermGroup::classes() const {
  ensure();
  return data_->classes;
}

int PermGroup::class_of(const Permutation& g) const {
  int i = index_of(g);
  if (i < 0) throw std::invalid_argument("PermGroup::class_of: element not in group");
  return data_->class_of[i];
}

int PermGroup::class_of_index(int i) const {
  ensure();
  return data_->class_of.at(i);
}

PermGroup PermGroup::subgroup(const std::function<bool(const Permutation&)>& pred) const {
  std::vector<Permutation> keep;
  for (auto& g : elements())
    if (!g.is_identity() && pred(g)) keep.push_back(g);
  // A small generating set: greedily add elements not yet generated.
  std::vector<Permutation> gens;
  std::set<Permutation> span{Permutation(n_)};
  for (auto& g : keep) {
    if (span.count(g)) continue;
    gens.push_back(g);
    PermGroup tmp(n_, gens);
    span = std::set<Permutation>(tmp.elements().begin(), tmp.elements().end());
  }
  PermGroup out(n_, gens);
  if (out.order() != keep.size() + 1) throw std::logic_error("PermGroup::subgroup: predicate is not a subgroup");
  return out;
}

std::string PermGroup::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ">";
}

}  // namespace dg
