#include "diagonals/linalg.hpp"

#include <algorithm>

namespace dg {

SVec svec_from_polynomial(const Polynomial& p, std::uint32_t slot) {
  SVec v;
  v.reserve(p.size());
  for (auto& [m, c] : p.terms()) v.emplace_back(Key{slot, m}, c);
  return v;
}

void svec_append_polynomial(SVec& v, const Polynomial& p, std::uint32_t slot) {
  for (auto& [m, c] : p.terms()) v.emplace_back(Key{slot, m}, c);
}

void svec_normalize(SVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return key_cmp(a.first, b.first) > 0; });
  SVec out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second == 0) out.pop_back();
    } else if (e.second != 0) {
      out.push_back(std::move(e));
    }
  }
  v = std::move(out);
}

SVec svec_axpy(const SVec& a, const Q& c, const SVec& b) {
  SVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Q tmp;
  while (i < a.size() && j < b.size()) {
    int k = key_cmp(a[i].first, b[j].first);
    if (k > 0) {
      r.push_back(a[i++]);
    } else if (k < 0) {
      r.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      tmp = a[i].second + c * b[j].second;
      if (tmp != 0) r.emplace_back(a[i].first, tmp);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.emplace_back(b[j].first, c * b[j].second);
  return r;
}

TagVec tag_axpy(const TagVec& a, const Q& c, const TagVec& b) {
  TagVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      r.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      r.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Q s = a[i].second + c * b[j].second;
      if (s != 0) r.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.emplace_back(b[j].first, c * b[j].second);
  return r;
}

void Echelon::reduce_in_place(SVec& v, TagVec* tag) const {
  // Only leading entries are eliminated: enough to decide independence.
  while (!v.empty()) {
    auto it = pivots_.find(v.front().first);
    if (it == pivots_.end()) return;
    Q c = -v.front().second;
    v = svec_axpy(v, c, rows_[it->second]);
    if (tag) *tag = tag_axpy(*tag, c, tags_[it->second]);
  }
}

SVec Echelon::reduce(SVec v) const {
  // Full reduction so that equal residues mean equal cosets.
  SVec out;
  while (!v.empty()) {
    auto it = pivots_.find(v.front().first);
    if (it == pivots_.end()) {
      out.push_back(v.front());
      v.erase(v.begin());
      continue;
    }
    v = svec_axpy(v, -v.front().second, rows_[it->second]);
  }
  return out;
}

bool Echelon::insert(SVec v) {
  reduce_in_place(v, nullptr);
  if (v.empty()) return false;
  Q inv = 1 / v.front().second;
  for (auto& e : v) e.second *= inv;
  pivots_.emplace(v.front().first, rows_.size());
  rows_.push_back(std::move(v));
  tags_.emplace_back();
  return true;
}

bool Echelon::insert_tracked(SVec v, TagVec tag, TagVec* relation) {
  reduce_in_place(v, &tag);
  if (v.empty()) {
    if (relation) *relation = std::move(tag);
    return false;
  }
  Q inv = 1 / v.front().second;
  for (auto& e : v) e.second *= inv;
  for (auto& e : tag) e.second *= inv;
  pivots_.emplace(v.front().first, rows_.size());
  rows_.push_back(std::move(v));
  tags_.push_back(std::move(tag));
  return true;
}

std::vector<SVec> Echelon::reduced_basis() const {
  std::vector<std::pair<Key, std::size_t>> order(pivots_.begin(), pivots_.end());
  std::vector<SVec> out;
  out.reserve(order.size());
  // Back-substitute from the smallest pivot upwards.
  std::vector<SVec> done(rows_.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    SVec v = rows_[it->second];
    SVec res;
    res.push_back(v.front());
    SVec rest(v.begin() + 1, v.end());
    while (!rest.empty()) {
      auto p = pivots_.find(rest.front().first);
      if (p == pivots_.end()) {
        res.push_back(rest.front());
        rest.erase(rest.begin());
        continue;
      }
      rest = svec_axpy(rest, -rest.front().second, done[p->second]);
    }
    done[it->second] = std::move(res);
  }
  for (auto& [k, idx] : order) out.push_back(done[idx]);
  return out;
}

std::size_t rank_of(const std::vector<SVec>& vs) {
  Echelon e;
  for (auto& v : vs) e.insert(v);
  return e.rank();
}

std::vector<TagVec> kernel_of(const std::vector<SVec>& vs) {
  Echelon e;
  std::vector<TagVec> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    TagVec rel;
    if (!e.insert_tracked(vs[i], TagVec{{static_cast<int>(i), Q(1)}}, &rel)) out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace dg
