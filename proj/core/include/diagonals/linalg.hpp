#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "diagonals/poly.hpp"

namespace dg {

// Coordinate of a vector in a finite free graded module: a slot (free
// generator) and a monomial.
struct Key {
  std::uint32_t slot = 0;
  Monomial m;
  bool operator==(const Key& o) const { return slot == o.slot && m == o.m; }
};

// Positive when a comes before b (lower slot first, then descending grevlex).
inline int key_cmp(const Key& a, const Key& b) {
  if (a.slot != b.slot) return a.slot < b.slot ? 1 : -1;
  return grevlex_cmp(a.m, b.m);
}

struct KeyGreater {
  bool operator()(const Key& a, const Key& b) const { return key_cmp(a, b) > 0; }
};

// Sparse vector sorted by KeyGreater, no zero entries.
using SVec = std::vector<std::pair<Key, Q>>;
// Sparse coefficient vector over an index set, sorted ascending.
using TagVec = std::vector<std::pair<int, Q>>;

SVec svec_from_polynomial(const Polynomial& p, std::uint32_t slot = 0);
void svec_append_polynomial(SVec& v, const Polynomial& p, std::uint32_t slot);
void svec_normalize(SVec& v);  // sort and merge
// a + c*b
SVec svec_axpy(const SVec& a, const Q& c, const SVec& b);
TagVec tag_axpy(const TagVec& a, const Q& c, const TagVec& b);

// Incremental row echelon form over Q.  Rows are kept with pivot
// coefficient 1; pivot = leading key.
class Echelon {
 public:
  // Adds v if it is independent of the current rows.  Returns true if added.
  bool insert(SVec v);
  // Same, tracking combinations: if v reduces to zero, *relation receives
  // tag minus the combination of row tags that cancelled it.
  bool insert_tracked(SVec v, TagVec tag, TagVec* relation);
  SVec reduce(SVec v) const;
  bool in_span(const SVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  // Rows in insertion order.
  const std::vector<SVec>& rows() const { return rows_; }
  // Fully reduced rows sorted by pivot; canonical for the spanned space.
  std::vector<SVec> reduced_basis() const;

 private:
  void reduce_in_place(SVec& v, TagVec* tag) const;
  std::vector<SVec> rows_;
  std::vector<TagVec> tags_;
  std::map<Key, std::size_t, KeyGreater> pivots_;
};

std::size_t rank_of(const std::vector<SVec>& vs);
// Basis of {c : sum_i c_i vs[i] = 0}.
std::vector<TagVec> kernel_of(const std::vector<SVec>& vs);

}  // namespace dg
