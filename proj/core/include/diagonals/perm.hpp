#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dg {

// Permutation of {1..n}.  Composition (a*b)(j) = a(b(j)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);
  // images[j-1] = image of j, 1-based values
  static Permutation from_images(const std::vector<int>& images);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  // "(1 2)(3 4)", "(1,2,3)" or "()"
  static Permutation parse(int n, std::string_view text);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int j) const { return img_[j - 1] + 1; }
  int image0(int j0) const { return img_[j0]; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  Permutation pow(int k) const;
  int sign() const;
  bool is_identity() const;
  int fixed_points() const;
  int order() const;
  // Cycle lengths, descending, fixed points included.
  std::vector<int> cycle_type() const;
  std::string to_string() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<std::uint8_t> img_;
};

inline constexpr int kMaxGroupDegree = 6;

class PermGroup {
 public:
  PermGroup(int n, std::vector<Permutation> generators);
  static PermGroup symmetric(int n);
  // Symmetric group on a subset of {1..n}, fixing the rest.
  static PermGroup symmetric_on(int n, const std::vector<int>& support);
  static PermGroup trivial(int n);

  int degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  // Sorted by image array; identity first.
  const std::vector<Permutation>& elements() const;
  std::size_t order() const { return elements().size(); }
  int index_of(const Permutation& g) const;  // -1 if absent
  bool contains(const Permutation& g) const { return index_of(g) >= 0; }

  struct ConjugacyClass {
    Permutation representative;
    std::vector<int> members;  // element indices
  };
  // Ordered by smallest member; the identity class comes first.
  const std::vector<ConjugacyClass>& classes() const;
  int class_of(const Permutation& g) const;
  int class_of_index(int element_index) const;

  // Subgroup of elements satisfying pred (pred must define a subgroup).
  PermGroup subgroup(const std::function<bool(const Permutation&)>& pred) const;
  std::string to_string() const;  // generator list

 private:
  struct Data;
  void ensure() const;
  int n_;
  std::vector<Permutation> gens_;
  std::shared_ptr<Data> data_;
};

}  // namespace dg
