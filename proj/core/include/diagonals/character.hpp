#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagonals/perm.hpp"
#include "diagonals/poly.hpp"

namespace dg {

// Dense rational matrix, row-major.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Q> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static Matrix identity(int n);

  Q& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Q& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  Q trace() const;
};

Q determinant(Matrix m);
std::size_t matrix_rank(Matrix m);

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);
  int weight() const;
  int rows() const { return static_cast<int>(parts.size()); }
  int columns() const { return parts.empty() ? 0 : parts.front(); }
  Partition conjugate() const;
  std::string to_string() const;  // "(3,1,1)"
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }

  // Partitions of n, reverse lexicographic ((n) first).
  static std::vector<Partition> all(int n);
  static Partition column(int q) { return Partition(std::vector<int>(q, 1)); }
};

class ClassFunction {
 public:
  // values[k] belongs to group.classes()[k]
  ClassFunction(PermGroup group, std::vector<Q> values);
  static ClassFunction from_elements(const PermGroup& G, const std::function<Q(const Permutation&)>& f);
  static ClassFunction trivial(const PermGroup& G);
  // Linear character with prescribed values on a list of group elements;
  // throws if the assignment does not extend to a homomorphism to {+-1}.
  static ClassFunction linear(const PermGroup& G, const std::vector<Permutation>& elems,
                              const std::vector<int>& values);

  const PermGroup& group() const { return group_; }
  const std::vector<Q>& values() const { return values_; }
  Q at(const Permutation& g) const { return values_[group_.class_of(g)]; }
  Q degree() const { return values_.front(); }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;  // tensor product
  ClassFunction operator*(const Q& c) const;
  bool operator==(const ClassFunction& o) const;
  bool operator!=(const ClassFunction& o) const { return !(*this == o); }

  // (1/|G|) sum_g chi(g) psi(g^-1)
  Q inner(const ClassFunction& o) const;
  Q invariant_dim() const;
  std::string to_string() const;

 private:
  void require_same_group(const ClassFunction& o) const;
  PermGroup group_;
  std::vector<Q> values_;
};

class MatrixRep {
 public:
  // mats[i] is the matrix of group.elements()[i].
  MatrixRep(PermGroup group, std::vector<Matrix> mats);
  static MatrixRep from_function(const PermGroup& G, const std::function<Matrix(const Permutation&)>& f);
  // Extends generator matrices along products; throws std::invalid_argument
  // if two words for one element give different matrices.
  static MatrixRep from_generators(const PermGroup& G, const std::vector<Matrix>& gen_mats);

  const PermGroup& group() const { return group_; }
  int dim() const { return mats_.empty() ? 0 : mats_.front().rows; }
  const Matrix& of(const Permutation& g) const;
  bool is_homomorphism() const;
  ClassFunction character() const;

 private:
  PermGroup group_;
  std::vector<Matrix> mats_;
};

// Newton's identities: h_0..h_m (complete) and e_0..e_m (elementary) from
// power sums p_1..p_m.
std::vector<Q> complete_from_power(const std::vector<Q>& p, int m);
std::vector<Q> elementary_from_power(const std::vector<Q>& p, int m);

// chi_{S^lambda V} via power traces p_k(g) = chi_V(g^k) and Jacobi-Trudi.
ClassFunction schur_character(const Partition& lambda, const ClassFunction& chi);
ClassFunction schur_character(const Partition& lambda, const MatrixRep& rep);
// Lambda^q via the elementary recursion (independent of Jacobi-Trudi).
ClassFunction exterior_character(int q, const ClassFunction& chi);

struct NotACharacter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CharacterTable {
 public:
  CharacterTable(PermGroup group, std::vector<std::string> names, std::vector<ClassFunction> irreps);

  // Symmetric group on a support of size 2..4 inside S_n; irreducibles
  // named by partitions.
  static CharacterTable symmetric(int n, const std::vector<int>& support);
  // Direct product of symmetric groups on disjoint supports; names joined
  // with "x".
  static CharacterTable symmetric_product(int n, const std::vector<std::vector<int>>& supports);
  // Dihedral group of order 8 generated by a reflection sigma and a rotation
  // rho.  Irreducibles: triv, det, l(1s,-1r), l(-1s,-1r), theta.
  static CharacterTable dihedral4(const Permutation& sigma, const Permutation& rho);

  const PermGroup& group() const { return group_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<ClassFunction>& irreducibles() const { return irreps_; }
  const ClassFunction& operator[](const std::string& name) const;

  // Multiplicities <chi, chi_i>; throws NotACharacter if any is negative or
  // non-integral.
  std::vector<long long> decompose(const ClassFunction& chi) const;
  // "det + l(1s,-1r) + 2 theta" style summary of a decomposition.
  std::string describe(const std::vector<long long>& mult) const;
  bool is_orthonormal() const;

  // Class representatives in the given order (defaults to group order).
  std::string to_csv(const std::vector<Permutation>& class_order = {}) const;
  std::string to_json(const std::vector<Permutation>& class_order = {}) const;

 private:
  PermGroup group_;
  std::vector<std::string> names_;
  std::vector<ClassFunction> irreps_;
};

// Identity on the cycle type of every class of S_n (n <= 7):
// chi_rho + chi_{Lambda^2 rho} = binom(i1,2) - i2 = chi_{W_{K_n}}.
bool frobenius_identity_check(int n);

}  // namespace dg
