#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagonals/character.hpp"
#include "diagonals/graph.hpp"
#include "diagonals/linalg.hpp"
#include "diagonals/poly.hpp"

namespace dg {

// Bounded complex of graded free modules over a PolyRing.  Generators carry
// an internal degree and a weight in Z^d (coordinate grading: variable
// x[j,i] has weight e_i); differentials preserve both, so homology can be
// computed one multidegree at a time.
class FreeComplex {
 public:
  struct Generator {
    int degree = 0;
    std::vector<int> weight;
  };
  // Image of a generator: list of (target generator, coefficient polynomial).
  using Column = std::vector<std::pair<int, Polynomial>>;

  FreeComplex(PolyRing ring, int min_position);

  const PolyRing& ring() const { return ring_; }
  int min_position() const { return min_pos_; }
  int max_position() const { return min_pos_ + static_cast<int>(gens_.size()) - 1; }
  const std::vector<Generator>& generators(int position) const;
  // Adds position max_position()+1 with the given generators; diff[g] is
  // the differential of generator g into position max_position().
  void push(std::vector<Generator> gens, std::vector<Column> diff);

  // dimension of position p in internal degree t (all weights)
  long long dim(int position, int t) const;
  std::vector<SVec> basis_images(int position, const std::vector<int>& weight) const;
  SVec apply(int position, const SVec& v) const;  // differential position -> position-1
  std::size_t rank(int position, const std::vector<int>& weight) const;
  std::size_t dim(int position, const std::vector<int>& weight) const;
  // homology dimension at position p, internal degree t
  long long homology(int position, int t, long long monomial_cap = 2000000) const;
  // d o d = 0 in degree t
  bool squares_to_zero(int t) const;

 private:
  std::vector<std::pair<Key, Q>> basis(int position, const std::vector<int>& weight) const;
  PolyRing ring_;
  int min_pos_;
  std::vector<std::vector<Generator>> gens_;
  std::vector<std::vector<Column>> diff_;  // diff_[k] : position min_pos_+k -> min_pos_+k-1
};

// Homological positions are the Koszul indices q >= 0 (cohomological degree -q).
// Tensor product over the edges (lex order) of Koszul complexes
// Lambda^k(R^d) -> Lambda^{k-1}(R^d) contracting with s_I = (x_j - x_i).
FreeComplex koszul_complex(const PolyRing& ring, const SimpleGraph& g);

struct MultitorOracle {
  SimpleGraph graph;
  int q;
  std::vector<long long> dims;  // index t = 0..D
  std::string to_json() const;
};
// Graded dims of Tor_q(Delta, Gamma) in degrees 0..D.
MultitorOracle multitor_oracle(const SimpleGraph& g, int q, int D, int d = 2, int jobs = 1,
                               long long monomial_cap = 2000000);

// Hilbert function of the coordinate ring of Delta_Gamma inside X^n
// (n - v + k free points of dimension d).
long long diagonal_ring_hf(const SimpleGraph& g, int d, int t);

// Fits dims(t) = sum_s HF(Delta_Gamma, t - s) over a multiset of shifts,
// greedily from the bottom degree.  Empty if no fit.
std::optional<std::vector<int>> fit_shifts(const SimpleGraph& g, int d, const std::vector<long long>& dims);

struct MultitorFormula {
  long long rank;
  ClassFunction character;  // Lambda^q(C^d (x) q_Gamma) (x) eps_E on Stab(Gamma)
};
MultitorFormula multitor_formula(const SimpleGraph& g, int q, int d = 2);

struct E1Entry {
  SimpleGraph representative;
  PermGroup stabilizer;
  std::map<Partition, long long> multiplicities;  // S^lambda Omega^1 counts
};
// Invariant E1 terms E_1^{p,q} (q <= 0) as a list over iso classes of graphs
// with p edges; classes with no invariants are omitted.
std::vector<E1Entry> e1_page(int n, int p, int q, int d = 2);

}  // namespace dg
