#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diagonals/character.hpp"
#include "diagonals/perm.hpp"

namespace dg {

using Edge = std::pair<int, int>;  // first < second, 1-based

// Subgraph of K_n without isolated vertices: V is the union of the edges.
class SimpleGraph {
 public:
  SimpleGraph(int n, std::vector<Edge> edges);
  static SimpleGraph complete(int n);
  // "[[1,2],[1,3]]"
  static SimpleGraph from_json(int n, const std::string& text);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& vertices() const { return vertices_; }
  int l() const { return static_cast<int>(edges_.size()); }
  int v() const { return static_cast<int>(vertices_.size()); }
  int k() const { return static_cast<int>(components_.size()); }
  const std::vector<std::vector<int>>& components() const { return components_; }
  int cycle_rank() const { return l() - v() + k(); }
  bool acyclic() const { return cycle_rank() == 0; }

  int edge_index(const Edge& e) const;  // -1 if absent
  bool contains(const SimpleGraph& sub) const;
  SimpleGraph permuted(const Permutation& g) const;
  SimpleGraph with_edge(Edge e) const;

  std::string to_json() const;
  bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
  bool operator<(const SimpleGraph& o) const { return edges_ < o.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> vertices_;
  std::vector<std::vector<int>> components_;
};

// All edge subsets of K_n of size l, in lexicographic order of edge lists.
std::vector<SimpleGraph> enumerate_graphs(int n, int l);

// Lex-least edge list in the S_n-orbit.
SimpleGraph canonical_form(const SimpleGraph& g);

struct IsoClass {
  SimpleGraph representative;
  std::vector<SimpleGraph> members;
};
// Orbits under S_n, ordered by representative.
std::vector<IsoClass> iso_classes(const std::vector<SimpleGraph>& graphs);

// Elements of G mapping the edge set to itself.
PermGroup stabilizer(const PermGroup& G, const SimpleGraph& g);

struct OrientedCycle {
  std::vector<int> walk;  // closed walk v0 v1 ... v_{m-1} (back to v0)
  // eta per edge of the graph: +1 if the larger endpoint follows the smaller
  // in the walk, -1 if it precedes, 0 if the edge is not on the cycle.
  std::vector<int> eta;
};

struct CycleData {
  int c = 0;
  std::vector<Edge> forest;  // lex-greedy spanning forest
  std::vector<OrientedCycle> basis;  // one per non-tree edge, in edge order
};

CycleData cycle_data(const SimpleGraph& g);

// boundary e_{ij} -> e_j - e_i; rows indexed by vertices(), columns by edges().
Matrix boundary_matrix(const SimpleGraph& g);
// sigma.e_I = s e_{sigma(I)}, s = -1 iff sigma reverses the endpoints' order.
Matrix signed_edge_matrix(const SimpleGraph& g, const Permutation& sigma);

// W_Gamma and q_Gamma = ker(boundary) as representations of a subgroup of the
// stabilizer.  q_Gamma uses the fundamental cycle basis.
MatrixRep edge_rep(const SimpleGraph& g, const PermGroup& G);
MatrixRep cycle_rep(const SimpleGraph& g, const PermGroup& G);

// Sign of the (unsigned) permutation induced on the edge set.
int edge_permutation_sign(const SimpleGraph& g, const Permutation& sigma);
ClassFunction edge_sign_character(const SimpleGraph& g, const PermGroup& G);

// Product of the single-insertion signs (-1)^{a-1} along the lex-ordered
// edges of big not in small; throws if small is not a subgraph.
int epsilon_sign(const SimpleGraph& small, const SimpleGraph& big);

}  // namespace dg
