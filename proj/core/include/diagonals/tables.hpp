#pragma once

#include <map>
#include <string>
#include <vector>

#include "diagonals/character.hpp"
#include "diagonals/graph.hpp"

namespace dg {

struct NamedGraph {
  std::string name;
  SimpleGraph graph;
};

// Representatives used throughout for n = 4: A1, A2, B2, A3, B3, K3, K3uJ,
// C4, C4uL, K4 (the last five are the non-acyclic classes).
const std::vector<NamedGraph>& k4_classes();
const std::vector<NamedGraph>& k4_nonacyclic_classes();
const NamedGraph& k4_class(const std::string& name);

// Built-in character table of Stab_{S_4}(Gamma) for the five non-acyclic
// classes (S_3, S_2, D_4, S_2 x S_2, S_4).
CharacterTable stabilizer_table(const std::string& name);

// For each lambda |- q with at most d rows and at most c columns, the
// multiplicity of S^lambda Omega^1 in the invariants of
// Lambda^q(Omega^1 (x) q_Gamma) (x) eps_E, i.e. dim (S^{lambda'} q_Gamma (x) eps_E)^G.
// G must stabilize Gamma.  Throws std::out_of_range unless 0 <= q <= d*c.
std::map<Partition, long long> isotypic_multiplicities(const SimpleGraph& g, const PermGroup& G, int q, int d);
std::map<Partition, long long> isotypic_multiplicities(const SimpleGraph& g, int q, int d);

// Table 1: dim (S^lambda q_Gamma)^{S_Gamma} for Gamma in {C4uL, K4}.
const std::vector<Partition>& table1_columns();
struct Table1Row {
  std::string graph;
  std::vector<long long> dims;  // aligned with table1_columns()
};
std::vector<Table1Row> table1();
long long schur_invariant_dim(const SimpleGraph& g, const Partition& lambda);

// Table 2: Stab_{S_4}(Gamma) with a generating set and the values of the
// edge-sign character on it, for every class of k4_classes().
struct Table2Entry {
  std::string graph;
  PermGroup stabilizer;
  std::vector<Permutation> generators;
  std::vector<int> values;
};
std::vector<Table2Entry> table2();

}  // namespace dg
