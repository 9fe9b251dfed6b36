#include "diagonals/tables.hpp"

#include <stdexcept>

namespace dg {

const std::vector<NamedGraph>& k4_classes() {
  static const std::vector<NamedGraph> g = {
      {"A1", SimpleGraph(4, {{1, 2}})},
      {"A2", SimpleGraph(4, {{1, 2}, {1, 3}})},
      {"B2", SimpleGraph(4, {{1, 2}, {3, 4}})},
      {"A3", SimpleGraph(4, {{1, 2}, {2, 3}, {3, 4}})},
      {"B3", SimpleGraph(4, {{1, 2}, {1, 3}, {1, 4}})},
      {"K3", SimpleGraph(4, {{1, 2}, {1, 3}, {2, 3}})},
      {"K3uJ", SimpleGraph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}})},
      {"C4", SimpleGraph(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}})},
      {"C4uL", SimpleGraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}})},
      {"K4", SimpleGraph::complete(4)},
  };
  return g;
}

const std::vector<NamedGraph>& k4_nonacyclic_classes() {
  static const std::vector<NamedGraph> g(k4_classes().begin() + 5, k4_classes().end());
  return g;
}

const NamedGraph& k4_class(const std::string& name) {
  for (auto& g : k4_classes())
    if (g.name == name) return g;
  throw std::out_of_range("no graph class named " + name);
}

CharacterTable stabilizer_table(const std::string& name) {
  if (name == "K3") return CharacterTable::symmetric(4, {1, 2, 3});
  if (name == "K3uJ") return CharacterTable::symmetric(4, {1, 2});
  if (name == "C4") return CharacterTable::dihedral4(Permutation::parse(4, "(2 4)"), Permutation::parse(4, "(1 2 3 4)"));
  if (name == "C4uL") return CharacterTable::symmetric_product(4, {{1, 3}, {2, 4}});
  if (name == "K4") return CharacterTable::symmetric(4, {1, 2, 3, 4});
  throw std::out_of_range("no built-in stabilizer table for " + name);
}

std::map<Partition, long long> isotypic_multiplicities(const SimpleGraph& g, const PermGroup& G, int q, int d) {
  int c = g.cycle_rank();
  if (q < 0 || q > d * c) throw std::out_of_range("isotypic_multiplicities: q must lie in 0..d*c");
  ClassFunction chi_q = cycle_rep(g, G).character();
  ClassFunction eps = edge_sign_character(g, G);
  std::map<Partition, long long> out;
  for (auto& lambda : Partition::all(q)) {
    if (lambda.rows() > d || lambda.columns() > c) continue;
    Q m = (schur_character(lambda.conjugate(), chi_q) * eps).invariant_dim();
    if (m.get_den() != 1 || m < 0) throw NotACharacter("isotypic_multiplicities: non-integral multiplicity");
    out[lambda] = m.get_num().get_si();
  }
  return out;
}

std::map<Partition, long long> isotypic_multiplicities(const SimpleGraph& g, int q, int d) {
  return isotypic_multiplicities(g, stabilizer(PermGroup::symmetric(g.n()), g), q, d);
}

const std::vector<Partition>& table1_columns() {
  static const std::vector<Partition> cols = {
      Partition({2}),    Partition({3}),       Partition({4}), Partition({3, 1}), Partition({2, 2}),
      Partition({3, 1, 1}), Partition({6}), Partition({5, 1}), Partition({4, 2}), Partition({2, 2, 2}),
  };
  return cols;
}

long long schur_invariant_dim(const SimpleGraph& g, const Partition& lambda) {
  PermGroup G = stabilizer(PermGroup::symmetric(g.n()), g);
  Q m = schur_character(lambda, cycle_rep(g, G)).invariant_dim();
  if (m.get_den() != 1 || m < 0) throw NotACharacter("schur_invariant_dim: non-integral dimension");
  return m.get_num().get_si();
}

std::vector<Table1Row> table1() {
  std::vector<Table1Row> rows;
  for (const char* name : {"C4uL", "K4"}) {
    Table1Row r{name, {}};
    for (auto& lambda : table1_columns()) r.dims.push_back(schur_invariant_dim(k4_class(name).graph, lambda));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<Table2Entry> table2() {
  static const std::map<std::string, std::vector<std::string>> gens = {
      {"A1", {"(1 2)", "(3 4)"}},       {"A2", {"(2 3)"}},
      {"B2", {"(1 2)", "(3 4)", "(1 3)(2 4)"}},
      {"A3", {"(1 4)(2 3)"}},           {"B3", {"(2 3)", "(3 4)"}},
      {"K3", {"(1 2)", "(2 3)"}},       {"K3uJ", {"(1 2)"}},
      {"C4", {"(2 4)", "(1 2 3 4)"}},   {"C4uL", {"(1 3)", "(2 4)"}},
      {"K4", {"(1 2)", "(1 2 3 4)"}},
  };
  std::vector<Table2Entry> out;
  PermGroup S4 = PermGroup::symmetric(4);
  for (auto& [name, g] : k4_classes()) {
    Table2Entry e{name, stabilizer(S4, g), {}, {}};
    for (auto& text : gens.at(name)) e.generators.push_back(Permutation::parse(4, text));
    if (PermGroup(4, e.generators).order() != e.stabilizer.order())
      throw std::logic_error("table2: generators do not generate the stabilizer of " + name);
    ClassFunction eps = edge_sign_character(g, e.stabilizer);
    for (auto& p : e.generators) e.values.push_back(static_cast<int>(eps.at(p).get_num().get_si()));
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace dg
