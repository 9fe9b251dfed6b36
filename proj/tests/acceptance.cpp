// One PASS/FAIL line per acceptance criterion.  Exit status is 0 iff the set
// of failing criteria equals the --expect-red set (empty by default).
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diagonals/character.hpp"
#include "diagonals/graph.hpp"
#include "diagonals/identities.hpp"
#include "diagonals/invariants.hpp"
#include "diagonals/koszul.hpp"
#include "diagonals/resolver.hpp"
#include "diagonals/surface.hpp"
#include "diagonals/tables.hpp"

using namespace dg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates mismatches; the first few are kept for the report line.
struct Tally {
  int bad = 0;
  std::ostringstream first;
  void fail(const std::string& what) {
    if (bad++ < 3) first << (bad > 1 ? "; " : "") << what;
  }
  Outcome done(const std::string& ok_detail) const {
    if (bad) return {false, std::to_string(bad) + " mismatch(es): " + first.str()};
    return {true, ok_detail};
  }
};

std::string seq(const std::vector<long long>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

Partition P(std::vector<int> p) { return Partition(std::move(p)); }

// Table 1 reference values: rows C4uL, K4; columns (2) (3) (4) (3,1) (2,2) (3,1,1)
// (6) (5,1) (4,2) (2,2,2).
Outcome criterion1(int) {
  const std::vector<std::vector<long long>> golden = {{2, 0, 3, 1, 1, 0, 4, 2, 2, 0}, {1, 1, 2, 0, 1, 1, 3, 1, 2, 1}};
  Tally t;
  auto rows = table1();
  auto& cols = table1_columns();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (rows[r].dims[c] != golden[r][c])
        t.fail(rows[r].graph + " " + cols[c].to_string() + " computed " + std::to_string(rows[r].dims[c]) + " reference " +
               std::to_string(golden[r][c]));
  return t.done("20/20 entries");
}

// Reference characters evaluated on the generators table2() uses:
// 1 / eps / 1(x)1(x)eps on S2xS2xS2 / l(-1 on the rotation, 1 on the reflection).
Outcome criterion2(int) {
  const std::map<std::string, std::vector<int>> golden = {
      {"A1", {1, 1}},  {"A2", {-1}},      {"B2", {1, 1, -1}}, {"A3", {-1}},   {"B3", {-1, -1}},
      {"K3", {-1, -1}}, {"K3uJ", {-1}},   {"C4", {1, -1}},    {"C4uL", {1, 1}}, {"K4", {1, 1}},
  };
  Tally t;
  auto rows = table2();
  if (rows.size() != golden.size()) t.fail("expected 10 classes");
  for (auto& e : rows) {
    auto it = golden.find(e.graph);
    if (it == golden.end() || it->second != e.values) t.fail(e.graph);
    // the values must come from the character itself
    auto eps = edge_sign_character(k4_class(e.graph).graph, e.stabilizer);
    for (std::size_t i = 0; i < e.generators.size(); ++i)
      if (eps.at(e.generators[i]) != e.values[i]) t.fail(e.graph + " inconsistent");
  }
  return t.done("10 classes");
}

Outcome criterion3(int) {
  const std::map<std::string, std::string> golden = {{"K3", "(1,1,1)"},
                                                     {"K3uJ", "(1,1)"},
                                                     {"C4", "det"},
                                                     {"C4uL", "(1,1)x(2) + (1,1)x(1,1)"},
                                                     {"K4", "(2,1,1)"}};
  Tally t;
  for (auto& [name, want] : golden) {
    auto table = stabilizer_table(name);
    auto got = table.describe(table.decompose(cycle_rep(k4_class(name).graph, table.group()).character()));
    if (got != want) t.fail(name + ": " + got);
  }
  for (int n = 2; n <= 7; ++n)
    if (!frobenius_identity_check(n)) t.fail("Frobenius n=" + std::to_string(n));
  return t.done("5 decompositions, Frobenius n=2..7");
}

// Nonzero reference entries of Table 3, d = 2.
Outcome criterion4(int) {
  using Entry = std::map<Partition, long long>;
  std::map<std::pair<std::string, int>, Entry> golden = {
      {{"K3", 1}, {{P({1}), 1}}},
      {{"K3uJ", 1}, {{P({1}), 1}}},
      {{"C4uL", 2}, {{P({1, 1}), 2}}},
      {{"C4uL", 4}, {{P({2, 2}), 1}}},
      {{"K4", 2}, {{P({1, 1}), 1}}},
      {{"K4", 3}, {{P({3}), 1}}},
      {{"K4", 4}, {{P({2, 2}), 1}}},
      {{"K4", 6}, {{P({3, 3}), 1}}},
  };
  Tally t;
  int checked = 0;
  for (auto& nc : k4_nonacyclic_classes())
    for (int q = 1; q <= 6; ++q) {
      Entry got;
      if (q <= 2 * nc.graph.cycle_rank())
        for (auto& [lam, m] : isotypic_multiplicities(nc.graph, q, 2))
          if (m) got[lam] = m;
      Entry want;
      if (auto it = golden.find({nc.name, q}); it != golden.end()) want = it->second;
      ++checked;
      if (got != want) t.fail(nc.name + " q=-" + std::to_string(q));
    }
  return t.done(std::to_string(checked) + " (class, q) cells");
}

Outcome criterion5(int jobs) {
  const int D = 6;
  Tally t;
  auto check = [&](const std::string& label, const SimpleGraph& g) {
    long long c2 = 2 * g.cycle_rank();
    for (int q = 0; q <= 2 * g.l(); ++q) {
      auto o = multitor_oracle(g, q, D, 2, jobs);
      auto shifts = fit_shifts(g, 2, o.dims);
      long long binom = 1;
      for (int i = 0; i < q; ++i) binom = binom * (c2 - i) / (i + 1);
      if (q > c2) binom = 0;
      bool ok = shifts && static_cast<long long>(shifts->size()) == binom && multitor_formula(g, q).rank == binom;
      if (shifts)
        for (int s : *shifts) ok = ok && s == q;
      if (!ok) t.fail(label + " q=" + std::to_string(q) + " dims " + seq(o.dims));
    }
  };
  check("n=3 K3", SimpleGraph::complete(3));
  check("n=4 K3", k4_class("K3").graph);
  check("n=4 C4", k4_class("C4").graph);
  for (auto& nc : k4_classes()) {
    if (!nc.graph.acyclic()) continue;
    for (int q = 1; q <= 2 * nc.graph.l(); ++q)
      for (auto v : multitor_oracle(nc.graph, q, D, 2, jobs).dims)
        if (v) t.fail(nc.name + " q=" + std::to_string(q));
  }
  return t.done("K3 (n=3,4), C4, acyclic classes; t <= 6");
}

Outcome exactness(const ResolutionComplex& c, int D, int jobs) {
  auto r = exactness_check(c, D, jobs);
  Tally t;
  for (auto& d : r.per_degree) {
    if (!d.well_defined || !d.composes_to_zero || !d.degree_preserving) t.fail("t=" + std::to_string(d.degree) + " not a complex");
    for (auto& p : d.positions)
      if (p.asserted && !p.exact) t.fail("t=" + std::to_string(d.degree) + " pos " + std::to_string(p.position));
  }
  if (!r.verdict && !t.bad) t.fail("verdict");
  std::vector<long long> ker;
  for (auto& d : r.per_degree) ker.push_back(d.positions[0].dim - d.positions[0].rank_out);
  return t.done(c.name + " t<=" + std::to_string(D) + " kernel " + seq(ker));
}

Outcome criterion6(int jobs) { return exactness(resolution_complex(3), 10, jobs); }
Outcome criterion7(int jobs) { return exactness(resolution_complex(4), 6, jobs); }

Outcome criterion8(int jobs) {
  auto a = exactness(s23_invariant_complex(), 8, jobs), b = exactness(s23_jet_sequence(), 8, jobs);
  return {a.pass && b.pass, a.detail + " | " + b.detail};
}

Outcome criterion9(int jobs) {
  std::vector<DimComparison> all = {invprod_check(3, 8, jobs), invprod_check(4, 6, jobs)};
  for (int n : {2, 3})
    for (int k : {1, 2}) all.push_back(inv2k_check(n, k, 8, jobs));
  for (int s : {2, 3}) all.push_back(haiman_check(3, s, 8, jobs));
  Tally t;
  for (auto& c : all)
    if (!c.equal()) t.fail(c.name + ": " + seq(c.left) + " vs " + seq(c.right));
  return t.done(std::to_string(all.size()) + " comparisons");
}

Outcome criterion10(int) {
  auto s = SurfaceNumerics::projective_plane();
  LineBundle L{{"H", 1}}, A;
  Tally t;
  auto r3 = euler_det2(s, L, A, 3), r4 = euler_det2(s, L, A, 4);
  // every chi input against a second computation on P^2
  for (auto* r : {&r3, &r4})
    for (auto& term : r->terms) {
      mpz_class oracle;
      const std::string& nm = term.name;
      int k2 = nm.find("L^2") != std::string::npos ? 2 : nm.find("L^4") != std::string::npos ? 4
               : nm.find("L^6") != std::string::npos ? 6 : 8;
      if (nm.rfind("chi(S^3 Omega^1", 0) == 0)
        oracle = bott_chi_schur_cotangent_p2(P({3}), k2);
      else if (nm.rfind("chi(Omega^1", 0) == 0)
        oracle = euler_sequence_chi_sym_cotangent_p2(1, k2);
      else if (nm.rfind("chi(K", 0) == 0)
        oracle = euler_sequence_chi_sym_cotangent_p2(0, k2 - 3);
      else
        oracle = euler_sequence_chi_sym_cotangent_p2(0, k2);
      if (oracle != term.value) t.fail(nm + " = " + term.value.get_str() + " vs " + oracle.get_str());
    }
  if (euler_sequence_chi_sym_cotangent_p2(1, 6) != 35) t.fail("chi(Omega^1(6))");
  if (euler_sequence_chi_sym_cotangent_p2(1, 8) != 63) t.fail("chi(Omega^1(8))");
  if (r3.value != 1) t.fail("n=3 value " + r3.value.get_str());
  if (r4.value != 0) t.fail("n=4 value " + r4.value.get_str());  // golden: both oracles agree term by term
  return t.done("n=3: " + r3.value.get_str() + ", n=4: " + r4.value.get_str());
}

Outcome criterion11(int) {
  Tally t;
  auto inv = regularity_bounds(3, 2, RegularityMode::invariant), prod = regularity_bounds(3, 2, RegularityMode::product);
  if (inv.bound != 8) t.fail("invariant " + std::to_string(inv.bound));
  if (prod.bound != 10) t.fail("product " + std::to_string(prod.bound));
  for (int n : {8, 9, 12}) {
    try {
      regularity_bounds(n, 1, RegularityMode::product);
      t.fail("n=" + std::to_string(n) + " accepted");
    } catch (const std::out_of_range& e) {
      if (std::string(e.what()).find("2 <= n <= 7") == std::string::npos) t.fail("message: " + std::string(e.what()));
    }
  }
  return t.done("invariant 8, product 10, n>7 rejected");
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no runtime bound
  std::function<Outcome(int)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  std::vector<int> expect_red, only;
  int jobs = 1;
  app.add_option("--expect-red", expect_red, "criteria known to fail (documented)");
  app.add_option("--only", only, "run only these criteria");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {1, "Table 1", 1, criterion1},
      {2, "Table 2", 0, criterion2},
      {3, "q_Gamma classification", 0, criterion3},
      {4, "Table 3 (d = 2)", 0, criterion4},
      {5, "multitor oracle vs formula", 60, criterion5},
      {6, "I3 exactness, t <= 10", 60, criterion6},
      {7, "I4 exactness, t <= 6", 600, criterion7},
      {8, "(I_D3)^S(2,3) complexes, t <= 8", 0, criterion8},
      {9, "invariant dimension identities", 0, criterion9},
      {10, "Euler characteristics on P^2", 0, criterion10},
      {11, "regularity bounds", 0, criterion11},
  };
  std::set<int> red;
  for (auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(jobs);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && c.limit_s > 0 && secs > c.limit_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit)";
    }
    if (!o.pass) red.insert(c.id);
    std::printf("criterion %2d %-36s %s  %8.2fs  %s\n", c.id, c.name.c_str(), o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::set<int> expected;
  for (int id : expect_red)
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) expected.insert(id);
  if (red != expected) {
    std::printf("unexpected outcome: %zu failing, %zu expected to fail\n", red.size(), expected.size());
    return 1;
  }
  if (!expected.empty()) std::printf("failing criteria match the documented --expect-red set\n");
  return 0;
}
