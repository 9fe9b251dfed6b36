#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagonals/linalg.hpp"
#include "diagonals/perm.hpp"
#include "diagonals/poly.hpp"

namespace dg {

// Desk-scale model of sheaves over S^nX for X the affine plane: each module
// is a graded space of tuples of polynomials ("slots") over a ring of k
// points.  Slots stand for differential-form symbols (dx, dy, dx^2 dy, ...),
// each of form degree 1 per dx or dy; internal degree = polynomial degree +
// form degree.
struct SlotLayout {
  PolyRing ring;
  std::vector<int> form_degree;
  std::vector<std::string> names;
  int slots() const { return static_cast<int>(form_degree.size()); }
};

// Graded piece of a module: a canonical (reduced echelon) basis per degree.
struct Stage {
  std::string name;
  SlotLayout layout;
  std::function<std::vector<SVec>(int t)> basis;
};

struct StageMap {
  std::string name;
  std::function<SVec(const SVec&)> apply;
};

// stages[0] -> stages[1] -> ... ; maps[i] goes from stages[i] to stages[i+1].
struct ResolutionComplex {
  std::string name;
  int n = 0;
  std::vector<Stage> stages;
  std::vector<StageMap> maps;
  // Dimension the kernel of the first map must have, from an independent
  // computation; if absent the kernel is only reported.
  std::function<long long(int t)> expected_kernel;
  // Positions >= this are asserted exact (the last one means surjective).
  int first_exact_position = 1;
  std::map<std::string, std::string> constants;
};

// Tuple helpers: slot s of an SVec as a polynomial and back.
std::vector<Polynomial> unpack(const SVec& v, int slots);
SVec pack(const std::vector<Polynomial>& polys);

// f with point j of `from` sent to point point_map[j-1] of `to`.
Polynomial merge_points(const Polynomial& f, const PolyRing& from, const PolyRing& to,
                        const std::vector<int>& point_map);

// Degree-t basis of {v in the ambient space of the layout (or its
// G-invariants, G acting on points) : c(v) = 0 for all constraints}.
std::vector<SVec> constrained_basis(const SlotLayout& layout, int t, const PermGroup* G,
                                    const std::vector<std::function<SVec(const SVec&)>>& constraints);

// The explicit maps.  Point conventions: the doubled point is point 1 of the
// target ring, remaining points follow in order.
StageMap map_r(int n);        // O_{S^nX} -> w_2 module, f -> f(p,p,q...)
StageMap map_d1();            // n = 4: F(p;q1,q2) -> F(s;t,t) - F(t;s,s)
StageMap map_D(int n);        // n = 3, 4: (2 d_{q1} - d_p) F at q1 = p
StageMap map_A();             // n = 4: h dx + g dy -> (d_{y_q} h - d_{x_q} g)|_{q=p} dx^dy
StageMap map_C();             // n = 4: into S^3 Omega^1, see resolver.cpp
StageMap map_Atilde();        // n = 4, non-invariant tuples (f_I) -> (Omega^1 components per triple H)
// l-th Taylor coefficient along every pairwise diagonal of X^n:
// slot (pair index)*(l+1) + k holds the coefficient of dx^{l-k} dy^k.
StageMap map_dlDelta(int n, int l);
StageMap map_d1Delta_s23();  // (I_{D3})^{S(23)} -> (Omega^1 (x) A)(-2 Delta)
StageMap map_jet2_s23();     // (h, g) -> dx T2(h) + dy T2(g)

// I^\bullet_3 and I^\bullet_4.
ResolutionComplex resolution_complex(int n);
// Complex resolving (I_{D3})^{S(2,3)} (n = 3).
ResolutionComplex s23_invariant_complex();
// (I_{D3})^{S(2,3)} -> (Omega^1 (x) A)(-2 Delta) -> S^3 Omega^1, exact at
// the last two positions.
ResolutionComplex s23_jet_sequence();

// Restriction of f in R(X^4) to the tuple (f|Delta_I)_I, I in lex order.
SVec restriction_tuple(const Polynomial& f);
// Degree-t basis of compatible tuples (f_I) for n = 4 (kernel of d_1 on the
// sum of O_{Delta_I}).
std::vector<SVec> compatible_tuples(int t);
// Degree-t basis of G-invariants of R(X^n) vanishing to order >= l along
// every pairwise diagonal.
std::vector<SVec> diagonal_order_basis(int n, int l, const PermGroup& G, int t);

struct PositionReport {
  int position = 0;
  long long dim = 0, rank_in = 0, rank_out = 0;
  bool asserted = false;
  bool exact = true;
  std::optional<long long> expected_kernel;
};

struct DegreeReport {
  int degree = 0;
  std::vector<PositionReport> positions;
  bool well_defined = true;       // images lie in the next stage
  bool composes_to_zero = true;
  bool degree_preserving = true;
  long long euler = 0;            // kernel - dim0 + dim1 - ...
};

struct ExactnessReport {
  std::string complex;
  int n = 0, degree_cap = 0, twist = 0;
  std::vector<DegreeReport> per_degree;
  std::map<std::string, std::string> constants;
  bool verdict = true;
  std::string to_json() const;
};

// Checks degrees 0..D.  twist shifts every generator degree by `twist`
// (the grading realization of tensoring with D_L); degree t of the twisted
// complex is degree t - twist of the untwisted one.
ExactnessReport exactness_check(const ResolutionComplex& c, int D, int jobs = 1, int twist = 0);

}  // namespace dg
