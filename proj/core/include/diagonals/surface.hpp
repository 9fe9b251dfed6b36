#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "diagonals/character.hpp"
#include "diagonals/poly.hpp"

namespace dg {

// Line bundle as an integer combination of named divisor classes.
using LineBundle = std::map<std::string, long>;

// Numerical data of a smooth projective surface.  c2 follows from Noether's
// formula 12 chi(O) = K^2 + c2.
class SurfaceNumerics {
 public:
  SurfaceNumerics(long chiO, std::vector<std::string> classes, std::vector<std::vector<long>> pairing);
  // {"chiO":1, "K2":9, "c2":3 (optional, checked), "classes":["H","K"],
  //  "pairing":[[1,-3],[-3,9]], "bundles":{"L":{"H":1},"A":{}}}
  static SurfaceNumerics from_json(const std::string& text);
  static SurfaceNumerics projective_plane();  // classes H, K = -3H

  long chiO() const { return chiO_; }
  long K2() const { return dot(canonical(), canonical()); }
  long c2() const { return 12 * chiO_ - K2(); }
  const std::vector<std::string>& classes() const { return classes_; }
  const std::map<std::string, LineBundle>& bundles() const { return bundles_; }
  LineBundle canonical() const { return {{"K", 1}}; }
  LineBundle bundle(const std::string& name) const;

  long dot(const LineBundle& a, const LineBundle& b) const;
  Q dot(const std::vector<Q>& a, const LineBundle& b) const;
  std::vector<Q> coords(const LineBundle& m) const;

 private:
  int index(const std::string& name) const;
  long chiO_;
  std::vector<std::string> classes_;
  std::vector<std::vector<long>> pairing_;
  std::map<std::string, LineBundle> bundles_;
};

LineBundle operator+(const LineBundle& a, const LineBundle& b);
LineBundle operator*(long k, const LineBundle& a);

// Chern character of a vector bundle truncated to a surface: rank, c1 as a
// rational class combination, ch2 as a number (degree of the 0-cycle).
struct ChernPoly {
  long rank = 0;
  std::vector<Q> c1;
  Q ch2;
  ChernPoly tensor(const SurfaceNumerics& s, const LineBundle& m) const;
};

// ch(S^lambda Omega^1) by the splitting principle (lambda with <= 2 rows).
ChernPoly schur_cotangent_ch(const SurfaceNumerics& s, const Partition& lambda);
// Hirzebruch-Riemann-Roch; throws std::domain_error if not an integer.
mpz_class chi(const SurfaceNumerics& s, const ChernPoly& e);

mpz_class chi_line(const SurfaceNumerics& s, const LineBundle& m);
mpz_class chi_schur_cotangent(const SurfaceNumerics& s, const Partition& lambda, const LineBundle& m);

// Independent oracles on P^2, O(k) written as k.
// Torus localization with weights (0,1,3) on the homogeneous coordinates.
mpz_class bott_chi_schur_cotangent_p2(const Partition& lambda, long k);
// From 0 -> Omega^1 -> O(-1)^3 -> O -> 0 (symmetric powers only).
mpz_class euler_sequence_chi_sym_cotangent_p2(int m, long k);

struct EulerTerm {
  std::string name;
  mpz_class value;
};
struct EulerReport {
  int n = 0;
  std::vector<EulerTerm> terms;  // the chi inputs, as named in the formula
  mpz_class value;
  std::string to_json() const;
};
// chi(X^[n], (det L^[n])^2 (x) D_A) for n = 3, 4.
EulerReport euler_det2(const SurfaceNumerics& s, const LineBundle& L, const LineBundle& A, int n);

enum class RegularityMode { invariant, product };
struct RegularityReport {
  int n = 0, k = 0;
  RegularityMode mode = RegularityMode::invariant;
  long w = 0, r = 1;
  long bound = 0;
  std::string formula;
  std::string to_json() const;
};
// Bound m + 2n on the regularity of I^k_{Delta_n} (product mode) or of its
// invariant part, with Picard data (w, r): K = w B, L = r B ample generator
// chosen so that ceil(w/r) enters.  Product mode requires 2 <= n <= 7.
RegularityReport regularity_bounds(int n, int k, RegularityMode mode, long w = -3, long r = 1);

}  // namespace dg
