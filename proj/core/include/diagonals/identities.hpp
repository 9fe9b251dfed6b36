#pragma once

#include <string>
#include <vector>

namespace dg {

// Two graded dimension sequences over degrees 0..D that should agree.
struct DimComparison {
  std::string name;
  std::string left_label, right_label;
  std::vector<long long> left, right;
  bool equal() const { return left == right; }
  std::string to_json() const;
};

// S_n-invariants of prod_{i<j} I_{Delta_ij} against those of I_{Delta_n}.
DimComparison invprod_check(int n, int D, int jobs = 1);
// S_n-invariants of I_{Delta_n}^{2k-1} against those of I_{Delta_n}^{2k}.
DimComparison inv2k_check(int n, int k, int D, int jobs = 1);
// Full Hilbert functions of intersect_{i<j} I_{Delta_ij}^s and I_{Delta_n}^s.
DimComparison haiman_check(int n, int s, int D, int jobs = 1);

}  // namespace dg
