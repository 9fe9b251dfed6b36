#include "diagonals/identities.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "diagonals/invariants.hpp"
#include "diagonals/parallel.hpp"
#include "json.hpp"

namespace dg {

std::string DimComparison::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["check"] = name;
  j["left"] = {{"label", left_label}, {"dims", left}};
  j["right"] = {{"label", right_label}, {"dims", right}};
  j["equal"] = equal();
  return j.dump(2);
}

namespace {

using DimFn = std::function<long long(const Subquotient&, int)>;

DimComparison compare(std::string name, std::string ll, std::string rl, const Ideal& a, const Ideal& b, int D,
                      int jobs, const DimFn& dim) {
  // fill both caches before the degrees run concurrently
  a.groebner();
  b.groebner();
  DimComparison c{std::move(name), std::move(ll), std::move(rl), std::vector<long long>(D + 1),
                  std::vector<long long>(D + 1)};
  parallel_for(D + 1, jobs, [&](int t) {
    c.left[t] = dim(Subquotient::submodule(a), t);
    c.right[t] = dim(Subquotient::submodule(b), t);
  });
  return c;
}

DimFn invariants_of(int n) {
  auto G = std::make_shared<PermGroup>(PermGroup::symmetric(n));
  return [G](const Subquotient& s, int t) { return invariant_dimension(s, *G, t); };
}

void check_range(int n, int lo, int hi, int D, const char* what) {
  if (n < lo || n > hi) throw std::out_of_range(std::string(what) + ": n out of range");
  if (D < 0) throw std::out_of_range(std::string(what) + ": negative degree cap");
}

}  // namespace

DimComparison invprod_check(int n, int D, int jobs) {
  check_range(n, 2, 5, D, "invprod_check");
  PolyRing R(n, 2);
  std::optional<Ideal> prod;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Ideal d = diagonal_ideal(R, i, j);
      prod = prod ? ideal_product(*prod, d) : d;
    }
  Ideal p(R, prod->generators(), D);
  Ideal I = big_diagonal_ideal(R, D);
  return compare("invprod", "prod I_ij", "I_Delta", p, I, D, jobs, invariants_of(n));
}

DimComparison inv2k_check(int n, int k, int D, int jobs) {
  check_range(n, 2, 4, D, "inv2k_check");
  if (k < 1) throw std::out_of_range("inv2k_check: k must be >= 1");
  PolyRing R(n, 2);
  Ideal I = big_diagonal_ideal(R, D);
  Ideal a(R, ideal_power(I, 2 * k - 1).generators(), D);
  Ideal b(R, ideal_power(I, 2 * k).generators(), D);
  return compare("inv2k-1", "I^" + std::to_string(2 * k - 1), "I^" + std::to_string(2 * k), a, b, D, jobs,
                 invariants_of(n));
}

DimComparison haiman_check(int n, int s, int D, int jobs) {
  check_range(n, 2, 4, D, "haiman_check");
  if (s < 1) throw std::out_of_range("haiman_check: s must be >= 1");
  PolyRing R(n, 2);
  std::optional<Ideal> cap;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Ideal d(R, ideal_power(diagonal_ideal(R, i, j), s).generators(), D);
      cap = cap ? ideal_intersection(*cap, d, D) : d;
    }
  Ideal p(R, ideal_power(big_diagonal_ideal(R, D), s).generators(), D);
  return compare("haiman", "cap I_ij^" + std::to_string(s), "I_Delta^" + std::to_string(s), *cap, p, D, jobs,
                 [](const Subquotient& q, int t) { return hilbert_function(q, t); });
}

}  // namespace dg
