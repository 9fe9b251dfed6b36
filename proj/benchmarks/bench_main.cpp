#include <benchmark/benchmark.h>

#include "diagonals/identities.hpp"
#include "diagonals/ideal.hpp"
#include "diagonals/invariants.hpp"
#include "diagonals/koszul.hpp"
#include "diagonals/resolver.hpp"
#include "diagonals/surface.hpp"
#include "diagonals/tables.hpp"

using namespace dg;

static void BM_GroebnerBigDiagonal(benchmark::State& st) {
  PolyRing R(static_cast<int>(st.range(0)), 2);
  for (auto _ : st) {
    Ideal I = big_diagonal_ideal(R, 8);
    benchmark::DoNotOptimize(I.groebner().size());
  }
}
BENCHMARK(BM_GroebnerBigDiagonal)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_InvariantHilbert(benchmark::State& st) {
  PolyRing R(3, 2);
  Ideal I = big_diagonal_ideal(R);
  I.groebner();
  auto S3 = PermGroup::symmetric(3);
  for (auto _ : st) benchmark::DoNotOptimize(invariant_dimension(Subquotient::submodule(I), S3, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_InvariantHilbert)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Table1(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(table1());
}
BENCHMARK(BM_Table1)->Unit(benchmark::kMillisecond);

static void BM_MultitorK3(benchmark::State& st) {
  auto g = k4_class("K3").graph;
  for (auto _ : st) benchmark::DoNotOptimize(multitor_oracle(g, static_cast<int>(st.range(0)), 5));
}
BENCHMARK(BM_MultitorK3)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ExactnessI3(benchmark::State& st) {
  auto c = resolution_complex(3);
  for (auto _ : st) benchmark::DoNotOptimize(exactness_check(c, static_cast<int>(st.range(0))).verdict);
}
BENCHMARK(BM_ExactnessI3)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Invprod(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(invprod_check(3, static_cast<int>(st.range(0))).equal());
}
BENCHMARK(BM_Invprod)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_BottP2(benchmark::State& st) {
  Partition lam(std::vector<int>{3});
  for (auto _ : st) benchmark::DoNotOptimize(bott_chi_schur_cotangent_p2(lam, st.range(0)));
}
BENCHMARK(BM_BottP2)->Arg(8)->Arg(40);

static void BM_EulerDet2(benchmark::State& st) {
  auto s = SurfaceNumerics::projective_plane();
  for (auto _ : st) benchmark::DoNotOptimize(euler_det2(s, {{"H", 1}}, {}, 4).value);
}
BENCHMARK(BM_EulerDet2);

BENCHMARK_MAIN();
