#include <benchmark/benchmark.h>

#include "pascaline/configurations.hpp"
#include "pascaline/covariants.hpp"
#include "pascaline/pascal_engine.hpp"
#include "pascaline/solver.hpp"

using namespace pascaline;

namespace {

ConicPoint cp(long v) { return ConicPoint::from_affine(AffineCoord(Rat(v))); }
ConicPoint cp_inf() { return ConicPoint::from_affine(AffineCoord::infinity()); }

Hexad witness() { return Hexad({cp(0), cp(1), cp_inf(), cp(3), cp(-5), cp(7)}); }

void BM_TransvectantSextic(benchmark::State& state) {
  BinaryForm g = Sextuple({cp(0), cp(1), cp_inf(), cp(3), cp(-5), cp(7)}).sextic();
  for (auto _ : state) benchmark::DoNotOptimize(transvectant(g, g, 4));
}
BENCHMARK(BM_TransvectantSextic);

void BM_PascalLine(benchmark::State& state) {
  Hexad h = witness();
  HexArray arr = array_of_label(Label(0, Duad(1, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(pascal_of_array(h, arr));
}
BENCHMARK(BM_PascalLine);

void BM_AllPascals(benchmark::State& state) {
  Hexad h = witness();
  for (auto _ : state) benchmark::DoNotOptimize(all_pascals(h));
}
BENCHMARK(BM_AllPascals);

void BM_Theta15(benchmark::State& state) {
  SexticForm g(Sextuple({cp(0), cp(1), cp_inf(), cp(3), cp(-5), cp(7)}).sextic());
  for (auto _ : state) benchmark::DoNotOptimize(theta_15_0(g));
}
BENCHMARK(BM_Theta15);

void BM_SymbolicPascal(benchmark::State& state) {
  Label s(0, Duad(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_pascal(s));
}
BENCHMARK(BM_SymbolicPascal);

void BM_Scan31(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        finite_field_scan(canonical_s(), case_representative_t(1), 31));
}
BENCHMARK(BM_Scan31);

}  // namespace

BENCHMARK_MAIN();
