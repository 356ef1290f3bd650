#include <benchmark/benchmark.h>

#include "lgcy/chern.hpp"
#include "lgcy/gamma.hpp"
#include "lgcy/ifunction.hpp"
#include "lgcy/kclass.hpp"
#include "lgcy/transforms.hpp"

namespace {

using namespace lgcy;

const SymmetryGroup& quintic() {
  static const SymmetryGroup G = SymmetryGroup::closure(LGModel({1, 1, 1, 1, 1}, 5), {});
  return G;
}

const SymmetryGroup& quintic25() {
  static const SymmetryGroup G =
      SymmetryGroup::closure(LGModel({1, 1, 1, 1, 1}, 5), {GroupElement{{0, 1, 4, 0, 0}}});
  return G;
}

void BM_CycNumMultiply(benchmark::State& st) {
  const unsigned order = static_cast<unsigned>(st.range(0));
  CycNum a = CycNum::root_of_unity(order, 1) + CycNum(Rational(3, 7));
  CycNum b = CycNum::root_of_unity(order, 2) - CycNum(2);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycNumMultiply)->Arg(5)->Arg(25)->Arg(60);

void BM_GammaTaylor(benchmark::State& st) {
  const int digits = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(gamma_taylor(Rational(2, 5), 5, digits));
}
BENCHMARK(BM_GammaTaylor)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_Chi(benchmark::State& st) {
  const SymmetryGroup& G = st.range(0) ? quintic25() : quintic();
  const KClass x = KClass::line(Space::PG, 0, 0);
  const KClass y = KClass::line(Space::PG, 7, 0);
  for (auto _ : st) benchmark::DoNotOptimize(chi(G, x, y));
}
BENCHMARK(BM_Chi)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyInduced(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_induced(quintic25(), 0));
}
BENCHMARK(BM_VerifyInduced)->Unit(benchmark::kMillisecond);

void BM_IMinusSeries(benchmark::State& st) {
  const int order = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(i_minus_series(quintic25(), order));
}
BENCHMARK(BM_IMinusSeries)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_IPlusSeries(benchmark::State& st) {
  const int order = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(i_plus_series(quintic25(), order));
}
BENCHMARK(BM_IPlusSeries)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_LgcyMatrix(benchmark::State& st) {
  const int digits = 50;
  const PrecComplex log_z = log(PrecComplex::from_rational(Rational(3, 2), digits));
  for (auto _ : st) benchmark::DoNotOptimize(lgcy_matrix(quintic(), 0, log_z, digits));
}
BENCHMARK(BM_LgcyMatrix)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
