#include <benchmark/benchmark.h>

#include "eqg/quadrature.hpp"
#include "eqg/su2.hpp"

namespace {

const eqg::SphereTwoForm kEuler = [](const eqg::Vec3& p, const eqg::Vec3& u, const eqg::Vec3& v) {
  return p.dot(u.cross(v)) / (4 * M_PI);
};

const eqg::SU2ThreeForm kChi = [](const eqg::CMat&, const eqg::CMat& a, const eqg::CMat& b, const eqg::CMat& c) {
  return eqg::su2_chi(1, a, b, c);
};

void BM_SphereOmp(benchmark::State& st) {
  const eqg::Icosphere s = eqg::icosphere(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(eqg::integrate_sphere_omp(s, kEuler));
}

void BM_SphereSerial(benchmark::State& st) {
  const eqg::Icosphere s = eqg::icosphere(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(eqg::integrate_sphere_serial(s, kEuler));
}

void BM_SU2Omp(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(eqg::integrate_su2_omp(kChi, static_cast<int>(st.range(0))));
}

void BM_SU2Serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(eqg::integrate_su2_serial(kChi, static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_SphereOmp)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SphereSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SU2Omp)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SU2Serial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
