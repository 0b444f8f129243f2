// Parallel kernels against their serial references. Run with
// OMP_NUM_THREADS=n to vary the thread count.

#include <benchmark/benchmark.h>

#include "fplab/charsum.hpp"
#include "fplab/family.hpp"
#include "fplab/incidence.hpp"
#include "fplab/reference.hpp"
#include "fplab/spectral.hpp"

using namespace fplab;

namespace {

FpSet random_set(std::uint32_t p, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_subset(make_field(p), n, rng);
}

void BM_Sumset(benchmark::State& st) {
  const auto p = static_cast<std::uint32_t>(st.range(0));
  const auto a = random_set(p, p / 8, 1);
  const auto b = random_set(p, p / 8, 2);
  for (auto _ : st) benchmark::DoNotOptimize(sumset(a, b));
}

void BM_SumsetReference(benchmark::State& st) {
  const auto p = static_cast<std::uint32_t>(st.range(0));
  const auto a = random_set(p, p / 8, 1);
  const auto b = random_set(p, p / 8, 2);
  for (auto _ : st) benchmark::DoNotOptimize(reference::sumset(a, b));
}

void BM_ProductSet(benchmark::State& st) {
  const auto p = static_cast<std::uint32_t>(st.range(0));
  const auto a = random_set(p, p / 8, 3);
  for (auto _ : st) benchmark::DoNotOptimize(product_set(a, a));
}

void BM_ProductSetReference(benchmark::State& st) {
  const auto p = static_cast<std::uint32_t>(st.range(0));
  const auto a = random_set(p, p / 8, 3);
  for (auto _ : st) benchmark::DoNotOptimize(reference::product_set(a, a));
}

void BM_AdditiveEnergy(benchmark::State& st) {
  const auto p = static_cast<std::uint32_t>(st.range(0));
  const auto a = random_set(p, 40, 4);
  for (auto _ : st) benchmark::DoNotOptimize(additive_energy(a, a));
}

void BM_AdditiveEnergyReference(benchmark::State& st) {
  const auto p = static_cast<std::uint32_t>(st.range(0));
  const auto a = random_set(p, 40, 4);
  for (auto _ : st) benchmark::DoNotOptimize(reference::additive_energy(a, a));
}

void BM_CountSystem(benchmark::State& st) {
  const auto a = random_set(101, 12, 5).without(0);
  const auto b = random_set(101, 12, 6);
  for (auto _ : st) benchmark::DoNotOptimize(count_system(a, b));
}

void BM_CountSystemReference(benchmark::State& st) {
  const auto a = random_set(101, 12, 5).without(0);
  const auto b = random_set(101, 12, 6);
  for (auto _ : st) benchmark::DoNotOptimize(reference::count_system(a, b));
}

void BM_Moment(benchmark::State& st) {
  const auto f = make_field(static_cast<std::uint64_t>(st.range(0)));
  const auto iv = FpSet::interval(f, 0, 6);
  const Character chi(f, 1);
  for (auto _ : st) benchmark::DoNotOptimize(moment_sum(chi, iv, 2));
}

void BM_MomentReference(benchmark::State& st) {
  const auto f = make_field(static_cast<std::uint64_t>(st.range(0)));
  const auto iv = FpSet::interval(f, 0, 6);
  const Character chi(f, 1);
  for (auto _ : st) benchmark::DoNotOptimize(reference::moment_lhs(chi, iv, 2));
}

void BM_Incidences(benchmark::State& st) {
  const auto f = make_field(31);
  Rng rng(7);
  const PointSet3 pts(f, random_points(31, static_cast<std::size_t>(st.range(0)), rng));
  const PlaneSet planes(f, random_planes(31, static_cast<std::size_t>(st.range(0)), rng));
  for (auto _ : st) benchmark::DoNotOptimize(count_incidences(pts, planes));
}

void BM_IncidencesReference(benchmark::State& st) {
  const auto f = make_field(31);
  Rng rng(7);
  const PointSet3 pts(f, random_points(31, static_cast<std::size_t>(st.range(0)), rng));
  const PlaneSet planes(f, random_planes(31, static_cast<std::size_t>(st.range(0)), rng));
  for (auto _ : st) benchmark::DoNotOptimize(reference::count_incidences(pts, planes));
}

void BM_Dft(benchmark::State& st) {
  const auto f = make_field(static_cast<std::uint64_t>(st.range(0)));
  const auto d = DenseFunction::indicator(random_set(f->p(), f->p() / 3, 8));
  for (auto _ : st) benchmark::DoNotOptimize(dft(d));
}

void BM_DftReference(benchmark::State& st) {
  const auto f = make_field(static_cast<std::uint64_t>(st.range(0)));
  const auto d = DenseFunction::indicator(random_set(f->p(), f->p() / 3, 8));
  for (auto _ : st) benchmark::DoNotOptimize(reference::dft(d));
}

}  // namespace

BENCHMARK(BM_Sumset)->Arg(1009)->Arg(8191)->Arg(65537);
BENCHMARK(BM_SumsetReference)->Arg(1009)->Arg(8191)->Arg(65537);
BENCHMARK(BM_ProductSet)->Arg(1009)->Arg(8191)->Arg(65537);
BENCHMARK(BM_ProductSetReference)->Arg(1009)->Arg(8191)->Arg(65537);
BENCHMARK(BM_AdditiveEnergy)->Arg(499)->Arg(4099);
BENCHMARK(BM_AdditiveEnergyReference)->Arg(499)->Arg(4099);
BENCHMARK(BM_CountSystem);
BENCHMARK(BM_CountSystemReference);
BENCHMARK(BM_Moment)->Arg(97)->Arg(499);
BENCHMARK(BM_MomentReference)->Arg(97)->Arg(499);
BENCHMARK(BM_Incidences)->Arg(200)->Arg(2000);
BENCHMARK(BM_IncidencesReference)->Arg(200)->Arg(2000);
BENCHMARK(BM_Dft)->Arg(499)->Arg(2003);
BENCHMARK(BM_DftReference)->Arg(499)->Arg(2003);

BENCHMARK_MAIN();
