#include <benchmark/benchmark.h>

#include "glat/bounds.hpp"
#include "glat/kernels.hpp"
#include "glat/rootsys.hpp"
#include "glat/theta.hpp"

using namespace glat;

namespace {

const WeylModel& e6() {
  static const WeylModel m = build(parse_root_system("E6"));
  return m;
}

const WeylModel& b4() {
  static const WeylModel m = build(parse_root_system("B4"));
  return m;
}

IntVector e6_root_vector() { return lattice(e6(), {LatticeKind::Root}).generator_hint; }

void BM_OrbitSerial(benchmark::State& s) {
  const auto gens = e6().group().generators();
  const IntVector v = e6_root_vector();
  for (auto _ : s) benchmark::DoNotOptimize(kernels::orbit_serial(gens, v, kDefaultCap));
}

void BM_OrbitParallel(benchmark::State& s) {
  const auto gens = e6().group().generators();
  const IntVector v = e6_root_vector();
  for (auto _ : s) benchmark::DoNotOptimize(kernels::orbit_parallel(gens, v, kDefaultCap));
}

void BM_ClosureSerial(benchmark::State& s) {
  const auto gens = b4().group().generators();
  for (auto _ : s) benchmark::DoNotOptimize(kernels::closure_serial(gens, 4, kDefaultCap));
}

void BM_ClosureParallel(benchmark::State& s) {
  const auto gens = b4().group().generators();
  for (auto _ : s) benchmark::DoNotOptimize(kernels::closure_parallel(gens, 4, kDefaultCap));
}

const GramForm& e8_form() {
  static const GramForm f(root_gram(build(parse_root_system("E8"))));
  return f;
}

void BM_ShortVectorsSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(short_vectors_serial(e8_form(), BigInt(4)));
}

void BM_ShortVectorsParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(short_vectors(e8_form(), BigInt(4)));
}

void BM_PrimeScanSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(prime_case_scan_serial(2, 1, PrimeCase::LinearSmall, 3, 10007));
}

void BM_PrimeScanParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(prime_case_scan(2, 1, PrimeCase::LinearSmall, 3, 10007));
}

}  // namespace

BENCHMARK(BM_OrbitSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClosureSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ShortVectorsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShortVectorsParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PrimeScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrimeScanParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
