// OpenMP kernels against the serial reference on the Jacobian pipeline.

#include <benchmark/benchmark.h>

#include "hadsec/descriptor.hpp"
#include "hadsec/kernels.hpp"
#include "hadsec/random.hpp"
#include "hadsec/reference.hpp"

using namespace hadsec;

namespace {

const PrimeField kF{};

// V_{4,4} with spec (2,...,2) of length m: the largest check-table shape.
struct Setup {
  ExponentMatrix a;
  HadamardSpec spec;
  ModMatrix y;
  ModMatrix k;
};

Setup make_setup(int m) {
  Setup s{VarietyDescriptor::veronese(4, 4).matrix(), HadamardSpec(std::vector<int>(static_cast<std::size_t>(m), 2)),
          {}, {}};
  s.y = random_torus_points(kF, s.a.rows(), static_cast<std::size_t>(s.spec.R()), 1);
  s.k = khatri_rao(kF, eta_hadamard(kF, s.a, s.spec, s.y), s.a);
  return s;
}

void BM_EtaHadamardKernel(benchmark::State& state) {
  const auto s = make_setup(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eta_hadamard(kF, s.a, s.spec, s.y));
}

void BM_EtaHadamardReference(benchmark::State& state) {
  const auto s = make_setup(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::eta_hadamard(kF, s.a, s.spec, s.y));
}

void BM_RankKernel(benchmark::State& state) {
  const auto s = make_setup(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(kF, s.k));
}

void BM_RankReference(benchmark::State& state) {
  const auto s = make_setup(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::rank(kF, s.k));
}

void BM_KhatriRaoKernel(benchmark::State& state) {
  const auto s = make_setup(static_cast<int>(state.range(0)));
  const auto eta = eta_hadamard(kF, s.a, s.spec, s.y);
  for (auto _ : state) benchmark::DoNotOptimize(khatri_rao(kF, eta, s.a));
}

void BM_KhatriRaoReference(benchmark::State& state) {
  const auto s = make_setup(static_cast<int>(state.range(0)));
  const auto eta = eta_hadamard(kF, s.a, s.spec, s.y);
  for (auto _ : state) benchmark::DoNotOptimize(reference::khatri_rao(kF, eta, s.a));
}

}  // namespace

BENCHMARK(BM_EtaHadamardKernel)->DenseRange(2, 8, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EtaHadamardReference)->DenseRange(2, 8, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RankKernel)->DenseRange(2, 8, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RankReference)->DenseRange(2, 8, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_KhatriRaoKernel)->DenseRange(2, 8, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_KhatriRaoReference)->DenseRange(2, 8, 3)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
