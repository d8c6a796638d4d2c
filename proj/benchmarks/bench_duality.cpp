// Pushforwards, dualizing complexes, Gabber truncations and shriek products.
#include <benchmark/benchmark.h>

#include "art/gabber.hpp"
#include "art/shriek.hpp"

namespace {

using namespace art;

RingSpec spec(const RingPtr& R, std::initializer_list<const char*> rels) {
  RingSpec A{R, {}};
  for (auto s : rels) A.relations.push_back(parse_poly(R, s));
  return A;
}

void BM_FrobeniusPushforward(benchmark::State& state) {
  auto R = Ring::make(2, {"x", "y"});
  RingSpec E = spec(R, {"y^2+x*y+y+x^3+x+1"});
  const int e = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_pushforward(E, e).module.ngens());
}
BENCHMARK(BM_FrobeniusPushforward)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_CanonicalDualizing(benchmark::State& state) {
  auto R = Ring::make(2, {"x", "y", "z"});
  RingSpec A = spec(R, {"x*z", "y*z", "z^2"});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_dualizing(A).support.size());
}
BENCHMARK(BM_CanonicalDualizing)->Unit(benchmark::kMillisecond);

void BM_FrobeniusDuality(benchmark::State& state) {
  auto R = Ring::make(2, {"x", "y"});
  RingSpec A = spec(R, {"y^2+x^3"});
  for (auto _ : state) benchmark::DoNotOptimize(verify_frobenius_duality(A).iso);
}
BENCHMARK(BM_FrobeniusDuality)->Unit(benchmark::kMillisecond);

void BM_GabberTruncation(benchmark::State& state) {
  auto R = Ring::make(2, {"x"});
  RingSpec A = spec(R, {"x^2"});
  std::vector<Poly> xs{Poly::var(R, 0)};
  const int e = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gabber_truncation(A, xs, e).verified());
}
BENCHMARK(BM_GabberTruncation)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ShriekUnit(benchmark::State& state) {
  auto R = Ring::make(2, {"x"});
  RingSpec A = spec(R, {"x^2"});
  Complex w = omega_carrier(A);
  for (auto _ : state) benchmark::DoNotOptimize(verify_unit(A, w).iso);
}
BENCHMARK(BM_ShriekUnit)->Unit(benchmark::kMillisecond);

void BM_Associativity(benchmark::State& state) {
  auto R = Ring::make(2, {"x"});
  Complex one = Complex::single(R, 1, 0), w = Complex::single(R, 1, -1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_associativity(R, one, w, w).certified());
}
BENCHMARK(BM_Associativity)->Unit(benchmark::kMillisecond);

}  // namespace
