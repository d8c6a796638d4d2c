// Groebner bases, eliminations and free resolutions.
#include <benchmark/benchmark.h>

#include <string>

#include "art/complexes.hpp"
#include "art/frobenius.hpp"

namespace {

using namespace art;

// Cyclic-n roots over F_p.
std::vector<Poly> cyclic(const RingPtr& R) {
  const int n = R->nvars();
  std::vector<Poly> out;
  for (int k = 1; k < n; ++k) {
    Poly s(R);
    for (int i = 0; i < n; ++i) {
      Poly m = Poly::constant(R, 1);
      for (int j = 0; j < k; ++j) m = m * Poly::var(R, (i + j) % n);
      s = s + m;
    }
    out.push_back(s);
  }
  Poly all = Poly::constant(R, 1);
  for (int i = 0; i < n; ++i) all = all * Poly::var(R, i);
  out.push_back(all - Poly::constant(R, 1));
  return out;
}

std::vector<std::string> names(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

void BM_GroebnerCyclic(benchmark::State& state) {
  auto R = Ring::make(32003, names(static_cast<int>(state.range(0))));
  std::vector<Poly> gens = cyclic(R);
  for (auto _ : state) {
    GB g = groebner(R, gens);
    benchmark::DoNotOptimize(g.size());
  }
}
BENCHMARK(BM_GroebnerCyclic)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_EliminationTwistedCubic(benchmark::State& state) {
  auto S = Ring::make(2, {"a", "b", "c", "d"});
  auto T = Ring::make(2, {"s", "t"});
  RingMap phi(RingSpec::poly(S), RingSpec::poly(T),
              {parse_poly(T, "s^3"), parse_poly(T, "s^2*t"), parse_poly(T, "s*t^2"), parse_poly(T, "t^3")});
  for (auto _ : state) benchmark::DoNotOptimize(elimination_kernel(phi).gens().size());
}
BENCHMARK(BM_EliminationTwistedCubic)->Unit(benchmark::kMillisecond);

void BM_KoszulResolution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto R = Ring::make(3, names(n));
  std::vector<Poly> xs;
  for (int i = 0; i < n; ++i) xs.push_back(Poly::var(R, i));
  Module M = Module::free(R, 1, xs);
  for (auto _ : state) benchmark::DoNotOptimize(resolution_complex(M, 16).hi());
}
BENCHMARK(BM_KoszulResolution)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_BracketPower(benchmark::State& state) {
  auto R = Ring::make(2, {"x", "y", "z"});
  Ideal I(R, {parse_poly(R, "x*y+z"), parse_poly(R, "y^2+x*z"), parse_poly(R, "x^2+y*z+1")});
  const int e = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bracket_power(I, e).gb().size());
}
BENCHMARK(BM_BracketPower)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
