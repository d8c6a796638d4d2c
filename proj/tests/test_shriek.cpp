#include "art/shriek.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace art;

namespace {

RingSpec spec(const RingPtr& R, std::initializer_list<const char*> rels) { return {R, Ps(R, rels)}; }

Complex times(const RingPtr& R, const char* f) {
  Matrix d(R, 1, 1);
  d.at(0, 0) = P(R, f);
  return Complex(R, -1, {1, 1}, {d});
}

}  // namespace

TEST_CASE("enveloping ring") {
  auto R = Ring::make(2, {"x", "y"});
  EnvelopingRing E = enveloping_ring(spec(R, {"x*y"}));
  CHECK(E.AxA->vars() == std::vector<std::string>{"x", "y", "x'", "y'"});
  CHECK(E.relations.size() == 2);
  CHECK(E.verified());
  auto L = Ring::make(3, {"t"});
  CHECK(enveloping_ring(RingSpec::poly(L)).verified());
}

TEST_CASE("external tensor products") {
  auto R = Ring::make(2, {"x"});
  EnvelopingRing E = enveloping_ring(RingSpec::poly(R));
  Module A = Module::free(R, 1);
  Module AA = external_tensor(E, A, A);
  CHECK(AA.presentation().rels().empty());
  Module Q = Module::cokernel(R, 1, {{P(R, "x")}});
  Module QQ = external_tensor(E, Q, Q);
  CHECK(QQ.is_zero_element({P(E.AxA, "x")}));
  CHECK(QQ.is_zero_element({Poly::var(E.AxA, "x'")}));
  CHECK(!QQ.is_zero_element({P(E.AxA, "1")}));
  Complex w = Complex::single(R, 1, -1);
  Complex ww = external_tensor(E, w, w);
  CHECK(ww.lo() == -2);
  CHECK(ww.rank(-2) == 1);
}

TEST_CASE("shriek products on the line") {
  auto R = Ring::make(2, {"x"});
  RingSpec A = RingSpec::poly(R);
  // A (x)^! A is A in degree +1
  ShriekProduct aa = shriek_tensor(A, Complex::single(R, 1, 0), Complex::single(R, 1, 0));
  CHECK(aa.support == std::vector<int>{1});
  CHECK(aa.within_bound);
  // omega (x)^! omega is omega
  ShriekProduct ww = shriek_tensor(A, omega_carrier(A), omega_carrier(A));
  CHECK(ww.support == std::vector<int>{-1});
  CHECK(ww.within_bound);
  // over F_2 the product is the tensor product
  auto F = Ring::make(2, {});
  ShriekProduct pt = shriek_tensor(RingSpec::poly(F), Complex::single(F, 2, 0), Complex::single(F, 3, 1));
  CHECK(pt.support == std::vector<int>{1});
  CHECK(pt.complex.rank(1) == 6);
}

TEST_CASE("unit law on the corpus") {
  auto R = Ring::make(2, {"x"});
  RingSpec A = RingSpec::poly(R);
  RingSpec D = spec(R, {"x^2"});
  struct Case {
    RingSpec A;
    Complex M;
  };
  std::vector<Case> corpus = {
      {A, Complex::single(R, 1, 0)},
      {A, omega_carrier(A)},
      {A, times(R, "x")},
      {D, omega_carrier(D)},
  };
  for (auto& c : corpus) {
    UnitReport u = verify_unit(c.A, c.M);
    CHECK(u.iso);
    CHECK(u.source_support == u.target_support);
  }
  // the rigidifier tau: omega ~= omega (x)^! omega
  CHECK(verify_unit(A, omega_carrier(A)).target_support == std::vector<int>{-1});
}

TEST_CASE("property: unit law for random two-term complexes") {
  std::mt19937 rng(11);
  auto R = Ring::make(3, {"x", "y"});
  for (int t = 0; t < 4; ++t) {
    Matrix d(R, 1, 2);
    d.at(0, 0) = random_poly(R, rng, 2, 3);
    d.at(0, 1) = random_poly(R, rng, 2, 3);
    Complex M(R, -1, {2, 1}, {d});
    CHECK(verify_unit(RingSpec::poly(R), M).iso);
  }
}

TEST_CASE("symmetry") {
  auto R = Ring::make(3, {"x"});
  Complex w = Complex::single(R, 1, -1);
  CHECK(verify_symmetry(R, w, w).quasi_iso);
  CHECK(verify_symmetry(R, Complex::single(R, 1, 0), times(R, "x")).quasi_iso);
  auto F = Ring::make(2, {});
  CHECK(verify_symmetry(F, Complex::single(F, 1, 0), Complex::single(F, 1, 0)).quasi_iso);
}

TEST_CASE("associativity") {
  auto R = Ring::make(2, {"x"});
  AssociativityReport a = verify_associativity(R, Complex::single(R, 1, 0), times(R, "x"), Complex::single(R, 1, -1));
  CHECK(a.certified());
  auto F = Ring::make(2, {});
  Complex one = Complex::single(F, 1, 0);
  CHECK(verify_associativity(F, one, one, one).certified());
}

TEST_CASE("exterior products of Hom complexes") {
  auto R = Ring::make(3, {"x"});
  EnvelopingRing E = enveloping_ring(RingSpec::poly(R));
  Complex M = times(R, "x"), N = Complex::single(R, 1, -1), M2 = times(R, "x^2+1"), N2 = times(R, "x");
  ChainMap c = exterior_hom_map(E, M, N, M2, N2);
  CHECK(c.is_chain_map());
  CHECK(c.quasi_iso());
  ChainMap d = exterior_hom_map(E, N, M, Complex::single(R, 2, 0), N2);
  CHECK(d.quasi_iso());
}

TEST_CASE("Frobenius monoidality on the line") {
  auto R = Ring::make(2, {"x"});
  CHECK(frobenius_monoidality(R).certified());
}
