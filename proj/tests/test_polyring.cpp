#include <random>

#include "art/groebner.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace art;

TEST_CASE("fp_inverse small cases") {
  CHECK(fp_inverse(1, 5) == 1);
  CHECK(fp_inverse(2, 5) == 3);
  // exhaustive search oracle
  for (coef p : {2u, 3u, 5u, 7u, 11u, 65521u}) {
    for (coef a = 1; a < std::min<coef>(p, 200); ++a) {
      coef b = fp_inverse(a, p);
      CHECK(fp_mul(a, b, p) == 1);
    }
  }
  coef found = 0;
  for (coef b = 1; b < 7; ++b)
    if ((3 * b) % 7 == 1) found = b;
  CHECK(fp_inverse(3, 7) == found);
  CHECK(found == 5);
  CHECK_THROWS_AS(fp_inverse(0, 5), Error);
}

TEST_CASE("ring construction validates the characteristic") {
  CHECK_THROWS_AS(Ring::make(4, {"x"}), Error);
  CHECK_THROWS_AS(Ring::make(65537, {"x"}), Error);
  CHECK_THROWS_AS(Ring::make(3, {"x", "x"}), Error);
  CHECK_NOTHROW(Ring::make(65521, {"x"}));
}

TEST_CASE("poly arithmetic examples") {
  auto R2 = Ring::make(2, {"x", "y"});
  CHECK(P(R2, "(x+y)^2") == P(R2, "x^2+y^2"));
  auto R3 = Ring::make(3, {"x"});
  CHECK(P(R3, "(x+1)*(x-1)") == P(R3, "x^2+2"));
  // binomial expansion oracle for (x+y)^5 mod 5
  auto R5 = Ring::make(5, {"x", "y"});
  Poly expected(R5);
  long long binom[6] = {1, 5, 10, 10, 5, 1};
  for (int k = 0; k <= 5; ++k) expected = expected + P(R5, "x").pow(k) * P(R5, "y").pow(5 - k).scale(binom[k] % 5);
  CHECK(P(R5, "(x+y)^5") == expected);
  CHECK(expected == P(R5, "x^5+y^5"));
}

TEST_CASE("ring mismatch is reported") {
  auto A = Ring::make(2, {"x"});
  auto B = Ring::make(3, {"x"});
  CHECK_THROWS_AS(P(A, "x") + P(B, "x"), Error);
}

TEST_CASE("canonical printing uses least residues and descending degrevlex") {
  auto R = Ring::make(5, {"x", "y"});
  CHECK(P(R, "-x + y^2 - 1").str() == "y^2 + 4*x + 4");
  auto L = Ring::make(5, {"x", "y"}, MonoOrder::lex());
  CHECK(P(L, "x + y^2").str() == "y^2 + x");
  // unary minus binds looser than ^
  CHECK(P(R, "-x^2").str() == "4*x^2");
  CHECK(P(R, "(-x)^2").str() == "x^2");
}

TEST_CASE("parser errors") {
  auto R = Ring::make(2, {"x"});
  CHECK_THROWS_AS(parse_poly(R, "x +"), Error);
  CHECK_THROWS_AS(parse_poly(R, "z"), Error);
  CHECK_THROWS_AS(parse_poly(R, "(x"), Error);
}

TEST_CASE("apply_ring_map examples") {
  auto R = Ring::make(2, {"x"});
  RingMap id(RingSpec::poly(R), RingSpec::poly(R), {P(R, "x")});
  CHECK(id.apply(P(R, "x^2+x")) == P(R, "x^2+x"));
  auto S = Ring::make(2, {"X"});
  RingMap sq(RingSpec::poly(S), RingSpec::poly(R), {P(R, "x^2")});
  CHECK(sq.apply(P(S, "X+1")) == P(R, "x^2+1"));
  // R[X]/(X^2 - x) -> R, X -> x, r -> r^2 on base variables
  auto T = Ring::make(2, {"x", "X"});
  RingMap phi({T, {P(T, "X^2-x")}}, RingSpec::poly(R), {P(R, "x^2"), P(R, "x")});
  CHECK(phi.apply(P(T, "X+x")) == P(R, "x+x^2"));
  // ill-defined map is rejected
  CHECK_THROWS_AS(RingMap({T, {P(T, "X^2-x")}}, RingSpec::poly(R), {P(R, "x"), P(R, "x")}), Error);
}

TEST_CASE("property: Frobenius is additive and multiplicative") {
  std::mt19937 rng(12345);
  int cases = 0;
  for (coef p : {2u, 3u, 5u, 7u}) {
    auto R = Ring::make(p, {"x", "y", "z"});
    for (int k = 0; k < 250; ++k) {
      Poly f = random_poly(R, rng, 3, 4), g = random_poly(R, rng, 3, 4);
      CHECK((f + g).pow(p) == f.pow(p) + g.pow(p));
      CHECK((f * g).pow(p) == f.pow(p) * g.pow(p));
      CHECK((f + (-f)).terms().empty());
      ++cases;
    }
  }
  CHECK(cases >= 1000);
}

TEST_CASE("property: ring maps respect + and *") {
  std::mt19937 rng(777);
  auto S = Ring::make(3, {"X", "Y"});
  auto T = Ring::make(3, {"s", "t"});
  RingMap phi(RingSpec::poly(S), RingSpec::poly(T), {P(T, "s^2+t"), P(T, "s*t-1")});
  for (int k = 0; k < 100; ++k) {
    Poly f = random_poly(S, rng, 3, 3), g = random_poly(S, rng, 3, 3);
    CHECK(phi.apply(f + g) == phi.apply(f) + phi.apply(g));
    CHECK(phi.apply(f * g) == phi.apply(f) * phi.apply(g));
  }
}

TEST_CASE("property: monomial order axioms") {
  std::mt19937 rng(99);
  for (auto ord : {MonoOrder::degrevlex(), MonoOrder::lex(), MonoOrder::blocked(1), MonoOrder::blocked(2)}) {
    auto R = Ring::make(2, {"a", "b", "c"}, ord);
    for (int k = 0; k < 300; ++k) {
      Mono m1 = random_mono(rng, 3, 5), m2 = random_mono(rng, 3, 5), n = random_mono(rng, 3, 3);
      int c = R->cmp(m1, m2);
      CHECK(c == -R->cmp(m2, m1));
      if (c == 0) CHECK(m1 == m2);
      if (c < 0) CHECK(R->cmp(m1 * n, m2 * n) < 0);
      // refines divisibility
      if (!(n == Mono{})) CHECK(R->cmp(m1 * n, m1) > 0);
    }
  }
}
