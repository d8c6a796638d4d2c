#include "art/gabber.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace art;

namespace {

RingSpec spec(const RingPtr& R, std::initializer_list<const char*> rels) { return {R, Ps(R, rels)}; }

}  // namespace

TEST_CASE("one step over F_2 with x = 1") {
  auto F = Ring::make(2, {});
  GabberStage st = gabber_step(RingSpec::poly(F), {Poly::constant(F, 1)});
  CHECK(st.ring.ring->nvars() == 1);
  auto X = Poly::var(st.ring.ring, 0);
  CHECK(Ideal(st.ring.ring, st.ring.relations) == Ideal(st.ring.ring, {(X - Poly::constant(st.ring.ring, 1)).pow(2)}));
  CHECK(st.phi.apply(X) == Poly::constant(F, 1));
  CHECK(st.frobenius_identities);
  CHECK(st.phi_surjective);
  CHECK(st.iota_injective);
}

TEST_CASE("one step over the affine line is the square-root line") {
  auto R = Ring::make(2, {"x"});
  GabberStage st = gabber_step(RingSpec::poly(R), Ps(R, {"x"}));
  const RingPtr& Q = st.ring.ring;
  CHECK(Q->vars() == std::vector<std::string>{"x", "X1_1"});
  CHECK(st.frobenius_identities);
  CHECK(st.phi_surjective);
  CHECK(st.iota_injective);
  // X is a p-basis of R'
  CHECK(is_p_basis(st.ring, st.pbasis_images));
  // phi is an isomorphism when x is a p-basis of a reduced ring.
  CHECK(elimination_kernel(st.phi) == Ideal(Q, st.ring.relations));
  // R' ~= F_2[X] by eliminating x
  auto T = Ring::make(2, {"X"});
  RingMap m(RingSpec::poly(T), st.ring, {Poly::var(Q, 1)});
  CHECK(elimination_kernel(m).is_zero());
  CHECK(GraphIdeal(m).surjective());
}

TEST_CASE("phi is an isomorphism over F_3[x]") {
  auto R = Ring::make(3, {"x"});
  GabberStage st = gabber_step(RingSpec::poly(R), Ps(R, {"x"}));
  CHECK(st.phi_surjective);
  CHECK(elimination_kernel(st.phi) == Ideal(st.ring.ring, st.ring.relations));
}

TEST_CASE("one step over the dual numbers") {
  auto R = Ring::make(2, {"x"});
  GabberStage st = gabber_step(spec(R, {"x^2"}), Ps(R, {"x"}));
  const RingPtr& Q = st.ring.ring;
  CHECK(Ideal(Q, st.ring.relations) == Ideal(Q, Ps(Q, {"X1_1^2-x", "x^2"})));
  CHECK(st.phi.apply(Poly::var(Q, "X1_1")) == P(R, "x"));
  CHECK(st.frobenius_identities);
  CHECK(st.iota_injective);
}

TEST_CASE("a tuple that does not p-generate is rejected") {
  auto R = Ring::make(2, {"x", "y"});
  try {
    gabber_step(RingSpec::poly(R), Ps(R, {"x"}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == "NotPGenerating");
  }
}

TEST_CASE("truncations of G(F_p; t)") {
  for (coef p : {2u, 3u})
    for (long t = 0; t < static_cast<long>(p); ++t)
      for (int e = 1; e <= 2; ++e) {
        PointTruncation pt = gabber_point_truncation(p, t, e);
        CHECK(pt.surjective);
        CHECK(pt.equal);
      }
  // F_2[X]/(X^4) for t = 0, e = 2
  PointTruncation z = gabber_point_truncation(2, 0, 2);
  auto S = z.kernel.ring();
  CHECK(z.kernel == Ideal(S, Ps(S, {"X^4"})));
  // X^3 - 1 = (X - 1)^3 in characteristic 3
  PointTruncation o = gabber_point_truncation(3, 1, 1);
  CHECK(o.kernel == Ideal(o.kernel.ring(), Ps(o.kernel.ring(), {"X^3-1"})));
}

TEST_CASE("truncation composite and tower invariants") {
  auto R = Ring::make(2, {"x"});
  GabberTruncation T = gabber_truncation(spec(R, {"x^2"}), Ps(R, {"x"}), 2);
  CHECK(T.stages.size() == 2);
  CHECK(T.verified());
  // pi_2 sends the top root to x
  CHECK(T.pi.apply(T.stages.back().pbasis_images[0]) == P(R, "x"));
  GabberTruncation T0 = gabber_truncation(RingSpec::poly(R), Ps(R, {"x"}), 0);
  CHECK(T0.stages.empty());
}

TEST_CASE("kernel bracket identity") {
  auto X = Ring::make(2, {"X"});
  auto F2 = Ring::make(2, {});
  for (int e = 0; e <= 2; ++e)
    CHECK(verify_kernel_bracket(RingSpec::poly(X), RingMap(RingSpec::poly(X), RingSpec::poly(F2), {Poly::constant(F2, 0)}), e));
  auto XY = Ring::make(2, {"X", "Y"});
  auto R = Ring::make(2, {"x"});
  RingMap pi(RingSpec::poly(XY), spec(R, {"x^2"}), Ps(R, {"x", "0"}));
  CHECK(verify_kernel_bracket(RingSpec::poly(XY), pi, 1));
  CHECK(verify_kernel_bracket(RingSpec::poly(XY), pi, 2));
  auto X3 = Ring::make(3, {"X"});
  auto F3 = Ring::make(3, {});
  for (int e = 1; e <= 2; ++e)
    CHECK(verify_kernel_bracket(RingSpec::poly(X3), RingMap(RingSpec::poly(X3), RingSpec::poly(F3), {Poly::constant(F3, 1)}), e));
}

TEST_CASE("kernel bracket preconditions") {
  auto X = Ring::make(2, {"X"});
  auto R = Ring::make(2, {"x", "y"});
  RingMap notsurj(RingSpec::poly(X), RingSpec::poly(R), Ps(R, {"x"}));
  CHECK_THROWS_AS(verify_kernel_bracket(RingSpec::poly(X), notsurj, 1), Error);
  auto F2 = Ring::make(2, {});
  RingSpec nil = spec(X, {"X^2"});
  CHECK_THROWS_AS(verify_kernel_bracket(nil, RingMap(nil, RingSpec::poly(F2), {Poly::constant(F2, 0)}), 1), Error);
}

TEST_CASE("bracket of the composite kernel is the kernel to the first stage") {
  // S = F_2[X,Y] ->> R_1 over R = F_2[x]/(x^2): ker(S -> R_1) = ker(S -> R)^[2]
  auto XY = Ring::make(2, {"X", "Y"});
  auto R = Ring::make(2, {"x"});
  RingSpec A = spec(R, {"x^2"});
  GabberStage st = gabber_step(A, Ps(R, {"x", "0"}));
  RingMap psi(RingSpec::poly(XY), st.ring, st.pbasis_images);
  RingMap comp = compose(st.phi, psi);
  Ideal big = elimination_kernel(comp);
  CHECK(elimination_kernel(psi) == bracket_power(big, 1));
  CHECK(big == Ideal(XY, Ps(XY, {"X^2", "Y"})));
}

TEST_CASE("property: truncation coherence") {
  // ker(R_e -> R_e') is generated by the relations of R_e and the bracket power of ker(pi_e), e' <= e.
  auto R = Ring::make(2, {"x"});
  RingSpec A = spec(R, {"x^3"});
  GabberTruncation T = gabber_truncation(A, Ps(R, {"x"}), 2);
  const RingPtr& Q = T.ring.ring;
  Ideal K = elimination_kernel(T.pi);
  for (int ep = 0; ep <= 2; ++ep) {
    RingMap down = T.pi;
    if (ep == 1) down = T.stages[1].phi;
    if (ep == 2) {
      std::vector<Poly> ids;
      for (int i = 0; i < Q->nvars(); ++i) ids.push_back(Poly::var(Q, i));
      down = RingMap(T.ring, T.ring, ids);
    }
    std::vector<Poly> want = bracket_power(K, ep).gens();
    for (auto& f : T.ring.relations) want.push_back(f);
    CHECK(elimination_kernel(down) == Ideal(Q, want));
  }
}

TEST_CASE("property: Frobenius identities on random tuples") {
  std::mt19937 rng(5);
  auto R = Ring::make(3, {"x", "y"});
  for (int t = 0; t < 3; ++t) {
    Poly h = random_poly(R, rng, 2, 2);
    // (x + h^3, y) still p-generates F_3[x,y]
    GabberStage st = gabber_step(RingSpec::poly(R), {P(R, "x") + h.pow(3), P(R, "y")}, 1, 17u + t);
    CHECK(st.frobenius_identities);
    CHECK(st.phi_surjective);
    CHECK(st.iota_injective);
  }
}

TEST_CASE("adjoining further roots") {
  auto F = Ring::make(2, {});
  CHECK(extend_pgens_check(RingSpec::poly(F), {Poly::constant(F, 0)}, {Poly::constant(F, 0)}, 1));
  auto R = Ring::make(2, {"x"});
  CHECK(extend_pgens_check(RingSpec::poly(R), Ps(R, {"x"}), Ps(R, {"x^2"}), 1));
  CHECK(extend_pgens_check(RingSpec::poly(R), Ps(R, {"x"}), Ps(R, {"x+1"}), 2));
  CHECK(extend_pgens_check(RingSpec::poly(R), Ps(R, {"x"}), {}, 1));
  CHECK(extend_pgens_check(spec(R, {"x^2"}), Ps(R, {"x"}), Ps(R, {"x"}), 1));
}
