#include "art/frobenius.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace art;

namespace {

RingSpec spec(const RingPtr& R, std::initializer_list<const char*> rels) { return {R, Ps(R, rels)}; }

const char* kElliptic = "y^2+x*y+y+x^3+x+1";

}  // namespace

TEST_CASE("bracket power examples") {
  auto R = Ring::make(2, {"x", "y"});
  CHECK(bracket_power(Ideal(R, Ps(R, {"x"})), 1) == Ideal(R, Ps(R, {"x^2"})));
  CHECK(bracket_power(Ideal(R, Ps(R, {"x+y"})), 1) == Ideal(R, Ps(R, {"x^2+y^2"})));
  CHECK(bracket_power(Ideal(R, Ps(R, {"x", "y"})), 2) == Ideal(R, Ps(R, {"x^4", "y^4"})));
  CHECK(bracket_power(Ideal(R, Ps(R, {"x*y+1"})), 0) == Ideal(R, Ps(R, {"x*y+1"})));
}

TEST_CASE("property: bracket powers do not depend on the generating set") {
  std::mt19937 rng(11);
  for (coef p : {2u, 3u}) {
    auto R = Ring::make(p, {"x", "y"});
    for (int t = 0; t < 5; ++t) {
      Poly f = random_poly(R, rng, 2, 3), g = random_poly(R, rng, 2, 3), h = random_poly(R, rng, 1, 2);
      Ideal I(R, {f, g});
      Ideal J(R, {f + h * g, g, f * g});  // same ideal, other generators
      REQUIRE(I == J);
      CHECK(bracket_power(I, 1) == bracket_power(J, 1));
    }
  }
}

TEST_CASE("pushforward of a polynomial ring is free") {
  auto R = Ring::make(2, {"x"});
  FrobPushforward F = frobenius_pushforward(RingSpec::poly(R), 1);
  CHECK(F.module.ngens() == 2);
  CHECK(F.module.presentation().rels().empty());
  CHECK(F.tag(0) == "F_*(1)");
  CHECK(F.tag(1) == "F_*(x)");
  auto R3 = Ring::make(3, {"x", "y"});
  FrobPushforward G = frobenius_pushforward(RingSpec::poly(R3), 1);
  CHECK(G.module.ngens() == 9);
  CHECK(G.module.presentation().rels().empty());
}

TEST_CASE("pushforward of the dual numbers") {
  auto R = Ring::make(2, {"x"});
  FrobPushforward F = frobenius_pushforward(spec(R, {"x^2"}), 1);
  // x . F_*1 = F_*(x^2) = 0 and x . F_*x = F_*(x^3) = 0: (R/(x))^2
  CHECK(F.module.ngens() == 2);
  CHECK(F.module.is_zero_element({P(R, "x"), P(R, "0")}));
  CHECK(F.module.is_zero_element({P(R, "0"), P(R, "x")}));
  CHECK(!F.module.is_zero_element({P(R, "1"), P(R, "0")}));
  CHECK(!F.module.is_zero_element({P(R, "0"), P(R, "1")}));
  CHECK(minimal_generators_at(F.module, Ps(R, {"x"})) == 2);
}

TEST_CASE("twisted action matches direct computation") {
  auto R = Ring::make(3, {"x"});
  FrobPushforward F = frobenius_pushforward(RingSpec::poly(R), 1);
  // x^7 = x^1 (x^2)^3, so F_*(x^7) = x^2 . F_*(x)
  PVec v = F.decompose(P(R, "x^7"));
  CHECK(v[0].is_zero());
  CHECK(v[1] == P(R, "x^2"));
  CHECK(v[2].is_zero());
  // 2 x^5 = 2 x^2 (x)^3
  CHECK(F.decompose(P(R, "2*x^5"))[2] == P(R, "2*x"));
}

TEST_CASE("property: pushforward regroups across levels") {
  auto R = Ring::make(2, {"x"});
  for (const char* rel : {"", "x^3"}) {
    RingSpec S = std::string(rel).empty() ? RingSpec::poly(R) : spec(R, {rel});
    FrobPushforward F1 = frobenius_pushforward(S, 1);
    FrobPushforward F2 = frobenius_pushforward(S, 2);
    FrobPushforward FF = frobenius_pushforward(F1.module, S, 1);
    // F_*(x^b . F_*x^a) = F^2_*(x^{2b+a})
    std::vector<PVec> imgs(FF.module.ngens());
    for (int b = 0; b < 2; ++b)
      for (int a = 0; a < 2; ++a) imgs[FF.index(b, a)] = unit_vec(R, 4, 2 * b + a);
    ModuleMap m(FF.module, F2.module, imgs);
    CHECK(m.is_iso());
  }
}

TEST_CASE("size cap is enforced") {
  auto R = Ring::make(2, {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m"});
  CHECK_THROWS_AS(frobenius_pushforward(RingSpec::poly(R), 1), Error);
  try {
    frobenius_pushforward(RingSpec::poly(R), 1);
  } catch (const Error& e) {
    CHECK(e.kind() == "SizeCapExceeded");
  }
}

TEST_CASE("p-generating sets") {
  auto R = Ring::make(2, {"x", "y"});
  CHECK(is_p_generating(RingSpec::poly(R), Ps(R, {"x", "y"})));
  CHECK(!is_p_generating(RingSpec::poly(R), Ps(R, {"x"})));
  CHECK(is_p_generating(spec(R, {"y^2-x"}), Ps(R, {"y"})));
  CHECK(is_p_generating(RingSpec::poly(R), Ps(R, {"x+y^2", "y"})));
}

TEST_CASE("p-bases") {
  auto R = Ring::make(2, {"x"});
  CHECK(is_p_basis(RingSpec::poly(R), Ps(R, {"x"})));
  CHECK(is_p_basis(RingSpec::poly(R), Ps(R, {"x+1"})));
  CHECK(!is_p_basis(spec(R, {"x^2"}), Ps(R, {"x"})));
  auto S = Ring::make(2, {"x", "y"});
  CHECK(is_p_basis(spec(S, {"y^2-x"}), Ps(S, {"y"})));
  CHECK(!is_p_basis(RingSpec::poly(S), Ps(S, {"x", "y", "x*y"})));
}

TEST_CASE("property: a p-basis gives a relation-free pushforward on its monomials") {
  auto R = Ring::make(3, {"x", "y"});
  for (auto xs : {Ps(R, {"x", "y"}), Ps(R, {"x+y^3", "y"}), Ps(R, {"x", "y+x^2"})}) {
    REQUIRE(is_p_basis(RingSpec::poly(R), xs));
    FrobPushforward F = frobenius_pushforward(RingSpec::poly(R), 1);
    CHECK(F.module.presentation().rels().empty());
  }
}

TEST_CASE("trace generator of polynomial rings") {
  struct Case {
    coef p;
    std::vector<std::string> vars;
  };
  for (auto c : {Case{2, {"x"}}, Case{3, {"x"}}, Case{2, {"x", "y"}}}) {
    auto R = Ring::make(c.p, c.vars);
    std::vector<Poly> xs;
    for (int i = 0; i < R->nvars(); ++i) xs.push_back(Poly::var(R, i));
    TraceGenerator T = pbasis_trace_generator(RingSpec::poly(R), xs);
    CHECK(T.free_generator);
    CHECK(T.matches_projection);
    // Only x^{p-1..p-1} is sent to the volume form.
    int ones = 0;
    for (auto& v : T.table) ones += v == Poly::constant(R, 1);
    CHECK(ones == 1);
    CHECK(T.table.back() == Poly::constant(R, 1));
  }
}

TEST_CASE("property: other projections are the trace precomposed with a monomial") {
  auto R = Ring::make(3, {"x"});
  TraceGenerator T = pbasis_trace_generator(RingSpec::poly(R), Ps(R, {"x"}));
  REQUIRE(T.free_generator);
  FrobPushforward F = frobenius_pushforward(RingSpec::poly(R), 1);
  // The projection onto F_*x^a is phi o (F_*x^{p-1-a}).
  for (int a = 0; a < 3; ++a) {
    Matrix m = F.multiplication(P(R, "x").pow(2 - a));
    for (int b = 0; b < 3; ++b) {
      Poly v = T.phi.apply_coords(m.column(b))[0];
      CHECK(v == Poly::constant(R, a == b ? 1 : 0));
    }
  }
}

TEST_CASE("trace generator needs a p-basis") {
  auto R = Ring::make(2, {"x"});
  CHECK_THROWS_AS(pbasis_trace_generator(spec(R, {"x^2"}), Ps(R, {"x"})), Error);
}

TEST_CASE("elliptic curve determinant") {
  auto R = Ring::make(2, {"x", "y"});
  RingSpec E = spec(R, {kElliptic});
  auto cands = Ps(R, {"x", "y", "x+y", "x*y", "x+1", "y+1"});
  EllipticReport rep = elliptic_curve_checks(E, Ps(R, {"x+1", "y+1"}), cands);
  CHECK(rep.generic_rank == 2);
  CHECK(rep.det_iso);
  CHECK(rep.refuted_candidates.size() == cands.size());
  // The point (1,1) is smooth, so Q/mQ is one-dimensional: locally Q is principal.
  CHECK(rep.min_generators == 1);
}
