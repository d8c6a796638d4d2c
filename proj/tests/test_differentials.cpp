#include "art/differentials.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace art;

namespace {

RingSpec spec(const RingPtr& R, std::initializer_list<const char*> rels) { return {R, Ps(R, rels)}; }

bool free_on_units(const Module& M) { return M.presentation().rels().empty(); }

}  // namespace

TEST_CASE("kaehler examples") {
  auto R = Ring::make(2, {"x"});
  KahlerModule K = kahler(RingSpec::poly(R));
  CHECK(K.module.ngens() == 1);
  CHECK(free_on_units(K.module));
  CHECK(K.tag(0) == "dx");

  auto S = Ring::make(2, {"x", "y"});
  KahlerModule C = kahler(spec(S, {"y^2+x^3"}));
  // 2y dy + 3x^2 dx = x^2 dx in characteristic 2
  CHECK(C.d(P(S, "y^2+x^3")) == PVec{P(S, "x^2"), P(S, "0")});
  CHECK(C.module.is_zero_element({P(S, "x^2"), P(S, "0")}));
  CHECK(!C.module.is_zero_element({P(S, "x"), P(S, "0")}));
  CHECK(!C.module.is_zero_element({P(S, "0"), P(S, "1")}));

  auto T = Ring::make(3, {"x"});
  KahlerModule N = kahler(spec(T, {"x^3"}));
  // 3x^2 dx = 0: Omega is free over R on dx
  CHECK(!N.module.is_zero_element({P(T, "x^2")}));
  CHECK(N.module.is_zero_element({P(T, "x^3")}));
}

TEST_CASE("property: Leibniz rule and d(f^p) = 0") {
  std::mt19937 rng(3);
  for (coef p : {2u, 3u, 5u}) {
    auto R = Ring::make(p, {"x", "y", "z"});
    RingSpec A = spec(R, {"x*y-z^2"});
    KahlerModule K = kahler(A);
    for (int t = 0; t < 20; ++t) {
      Poly f = random_poly(R, rng, 3, 4), g = random_poly(R, rng, 3, 4);
      PVec lhs = K.d(f * g);
      PVec rhs = vec_add(vec_scale(K.d(g), f), vec_scale(K.d(f), g));
      CHECK(vec_is_zero(vec_sub(lhs, rhs)));
      CHECK(K.module.is_zero_element(K.d(f.pow(p))));
    }
  }
}

TEST_CASE("forms and wedge signs") {
  auto R = Ring::make(3, {"x", "y"});
  Form dx = Form::one({P(R, "1"), P(R, "0")});
  Form dy = Form::one({P(R, "0"), P(R, "1")});
  Form a = dx.wedge(dy), b = dy.wedge(dx);
  CHECK(a.c[0] == P(R, "1"));
  CHECK(b.c[0] == P(R, "-1"));
  CHECK(dx.wedge(dx).is_zero());
  CHECK(shuffle_sign({0, 2}, {1}) == -1);
  CHECK(shuffle_sign({1}, {0, 2}) == -1);
  CHECK(shuffle_sign({0}, {1, 2}) == 1);
  CHECK(shuffle_sign({1}, {1}) == 0);
  CHECK(a.str({"dx", "dy"}) == "(1)*dx^dy");
}

TEST_CASE("property: wedge of one-forms is the determinant") {
  std::mt19937 rng(9);
  auto R = Ring::make(3, {"x", "y", "z"});
  for (int t = 0; t < 10; ++t) {
    std::vector<PVec> cols;
    Form w = Form::unit(R, 3);
    for (int j = 0; j < 3; ++j) {
      PVec v{random_poly(R, rng, 1, 2), random_poly(R, rng, 1, 2), random_poly(R, rng, 1, 2)};
      cols.push_back(v);
      w = w.wedge(Form::one(v));
    }
    Matrix M = Matrix::from_columns(R, 3, cols);
    CHECK(w.c[0] == wedge_matrix(M, 3).at(0, 0));
  }
}

TEST_CASE("conormal sequence of a coordinate quotient") {
  auto S = Ring::make(2, {"x", "y"});
  ConormalSequence cs = conormal_sequence(RingSpec::poly(S), Ps(S, {"y"}), Ps(S, {"x"}));
  CHECK(cs.certified());
  // theta(dx) = 1 (x) dx
  CHECK(cs.theta.images()[0] == PVec{P(S, "1"), P(S, "0")});
  // J/J^2 is S-free on y: killed by y, not by x
  CHECK(cs.conormal.is_zero_element({P(S, "y")}));
  CHECK(!cs.conormal.is_zero_element({P(S, "x")}));
}

TEST_CASE("conormal sequence of a graph") {
  auto S = Ring::make(2, {"x", "y"});
  ConormalSequence cs = conormal_sequence(RingSpec::poly(S), Ps(S, {"y-x^2"}), Ps(S, {"x"}));
  CHECK(cs.certified());
  // d(y - x^2) = dy in characteristic 2
  CHECK(cs.alpha.images()[0] == PVec{P(S, "0"), P(S, "1")});
  CHECK(cs.theta.images()[0] == PVec{P(S, "1"), P(S, "0")});
}

TEST_CASE("conormal sequence of a point") {
  auto X = Ring::make(3, {"X"});
  auto F = Ring::make(3, {});
  RingMap pi(RingSpec::poly(X), RingSpec::poly(F), {Poly::constant(F, 0)});
  ConormalSequence cs = conormal_sequence(pi, {});
  CHECK(cs.r == Ps(X, {"X"}));
  CHECK(cs.certified());
  CHECK(cs.omega_S.is_zero());
}

TEST_CASE("conormal sequence needs a differential basis") {
  auto S = Ring::make(2, {"x", "y"});
  CHECK_THROWS_AS(conormal_sequence(RingSpec::poly(S), Ps(S, {"y"}), Ps(S, {"x^2"})), Error);
  auto F = Ring::make(2, {"x"});
  RingMap notsurj(RingSpec::poly(F), RingSpec::poly(S), Ps(S, {"x"}));
  CHECK_THROWS_AS(conormal_sequence(notsurj, {}), Error);
}

TEST_CASE("property: conormal exactness on a corpus") {
  struct Case {
    coef p;
    std::vector<std::string> vars;
    std::vector<std::string> r;
    std::vector<std::string> z;
  };
  std::vector<Case> corpus = {
      {2, {"x", "y"}, {"y+x^3+x"}, {"x"}},
      {3, {"x", "y", "z"}, {"z-x*y", "y-x^2"}, {"x"}},
      {3, {"x", "y"}, {"x"}, {"y"}},
      {2, {"x", "X"}, {"X^2-x"}, {"X"}},
  };
  for (auto& c : corpus) {
    auto S = Ring::make(c.p, c.vars);
    std::vector<Poly> r, z;
    for (auto& s : c.r) r.push_back(P(S, s));
    for (auto& s : c.z) z.push_back(P(S, s));
    ConormalSequence cs = conormal_sequence(RingSpec::poly(S), r, z);
    CHECK(cs.alpha_injective);
    CHECK(cs.beta_surjective);
    CHECK(cs.exact_middle);
    CHECK(cs.theta_section);
    CHECK(cs.direct_sum_iso);
  }
}

TEST_CASE("canonical omega of regular rings") {
  auto R = Ring::make(2, {"x"});
  CanonicalOmega w = canonical_omega_regular(RingSpec::poly(R));
  CHECK(w.n == 1);
  CHECK(w.complex.lo() == -1);
  CHECK(w.complex.rank(-1) == 1);
  CHECK(w.generator == "dx");
  CHECK(w.differential_basis);

  auto S = Ring::make(2, {"x", "y"});
  CanonicalOmega w2 = canonical_omega_regular(RingSpec::poly(S));
  CHECK(w2.complex.lo() == -2);
  CHECK(w2.generator == "dx^dy");

  auto G = Ring::make(2, {"x", "X"});
  RingSpec step = spec(G, {"X^2-x"});
  CanonicalOmega w3 = canonical_omega_regular(step, Ps(G, {"X"}));
  CHECK(w3.complex.lo() == -1);
  CHECK(w3.generator == "dX");
  CHECK(w3.differential_basis);

  CHECK_THROWS_AS(canonical_omega_regular(spec(R, {"x^2"})), Error);
  CHECK_THROWS_AS(canonical_omega_regular(spec(R, {"x^2"}), Ps(R, {"x"})), Error);
}

TEST_CASE("property: every p-basis is a differential basis") {
  auto R = Ring::make(3, {"x", "y"});
  for (auto xs : {Ps(R, {"x", "y"}), Ps(R, {"x+y^3", "y"}), Ps(R, {"y", "x+y^2"})}) {
    CanonicalOmega w = canonical_omega_regular(RingSpec::poly(R), xs);
    CHECK(w.differential_basis);
  }
}

TEST_CASE("property: polynomial extension and determinant of differentials") {
  // Omega_R (x) S -> Omega_S for R = F_2[x] -> S = F_2[x,y]: split injection with cokernel S dy.
  auto S = Ring::make(2, {"x", "y"});
  KahlerModule K = kahler(RingSpec::poly(S));
  ModuleMap inc(Module::free(S, 1), K.module, {K.d(P(S, "x"))});
  CHECK(inc.kernel().is_zero());
  Module coker = inc.cokernel();
  CHECK(!coker.is_zero());
  ModuleMap full(Module::free(S, 2), K.module, {K.d(P(S, "x")), K.d(P(S, "y"))});
  CHECK(full.is_iso());
  Module top = exterior_power(K.module, 2);
  CHECK(top.ngens() == 1);
  CHECK(top.presentation().rels().empty());
}
