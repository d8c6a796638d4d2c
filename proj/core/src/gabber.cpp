#include "art/gabber.hpp"

#include <random>

namespace art {

namespace {

Poly random_element(const RingPtr& r, std::mt19937& rng) {
  PolyBuilder b(r);
  std::uniform_int_distribution<int> nterms(1, 4), deg(0, 3), c(1, static_cast<int>(r->p()) - 1);
  std::uniform_int_distribution<int> var(0, std::max(0, r->nvars() - 1));
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Mono m;
    if (r->nvars() > 0) {
      const int d = deg(rng);
      for (int i = 0; i < d; ++i) {
        const int v = var(rng);
        ++m.e[v];
        ++m.deg;
      }
    }
    b.add(m, static_cast<coef>(c(rng)));
  }
  return b.build();
}

std::vector<int> identity_positions(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

// Ring with extra variables appended; existing variables keep their positions.
RingPtr extend_ring(const RingPtr& R, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = R->vars();
  for (auto& v : extra) {
    if (R->var_index(v) >= 0) throw Error("InvalidArgument", "variable name clash: " + v);
    vars.push_back(v);
  }
  return Ring::make(R->p(), vars, R->order());
}

Poly up(const Poly& f, const RingPtr& big) { return f.embed(big, identity_positions(f.ring()->nvars())); }

bool same_ideal(const RingPtr& R, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  return Ideal(R, a) == Ideal(R, b);
}

}  // namespace

std::string gabber_var(int j, int level) { return "X" + std::to_string(j + 1) + "_" + std::to_string(level); }

RingMap compose(const RingMap& g, const RingMap& f) {
  std::vector<Poly> imgs;
  for (auto& h : f.images()) imgs.push_back(g.apply(h));
  return RingMap(f.source(), g.target(), imgs);
}

GabberStage gabber_step(const RingSpec& R, const std::vector<Poly>& xs, int level, unsigned seed) {
  if (!is_p_generating(R, xs)) throw Error("NotPGenerating", "the tuple does not p-generate the ring");
  const RingPtr& P = R.ring;
  const coef p = P->p();
  const int n0 = P->nvars(), n = static_cast<int>(xs.size());
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j) names.push_back(gabber_var(j, level));
  RingPtr Q = extend_ring(P, names);

  std::vector<Poly> rels;
  for (auto& f : R.relations) rels.push_back(up(f, Q));
  std::vector<Poly> X;
  for (int j = 0; j < n; ++j) {
    X.push_back(Poly::var(Q, n0 + j));
    rels.push_back(X[j].pow(p) - up(xs[j], Q));
  }
  RingSpec Rn{Q, rels};

  std::vector<Poly> phi_imgs, iota_imgs;
  for (int i = 0; i < n0; ++i) {
    phi_imgs.push_back(Poly::var(P, i).pow(p));
    iota_imgs.push_back(Poly::var(Q, i));
  }
  for (int j = 0; j < n; ++j) phi_imgs.push_back(xs[j]);
  RingMap phi(Rn, R, phi_imgs);
  RingMap iota(R, Rn, iota_imgs);

  Ideal IR(P, R.relations), IQ(Q, rels);
  bool frob = true;
  std::mt19937 rng(seed);
  auto check_base = [&](const Poly& f) {
    if (phi.apply(iota.apply(f)) != IR.reduce(f.pow(p))) frob = false;
  };
  auto check_top = [&](const Poly& f) {
    if (iota.apply(phi.apply(f)) != IQ.reduce(f.pow(p))) frob = false;
  };
  for (int i = 0; i < n0; ++i) check_base(Poly::var(P, i));
  for (int i = 0; i < Q->nvars(); ++i) check_top(Poly::var(Q, i));
  for (int s = 0; s < 100 && frob; ++s) {
    check_base(random_element(P, rng));
    check_top(random_element(Q, rng));
  }

  GabberStage st{level, Rn, phi, iota, X, frob, GraphIdeal(phi).surjective(), false};
  st.iota_injective = elimination_kernel(iota) == IR;
  return st;
}

bool GabberTruncation::verified() const {
  for (auto& s : stages)
    if (!s.frobenius_identities || !s.phi_surjective || !s.iota_injective) return false;
  return true;
}

GabberTruncation gabber_truncation(const RingSpec& R, const std::vector<Poly>& xs, int e, unsigned seed) {
  if (e < 0) throw Error("InvalidArgument", "truncation level must be nonnegative");
  std::vector<Poly> ids;
  for (int i = 0; i < R.ring->nvars(); ++i) ids.push_back(Poly::var(R.ring, i));
  GabberTruncation T{R, xs, e, {}, R, RingMap(R, R, ids)};
  RingSpec cur = R;
  std::vector<Poly> cur_x = xs;
  for (int i = 1; i <= e; ++i) {
    GabberStage st = gabber_step(cur, cur_x, i, seed + static_cast<unsigned>(i));
    T.pi = compose(T.pi, st.phi);
    cur = st.ring;
    cur_x = st.pbasis_images;
    T.stages.push_back(std::move(st));
  }
  T.ring = cur;
  return T;
}

PointTruncation gabber_point_truncation(coef p, long t, int e) {
  RingPtr Fp = Ring::make(p, {});
  Poly tt = Poly::constant(Fp, t);
  GabberTruncation T = gabber_truncation(RingSpec::poly(Fp), {tt}, e);
  RingPtr S = Ring::make(p, {"X"});
  Poly top = e == 0 ? Poly::constant(T.ring.ring, t) : T.stages.back().pbasis_images[0];
  RingMap m(RingSpec::poly(S), T.ring, {top});
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  PointTruncation out;
  out.kernel = elimination_kernel(m);
  out.expected = Ideal(S, {(Poly::var(S, 0) - Poly::constant(S, t)).pow(q)});
  out.surjective = GraphIdeal(m).surjective();
  out.equal = out.kernel == out.expected;
  return out;
}

bool verify_kernel_bracket(const RingSpec& S, const RingMap& pi, int e) {
  const RingPtr& PS = S.ring;
  GraphIdeal g(pi);
  if (!g.surjective()) throw Error("NotSurjective", "the map to the base ring is not surjective");
  std::vector<Poly> vars;
  for (int i = 0; i < PS->nvars(); ++i) vars.push_back(Poly::var(PS, i));
  if (!is_p_basis(S, vars)) throw Error("NoPBasis", "the source variables are not a p-basis");
  Ideal J = g.kernel();
  const RingSpec& R = pi.target();
  GabberTruncation T = gabber_truncation(R, pi.images(), e);
  std::vector<Poly> prev_imgs = pi.images();
  bool ok = true;
  for (int i = 0; i <= e; ++i) {
    std::vector<Poly> imgs = i == 0 ? pi.images() : T.stages[i - 1].pbasis_images;
    RingSpec Ri = i == 0 ? R : T.stages[i - 1].ring;
    RingMap pii(S, Ri, imgs);
    std::vector<Poly> want = bracket_power(J, i).gens();
    for (auto& f : S.relations) want.push_back(f);
    if (!(elimination_kernel(pii) == Ideal(PS, want))) ok = false;
    if (!GraphIdeal(pii).surjective()) ok = false;
    if (i > 0) {
      const RingMap& phi = T.stages[i - 1].phi;
      for (size_t j = 0; j < imgs.size(); ++j)
        if (phi.apply(imgs[j]) != Ideal(phi.target().ring, phi.target().relations).reduce(prev_imgs[j])) ok = false;
    }
    prev_imgs = imgs;
  }
  return ok;
}

bool extend_pgens_check(const RingSpec& R, const std::vector<Poly>& x, const std::vector<Poly>& y, int e) {
  if (y.empty()) return true;
  std::vector<Poly> xy = x;
  xy.insert(xy.end(), y.begin(), y.end());
  GabberTruncation Tx = gabber_truncation(R, x, e);
  GabberTruncation Txy = gabber_truncation(R, xy, e);
  const RingPtr& A = Tx.ring.ring;
  const RingPtr& B = Txy.ring.ring;
  const int m = static_cast<int>(y.size());
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= R.ring->p();

  std::vector<std::string> tnames;
  for (int j = 0; j < m; ++j) tnames.push_back("t" + std::to_string(j + 1));
  RingPtr C = extend_ring(A, tnames);
  std::vector<Poly> crels;
  for (auto& f : Tx.ring.relations) crels.push_back(up(f, C));
  for (int j = 0; j < m; ++j) crels.push_back(Poly::var(C, A->nvars() + j).pow(q));

  // R^x_e -> R^{xy}_e by variable name.
  std::vector<Poly> incl;
  for (auto& v : A->vars()) incl.push_back(Poly::var(B, v));
  GraphIdeal gx(Tx.pi);
  std::vector<Poly> imgs = incl;
  for (int j = 0; j < m; ++j) {
    auto g = gx.preimage(y[j]);
    if (!g) return false;
    Poly Y = e == 0 ? substitute(y[j], B, std::vector<Poly>(incl.begin(), incl.begin() + R.ring->nvars()))
                    : Poly::var(B, gabber_var(static_cast<int>(x.size()) + j, e));
    imgs.push_back(Y - substitute(*g, B, incl));
  }
  RingMap psi(RingSpec{C, crels}, Txy.ring, imgs);
  return GraphIdeal(psi).surjective() && elimination_kernel(psi) == Ideal(C, crels);
}

}  // namespace art
