#include "art/duality.hpp"

#include <algorithm>
#include <map>

namespace art {

namespace {

int parity_sign(long k) { return (k % 2 != 0) ? -1 : 1; }

Poly signed_one(const RingPtr& R, int s) { return Poly::constant(R, s); }

std::vector<Poly> concat(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Poly> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

const HomBlock* hom_block(const std::vector<HomBlock>& L, int p) {
  for (auto& b : L)
    if (b.p == p) return &b;
  return nullptr;
}

const TensorBlock* tensor_block(const std::vector<TensorBlock>& L, int p) {
  for (auto& b : L)
    if (b.p == p) return &b;
  return nullptr;
}

std::vector<PVec> modulus_rels(const RingPtr& R, int rank, const std::vector<Poly>& modulus) {
  std::vector<PVec> out;
  for (auto& f : modulus)
    for (int i = 0; i < rank; ++i) {
      PVec v = zero_vec(R, rank);
      v[i] = f;
      out.push_back(v);
    }
  return out;
}

PVec gradient(const RingPtr& P, const Poly& f) {
  PVec v;
  for (int i = 0; i < P->nvars(); ++i) v.push_back(f.diff(i));
  return v;
}

void require_regular(const Complex& K) {
  for (int deg : K.cohomology_support())
    if (deg < 0) throw Error("NotRegularSequence", "Koszul complex has cohomology in degree " + std::to_string(deg));
}

Complex koszul_over(const RingSpec& S, const std::vector<Poly>& r) {
  Complex K = koszul_complex(S.ring, r);
  return S.relations.empty() ? K : K.with_modulus(S.relations);
}

// Images of the variables of S inside T, matched by name.
std::vector<Poly> inclusion_images(const RingPtr& S, const RingPtr& T) {
  std::vector<Poly> out;
  for (auto& v : S->vars()) {
    if (T->var_index(v) < 0) throw Error("InvalidArgument", "variable " + v + " missing from the larger ring");
    out.push_back(Poly::var(T, v));
  }
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return parity_sign(inv);
}

std::vector<long> cyclic_hilbert(const Module& H, int dmax) {
  Module t = H.trim();
  if (t.ngens() != 1) return {};
  return hilbert_function(t.presentation().with_degrees({0}), dmax);
}

Module conormal_module(const RingSpec& S, const std::vector<Poly>& r) {
  const RingPtr& P = S.ring;
  const int c = static_cast<int>(r.size());
  std::vector<PVec> rg, irels;
  for (auto& f : r) rg.push_back({f});
  for (auto& f : S.relations) irels.push_back({f});
  std::vector<PVec> rels = c ? syzygies(P, 1, rg, irels) : std::vector<PVec>{};
  auto extra = modulus_rels(P, c, concat(S.relations, r));
  rels.insert(rels.end(), extra.begin(), extra.end());
  std::vector<PVec> gens;
  for (int i = 0; i < c; ++i) gens.push_back(unit_vec(P, c, i));
  return Module(P, c, gens, rels);
}

}  // namespace

// ---- comparison of resolutions ------------------------------------------------------------

ChainMap lift_comparison(const Complex& F, const Complex& G, const Matrix& f0) {
  const RingPtr& R = G.ring();
  std::map<int, Matrix> f;
  f[0] = f0;
  for (int k = -1; k >= F.lo(); --k) {
    Matrix t = f[k + 1] * F.diff(k);
    Matrix dG = G.diff(k);
    const int rows = G.rank(k + 1);
    auto rels = modulus_rels(R, rows, G.modulus());
    auto gens = dG.columns();
    std::vector<PVec> cols;
    for (int j = 0; j < t.cols; ++j) {
      PVec v = t.column(j);
      if (gens.empty()) {
        if (!Module(R, rows, {}, rels).is_zero_element(v))
          throw Error("NotWellDefined", "comparison map does not lift");
        cols.push_back({});
        continue;
      }
      auto a = lift(R, rows, v, gens, rels);
      if (!a) throw Error("NotWellDefined", "comparison map does not lift");
      cols.push_back(*a);
    }
    Matrix m(R, G.rank(k), F.rank(k));
    for (int j = 0; j < m.cols; ++j)
      for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
    f[k] = m;
  }
  return ChainMap(F, G, f);
}

// ---- fundamental local isomorphism ----------------------------------------------------------

FliReport fli_eta(const RingSpec& S, const std::vector<Poly>& r, const Complex& M) {
  const int c = static_cast<int>(r.size());
  FliReport rep;
  rep.r = r;
  rep.koszul = koszul_over(S, r);
  require_regular(rep.koszul);
  rep.rhom = hom_complex(rep.koszul, M);
  rep.target = M.with_modulus(concat(S.relations, r)).shift(-c);
  std::map<int, Matrix> f;
  for (int n = rep.rhom.lo(); n <= rep.rhom.hi(); ++n) {
    Matrix m(S.ring, rep.target.rank(n), rep.rhom.rank(n));
    auto L = hom_layout(rep.koszul, M, n);
    if (const HomBlock* b = hom_block(L, -c)) {
      const int eps = parity_sign(static_cast<long>(c) * n);
      for (int i = 0; i < b->rows; ++i) m.at(i, b->offset + i) = signed_one(S.ring, eps);
    }
    f[n] = m;
  }
  rep.eta = ChainMap(rep.rhom, rep.target, f);
  rep.quasi_iso = rep.eta.quasi_iso();
  rep.support = rep.rhom.cohomology_support();
  return rep;
}

FliModuleReport fli_eta_module(const RingSpec& S, const std::vector<Poly>& r) {
  const RingPtr& P = S.ring;
  const int c = static_cast<int>(r.size());
  FliReport rep = fli_eta(S, r, Complex::single(P, 1, 0, S.relations));
  Module Hc = rep.rhom.cohomology(c);
  Module top = exterior_power(conormal_module(S, r), c);
  HomModule hom = hom_module(top, Module::free(P, 1, concat(S.relations, r)));
  auto L = hom_layout(rep.koszul, Complex::single(P, 1, 0, S.relations), c);
  const HomBlock* b = hom_block(L, -c);
  const int eps = parity_sign(static_cast<long>(c) * c);
  std::vector<PVec> imgs;
  for (auto& g : Hc.gens()) {
    Matrix m(P, hom.l, hom.k);
    for (int j = 0; j < hom.k; ++j) m.at(0, j) = g[b->offset].scale(eps == 1 ? 1 : P->p() - 1);
    imgs.push_back(hom.from_matrix(m));
  }
  FliModuleReport out{ModuleMap(Hc, hom.hom, imgs), false};
  out.iso = out.map.is_iso();
  return out;
}

ExtCrossCheck ext_cross_check(const RingSpec& S, const std::vector<Poly>& r, int hilbert_degree) {
  const RingPtr& P = S.ring;
  const int c = static_cast<int>(r.size());
  ExtCrossCheck x;
  Complex unit = Complex::single(P, 1, 0, S.relations);
  FliReport rep = fli_eta(S, r, unit);
  x.koszul_support = rep.support;
  x.eta_iso = rep.quasi_iso;
  Complex F = resolution_complex(Module::free(P, 1, concat(S.relations, r)), kDefaultLengthCap);
  Complex E = hom_complex(F, unit);
  x.engine_support = E.cohomology_support();
  ChainMap cmp = lift_comparison(rep.koszul, F, Matrix::identity(P, 1));
  x.comparison_quasi_iso = hom_map(cmp, ChainMap::identity(unit)).quasi_iso();
  x.koszul_hilbert = cyclic_hilbert(rep.rhom.cohomology(c), hilbert_degree);
  x.engine_hilbert = cyclic_hilbert(E.cohomology(c), hilbert_degree);
  x.module_iso = fli_eta_module(S, r).iso;
  return x;
}

// ---- upper shriek -----------------------------------------------------------------------------

Complex upper_shriek_finite(const Module& S_over_R, const Complex& T, int length_cap) {
  return rhom_to_module(S_over_R, T, length_cap);
}

Complex upper_shriek_surjection(const RingSpec& R, const std::vector<Poly>& J, const Complex& T, int length_cap) {
  return upper_shriek_finite(Module::free(R.ring, 1, concat(R.relations, J)), T, length_cap);
}

Complex upper_shriek_frobenius(const RingSpec& R, const Complex& T, int length_cap) {
  return upper_shriek_finite(frobenius_pushforward(R, 1).module, T, length_cap);
}

RingPtr adjoin_variables(const RingPtr& R, const std::vector<std::string>& vars) {
  std::vector<std::string> all = R->vars();
  all.insert(all.end(), vars.begin(), vars.end());
  return Ring::make(R->p(), all);
}

Complex upper_shriek_smooth(const RingPtr& R, const std::vector<std::string>& new_vars, const Complex& T) {
  RingPtr Q = adjoin_variables(R, new_vars);
  Complex L = Complex::single(Q, 1, -static_cast<int>(new_vars.size()));
  return tensor_complex(L, T.map_ring(Q, inclusion_images(R, Q)));
}

// ---- xi -----------------------------------------------------------------------------------------

int smooth_sign(int n, int d) { return parity_sign(static_cast<long>(n) * d); }

XiIso xi_smooth(const RingPtr& R, const std::vector<std::string>& new_vars) {
  const int n = R->nvars(), d = static_cast<int>(new_vars.size());
  RingPtr Q = adjoin_variables(R, new_vars);
  Complex src = Complex::single(Q, 1, -(n + d));
  Complex tgt = upper_shriek_smooth(R, new_vars, Complex::single(R, 1, -n));
  Matrix m(Q, 1, 1);
  m.at(0, 0) = signed_one(Q, smooth_sign(n, d));
  XiIso xi;
  xi.map = ChainMap(src, tgt, {{-(n + d), m}});
  xi.iso = xi.map.quasi_iso();
  xi.coefficient = m.at(0, 0);
  std::string dx, dy;
  for (int i = 0; i < n; ++i) dx += (i ? "^d" : "d") + R->vars()[i];
  for (int j = 0; j < d; ++j) dy += (j ? "^d" : "d") + new_vars[j];
  if (dx.empty()) dx = "1";
  if (dy.empty()) dy = "1";
  xi.description = dx + "^" + dy + " |-> " + (m.at(0, 0).constant_term() == 1 ? "" : "-") + dy + " (x) " + dx;
  return xi;
}

Poly lci_coefficient(const RingSpec& T, const std::vector<Poly>& r, const std::vector<Poly>& z) {
  const RingPtr& P = T.ring;
  const int N = P->nvars();
  if (r.size() + z.size() != static_cast<size_t>(N))
    throw Error("InvalidArgument", "relations and p-basis must account for every variable");
  Form w = Form::unit(P, N);
  for (size_t i = r.size(); i-- > 0;) w = w.wedge(Form::one(gradient(P, r[i])));
  for (auto& f : z) w = w.wedge(Form::one(gradient(P, f)));
  return Ideal(P, concat(T.relations, r)).reduce(w.c[0]);
}

XiIso xi_lci(const RingSpec& T, const std::vector<Poly>& r, const std::vector<Poly>& z) {
  const RingPtr& P = T.ring;
  const int N = P->nvars(), c = static_cast<int>(r.size()), n = static_cast<int>(z.size());
  ConormalSequence cs = conormal_sequence(T, r, z);
  if (!cs.certified()) throw Error("SplittingNotFound", "conormal sequence is not certified split exact");
  Complex K = koszul_over(T, r);
  require_regular(K);
  Poly kappa = lci_coefficient(T, r, z);
  Complex omegaT = Complex::single(P, 1, -N, T.relations);
  Complex H = hom_complex(K, omegaT);
  Complex src = Complex::single(P, 1, -n, T.relations);
  Matrix m(P, H.rank(-n), 1);
  const HomBlock* b = nullptr;
  auto L = hom_layout(K, omegaT, -n);
  b = hom_block(L, -c);
  const int eps = parity_sign(static_cast<long>(c) * n);
  m.at(b->offset, 0) = eps == 1 ? kappa : -kappa;
  XiIso xi;
  xi.extra_modulus = r;
  xi.map = ChainMap(src, H, {{-n, m}});
  xi.iso = xi.map.quasi_iso(r);
  xi.coefficient = kappa;
  xi.description = "alpha |-> r^* (x) (" + kappa.str() + ") dt";
  return xi;
}

// ---- finite maps: Bezoutian residue ---------------------------------------------------------------

std::vector<Poly> FiniteXi::expand(const Poly& s) const {
  const int m = static_cast<int>(ymonos.size());
  Poly red = relations_ty.reduce(s.embed(Ty, to_ty));
  std::vector<PolyBuilder> out(m, PolyBuilder(T));
  for (auto& t : red.terms()) {
    Mono y, x;
    for (int j = 0; j < ny; ++j) {
      y.e[j] = t.m.e[j];
      y.deg = static_cast<std::uint16_t>(y.deg + y.e[j]);
    }
    for (int i = 0; i < nx; ++i) {
      x.e[i] = t.m.e[ny + i];
      x.deg = static_cast<std::uint16_t>(x.deg + x.e[i]);
    }
    auto it = std::find(ymonos.begin(), ymonos.end(), y);
    if (it == ymonos.end()) throw Error("NotFinite", "normal form leaves the monomial basis");
    out[it - ymonos.begin()].add(x, t.c);
  }
  std::vector<Poly> res;
  for (auto& b : out) res.push_back(b.build());
  return res;
}

Poly FiniteXi::tau(const Poly& s) const {
  auto c = expand(s);
  Poly out(T);
  for (size_t k = 0; k < c.size(); ++k) out = out + c[k] * tau_basis[k];
  return out;
}

Poly FiniteXi::evaluate(const Poly& s) const {
  Poly v = tau(s * kappa);
  return sign == 1 ? v : -v;
}

FiniteXi xi_finite_type(const RingPtr& T, int nx, const std::vector<Poly>& r, const std::vector<Poly>& z) {
  const int N = T->nvars(), ny = N - nx;
  if (nx < 0 || ny < 0 || static_cast<int>(r.size()) != ny)
    throw Error("InvalidArgument", "finite presentation needs as many relations as new variables");
  if (static_cast<int>(z.size()) != nx) throw Error("InvalidArgument", "p-basis of the target has the wrong size");
  FiniteXi X;
  X.T = T;
  X.r = r;
  X.z = z;
  X.nx = nx;
  X.ny = ny;

  // y block first so that normal forms are R-linear combinations of y-monomials
  std::vector<std::string> names;
  for (int j = 0; j < ny; ++j) names.push_back(T->vars()[nx + j]);
  for (int i = 0; i < nx; ++i) names.push_back(T->vars()[i]);
  X.Ty = Ring::make(T->p(), names, MonoOrder::blocked(ny));
  X.to_ty.resize(N);
  for (int i = 0; i < nx; ++i) X.to_ty[i] = ny + i;
  for (int j = 0; j < ny; ++j) X.to_ty[nx + j] = j;
  std::vector<Poly> rty;
  for (auto& f : r) rty.push_back(f.embed(X.Ty, X.to_ty));
  X.relations_ty = Ideal(X.Ty, rty);
  auto G = X.relations_ty.gb().polys();
  if (X.relations_ty.is_unit()) throw Error("NotFinite", "the target ring is zero");

  std::vector<int> bound(ny, -1);
  std::vector<Mono> leads;
  for (auto& g : G) {
    const Mono& L = g.lead().m;
    for (int i = 0; i < nx; ++i)
      if (L.e[ny + i]) throw Error("NotFinite", "a leading term involves the base variables");
    leads.push_back(L);
    int only = -1, count = 0;
    for (int j = 0; j < ny; ++j)
      if (L.e[j]) {
        only = j;
        ++count;
      }
    if (count == 1 && (bound[only] < 0 || L.e[only] < bound[only])) bound[only] = L.e[only];
  }
  long total = 1;
  for (int j = 0; j < ny; ++j) {
    if (bound[j] < 0) throw Error("NotFinite", "the target is not finite over the source");
    total *= bound[j];
    if (total > Budget::size_cap()) throw Error("SizeCapExceeded", "too many standard monomials");
  }
  // enumerate y-exponents below the bounds, first y slowest
  std::vector<int> e(ny, 0);
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx;
    Mono m;
    for (int j = ny - 1; j >= 0; --j) {
      e[j] = static_cast<int>(rem % bound[j]);
      rem /= bound[j];
      m.e[j] = static_cast<std::uint8_t>(e[j]);
      m.deg = static_cast<std::uint16_t>(m.deg + e[j]);
    }
    bool standard = true;
    for (auto& L : leads)
      if (L.divides(m, X.Ty->nvars())) standard = false;
    if (standard) X.ymonos.push_back(m);
  }
  std::vector<int> from_ty(N);
  for (int i = 0; i < N; ++i) from_ty[X.to_ty[i]] = i;
  for (auto& m : X.ymonos) X.basis.push_back(Poly::monomial(X.Ty, m, 1).embed(T, from_ty));
  const int m = static_cast<int>(X.ymonos.size());

  // Bezoutian in (y, y', x)
  std::vector<std::string> bn;
  for (int j = 0; j < ny; ++j) bn.push_back(T->vars()[nx + j]);
  for (int j = 0; j < ny; ++j) bn.push_back(T->vars()[nx + j] + "'");
  for (int i = 0; i < nx; ++i) bn.push_back(T->vars()[i]);
  RingPtr B = Ring::make(T->p(), bn, MonoOrder::blocked(2 * ny));
  std::vector<int> toB(N), toBp(N);
  for (int i = 0; i < nx; ++i) toB[i] = toBp[i] = 2 * ny + i;
  for (int j = 0; j < ny; ++j) {
    toB[nx + j] = j;
    toBp[nx + j] = ny + j;
  }
  Matrix D(B, ny, ny);
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < ny; ++j) {
      // r_i with y_k -> y'_k for k < j
      std::vector<int> mix = toB;
      for (int k = 0; k < j; ++k) mix[nx + k] = ny + k;
      Poly h = r[i].embed(B, mix);
      PolyBuilder q(B);
      for (auto& t : h.terms()) {
        const int a = t.m.e[j];
        if (a == 0) continue;
        for (int b = 0; b < a; ++b) {
          Mono mm = t.m;
          mm.e[j] = static_cast<std::uint8_t>(b);
          mm.e[ny + j] = static_cast<std::uint8_t>(a - 1 - b);
          mm.deg = static_cast<std::uint16_t>(t.m.deg - 1);
          q.add(mm, t.c);
        }
      }
      D.at(i, j) = q.build();
    }
  Poly delta = ny ? wedge_matrix(D, ny).at(0, 0) : Poly::constant(B, 1);
  std::vector<Poly> both;
  for (auto& f : r) {
    both.push_back(f.embed(B, toB));
    both.push_back(f.embed(B, toBp));
  }
  delta = Ideal(B, both).reduce(delta);
  Matrix C(T, m, m);
  for (auto& t : delta.terms()) {
    Mono y, yp, x;
    for (int j = 0; j < ny; ++j) {
      y.e[j] = t.m.e[j];
      y.deg = static_cast<std::uint16_t>(y.deg + y.e[j]);
      yp.e[j] = t.m.e[ny + j];
      yp.deg = static_cast<std::uint16_t>(yp.deg + yp.e[j]);
    }
    for (int i = 0; i < nx; ++i) {
      x.e[i] = t.m.e[2 * ny + i];
      x.deg = static_cast<std::uint16_t>(x.deg + x.e[i]);
    }
    auto k = std::find(X.ymonos.begin(), X.ymonos.end(), y) - X.ymonos.begin();
    auto l = std::find(X.ymonos.begin(), X.ymonos.end(), yp) - X.ymonos.begin();
    if (k == m || l == m) throw Error("NotFinite", "Bezoutian leaves the monomial basis");
    C.at(static_cast<int>(k), static_cast<int>(l)) = C.at(static_cast<int>(k), static_cast<int>(l)) + Poly::monomial(T, x, t.c);
  }
  Poly det = wedge_matrix(C, m).at(0, 0);
  if (det.is_zero() || !det.is_constant()) throw Error("NotFinite", "the Bezoutian pairing is not perfect");
  const coef dinv = fp_inverse(det.constant_term(), T->p());
  // tau(m_k) = (C^{-1})_{0k} = (-1)^k minor(rows without k, cols without 0) / det
  if (m == 1) {
    X.tau_basis.push_back(Poly::constant(T, dinv));
  } else {
    Matrix minors = wedge_matrix(C, m - 1);
    for (int k = 0; k < m; ++k) {
      Poly v = minors.at(m - 1 - k, m - 1).scale(dinv);
      X.tau_basis.push_back(k % 2 ? -v : v);
    }
  }
  X.kappa = lci_coefficient(RingSpec::poly(T), r, z);
  X.sign = parity_sign(static_cast<long>(ny) * (ny - 1) / 2 + static_cast<long>(nx) * ny);
  for (auto& b : X.basis) X.table.push_back(X.evaluate(b));
  Matrix pair(T, m, m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) pair.at(j, k) = X.evaluate(X.basis[j] * X.basis[k]);
  X.iso = ModuleMap::from_matrix(Module::free(T, m), Module::free(T, m), pair).is_iso();
  return X;
}

// ---- sign bookkeeping ----------------------------------------------------------------------------

KoszulSignReport koszul_sign_check(coef p, int c, int d) {
  std::vector<std::string> xs, ys;
  for (int i = 0; i < c; ++i) xs.push_back("x" + std::to_string(i + 1));
  for (int j = 0; j < d; ++j) ys.push_back("y" + std::to_string(j + 1));
  RingPtr R = Ring::make(p, xs);
  RingPtr Q = adjoin_variables(R, ys);
  std::vector<Poly> rR, rQ, yQ;
  for (int i = 0; i < c; ++i) {
    rR.push_back(Poly::var(R, i));
    rQ.push_back(Poly::var(Q, i));
  }
  for (int j = 0; j < d; ++j) yQ.push_back(Poly::var(Q, c + j));
  // lci first: 1 |-> r^* (x) kappa dx, then dy (x) that
  Poly k1 = lci_coefficient(RingSpec::poly(R), rR, {});
  // smooth first: dy |-> r^* (x) kappa' dx ^ dy, then xi_smooth to dy (x) dx, then move r^* past dy
  Poly k2 = lci_coefficient(RingSpec::poly(Q), rQ, yQ);
  const int s = smooth_sign(c, d), swap = parity_sign(static_cast<long>(c) * d);
  std::vector<int> xpos;
  for (int i = 0; i < c; ++i) xpos.push_back(i);
  Poly k1Q = k1.embed(Q, xpos);
  Poly leg2 = k2.scale(s == 1 ? 1 : p - 1);
  KoszulSignReport rep;
  rep.leg_lci_first = k1Q;
  rep.leg_smooth_first = leg2.scale(swap == 1 ? 1 : p - 1);
  rep.equal_with_sign = rep.leg_smooth_first == k1Q;
  rep.equal_without_sign = leg2 == k1Q;
  return rep;
}

FactorizationReport frobenius_factorizations(coef p) {
  FactorizationReport rep;
  auto A = Ring::make(p, {"x", "y"});
  auto B = Ring::make(p, {"x", "y", "w"});
  const Poly ya = Poly::var(A, 1), yb = Poly::var(B, 1), wb = Poly::var(B, 2), xb = Poly::var(B, 0);
  FiniteXi a = xi_finite_type(A, 1, {ya.pow(p) - Poly::var(A, 0)}, {ya});
  FiniteXi b = xi_finite_type(B, 1, {yb.pow(p) - xb, wb}, {yb});
  FiniteXi c = xi_finite_type(B, 1, {yb.pow(p) - xb, wb - yb - xb}, {wb});
  rep.all_iso = a.iso && b.iso && c.iso;
  rep.matrix_equal = true;
  for (int j = 0; j < 2 * static_cast<int>(p); ++j) {
    std::string va = a.evaluate(ya.pow(j)).str();
    std::string vb = b.evaluate(yb.pow(j)).str();
    std::string vc = c.evaluate((wb - xb).pow(j)).str();
    rep.direct.push_back(va);
    rep.through_section.push_back(vc);
    rep.matrix_equal = rep.matrix_equal && va == vb && vb == vc;
  }
  return rep;
}

// ---- dualizing complexes ------------------------------------------------------------------------

DualizingComplex canonical_dualizing(const RingPtr& S, const std::vector<Poly>& kernel, int length_cap) {
  DualizingComplex D;
  D.S = S;
  D.kernel = kernel;
  D.resolution = resolution_complex(Module::free(S, 1, kernel), length_cap);
  D.complex = hom_complex(D.resolution, Complex::single(S, 1, -S->nvars()));
  D.support = D.complex.cohomology_support();
  return D;
}

DualizingComplex canonical_dualizing(const RingSpec& A, int length_cap) {
  return canonical_dualizing(A.ring, A.relations, length_cap);
}

KoszulExtension koszul_extension(const RingPtr& S, const Complex& resolution, const Complex& M, const RingPtr& T,
                                 const std::map<std::string, Poly>& lifts) {
  auto images = inclusion_images(S, T);
  std::vector<int> order;
  for (auto& v : S->vars()) order.push_back(T->var_index(v));
  KoszulExtension X;
  for (int i = 0; i < T->nvars(); ++i) {
    const std::string& v = T->vars()[i];
    if (S->var_index(v) >= 0) continue;
    auto it = lifts.find(v);
    if (it == lifts.end()) throw Error("InvalidArgument", "no lift given for " + v);
    X.u.push_back(Poly::var(T, i) - substitute(it->second, T, images));
    order.push_back(i);
  }
  const int d = static_cast<int>(X.u.size());
  const int sigma = permutation_sign(order);
  Complex PT = resolution.map_ring(T, images);
  Complex MT = M.map_ring(T, images);
  Complex ML = tensor_complex(MT, Complex::single(T, 1, -d));
  Complex K = koszul_complex(T, X.u);
  X.source = hom_complex(PT, MT);
  X.resolution = tensor_complex(K, PT);
  X.target = hom_complex(X.resolution, ML);
  std::map<int, Matrix> f;
  for (int n = X.source.lo(); n <= X.source.hi(); ++n) {
    Matrix m(T, X.target.rank(n), X.source.rank(n));
    auto Ls = hom_layout(PT, MT, n);
    auto Lt = hom_layout(X.resolution, ML, n);
    for (auto& sb : Ls) {
      // block P^b -> M^{b+n} goes to (K (x) P)^{b-d} -> (M (x) L)^{b+n-d}
      const int b = sb.p, s = b - d;
      const HomBlock* tb = hom_block(Lt, s);
      if (!tb) continue;
      auto KL = tensor_layout(K, PT, s);
      auto ML_l = tensor_layout(MT, Complex::single(T, 1, -d), s + n);
      const TensorBlock* kb = tensor_block(KL, -d);
      const TensorBlock* mb = tensor_block(ML_l, b + n);
      if (!kb || !mb) continue;
      const Poly sign = signed_one(T, sigma * parity_sign(static_cast<long>(d) * b));
      for (int j = 0; j < sb.cols; ++j)
        for (int i = 0; i < sb.rows; ++i) {
          const int col = kb->offset + j, row = mb->offset + i;
          m.at(tb->offset + col * tb->rows + row, sb.offset + j * sb.rows + i) = sign;
        }
    }
    f[n] = m;
  }
  X.map = ChainMap(X.source, X.target, f);
  X.quasi_iso = X.map.quasi_iso(X.u);
  return X;
}

KoszulExtension koszul_extension(const RingPtr& S, const std::vector<Poly>& kernel, const RingPtr& T,
                                 const std::map<std::string, Poly>& lifts, int length_cap) {
  Complex P = resolution_complex(Module::free(S, 1, kernel), length_cap);
  return koszul_extension(S, P, Complex::single(S, 1, -S->nvars()), T, lifts);
}

PresentationComparison compare_presentations(const RingPtr& S1, const std::vector<Poly>& I1,
                                             const std::map<std::string, Poly>& lifts1, const RingPtr& S2,
                                             const std::vector<Poly>& I2, const std::map<std::string, Poly>& lifts2,
                                             const RingPtr& T, int length_cap) {
  PresentationComparison pc;
  pc.first = koszul_extension(S1, I1, T, lifts1, length_cap);
  pc.second = koszul_extension(S2, I2, T, lifts2, length_cap);
  ChainMap c = lift_comparison(pc.first.resolution, pc.second.resolution, Matrix::identity(T, 1));
  pc.bridge = hom_map(c, ChainMap::identity(Complex::single(T, 1, -T->nvars())));
  pc.bridge_quasi_iso = pc.bridge.quasi_iso();
  pc.first_support = pc.first.target.cohomology_support();
  pc.second_support = pc.second.target.cohomology_support();
  return pc;
}

// ---- Frobenius duality ----------------------------------------------------------------------------

FrobeniusDualityReport verify_frobenius_duality(const RingSpec& A, int length_cap) {
  const RingPtr& S = A.ring;
  const int n = S->nvars();
  const coef p = S->p();
  DualizingComplex D = canonical_dualizing(A, length_cap);
  if (D.support.size() != 1) throw Error("NotCohenMacaulay", "dualizing complex is not concentrated in one degree");
  FrobeniusDualityReport rep;
  rep.degree = D.support[0];
  const int c = rep.degree + n;
  rep.omega = D.complex.cohomology(rep.degree);
  const Complex& F = D.resolution;
  if (D.complex.rank(rep.degree) != F.rank(-c)) throw Error("InvalidArgument", "unexpected dualizing layout");

  // Frobenius-semilinear lift of the identity of A to the resolution
  Matrix lam = Matrix::identity(S, 1);
  for (int i = 1; i <= c; ++i) {
    Matrix d = F.diff(-i);
    auto gens = d.columns();
    std::vector<PVec> cols;
    for (int j = 0; j < d.cols; ++j) {
      PVec t = zero_vec(S, d.rows);
      for (int k = 0; k < d.rows; ++k) t = vec_add(t, vec_scale(lam.column(k), d.at(k, j).pow(p)));
      auto a = lift(S, d.rows, t, gens);
      if (!a) throw Error("NotWellDefined", "Frobenius does not lift to the resolution");
      cols.push_back(*a);
    }
    lam = Matrix::from_columns(S, d.cols, cols);
  }

  // Phi on P from xi of Frobenius factored through P[y]/(y^p - x)
  std::vector<std::string> ys;
  for (int i = 0; i < n; ++i) {
    std::string y = "Fy" + std::to_string(i + 1);
    while (S->var_index(y) >= 0) y += "'";
    ys.push_back(y);
  }
  RingPtr T = adjoin_variables(S, ys);
  std::vector<Poly> rel, zs;
  for (int i = 0; i < n; ++i) {
    rel.push_back(Poly::var(T, n + i).pow(p) - Poly::var(T, i));
    zs.push_back(Poly::var(T, n + i));
  }
  FiniteXi fx = xi_finite_type(T, n, rel, zs);
  std::vector<Poly> back;
  for (int i = 0; i < n; ++i) back.push_back(Poly::var(S, i));
  for (int i = 0; i < n; ++i) back.push_back(Poly::constant(S, 0));
  auto restricted = restricted_monomials(n, p);
  for (auto& a : restricted) {
    Mono y;
    for (int i = 0; i < n; ++i) y.e[n + i] = a.e[i];
    y.deg = a.deg;
    rep.trace_table.push_back(substitute(fx.evaluate(Poly::monomial(T, y, 1)), S, back));
  }
  FrobPushforward FA = frobenius_pushforward(A, 1);
  auto phi = [&](const Poly& f) {
    PVec slots = FA.decompose(f);
    Poly out(S);
    for (size_t a = 0; a < slots.size(); ++a) out = out + slots[a] * rep.trace_table[a];
    return out;
  };
  auto trace = [&](const PVec& v) {
    PVec out;
    for (int j = 0; j < lam.cols; ++j) {
      Poly s(S);
      for (int i = 0; i < lam.rows; ++i) s = s + lam.at(i, j) * v[i];
      out.push_back(phi(s));
    }
    return out;
  };

  const Module& W = rep.omega;
  FrobPushforward FW = frobenius_pushforward(W, A, 1);
  HomModule hom = hom_module(FA.module, W);
  std::vector<PVec> imgs;
  const int nb = static_cast<int>(FW.basis.size());
  for (int b = 0; b < nb; ++b)
    for (int k = 0; k < FW.rank; ++k) {
      Matrix m(S, hom.l, hom.k);
      for (int a = 0; a < static_cast<int>(FA.basis.size()); ++a) {
        Poly mono = Poly::monomial(S, FA.basis[a] * FW.basis[b], 1);
        auto co = W.coords(trace(vec_scale(W.gens()[k], mono)));
        if (!co) throw Error("NotWellDefined", "trace leaves the dualizing module");
        for (int i = 0; i < hom.l; ++i) m.at(i, FA.index(a, 0)) = (*co)[i];
      }
      imgs.push_back(hom.from_matrix(m));
    }
  rep.candidate = ModuleMap(FW.module, hom.hom, imgs, false);
  rep.well_defined = rep.candidate.well_defined();
  rep.iso = rep.well_defined && rep.candidate.is_iso();
  return rep;
}

}  // namespace art
