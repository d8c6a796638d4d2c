#include "art/shriek.hpp"

#include <algorithm>

namespace art {

namespace {

int parity_sign(long k) { return (k % 2 != 0) ? -1 : 1; }

std::vector<Poly> concat(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Poly> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<Poly> substitute_all(const std::vector<Poly>& fs, const RingPtr& T, const std::vector<Poly>& images) {
  std::vector<Poly> out;
  for (auto& f : fs) out.push_back(substitute(f, T, images));
  return out;
}

Module map_module(const Module& M, const RingPtr& T, const std::vector<Poly>& images) {
  auto mv = [&](const std::vector<PVec>& vs) {
    std::vector<PVec> out;
    for (auto& v : vs) out.push_back(substitute_all(v, T, images));
    return out;
  };
  return Module(T, M.ambient(), mv(M.gens()), mv(M.rels()));
}

// Underlying complex over the target ring with the modulus dropped.
Complex strip(const Complex& C) {
  std::vector<int> ranks;
  std::vector<Matrix> d;
  for (int k = C.lo(); k <= C.hi(); ++k) ranks.push_back(C.rank(k));
  for (int k = C.lo(); k < C.hi(); ++k) d.push_back(C.diff(k));
  return Complex(C.ring(), C.lo(), ranks, d);
}

bool same_complex(const Complex& a, const Complex& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi()) return false;
  for (int k = a.lo(); k <= a.hi(); ++k)
    if (a.rank(k) != b.rank(k)) return false;
  for (int k = a.lo(); k < a.hi(); ++k)
    if (!(a.diff(k) == b.diff(k))) return false;
  return true;
}

std::vector<Poly> diagonal(const RingPtr& S, const RingPtr& big, int copies) {
  std::vector<Poly> out;
  for (int c = 1; c < copies; ++c) {
    auto a = copy_images(S, big, c), b = copy_images(S, big, 0);
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  }
  return out;
}

std::vector<Poly> collapse_images(const RingPtr& S, int copies) {
  std::vector<Poly> out;
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < S->nvars(); ++i) out.push_back(Poly::var(S, i));
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

std::vector<int> carried_support(const RingSpec& A, const Complex& M, int cap) {
  if (A.relations.empty()) return M.cohomology_support();
  return rhom_to_module(Module::free(A.ring, 1, A.relations), M, cap).cohomology_support();
}

}  // namespace

// ---- enveloping ring --------------------------------------------------------------------------

RingPtr multiple_ring(const RingPtr& S, int copies) {
  std::vector<std::string> names;
  for (int c = 0; c < copies; ++c)
    for (auto& v : S->vars()) names.push_back(v + std::string(c, '\''));
  return Ring::make(S->p(), names);
}

std::vector<Poly> copy_images(const RingPtr& S, const RingPtr& big, int copy) {
  std::vector<Poly> out;
  for (int i = 0; i < S->nvars(); ++i) out.push_back(Poly::var(big, copy * S->nvars() + i));
  return out;
}

bool EnvelopingRing::verified() const {
  const RingPtr& S = A.ring;
  Ideal IA(S, A.relations);
  for (int i = 0; i < S->nvars(); ++i) {
    Poly x = Poly::var(S, i);
    if (!IA.contains(mult.apply(left[i]) - x) || !IA.contains(mult.apply(right[i]) - x)) return false;
  }
  return elimination_kernel(mult) == Ideal(AxA, concat(relations, diag));
}

EnvelopingRing enveloping_ring(const RingSpec& A) {
  const RingPtr& S = A.ring;
  EnvelopingRing E{A, multiple_ring(S, 2), {}, {}, {}, {}, RingMap(A, A, collapse_images(S, 1))};
  E.left = copy_images(S, E.AxA, 0);
  E.right = copy_images(S, E.AxA, 1);
  E.relations = concat(substitute_all(A.relations, E.AxA, E.left), substitute_all(A.relations, E.AxA, E.right));
  E.diag = diagonal(S, E.AxA, 2);
  E.mult = RingMap(RingSpec{E.AxA, E.relations}, A, collapse_images(S, 2));
  return E;
}

Module external_tensor(const EnvelopingRing& E, const Module& M, const Module& N) {
  Module T = tensor_module(map_module(M, E.AxA, E.left), map_module(N, E.AxA, E.right));
  std::vector<PVec> rels = T.rels();
  for (auto& f : E.relations)
    for (int i = 0; i < T.ambient(); ++i) {
      PVec v = zero_vec(E.AxA, T.ambient());
      v[i] = f;
      rels.push_back(v);
    }
  return Module(E.AxA, T.ambient(), T.gens(), rels);
}

Complex external_tensor(const EnvelopingRing& E, const Complex& M, const Complex& N) {
  return tensor_complex(M.map_ring(E.AxA, E.left), N.map_ring(E.AxA, E.right));
}

// ---- the product ------------------------------------------------------------------------------

ShriekProduct shriek_tensor(const RingSpec& A, const Complex& M, const Complex& N, int length_cap) {
  const RingPtr& S = A.ring;
  ShriekProduct out{enveloping_ring(A), {}, {}, {}, false};
  const EnvelopingRing& E = out.env;
  Complex PA = resolution_complex(Module::free(S, 1, A.relations), length_cap);
  out.resolution = tensor_complex(koszul_complex(E.AxA, E.diag), PA.map_ring(E.AxA, E.left));
  out.complex = hom_complex(out.resolution, external_tensor(E, M, N));
  out.support = out.complex.cohomology_support();
  if (out.support.size() > static_cast<size_t>(Budget::degree()))
    throw Error("DegreeBudgetExceeded", "shriek product cohomology exceeds the degree budget");
  auto sm = carried_support(A, M, length_cap), sn = carried_support(A, N, length_cap);
  out.within_bound = true;
  if (!sm.empty() && !sn.empty() && !out.support.empty()) {
    const int dim2 = 2 * S->nvars();
    const int lo = sm.front() + sn.front() - dim2, hi = sm.back() + sn.back() + dim2;
    out.within_bound = out.support.front() >= lo && out.support.back() <= hi;
  }
  return out;
}

Complex omega_carrier(const RingSpec& A) { return Complex::single(A.ring, 1, -A.ring->nvars()); }

UnitReport verify_unit(const RingSpec& A, const Complex& M, int length_cap) {
  const RingPtr& S = A.ring;
  RingPtr PP = multiple_ring(S, 2);
  std::map<std::string, Poly> lifts;
  for (int i = 0; i < S->nvars(); ++i) lifts[PP->vars()[S->nvars() + i]] = Poly::var(S, i);
  Complex PA = resolution_complex(Module::free(S, 1, A.relations), length_cap);
  UnitReport r;
  r.map = koszul_extension(S, PA, M, PP, lifts);
  r.iso = r.map.quasi_iso;
  r.source_support = carried_support(A, M, length_cap);
  r.target_support = r.map.target.cohomology_support();
  return r;
}

// ---- symmetry and associativity -----------------------------------------------------------------

SymmetryReport verify_symmetry(const RingPtr& S, const Complex& M, const Complex& N) {
  EnvelopingRing E = enveloping_ring(RingSpec::poly(S));
  const RingPtr& PP = E.AxA;
  Complex Ku = koszul_complex(PP, E.diag);
  std::vector<Poly> minus;
  for (auto& f : E.diag) minus.push_back(-f);
  Complex Kmu = koszul_complex(PP, minus);
  // kappa: K(u) -> K(-u), e_J |-> (-1)^{|J|} e_J
  std::map<int, Matrix> kap;
  for (int k = Ku.lo(); k <= Ku.hi(); ++k) kap[k] = Matrix::identity(PP, Ku.rank(k)).scale(Poly::constant(PP, parity_sign(k)));
  ChainMap kappa(Ku, Kmu, kap);
  // the variable swap carries Hom(K(u), M(x) (x) N(x')) onto Hom(K(-u), M(x') (x) N(x))
  ChainMap sw = tensor_swap(M.map_ring(PP, E.right), N.map_ring(PP, E.left));
  SymmetryReport r;
  r.map = hom_map(kappa, sw);
  r.quasi_iso = r.map.quasi_iso();
  return r;
}

AssociativityReport verify_associativity(const RingPtr& S, const Complex& M, const Complex& N, const Complex& K) {
  const int n = S->nvars();
  RingPtr PP = multiple_ring(S, 2), PPP = multiple_ring(S, 3);
  auto u = diagonal(S, PP, 2), u2 = diagonal(S, PPP, 3);
  AssociativityReport r;

  Complex X3 = tensor_complex(tensor_complex(M.map_ring(PPP, copy_images(S, PPP, 0)), N.map_ring(PPP, copy_images(S, PPP, 1))),
                              K.map_ring(PPP, copy_images(S, PPP, 2)));
  FliReport tri = fli_eta(RingSpec::poly(PPP), u2, X3);
  r.triple_eta_iso = tri.quasi_iso;
  r.triple_support = tri.support;

  Complex X2 = tensor_complex(M.map_ring(PP, copy_images(S, PP, 0)), N.map_ring(PP, copy_images(S, PP, 1)));
  FliReport inner = fli_eta(RingSpec::poly(PP), u, X2);
  r.inner_eta_iso = inner.quasi_iso;
  Complex model = tensor_complex(M, N).shift(-n);
  bool same = same_complex(strip(inner.target.map_ring(S, collapse_images(S, 2))), model);

  Complex Y = tensor_complex(model.map_ring(PP, copy_images(S, PP, 0)), K.map_ring(PP, copy_images(S, PP, 1)));
  FliReport outer = fli_eta(RingSpec::poly(PP), u, Y);
  r.outer_eta_iso = outer.quasi_iso;
  r.iterated_support = outer.support;
  same = same && same_complex(strip(outer.target.map_ring(S, collapse_images(S, 2))),
                              strip(tri.target.map_ring(S, collapse_images(S, 3))));
  r.same_model = same;
  return r;
}

// ---- exterior products of Hom ---------------------------------------------------------------------

ChainMap exterior_hom_map(const EnvelopingRing& E, const Complex& X, const Complex& Y, const Complex& X2,
                          const Complex& Y2) {
  const RingPtr& T = E.AxA;
  Complex Xl = X.map_ring(T, E.left), Yl = Y.map_ring(T, E.left);
  Complex X2r = X2.map_ring(T, E.right), Y2r = Y2.map_ring(T, E.right);
  Complex H1 = hom_complex(Xl, Yl), H2 = hom_complex(X2r, Y2r);
  Complex src = tensor_complex(H1, H2);
  Complex XX = tensor_complex(Xl, X2r), YY = tensor_complex(Yl, Y2r);
  Complex tgt = hom_complex(XX, YY);
  std::map<int, Matrix> f;
  for (int N = src.lo(); N <= src.hi(); ++N) {
    Matrix m(T, tgt.rank(N), src.rank(N));
    auto TL = tensor_layout(H1, H2, N);
    auto HT = hom_layout(XX, YY, N);
    for (auto& tb : TL) {
      const int a = tb.p, b = N - a;
      auto L1 = hom_layout(Xl, Yl, a), L2 = hom_layout(X2r, Y2r, b);
      for (auto& hp : L1)
        for (auto& hq : L2) {
          const HomBlock* out = hom_block(HT, hp.p + hq.p);
          if (!out) continue;
          auto SL = tensor_layout(Xl, X2r, hp.p + hq.p);
          auto RL = tensor_layout(Yl, Y2r, hp.p + hq.p + N);
          const TensorBlock* sb = tensor_block(SL, hp.p);
          const TensorBlock* rb = tensor_block(RL, hp.p + a);
          if (!sb || !rb) continue;
          const Poly sign = Poly::constant(T, parity_sign(static_cast<long>(b) * hp.p));
          for (int j = 0; j < hp.cols; ++j)
            for (int i = 0; i < hp.rows; ++i)
              for (int l = 0; l < hq.cols; ++l)
                for (int k = 0; k < hq.rows; ++k) {
                  const int alpha = hp.offset + j * hp.rows + i, beta = hq.offset + l * hq.rows + k;
                  const int col = sb->offset + j * sb->cols + l, row = rb->offset + i * rb->cols + k;
                  m.at(out->offset + col * out->rows + row, tb.offset + alpha * tb.cols + beta) = sign;
                }
        }
    }
    f[N] = m;
  }
  return ChainMap(src, tgt, f);
}

// ---- Frobenius ------------------------------------------------------------------------------------

FrobeniusMonoidality frobenius_monoidality(const RingPtr& S) {
  const int n = S->nvars();
  RingSpec A = RingSpec::poly(S);
  FrobeniusMonoidality r;
  Complex omega = omega_carrier(A);
  r.tau_iso = verify_unit(A, omega).iso;
  std::vector<Poly> xs;
  for (int i = 0; i < n; ++i) xs.push_back(Poly::var(S, i));
  r.trace_free = pbasis_trace_generator(A, xs).free_generator;
  // omega (x)^! omega modelled over S through eta
  RingPtr PP = multiple_ring(S, 2);
  Complex X2 = tensor_complex(omega.map_ring(PP, copy_images(S, PP, 0)), omega.map_ring(PP, copy_images(S, PP, 1)));
  FliReport inner = fli_eta(RingSpec::poly(PP), diagonal(S, PP, 2), X2);
  Complex model = strip(inner.target.map_ring(S, collapse_images(S, 2)));
  Complex lhs = upper_shriek_frobenius(A, model);
  Complex single = upper_shriek_frobenius(A, omega);
  bool ok = inner.quasi_iso && lhs.cohomology_support() == single.cohomology_support();
  if (ok)
    for (int k : single.cohomology_support()) {
      Module a = lhs.cohomology(k), b = single.cohomology(k);
      if (!find_isomorphism(a, b)) ok = false;
    }
  r.pullbacks_iso = ok;
  return r;
}

}  // namespace art
