#include "art/differentials.hpp"

#include <algorithm>
#include <sstream>

namespace art {

namespace {

std::vector<PVec> jacobian_rows(const RingPtr& P, const std::vector<Poly>& gs) {
  std::vector<PVec> out;
  for (auto& g : gs) {
    PVec v;
    for (int i = 0; i < P->nvars(); ++i) v.push_back(g.diff(i));
    out.push_back(v);
  }
  return out;
}

PVec grad(const RingPtr& P, const Poly& f) { return jacobian_rows(P, {f})[0]; }

std::vector<Poly> concat(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Poly> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string d_name(const Poly& f) {
  const auto& t = f.terms();
  if (t.size() == 1 && t[0].c == 1 && t[0].m.deg == 1) return "d" + f.str();
  return "d(" + f.str() + ")";
}

}  // namespace

// ---- Kaehler module -------------------------------------------------------------

PVec KahlerModule::d(const Poly& f) const { return grad(ring.ring, f); }

std::string KahlerModule::tag(int i) const { return "d" + ring.ring->vars()[i]; }

KahlerModule kahler(const RingSpec& R) {
  const RingPtr& P = R.ring;
  return {R, Module::cokernel(P, P->nvars(), jacobian_rows(P, R.relations), R.relations)};
}

// ---- forms ------------------------------------------------------------------------

int shuffle_sign(const std::vector<int>& a, const std::vector<int>& b) {
  int inv = 0;
  for (int i : a)
    for (int j : b) {
      if (i == j) return 0;
      if (i > j) ++inv;
    }
  return inv % 2 ? -1 : 1;
}

Form Form::one(const PVec& v) { return {static_cast<int>(v.size()), 1, v}; }

Form Form::unit(const RingPtr& r, int n) { return {n, 0, {Poly::constant(r, 1)}}; }

Form Form::wedge(const Form& o) const {
  if (n != o.n) throw Error("InvalidArgument", "forms on different generator sets");
  const RingPtr& R = c.empty() ? o.c.at(0).ring() : c[0].ring();
  auto A = subsets(n, k), B = subsets(n, o.k), C = subsets(n, k + o.k);
  Form out{n, k + o.k, zero_vec(R, static_cast<int>(C.size()))};
  if (k + o.k > n) return out;
  for (size_t i = 0; i < A.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (size_t j = 0; j < B.size(); ++j) {
      if (o.c[j].is_zero()) continue;
      const int s = shuffle_sign(A[i], B[j]);
      if (s == 0) continue;
      std::vector<int> K = A[i];
      K.insert(K.end(), B[j].begin(), B[j].end());
      std::sort(K.begin(), K.end());
      const size_t idx = std::lower_bound(C.begin(), C.end(), K) - C.begin();
      Poly t = c[i] * o.c[j];
      out.c[idx] = s > 0 ? out.c[idx] + t : out.c[idx] - t;
    }
  }
  return out;
}

Form Form::scale(const Poly& f) const { return {n, k, vec_scale(c, f)}; }

Form Form::operator+(const Form& o) const {
  if (n != o.n || k != o.k) throw Error("InvalidArgument", "adding forms of different shapes");
  return {n, k, vec_add(c, o.c)};
}

Form Form::reduce(const Ideal& I) const {
  Form out = *this;
  for (auto& x : out.c) x = I.reduce(x);
  return out;
}

bool Form::is_zero() const { return vec_is_zero(c); }

std::string Form::str(const std::vector<std::string>& names) const {
  auto S = subsets(n, k);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < S.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c[i].str() << ")";
    for (size_t j = 0; j < S[i].size(); ++j) os << (j ? "^" : "*") << names[S[i][j]];
  }
  return first ? "0" : os.str();
}

// ---- conormal sequence ---------------------------------------------------------------

Module direct_sum(const Module& A, const Module& B) {
  const RingPtr& R = A.ring();
  const int a = A.ambient(), b = B.ambient();
  auto pad = [&](const PVec& v, bool first) {
    PVec out = zero_vec(R, a + b);
    for (size_t i = 0; i < v.size(); ++i) out[(first ? 0 : a) + i] = v[i];
    return out;
  };
  std::vector<PVec> gens, rels;
  for (auto& g : A.gens()) gens.push_back(pad(g, true));
  for (auto& g : B.gens()) gens.push_back(pad(g, false));
  for (auto& g : A.rels()) rels.push_back(pad(g, true));
  for (auto& g : B.rels()) rels.push_back(pad(g, false));
  return Module(R, a + b, gens, rels);
}

ConormalSequence conormal_sequence(const RingSpec& T, const std::vector<Poly>& r, const std::vector<Poly>& z) {
  const RingPtr& P = T.ring;
  const int N = P->nvars(), m = static_cast<int>(r.size()), nz = static_cast<int>(z.size());
  ConormalSequence cs;
  cs.T = T;
  cs.r = r;
  cs.z = z;
  cs.J = concat(T.relations, r);

  std::vector<PVec> rgens, irels;
  for (auto& f : r) rgens.push_back({f});
  for (auto& f : T.relations) irels.push_back({f});
  std::vector<PVec> crels = m ? syzygies(P, 1, rgens, irels) : std::vector<PVec>{};
  for (auto& f : cs.J)
    for (int i = 0; i < m; ++i) {
      PVec v = zero_vec(P, m);
      v[i] = f;
      crels.push_back(v);
    }
  std::vector<PVec> cg;
  for (int i = 0; i < m; ++i) cg.push_back(unit_vec(P, m, i));
  cs.conormal = Module(P, m, cg, crels);
  cs.middle = Module::cokernel(P, N, jacobian_rows(P, T.relations), cs.J);
  cs.omega_S = Module::cokernel(P, N, jacobian_rows(P, cs.J), cs.J);

  std::vector<PVec> dr;
  for (auto& f : r) dr.push_back(grad(P, f));
  cs.alpha = ModuleMap(cs.conormal, cs.middle, dr);
  std::vector<PVec> units;
  for (int i = 0; i < N; ++i) units.push_back(unit_vec(P, N, i));
  cs.beta = ModuleMap(cs.middle, cs.omega_S, units);

  cs.alpha_injective = cs.alpha.kernel().is_zero();
  cs.beta_surjective = cs.beta.cokernel().is_zero();
  Module im = cs.alpha.image();
  bool exact = true;
  Module ker = cs.beta.kernel();
  for (auto& g : ker.gens())
    if (!im.contains(g)) exact = false;
  for (auto& v : dr)
    if (!cs.omega_S.is_zero_element(v)) exact = false;
  cs.exact_middle = exact;

  std::vector<PVec> dz;
  for (auto& f : z) dz.push_back(grad(P, f));
  ModuleMap basis(Module::free(P, nz, cs.J), cs.omega_S, dz);
  if (!basis.is_iso()) throw Error("SplittingNotFound", "the given elements do not give a basis of the differentials");
  Module Z(P, N, dz, cs.omega_S.rels());
  std::vector<PVec> timgs;
  for (int i = 0; i < N; ++i) {
    auto c = Z.coords(unit_vec(P, N, i));
    if (!c) throw Error("SplittingNotFound", "a coordinate differential is outside the span");
    PVec v = zero_vec(P, N);
    for (int k = 0; k < nz; ++k) v = vec_add(v, vec_scale(dz[k], (*c)[k]));
    timgs.push_back(v);
  }
  cs.theta = ModuleMap(cs.omega_S, cs.middle, timgs);
  bool section = true;
  for (int i = 0; i < N; ++i)
    if (!cs.omega_S.is_zero_element(vec_sub(timgs[i], unit_vec(P, N, i)))) section = false;
  cs.theta_section = section;
  std::vector<PVec> split = dr;
  split.insert(split.end(), timgs.begin(), timgs.end());
  cs.direct_sum_iso = ModuleMap(direct_sum(cs.conormal, cs.omega_S), cs.middle, split).is_iso();
  return cs;
}

ConormalSequence conormal_sequence(const RingMap& pi, const std::vector<Poly>& z) {
  GraphIdeal g(pi);
  if (!g.surjective()) throw Error("NotSurjective", "conormal sequence needs a surjection");
  const RingSpec& T = pi.source();
  Ideal IT(T.ring, T.relations);
  std::vector<Poly> r;
  Ideal K = g.kernel();
  for (auto& f : K.gb().polys())
    if (!IT.contains(f)) r.push_back(f);
  return conormal_sequence(T, r, z);
}

// ---- omega of a regular ring -------------------------------------------------------------

CanonicalOmega canonical_omega_regular(const RingSpec& R, const std::vector<Poly>& xs_in) {
  const RingPtr& P = R.ring;
  std::vector<Poly> xs = xs_in;
  if (xs.empty()) {
    if (!R.relations.empty() && !Ideal(P, R.relations).is_zero())
      throw Error("NotCertifiedRegular", "a p-basis must be exhibited for a quotient ring");
    for (int i = 0; i < P->nvars(); ++i) xs.push_back(Poly::var(P, i));
  } else if (!is_p_basis(R, xs)) {
    throw Error("NotCertifiedRegular", "the exhibited elements are not a p-basis");
  }
  CanonicalOmega w;
  w.ring = R;
  w.pbasis = xs;
  w.n = static_cast<int>(xs.size());
  KahlerModule K = kahler(R);
  std::vector<PVec> dx;
  for (auto& f : xs) dx.push_back(K.d(f));
  w.differential_basis = ModuleMap(Module::free(P, w.n, R.relations), K.module, dx).is_iso();
  w.complex = Complex::single(P, 1, -w.n, R.relations);
  std::string g;
  for (size_t i = 0; i < xs.size(); ++i) g += (i ? "^" : "") + d_name(xs[i]);
  w.generator = xs.empty() ? "1" : g;
  return w;
}

}  // namespace art
