#include "art/frobenius.hpp"

#include <sstream>

namespace art {

namespace {

coef power_of(coef p, int e) {
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > 255) throw Error("DegreeBudgetExceeded", "p^e exceeds the exponent range");
  }
  return static_cast<coef>(q);
}

void check_cap(long size) {
  if (size > Budget::size_cap())
    throw Error("SizeCapExceeded", "pushforward basis of size " + std::to_string(size) + " exceeds the cap");
}

int restricted_index(const Mono& a, int n, coef q) {
  int idx = 0;
  for (int i = 0; i < n; ++i) idx = idx * static_cast<int>(q) + a.e[i];
  return idx;
}

Poly mono_power(const std::vector<Poly>& xs, const Mono& a, const RingPtr& R) {
  Poly out = Poly::constant(R, 1);
  for (size_t i = 0; i < xs.size(); ++i) out = out * xs[i].pow(a.e[i]);
  return out;
}

}  // namespace

Ideal bracket_power(const Ideal& I, int e) {
  if (e < 0) throw Error("InvalidArgument", "bracket power level must be nonnegative");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= I.ring()->p();
  std::vector<Poly> g;
  for (auto& f : I.gens()) g.push_back(f.pow(q));
  return Ideal(I.ring(), g);
}

std::vector<Mono> restricted_monomials(int nvars, coef q) {
  std::vector<Mono> out;
  long total = 1;
  for (int i = 0; i < nvars; ++i) total *= q;
  for (long k = 0; k < total; ++k) {
    Mono m;
    long r = k;
    for (int i = nvars - 1; i >= 0; --i) {
      m.e[i] = static_cast<std::uint8_t>(r % q);
      m.deg = static_cast<std::uint16_t>(m.deg + m.e[i]);
      r /= q;
    }
    out.push_back(m);
  }
  return out;
}

PVec FrobPushforward::decompose(const PVec& v) const {
  const RingPtr& P = ring.ring;
  const int n = P->nvars();
  std::vector<PolyBuilder> slots(basis.size() * rank, PolyBuilder(P));
  for (int k = 0; k < rank; ++k)
    for (auto& t : v[k].terms()) {
      Mono a, b;
      for (int i = 0; i < n; ++i) {
        a.e[i] = static_cast<std::uint8_t>(t.m.e[i] % q);
        b.e[i] = static_cast<std::uint8_t>(t.m.e[i] / q);
        a.deg = static_cast<std::uint16_t>(a.deg + a.e[i]);
        b.deg = static_cast<std::uint16_t>(b.deg + b.e[i]);
      }
      // c x^m = c^q (x^b)^q x^a and c^q = c in F_p
      slots[index(restricted_index(a, n, q), k)].add(b, t.c);
    }
  PVec out;
  for (auto& s : slots) out.push_back(s.build());
  return out;
}

Matrix FrobPushforward::multiplication(const Poly& s) const {
  if (rank != 1) throw Error("InvalidArgument", "multiplication is defined on the pushforward of the ring");
  const int N = static_cast<int>(basis.size());
  std::vector<PVec> cols;
  for (int a = 0; a < N; ++a) cols.push_back(decompose(s * Poly::monomial(ring.ring, basis[a], 1)));
  return Matrix::from_columns(ring.ring, N, cols);
}

std::string FrobPushforward::tag(int i) const {
  std::ostringstream os;
  os << "F_*(" << ring.ring->mono_str(basis[i / rank]);
  if (rank > 1) os << " w" << (i % rank);
  os << ")";
  return os.str();
}

FrobPushforward frobenius_pushforward(const Module& W, const RingSpec& R, int e) {
  if (e < 0) throw Error("InvalidArgument", "pushforward level must be nonnegative");
  const RingPtr& P = R.ring;
  FrobPushforward F;
  F.ring = R;
  F.e = e;
  F.q = power_of(P->p(), e);
  Module Wp = W.presentation();
  F.rank = Wp.ngens();
  long size = F.rank;
  for (int i = 0; i < P->nvars(); ++i) size *= F.q;
  check_cap(size);
  F.basis = restricted_monomials(P->nvars(), F.q);
  std::vector<PVec> rels;
  for (auto& n : Wp.rels())
    for (auto& a : F.basis) rels.push_back(F.decompose(vec_scale(n, Poly::monomial(P, a, 1))));
  F.module = Module::cokernel(P, static_cast<int>(size), rels, R.relations);
  return F;
}

FrobPushforward frobenius_pushforward(const RingSpec& R, int e) {
  return frobenius_pushforward(Module::free(R.ring, 1, R.relations), R, e);
}

namespace {

// Map R^{p^m} -> F_*R sending e_a to F_*(xs^a).
ModuleMap monomial_map(const RingSpec& R, const std::vector<Poly>& xs, const FrobPushforward& F) {
  const RingPtr& P = R.ring;
  long size = 1;
  for (size_t i = 0; i < xs.size(); ++i) size *= P->p();
  check_cap(size);
  auto exps = restricted_monomials(static_cast<int>(xs.size()), P->p());
  std::vector<PVec> imgs;
  for (auto& a : exps) imgs.push_back(F.decompose(mono_power(xs, a, P)));
  return ModuleMap(Module::free(P, static_cast<int>(exps.size()), R.relations), F.module, imgs);
}

}  // namespace

bool is_p_generating(const RingSpec& R, const std::vector<Poly>& xs) {
  FrobPushforward F = frobenius_pushforward(R, 1);
  return monomial_map(R, xs, F).cokernel().is_zero();
}

bool is_p_basis(const RingSpec& R, const std::vector<Poly>& xs) {
  FrobPushforward F = frobenius_pushforward(R, 1);
  ModuleMap m = monomial_map(R, xs, F);
  return m.cokernel().is_zero() && m.kernel().is_zero();
}

TraceGenerator pbasis_trace_generator(const RingSpec& R, const std::vector<Poly>& xs) {
  if (!is_p_basis(R, xs)) throw Error("NoPBasis", "the given elements are not a p-basis");
  const RingPtr& P = R.ring;
  const coef p = P->p();
  FrobPushforward F = frobenius_pushforward(R, 1);
  Module target = Module::free(P, 1, R.relations);
  HomModule H = hom_module(F.module, target);
  Ideal I(P, R.relations);
  const int N = static_cast<int>(F.basis.size());
  std::vector<Matrix> mult;
  for (int b = 0; b < N; ++b) mult.push_back(F.multiplication(Poly::monomial(P, F.basis[b], 1)));

  auto generates = [&](const ModuleMap& phi) {
    std::vector<PVec> encs;
    for (int b = 0; b < N; ++b) {
      std::vector<PVec> imgs;
      for (int a = 0; a < N; ++a) imgs.push_back(phi.apply_coords(mult[b].column(a)));
      encs.push_back(H.encode(ModuleMap(F.module, target, imgs, false)));
    }
    return ModuleMap(F.module, H.hom, encs).is_iso();
  };

  std::vector<PVec> cands = H.hom.gens();
  const size_t ng = cands.size();
  for (size_t i = 0; i < ng; ++i)
    for (size_t j = i + 1; j < ng; ++j) cands.push_back(vec_add(cands[i], cands[j]));

  TraceGenerator T;
  T.exponents = restricted_monomials(static_cast<int>(xs.size()), p);
  for (auto& c : cands) {
    ModuleMap phi = H.decode(c);
    if (!generates(phi)) continue;
    T.free_generator = true;
    T.phi = phi;
    break;
  }
  if (!T.free_generator) return T;

  Mono top;
  for (size_t i = 0; i < xs.size(); ++i) {
    top.e[i] = static_cast<std::uint8_t>(p - 1);
    top.deg = static_cast<std::uint16_t>(top.deg + p - 1);
  }
  for (auto& a : T.exponents) T.table.push_back(I.reduce(T.phi.apply_coords(F.decompose(mono_power(xs, a, P)))[0]));
  const int ti = restricted_index(top, static_cast<int>(xs.size()), p);
  const Poly& lead = T.table[ti];
  if (!lead.is_zero() && lead.is_constant()) {
    Poly inv = Poly::constant(P, fp_inverse(lead.constant_term(), p));
    std::vector<PVec> imgs;
    for (auto& v : T.phi.images()) imgs.push_back(vec_scale(v, inv));
    T.phi = ModuleMap(T.phi.source(), T.phi.target(), imgs);
    for (auto& t : T.table) t = t * inv;
  }
  T.matches_projection = true;
  for (int i = 0; i < static_cast<int>(T.table.size()); ++i) {
    const bool want_one = i == ti;
    if (T.table[i] != Poly::constant(P, want_one ? 1 : 0)) T.matches_projection = false;
  }
  return T;
}

EllipticReport elliptic_curve_checks(const RingSpec& R, const std::vector<Poly>& Q,
                                     const std::vector<Poly>& candidates) {
  const RingPtr& P = R.ring;
  EllipticReport rep;
  FrobPushforward F = frobenius_pushforward(R, 1);
  rep.generic_rank = generic_rank(F.module, R.relations);
  Module det = exterior_power(F.module, 2);
  Module Qm = Module::ideal(P, Q, R.relations);
  rep.det_iso = find_isomorphism(det, Qm).has_value();
  rep.min_generators = minimal_generators_at(Qm, Q);
  for (auto& c : candidates)
    if (!is_p_basis(R, {c})) rep.refuted_candidates.push_back(c.str());
  return rep;
}

}  // namespace art
