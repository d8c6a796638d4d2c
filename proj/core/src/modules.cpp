#include "art/modules.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace art {

struct Module::Cache {
  std::once_flag gb_once, pres_once;
  GB gb;
  std::unique_ptr<Presenter> pres;
};

Module::Module(RingPtr r, int ambient, std::vector<PVec> gens, std::vector<PVec> rels, std::vector<int> degrees)
    : ring_(std::move(r)), amb_(ambient), degrees_(std::move(degrees)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (static_cast<int>(g.size()) != amb_) throw Error("InvalidArgument", "generator length mismatch");
    gens_.push_back(g);
  }
  for (auto& v : rels) {
    if (static_cast<int>(v.size()) != amb_) throw Error("InvalidArgument", "relation length mismatch");
    if (!vec_is_zero(v)) rels_.push_back(v);
  }
  if (!degrees_.empty() && degrees_.size() != gens_.size()) throw Error("InvalidArgument", "degree list mismatch");
}

Module Module::free(const RingPtr& r, int n, const std::vector<Poly>& modulus) { return cokernel(r, n, {}, modulus); }

Module Module::cokernel(const RingPtr& r, int n, const std::vector<PVec>& rels, const std::vector<Poly>& modulus) {
  std::vector<PVec> gens, all = rels;
  for (int i = 0; i < n; ++i) gens.push_back(unit_vec(r, n, i));
  for (auto& f : modulus)
    for (int i = 0; i < n; ++i) {
      PVec v = zero_vec(r, n);
      v[i] = f;
      all.push_back(v);
    }
  return Module(r, n, gens, all);
}

Module Module::ideal(const RingPtr& r, const std::vector<Poly>& J, const std::vector<Poly>& modulus) {
  std::vector<PVec> gens, rels;
  for (auto& f : J) gens.push_back({f});
  for (auto& f : modulus) rels.push_back({f});
  return Module(r, 1, gens, rels);
}

Module Module::with_degrees(std::vector<int> d) const { return Module(ring_, amb_, gens_, rels_, std::move(d)); }

const GB& Module::rel_gb() const {
  std::call_once(cache_->gb_once, [&] { cache_->gb = groebner(ring_, amb_, rels_); });
  return cache_->gb;
}

const Presenter& Module::presenter() const {
  std::call_once(cache_->pres_once, [&] { cache_->pres = std::make_unique<Presenter>(ring_, amb_, gens_, rels_); });
  return *cache_->pres;
}

bool Module::is_zero() const {
  for (auto& g : gens_)
    if (!rel_gb().contains(g)) return false;
  return true;
}

bool Module::is_zero_element(const PVec& v) const { return rel_gb().contains(v); }

bool Module::contains(const PVec& v) const { return presenter().image_gb().contains(v); }

std::optional<PVec> Module::coords(const PVec& v) const {
  if (gens_.empty()) {
    if (is_zero_element(v)) return PVec{};
    return std::nullopt;
  }
  return presenter().lift(v);
}

Module Module::presentation() const {
  std::vector<PVec> syz;
  if (!gens_.empty()) syz = presenter().syzygies();
  std::vector<PVec> gens;
  for (int i = 0; i < ngens(); ++i) gens.push_back(unit_vec(ring_, ngens(), i));
  return Module(ring_, ngens(), gens, syz, degrees_);
}

Module Module::trim() const {
  if (gens_.empty()) return *this;
  std::vector<bool> drop(gens_.size(), false);
  for (size_t i = 0; i < gens_.size(); ++i)
    if (rel_gb().contains(gens_[i])) drop[i] = true;
  for (auto& s : presenter().syzygies()) {
    bool touches = false;
    for (size_t i = 0; i < s.size(); ++i)
      if (drop[i] && !s[i].is_zero()) touches = true;
    if (touches) continue;
    for (size_t i = 0; i < s.size(); ++i)
      if (!s[i].is_zero() && s[i].is_constant()) {
        drop[i] = true;
        break;
      }
  }
  std::vector<PVec> g;
  std::vector<int> d;
  for (size_t i = 0; i < gens_.size(); ++i)
    if (!drop[i]) {
      g.push_back(gens_[i]);
      if (!degrees_.empty()) d.push_back(degrees_[i]);
    }
  return Module(ring_, amb_, g, rels_, d);
}

std::string Module::describe() const {
  std::ostringstream os;
  os << "subquotient of P^" << amb_ << " with " << ngens() << " generators, " << rels_.size() << " relations";
  return os.str();
}

// ---- maps -----------------------------------------------------------------------

ModuleMap::ModuleMap(Module src, Module tgt, std::vector<PVec> images, bool check)
    : src_(std::move(src)), tgt_(std::move(tgt)), img_(std::move(images)) {
  if (static_cast<int>(img_.size()) != src_.ngens()) throw Error("InvalidArgument", "one image per source generator");
  for (auto& v : img_)
    if (static_cast<int>(v.size()) != tgt_.ambient()) throw Error("InvalidArgument", "image length mismatch");
  if (check && !well_defined()) throw Error("NotWellDefined", "module map does not respect relations");
}

ModuleMap ModuleMap::from_matrix(Module src, Module tgt, const Matrix& m, bool check) {
  std::vector<PVec> imgs;
  for (int j = 0; j < m.cols; ++j) {
    PVec v = zero_vec(tgt.ring(), tgt.ambient());
    for (int i = 0; i < m.rows; ++i)
      if (!m.at(i, j).is_zero()) v = vec_add(v, vec_scale(tgt.gens()[i], m.at(i, j)));
    imgs.push_back(v);
  }
  return ModuleMap(std::move(src), std::move(tgt), imgs, check);
}

PVec ModuleMap::apply_coords(const PVec& a) const {
  PVec v = zero_vec(tgt_.ring(), tgt_.ambient());
  for (size_t j = 0; j < a.size(); ++j)
    if (!a[j].is_zero()) v = vec_add(v, vec_scale(img_[j], a[j]));
  return v;
}

bool ModuleMap::well_defined() const {
  for (auto& v : img_)
    if (!tgt_.contains(v)) return false;
  if (src_.ngens() == 0) return true;
  for (auto& s : src_.presenter().syzygies())
    if (!tgt_.is_zero_element(apply_coords(s))) return false;
  return true;
}

Module ModuleMap::kernel() const {
  std::vector<PVec> kg;
  if (src_.ngens() > 0) {
    for (auto& a : syzygies(tgt_.ring(), tgt_.ambient(), img_, tgt_.rels())) {
      PVec v = zero_vec(src_.ring(), src_.ambient());
      for (int j = 0; j < src_.ngens(); ++j)
        if (!a[j].is_zero()) v = vec_add(v, vec_scale(src_.gens()[j], a[j]));
      kg.push_back(v);
    }
  }
  return Module(src_.ring(), src_.ambient(), kg, src_.rels());
}

Module ModuleMap::image() const { return Module(tgt_.ring(), tgt_.ambient(), img_, tgt_.rels()); }

Module ModuleMap::cokernel() const {
  std::vector<PVec> rels = tgt_.rels();
  rels.insert(rels.end(), img_.begin(), img_.end());
  return Module(tgt_.ring(), tgt_.ambient(), tgt_.gens(), rels, tgt_.degrees());
}

ModuleMap ModuleMap::compose_after(const ModuleMap& first) const {
  std::vector<PVec> imgs;
  for (auto& v : first.images()) {
    auto a = src_.coords(v);
    if (!a) throw Error("InvalidArgument", "composition: image outside the middle module");
    imgs.push_back(apply_coords(*a));
  }
  return ModuleMap(first.source(), tgt_, imgs, false);
}

Matrix ModuleMap::matrix() const {
  std::vector<PVec> cols;
  for (auto& v : img_) {
    auto a = tgt_.coords(v);
    if (!a) throw Error("InvalidArgument", "image outside the target");
    cols.push_back(*a);
  }
  return Matrix::from_columns(tgt_.ring(), tgt_.ngens(), cols);
}

IsoReport kernel_cokernel_report(const ModuleMap& f) { return {f.kernel().is_zero(), f.cokernel().is_zero()}; }

// ---- Hom ------------------------------------------------------------------------

HomModule hom_module(const Module& M, const Module& N) {
  const RingPtr& R = M.ring();
  Module Mp = M.presentation(), Np = N.presentation();
  const int k = Mp.ngens(), l = Np.ngens();
  const auto& RM = Mp.rels();
  const auto& RN = Np.rels();
  const int m = static_cast<int>(RM.size());
  // Phi: (P^l)^k -> (P^l)^m, phi |-> (sum_j rho_j phi_j)_rho
  std::vector<PVec> imgs;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < l; ++i) {
      PVec v = zero_vec(R, l * m);
      for (int r = 0; r < m; ++r) v[r * l + i] = RM[r][j];
      imgs.push_back(v);
    }
  std::vector<PVec> trels, srels;
  for (int r = 0; r < m; ++r)
    for (auto& s : RN) {
      PVec v = zero_vec(R, l * m);
      for (int i = 0; i < l; ++i) v[r * l + i] = s[i];
      trels.push_back(v);
    }
  for (int j = 0; j < k; ++j)
    for (auto& s : RN) {
      PVec v = zero_vec(R, l * k);
      for (int i = 0; i < l; ++i) v[j * l + i] = s[i];
      srels.push_back(v);
    }
  std::vector<PVec> kg;
  if (m == 0) {
    for (int a = 0; a < l * k; ++a) kg.push_back(unit_vec(R, l * k, a));
  } else if (l * k > 0) {
    for (auto& a : syzygies(R, l * m, imgs, trels)) kg.push_back(vec_slice(a, 0, l * k));
  }
  HomModule H;
  H.M = M;
  H.N = N;
  H.k = k;
  H.l = l;
  H.hom = Module(R, l * k, kg, srels).trim();
  return H;
}

Matrix HomModule::as_matrix(const PVec& e) const {
  Matrix m(hom.ring(), l, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < l; ++i) m.at(i, j) = e[j * l + i];
  return m;
}

PVec HomModule::from_matrix(const Matrix& m) const {
  PVec e = zero_vec(hom.ring(), l * k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < l; ++i) e[j * l + i] = m.at(i, j);
  return e;
}

ModuleMap HomModule::decode(const PVec& e) const { return ModuleMap::from_matrix(M, N, as_matrix(e)); }

PVec HomModule::encode(const ModuleMap& f) const { return from_matrix(f.matrix()); }

// ---- tensor and exterior powers ---------------------------------------------------------

std::optional<ModuleMap> find_isomorphism(const Module& A, const Module& B) {
  HomModule H = hom_module(A, B);
  const auto& g = H.hom.gens();
  auto attempt = [&](const PVec& v) -> std::optional<ModuleMap> {
    ModuleMap f = H.decode(v);
    if (f.is_iso()) return f;
    return std::nullopt;
  };
  // generator i |-> generator i
  if (A.ngens() == B.ngens()) {
    std::vector<PVec> img(B.gens().begin(), B.gens().end());
    ModuleMap f(A, B, img, false);
    if (f.well_defined() && f.is_iso()) return f;
  }
  for (auto& v : g)
    if (auto f = attempt(v)) return f;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (auto f = attempt(vec_add(g[i], g[j]))) return f;
  return std::nullopt;
}

Module tensor_module(const Module& M, const Module& N) {
  const RingPtr& R = M.ring();
  Module Mp = M.presentation(), Np = N.presentation();
  const int k = Mp.ngens(), l = Np.ngens();
  std::vector<PVec> rels;
  for (auto& r : Mp.rels())
    for (int j = 0; j < l; ++j) {
      PVec v = zero_vec(R, k * l);
      for (int i = 0; i < k; ++i) v[i * l + j] = r[i];
      rels.push_back(v);
    }
  for (auto& s : Np.rels())
    for (int i = 0; i < k; ++i) {
      PVec v = zero_vec(R, k * l);
      for (int j = 0; j < l; ++j) v[i * l + j] = s[j];
      rels.push_back(v);
    }
  std::vector<int> deg;
  if (M.graded() && N.graded())
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < l; ++j) deg.push_back(M.degrees()[i] + N.degrees()[j]);
  Module T = Module::cokernel(R, k * l, rels);
  return deg.empty() ? T : T.with_degrees(deg);
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

namespace {
int subset_index(const std::vector<std::vector<int>>& subs, const std::vector<int>& s) {
  auto it = std::lower_bound(subs.begin(), subs.end(), s);
  return static_cast<int>(it - subs.begin());
}

Poly det(const std::vector<std::vector<Poly>>& a) {
  const size_t n = a.size();
  if (n == 0) return Poly();
  const RingPtr& R = a[0][0].ring();
  if (n == 1) return a[0][0];
  Poly acc(R);
  for (size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      minor.push_back(row);
    }
    Poly t = a[0][j] * det(minor);
    acc = (j % 2) ? acc - t : acc + t;
  }
  return acc;
}
}  // namespace

Module exterior_power(const Module& M, int k) {
  const RingPtr& R = M.ring();
  Module Mp = M.presentation();
  const int n = Mp.ngens();
  if (k < 0) throw Error("InvalidArgument", "negative exterior power");
  auto S = subsets(n, k);
  if (k == 0) return Module::free(R, 1);
  auto T = subsets(n, k - 1);
  std::vector<PVec> rels;
  for (auto& r : Mp.rels())
    for (auto& t : T) {
      PVec v = zero_vec(R, static_cast<int>(S.size()));
      bool any = false;
      for (int i = 0; i < n; ++i) {
        if (r[i].is_zero() || std::binary_search(t.begin(), t.end(), i)) continue;
        int below = static_cast<int>(std::lower_bound(t.begin(), t.end(), i) - t.begin());
        std::vector<int> s = t;
        s.insert(s.begin() + below, i);
        int idx = subset_index(S, s);
        v[idx] = (below % 2) ? v[idx] - r[i] : v[idx] + r[i];
        any = true;
      }
      if (any) rels.push_back(v);
    }
  Module E = Module::cokernel(R, static_cast<int>(S.size()), rels);
  if (M.graded()) {
    std::vector<int> deg;
    for (auto& s : S) {
      int d = 0;
      for (int i : s) d += M.degrees()[i];
      deg.push_back(d);
    }
    E = E.with_degrees(deg);
  }
  return E;
}

Matrix wedge_matrix(const Matrix& m, int k) {
  auto rs = subsets(m.rows, k), cs = subsets(m.cols, k);
  Matrix W(m.ring, static_cast<int>(rs.size()), static_cast<int>(cs.size()));
  for (size_t a = 0; a < rs.size(); ++a)
    for (size_t b = 0; b < cs.size(); ++b) {
      std::vector<std::vector<Poly>> sub(k, std::vector<Poly>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = m.at(rs[a][i], cs[b][j]);
      W.at(static_cast<int>(a), static_cast<int>(b)) = k == 0 ? Poly::constant(m.ring, 1) : det(sub);
    }
  return W;
}

// ---- numerical invariants ----------------------------------------------------------

int fp_rank(const Matrix& m) {
  const coef p = m.ring->p();
  std::vector<std::vector<coef>> a(m.rows, std::vector<coef>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if (!m.at(i, j).is_constant()) throw Error("InvalidArgument", "fp_rank needs a constant matrix");
      a[i][j] = m.at(i, j).constant_term();
    }
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (a[r][c]) piv = r;
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    coef inv = fp_inverse(a[rank][c], p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || !a[r][c]) continue;
      coef f = fp_mul(a[r][c], inv, p);
      for (int j = c; j < m.cols; ++j) a[r][j] = fp_sub(a[r][j], fp_mul(f, a[rank][j], p), p);
    }
    ++rank;
  }
  return rank;
}

int minimal_generators_at(const Module& M, const std::vector<Poly>& m) {
  const RingPtr& R = M.ring();
  Ideal I(R, m);
  if (I.is_unit()) throw Error("NotMaximal", "unit ideal");
  std::vector<Poly> point;
  for (int i = 0; i < R->nvars(); ++i) {
    Poly r = I.reduce(Poly::var(R, i));
    if (!r.is_constant()) throw Error("NotMaximal", "residue field is not F_p");
    point.push_back(r.is_zero() ? Poly::constant(R, 0) : r);
  }
  Module Mp = M.presentation();
  Matrix rel = Matrix::from_columns(R, Mp.ngens(), Mp.rels());
  for (auto& x : rel.a) x = substitute(x, R, point);
  return Mp.ngens() - fp_rank(rel);
}

std::vector<long> hilbert_function(const Module& M, int dmax) {
  if (!M.graded()) throw Error("NotGraded", "module has no generator degrees");
  Module Mp = M.presentation();
  const RingPtr& R = M.ring();
  const int n = R->nvars();
  for (auto& r : Mp.rels()) {
    int d = -1000000;
    for (int i = 0; i < Mp.ngens(); ++i) {
      if (r[i].is_zero()) continue;
      if (!r[i].is_homogeneous()) throw Error("NotGraded", "inhomogeneous relation");
      int di = r[i].degree() + M.degrees()[i];
      if (d == -1000000) d = di;
      else if (d != di) throw Error("NotGraded", "inhomogeneous relation");
    }
  }
  const GB& G = Mp.rel_gb();
  std::vector<long> h(dmax + 1, 0);
  // enumerate monomials of each degree
  std::vector<std::vector<Mono>> by_deg(dmax + 1);
  if (dmax >= 0) by_deg[0].push_back(Mono{});
  for (int d = 1; d <= dmax; ++d)
    for (auto& m : by_deg[d - 1]) {
      int last = n - 1;
      while (last >= 0 && m.e[last] == 0) --last;
      for (int v = std::max(last, 0); v < n; ++v) {
        Mono q = m;
        q.e[v]++;
        q.deg++;
        by_deg[d].push_back(q);
      }
    }
  for (int g = 0; g < Mp.ngens(); ++g)
    for (int d = 0; d <= dmax; ++d) {
      int md = d - M.degrees()[g];
      if (md < 0 || md > dmax) continue;
      for (auto& m : by_deg[md]) {
        bool std_mono = true;
        for (auto& e : G.elems())
          if (e.lead().pos == g && e.lead().m.divides(m, n)) {
            std_mono = false;
            break;
          }
        if (std_mono) h[d]++;
      }
    }
  return h;
}

int generic_rank(const Module& M, const std::vector<Poly>& domain_ideal) {
  const RingPtr& R = M.ring();
  Ideal I(R, domain_ideal);
  Module Mp = M.presentation();
  const int k = Mp.ngens();
  std::vector<PVec> cols;
  for (auto& r : Mp.rels()) {
    PVec v(r.size());
    for (size_t i = 0; i < r.size(); ++i) v[i] = I.reduce(r[i]);
    if (!vec_is_zero(v)) cols.push_back(v);
  }
  // fraction-free elimination over the domain P/I
  int rank = 0;
  std::vector<bool> used(k, false);
  for (size_t c = 0; c < cols.size(); ++c) {
    int piv = -1;
    for (int i = 0; i < k; ++i)
      if (!used[i] && !cols[c][i].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    used[piv] = true;
    ++rank;
    for (size_t d = c + 1; d < cols.size(); ++d) {
      if (cols[d][piv].is_zero()) continue;
      Poly a = cols[c][piv], b = cols[d][piv];
      for (int i = 0; i < k; ++i) cols[d][i] = I.reduce(a * cols[d][i] - b * cols[c][i]);
    }
  }
  return k - rank;
}

}  // namespace art
