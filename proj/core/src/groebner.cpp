#include "art/groebner.hpp"

#include <algorithm>
#include <sstream>

namespace art {

// ---- dense vectors and matrices ----------------------------------------------

PVec zero_vec(const RingPtr& r, int n) { return PVec(n, Poly(r)); }

PVec unit_vec(const RingPtr& r, int n, int i) {
  PVec v = zero_vec(r, n);
  v[i] = Poly::constant(r, 1);
  return v;
}

PVec vec_add(const PVec& a, const PVec& b) {
  if (a.size() != b.size()) throw Error("InvalidArgument", "vector length mismatch");
  PVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

PVec vec_sub(const PVec& a, const PVec& b) {
  if (a.size() != b.size()) throw Error("InvalidArgument", "vector length mismatch");
  PVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

PVec vec_scale(const PVec& a, const Poly& f) {
  PVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * f;
  return r;
}

bool vec_is_zero(const PVec& a) {
  for (auto& f : a)
    if (!f.is_zero()) return false;
  return true;
}

PVec vec_concat(const PVec& a, const PVec& b) {
  PVec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

PVec vec_slice(const PVec& a, int from, int count) {
  return PVec(a.begin() + from, a.begin() + from + count);
}

Matrix::Matrix(RingPtr r, int m, int n) : ring(r), rows(m), cols(n), a(static_cast<size_t>(m) * n, Poly(r)) {}

Matrix Matrix::from_columns(RingPtr r, int rows, const std::vector<PVec>& cs) {
  Matrix M(r, rows, static_cast<int>(cs.size()));
  for (int j = 0; j < M.cols; ++j) {
    if (static_cast<int>(cs[j].size()) != rows) throw Error("InvalidArgument", "column length mismatch");
    for (int i = 0; i < rows; ++i) M.at(i, j) = cs[j][i];
  }
  return M;
}

Matrix Matrix::identity(RingPtr r, int n) {
  Matrix M(r, n, n);
  for (int i = 0; i < n; ++i) M.at(i, i) = Poly::constant(r, 1);
  return M;
}

PVec Matrix::column(int j) const {
  PVec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

std::vector<PVec> Matrix::columns() const {
  std::vector<PVec> cs;
  for (int j = 0; j < cols; ++j) cs.push_back(column(j));
  return cs;
}

PVec Matrix::apply(const PVec& v) const {
  if (static_cast<int>(v.size()) != cols) throw Error("InvalidArgument", "matrix/vector size mismatch");
  PVec r = zero_vec(ring, rows);
  for (int j = 0; j < cols; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows; ++i)
      if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) throw Error("InvalidArgument", "matrix product size mismatch");
  Matrix M(ring ? ring : o.ring, rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols; ++j)
        if (!o.at(k, j).is_zero()) M.at(i, j) = M.at(i, j) + at(i, k) * o.at(k, j);
    }
  return M;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw Error("InvalidArgument", "matrix sum size mismatch");
  Matrix M = *this;
  for (size_t i = 0; i < a.size(); ++i) M.a[i] = a[i] + o.a[i];
  return M;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw Error("InvalidArgument", "matrix difference size mismatch");
  Matrix M = *this;
  for (size_t i = 0; i < a.size(); ++i) M.a[i] = a[i] - o.a[i];
  return M;
}

Matrix Matrix::scale(const Poly& f) const {
  Matrix M = *this;
  for (auto& x : M.a) x = x * f;
  return M;
}

Matrix Matrix::transpose() const {
  Matrix M(ring, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) M.at(j, i) = at(i, j);
  return M;
}

bool Matrix::is_zero() const {
  for (auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

// ---- sparse vectors ------------------------------------------------------------

namespace {

inline int vcmp(const Ring& R, const VTerm& a, const VTerm& b) {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return R.cmp(a.m, b.m);
}

void sort_svec(const Ring& R, SVec& v) {
  std::sort(v.t.begin(), v.t.end(), [&](const VTerm& a, const VTerm& b) { return vcmp(R, a, b) > 0; });
}

// a[from..] - c * m * g
SVec sub_mul(const Ring& R, const SVec& a, size_t from, coef c, const Mono& m, const SVec& g) {
  const coef p = R.p();
  const coef nc = fp_neg(c, p);
  SVec r;
  r.t.reserve(a.t.size() - from + g.t.size());
  size_t i = from, j = 0;
  while (i < a.t.size() && j < g.t.size()) {
    VTerm h{g.t[j].m * m, g.t[j].pos, fp_mul(g.t[j].c, nc, p)};
    int s = vcmp(R, a.t[i], h);
    if (s > 0) r.t.push_back(a.t[i++]);
    else if (s < 0) {
      r.t.push_back(h);
      ++j;
    } else {
      coef v = fp_add(a.t[i].c, h.c, p);
      if (v) r.t.push_back({h.m, h.pos, v});
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < g.t.size(); ++j) r.t.push_back({g.t[j].m * m, g.t[j].pos, fp_mul(g.t[j].c, nc, p)});
  return r;
}

void make_monic(const Ring& R, SVec& v) {
  if (v.zero()) return;
  coef inv = fp_inverse(v.lead().c, R.p());
  for (auto& t : v.t) t.c = fp_mul(t.c, inv, R.p());
}

struct Reducer {
  const Ring& R;
  const std::vector<SVec>& polys;
  const std::vector<int>& active;
  int n;

  const SVec* find(const VTerm& t) const {
    for (int idx : active) {
      const VTerm& l = polys[idx].lead();
      if (l.pos == t.pos && l.m.divides(t.m, n)) return &polys[idx];
    }
    return nullptr;
  }

  // Full reduction.
  SVec reduce(SVec f) const {
    SVec out;
    size_t i = 0;
    while (i < f.t.size()) {
      const VTerm& t = f.t[i];
      const SVec* g = find(t);
      if (!g) {
        out.t.push_back(t);
        ++i;
        continue;
      }
      coef c = fp_mul(t.c, fp_inverse(g->lead().c, R.p()), R.p());
      f = sub_mul(R, f, i, c, t.m / g->lead().m, *g);
      i = 0;
    }
    return out;
  }
};

struct Pair {
  int i, j;
  Mono lcm;
  int pos;
};

}  // namespace

SVec to_sparse(const PVec& v) {
  SVec s;
  const Ring* R = nullptr;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].ring()) R = v[i].ring().get();
    for (auto& t : v[i].terms()) s.t.push_back({t.m, static_cast<int>(i), t.c});
  }
  if (R) sort_svec(*R, s);
  return s;
}

PVec to_dense(const SVec& v, const RingPtr& r, int rank) {
  std::vector<PolyBuilder> bs(rank, PolyBuilder(r));
  for (auto& t : v.t) bs[t.pos].add(t.m, t.c);
  PVec out;
  for (auto& b : bs) out.push_back(b.build());
  return out;
}

// ---- Buchberger ---------------------------------------------------------------

namespace {

std::vector<SVec> buchberger(const Ring& R, int rank, std::vector<SVec> input) {
  const int n = R.nvars();
  const int cap = Budget::degree();
  const bool ideal = rank == 1;
  std::vector<SVec> polys;
  std::vector<int> G;
  std::vector<Pair> B;

  auto lcm_of = [&](int a, int b) { return polys[a].lead().m.lcm(polys[b].lead().m, n); };

  auto update = [&](int h) {
    const VTerm& lh = polys[h].lead();
    std::vector<Pair> C;
    for (int g : G)
      if (polys[g].lead().pos == lh.pos) C.push_back({g, h, lcm_of(g, h), lh.pos});
    auto copr = [&](const Pair& q) { return ideal && polys[q.i].lead().m.coprime(lh.m, n); };
    std::vector<Pair> D;
    for (size_t a = 0; a < C.size(); ++a) {
      bool keep = copr(C[a]);
      if (!keep) {
        keep = true;
        for (size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(C[a].lcm, n)) keep = false;
        for (size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(C[a].lcm, n)) keep = false;
      }
      if (keep) D.push_back(C[a]);
    }
    std::vector<Pair> nb;
    for (auto& q : B) {
      bool drop = q.pos == lh.pos && lh.m.divides(q.lcm, n) && !(lcm_of(q.i, h) == q.lcm) &&
                  !(lcm_of(q.j, h) == q.lcm);
      if (!drop) nb.push_back(q);
    }
    for (auto& q : D)
      if (!copr(q)) nb.push_back(q);
    B.swap(nb);
    std::vector<int> ng;
    for (int g : G) {
      const VTerm& lg = polys[g].lead();
      if (!(lg.pos == lh.pos && lh.m.divides(lg.m, n))) ng.push_back(g);
    }
    ng.push_back(h);
    G.swap(ng);
  };

  auto add = [&](SVec f) {
    Reducer red{R, polys, G, n};
    f = red.reduce(std::move(f));
    if (f.zero()) return;
    make_monic(R, f);
    polys.push_back(std::move(f));
    update(static_cast<int>(polys.size()) - 1);
  };

  std::sort(input.begin(), input.end(), [&](const SVec& a, const SVec& b) {
    if (a.zero() || b.zero()) return !a.zero() < !b.zero();
    return vcmp(R, a.lead(), b.lead()) < 0;
  });
  for (auto& f : input)
    if (!f.zero()) add(std::move(f));

  while (!B.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < B.size(); ++k) {
      const Pair &a = B[k], &b = B[best];
      if (a.lcm.deg != b.lcm.deg) {
        if (a.lcm.deg < b.lcm.deg) best = k;
        continue;
      }
      int c = vcmp(R, {a.lcm, a.pos, 1}, {b.lcm, b.pos, 1});
      if (c < 0 || (c == 0 && std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j))) best = k;
    }
    Pair q = B[best];
    B.erase(B.begin() + static_cast<long>(best));
    if (q.lcm.deg > cap)
      throw Error("DegreeBudgetExceeded", "S-pair degree " + std::to_string(q.lcm.deg) + " exceeds cap " +
                                              std::to_string(cap));
    const SVec &f = polys[q.i], &g = polys[q.j];
    SVec s = sub_mul(R, SVec{}, 0, fp_neg(1, R.p()), q.lcm / f.lead().m, f);
    s = sub_mul(R, s, 0, 1, q.lcm / g.lead().m, g);
    add(std::move(s));
  }

  // Reduced basis: minimal leads, then tail reduction.
  std::vector<int> min;
  for (int g : G) {
    bool redundant = false;
    for (int h : G)
      if (h != g && polys[h].lead().pos == polys[g].lead().pos &&
          polys[h].lead().m.divides(polys[g].lead().m, n) && !(polys[h].lead().m == polys[g].lead().m && h > g))
        redundant = true;
    if (!redundant) min.push_back(g);
  }
  std::vector<SVec> out;
  for (int g : min) {
    std::vector<int> others;
    for (int h : min)
      if (h != g) others.push_back(h);
    Reducer red{R, polys, others, n};
    SVec f = polys[g];
    VTerm lead = f.lead();
    SVec tail;
    tail.t.assign(f.t.begin() + 1, f.t.end());
    tail = red.reduce(std::move(tail));
    SVec r;
    r.t.push_back(lead);
    r.t.insert(r.t.end(), tail.t.begin(), tail.t.end());
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [&](const SVec& a, const SVec& b) { return vcmp(R, a.lead(), b.lead()) < 0; });
  return out;
}

}  // namespace

GB groebner(const RingPtr& r, int rank, const std::vector<PVec>& gens) {
  std::vector<SVec> in;
  for (auto& g : gens) {
    if (static_cast<int>(g.size()) != rank) throw Error("InvalidArgument", "generator has wrong length");
    for (auto& f : g)
      if (f.ring() && !f.ring()->same_as(*r)) throw Error("RingMismatch", "generator outside the ambient ring");
    in.push_back(to_sparse(g));
  }
  return GB(r, rank, buchberger(*r, rank, std::move(in)));
}

GB groebner(const RingPtr& r, const std::vector<Poly>& gens) {
  std::vector<PVec> v;
  for (auto& g : gens) v.push_back({g});
  return groebner(r, 1, v);
}

SVec GB::reduce(const SVec& f) const {
  std::vector<int> all(elems_.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  Reducer red{*ring_, elems_, all, ring_->nvars()};
  return red.reduce(f);
}

PVec GB::reduce(const PVec& f) const { return to_dense(reduce(to_sparse(f)), ring_, rank_); }

Poly GB::reduce(const Poly& f) const { return reduce(PVec{f})[0]; }

bool GB::is_everything() const {
  for (int i = 0; i < rank_; ++i)
    if (!contains(unit_vec(ring_, rank_, i))) return false;
  return true;
}

std::vector<PVec> GB::dense() const {
  std::vector<PVec> out;
  for (auto& e : elems_) out.push_back(to_dense(e, ring_, rank_));
  return out;
}

std::vector<Poly> GB::polys() const {
  std::vector<Poly> out;
  for (auto& e : elems_) out.push_back(to_dense(e, ring_, 1)[0]);
  return out;
}

bool GB::verify_criterion() const {
  const Ring& R = *ring_;
  const int n = R.nvars();
  for (size_t i = 0; i < elems_.size(); ++i)
    for (size_t j = i + 1; j < elems_.size(); ++j) {
      const SVec &f = elems_[i], &g = elems_[j];
      if (f.lead().pos != g.lead().pos) continue;
      Mono L = f.lead().m.lcm(g.lead().m, n);
      SVec s = sub_mul(R, SVec{}, 0, fp_neg(fp_inverse(f.lead().c, R.p()), R.p()), L / f.lead().m, f);
      s = sub_mul(R, s, 0, fp_inverse(g.lead().c, R.p()), L / g.lead().m, g);
      if (!reduce(s).zero()) return false;
    }
  return true;
}

// ---- syzygies and lifts ----------------------------------------------------------

Presenter::Presenter(RingPtr r, int rank, std::vector<PVec> gens, std::vector<PVec> rels)
    : ring_(std::move(r)), rank_(rank), k_(static_cast<int>(gens.size())) {
  std::vector<PVec> aug;
  for (int i = 0; i < k_; ++i) aug.push_back(vec_concat(gens[i], unit_vec(ring_, k_, i)));
  for (auto& rel : rels) aug.push_back(vec_concat(rel, zero_vec(ring_, k_)));
  aug_ = groebner(ring_, rank_ + k_, aug);
  std::vector<SVec> img;
  for (auto& e : aug_.elems())
    if (e.lead().pos < rank_) {
      SVec s;
      for (auto& t : e.t)
        if (t.pos < rank_) s.t.push_back(t);
      img.push_back(std::move(s));
    }
  image_ = GB(ring_, rank_, buchberger(*ring_, rank_, std::move(img)));
}

std::vector<PVec> Presenter::syzygies() const {
  std::vector<PVec> out;
  for (auto& e : aug_.elems()) {
    if (e.lead().pos < rank_) continue;
    SVec s;
    for (auto& t : e.t) s.t.push_back({t.m, t.pos - rank_, t.c});
    out.push_back(to_dense(s, ring_, k_));
  }
  return out;
}

std::optional<PVec> Presenter::lift(const PVec& v) const {
  SVec red = aug_.reduce(to_sparse(vec_concat(v, zero_vec(ring_, k_))));
  SVec a;
  for (auto& t : red.t) {
    if (t.pos < rank_) return std::nullopt;
    a.t.push_back({t.m, t.pos - rank_, fp_neg(t.c, ring_->p())});
  }
  return to_dense(a, ring_, k_);
}

std::vector<PVec> syzygies(const RingPtr& r, int rank, const std::vector<PVec>& gens, const std::vector<PVec>& rels) {
  if (gens.empty()) return {};
  return Presenter(r, rank, gens, rels).syzygies();
}

std::optional<PVec> lift(const RingPtr& r, int rank, const PVec& v, const std::vector<PVec>& gens,
                         const std::vector<PVec>& rels) {
  return Presenter(r, rank, gens, rels).lift(v);
}

// ---- ideals ---------------------------------------------------------------------

Ideal::Ideal(RingPtr r, std::vector<Poly> gens) : ring_(std::move(r)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ring()->same_as(*ring_)) throw Error("RingMismatch", "ideal generator from another ring");
    gens_.push_back(g);
  }
}

Ideal Ideal::parse(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Poly> g;
  for (auto& s : gens) g.push_back(parse_poly(r, s));
  return Ideal(r, g);
}

const GB& Ideal::gb() const {
  std::call_once(cache_->once, [&] { cache_->gb = groebner(ring_, gens_); });
  return cache_->gb;
}

bool Ideal::is_zero() const { return gens_.empty(); }
bool Ideal::is_unit() const { return gb().contains(Poly::constant(ring_, 1)); }

bool Ideal::contains(const Ideal& o) const {
  for (auto& g : o.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::operator==(const Ideal& o) const { return contains(o) && o.contains(*this); }

bool Ideal::is_homogeneous() const {
  for (auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << "(";
  auto g = gb().polys();
  for (size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << g[i].str();
  os << ")";
  return os.str();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  auto g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), g);
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<Poly> g;
  for (auto& f : a.gens())
    for (auto& h : b.gens()) g.push_back(f * h);
  return Ideal(a.ring(), g);
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  const RingPtr& R = a.ring();
  std::vector<std::string> vars{"_t"};
  for (auto& v : R->vars()) vars.push_back(v);
  RingPtr T = Ring::make(R->p(), vars, MonoOrder::blocked(1));
  std::vector<int> emb;
  for (int i = 0; i < R->nvars(); ++i) emb.push_back(i + 1);
  Poly t = Poly::var(T, 0), one = Poly::constant(T, 1);
  std::vector<Poly> g;
  for (auto& f : a.gens()) g.push_back(t * f.embed(T, emb));
  for (auto& f : b.gens()) g.push_back((one - t) * f.embed(T, emb));
  GB G = groebner(T, g);
  std::vector<Poly> out;
  for (auto& f : G.polys()) {
    bool free = true;
    for (auto& term : f.terms())
      if (term.m.e[0]) free = false;
    if (!free) continue;
    PolyBuilder pb(R);
    for (auto& term : f.terms()) {
      Mono m;
      for (int i = 0; i < R->nvars(); ++i) m.e[i] = term.m.e[i + 1];
      m.deg = term.m.deg;
      pb.add(m, term.c);
    }
    out.push_back(pb.build());
  }
  return Ideal(R, out);
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  const RingPtr& R = a.ring();
  std::optional<Ideal> acc;
  for (auto& g : b.gens()) {
    std::vector<PVec> gens{{g}};
    std::vector<PVec> rels;
    for (auto& f : a.gens()) rels.push_back({f});
    std::vector<Poly> q;
    for (auto& s : syzygies(R, 1, gens, rels)) q.push_back(s[0]);
    Ideal qi(R, q);
    acc = acc ? ideal_intersection(*acc, qi) : qi;
  }
  return acc ? *acc : Ideal(R, {Poly::constant(R, 1)});
}

bool bracket_membership(const Poly& f, const Ideal& I, int e) {
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= I.ring()->p();
  std::vector<Poly> g;
  for (auto& h : I.gens()) g.push_back(h.pow(q));
  return Ideal(I.ring(), g).contains(f);
}

// ---- ring maps ---------------------------------------------------------------------

RingMap::RingMap(RingSpec source, RingSpec target, std::vector<Poly> images)
    : src_(std::move(source)), tgt_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != src_.ring->nvars())
    throw Error("InvalidArgument", "ring map needs one image per source variable");
  for (auto& f : images_)
    if (!f.ring()->same_as(*tgt_.ring)) throw Error("RingMismatch", "image outside the target ring");
  if (!src_.relations.empty()) {
    Ideal I(tgt_.ring, tgt_.relations);
    for (auto& g : src_.relations)
      if (!I.contains(substitute(g)))
        throw Error("NotWellDefined", "relation " + g.str() + " does not map to zero");
  }
}

Poly RingMap::substitute(const Poly& f) const { return art::substitute(f, tgt_.ring, images_); }

Poly RingMap::apply(const Poly& f) const {
  Poly g = substitute(f);
  if (tgt_.relations.empty()) return g;
  return Ideal(tgt_.ring, tgt_.relations).reduce(g);
}

struct ElimData {
  RingPtr src, tgt, graph;
  int nt = 0, ns = 0;
  GB gb;
};

GraphIdeal::GraphIdeal(const RingMap& phi) : d_(std::make_shared<ElimData>()) {
  auto& d = *d_;
  d.src = phi.source().ring;
  d.tgt = phi.target().ring;
  d.nt = d.tgt->nvars();
  d.ns = d.src->nvars();
  std::vector<std::string> vars;
  for (auto& v : d.tgt->vars()) vars.push_back("_t_" + v);
  for (auto& v : d.src->vars()) vars.push_back("_s_" + v);
  d.graph = Ring::make(d.tgt->p(), vars, MonoOrder::blocked(d.nt));
  std::vector<int> tmap, smap;
  for (int i = 0; i < d.nt; ++i) tmap.push_back(i);
  for (int i = 0; i < d.ns; ++i) smap.push_back(d.nt + i);
  std::vector<Poly> g;
  for (int i = 0; i < d.ns; ++i) g.push_back(Poly::var(d.graph, d.nt + i) - phi.images()[i].embed(d.graph, tmap));
  for (auto& r : phi.target().relations) g.push_back(r.embed(d.graph, tmap));
  for (auto& r : phi.source().relations) g.push_back(r.embed(d.graph, smap));
  d.gb = groebner(d.graph, g);
}

namespace {
std::optional<Poly> graph_to_source(const ElimData& d, const Poly& f) {
  PolyBuilder pb(d.src);
  for (auto& t : f.terms()) {
    for (int i = 0; i < d.nt; ++i)
      if (t.m.e[i]) return std::nullopt;
    Mono m;
    for (int i = 0; i < d.ns; ++i) m.e[i] = t.m.e[d.nt + i];
    m.deg = t.m.deg;
    pb.add(m, t.c);
  }
  return pb.build();
}
}  // namespace

Ideal GraphIdeal::kernel() const {
  std::vector<Poly> k;
  for (auto& f : d_->gb.polys())
    if (auto h = graph_to_source(*d_, f)) k.push_back(*h);
  return Ideal(d_->src, k);
}

std::optional<Poly> GraphIdeal::preimage(const Poly& g) const {
  std::vector<int> tmap;
  for (int i = 0; i < d_->nt; ++i) tmap.push_back(i);
  return graph_to_source(*d_, d_->gb.reduce(g.embed(d_->graph, tmap)));
}

bool GraphIdeal::surjective() const {
  for (int i = 0; i < d_->nt; ++i)
    if (!preimage(Poly::var(d_->tgt, i))) return false;
  return true;
}

Ideal elimination_kernel(const RingMap& phi) { return GraphIdeal(phi).kernel(); }

// ---- resolutions ------------------------------------------------------------------

void minimize_chain(std::vector<Matrix>& d, int first_level) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int lv = std::max(first_level, 0); lv < static_cast<int>(d.size()) && !changed; ++lv) {
      Matrix& M = d[lv];
      for (int r = 0; r < M.rows && !changed; ++r)
        for (int c = 0; c < M.cols && !changed; ++c) {
          const Poly& u = M.at(r, c);
          if (u.is_zero() || !u.is_constant()) continue;
          const RingPtr R = M.ring;
          Poly uinv = Poly::constant(R, fp_inverse(u.constant_term(), R->p()));
          Matrix N(R, M.rows - 1, M.cols - 1);
          for (int i = 0, ni = 0; i < M.rows; ++i) {
            if (i == r) continue;
            for (int j = 0, nj = 0; j < M.cols; ++j) {
              if (j == c) continue;
              Poly v = M.at(i, j);
              if (!M.at(i, c).is_zero() && !M.at(r, j).is_zero()) v = v - M.at(i, c) * uinv * M.at(r, j);
              N.at(ni, nj++) = v;
            }
            ++ni;
          }
          if (lv > 0) {
            Matrix& P = d[lv - 1];
            Matrix Q(R, P.rows, P.cols - 1);
            for (int i = 0; i < P.rows; ++i)
              for (int j = 0, nj = 0; j < P.cols; ++j)
                if (j != r) Q.at(i, nj++) = P.at(i, j);
            P = Q;
          }
          if (lv + 1 < static_cast<int>(d.size())) {
            Matrix& P = d[lv + 1];
            Matrix Q(R, P.rows - 1, P.cols);
            for (int i = 0, ni = 0; i < P.rows; ++i) {
              if (i == c) continue;
              for (int j = 0; j < P.cols; ++j) Q.at(ni, j) = P.at(i, j);
              ++ni;
            }
            P = Q;
          }
          M = N;
          changed = true;
        }
    }
  }
}

std::vector<Matrix> free_resolution(const RingPtr& r, int rank, const std::vector<PVec>& rels, int length_cap) {
  std::vector<PVec> cur;
  for (auto& v : rels)
    if (!vec_is_zero(v)) cur.push_back(v);
  std::vector<Matrix> d{Matrix::from_columns(r, rank, cur)};
  for (int stage = 1;; ++stage) {
    cur = d.back().columns();
    std::vector<PVec> syz;
    if (!cur.empty())
      for (auto& s : syzygies(r, d.back().rows, cur))
        if (!vec_is_zero(s)) syz.push_back(s);
    if (syz.empty()) break;
    if (stage > length_cap) throw Error("LengthCapReached", "resolution longer than " + std::to_string(length_cap));
    d.push_back(Matrix::from_columns(r, static_cast<int>(cur.size()), syz));
    minimize_chain(d, 1);
    if (d.size() > 1 && d.back().cols == 0) {
      d.pop_back();
      break;
    }
  }
  return d;
}

}  // namespace art
