#include "art/complexes.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace art {

namespace {

Poly sgn(const RingPtr& r, bool negative) { return Poly::constant(r, negative ? -1 : 1); }

bool odd(long k) { return (k % 2 + 2) % 2 == 1; }

bool zero_mod(const Matrix& m, const std::vector<Poly>& modulus) {
  if (modulus.empty()) return m.is_zero();
  Ideal I(m.ring, modulus);
  for (auto& a : m.a)
    if (!I.reduce(a).is_zero()) return false;
  return true;
}

std::vector<Poly> merge_modulus(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Poly> out = a;
  for (auto& f : b)
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  return out;
}

const HomBlock* find_block(const std::vector<HomBlock>& L, int p) {
  for (auto& b : L)
    if (b.p == p) return &b;
  return nullptr;
}

const TensorBlock* find_block(const std::vector<TensorBlock>& L, int p) {
  for (auto& b : L)
    if (b.p == p) return &b;
  return nullptr;
}

int layout_size(const std::vector<HomBlock>& L) {
  int s = 0;
  for (auto& b : L) s += b.rows * b.cols;
  return s;
}

int layout_size(const std::vector<TensorBlock>& L) {
  int s = 0;
  for (auto& b : L) s += b.rows * b.cols;
  return s;
}

bool empty_complex(const Complex& X) { return X.hi() < X.lo(); }

}  // namespace

// ---- Complex ------------------------------------------------------------------

Complex::Complex(RingPtr r, int lo, std::vector<int> ranks, std::vector<Matrix> d, std::vector<Poly> modulus)
    : ring_(std::move(r)), lo_(lo), ranks_(std::move(ranks)), d_(std::move(d)), modulus_(std::move(modulus)) {
  const size_t want = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (d_.size() != want) throw Error("InvalidArgument", "complex: one differential between consecutive terms");
  for (size_t i = 0; i < d_.size(); ++i)
    if (d_[i].rows != ranks_[i + 1] || d_[i].cols != ranks_[i])
      throw Error("InvalidArgument", "complex: differential shape mismatch");
  for (size_t i = 0; i + 1 < d_.size(); ++i)
    if (!zero_mod(d_[i + 1] * d_[i], modulus_)) throw Error("InvalidArgument", "complex: d o d is not zero");
}

Complex Complex::single(RingPtr r, int rank, int degree, std::vector<Poly> modulus) {
  return Complex(std::move(r), degree, {rank}, {}, std::move(modulus));
}

int Complex::rank(int deg) const {
  if (deg < lo_ || deg > hi()) return 0;
  return ranks_[deg - lo_];
}

Matrix Complex::diff(int deg) const {
  if (deg >= lo_ && deg < hi()) return d_[deg - lo_];
  return Matrix(ring_, rank(deg + 1), rank(deg));
}

Complex Complex::shift(int k) const {
  std::vector<Matrix> d = d_;
  if (odd(k))
    for (auto& m : d) m = m.scale(sgn(ring_, true));
  return Complex(ring_, lo_ - k, ranks_, d, modulus_);
}

Complex Complex::with_modulus(const std::vector<Poly>& extra) const {
  return Complex(ring_, lo_, ranks_, d_, merge_modulus(modulus_, extra));
}

Complex Complex::map_ring(const RingPtr& target, const std::vector<Poly>& images) const {
  std::vector<Matrix> d;
  for (auto& m : d_) {
    Matrix t(target, m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) t.a[i] = substitute(m.a[i], target, images);
    d.push_back(t);
  }
  std::vector<Poly> mod;
  for (auto& f : modulus_) mod.push_back(substitute(f, target, images));
  return Complex(target, lo_, ranks_, d, mod);
}

Module Complex::cohomology(int deg) const {
  const int r = rank(deg);
  if (r == 0) return Module(ring_, 0, {}, {});
  const int t = rank(deg + 1);
  std::vector<PVec> kernel;
  if (t == 0) {
    for (int i = 0; i < r; ++i) kernel.push_back(unit_vec(ring_, r, i));
  } else {
    std::vector<PVec> trels;
    for (auto& f : modulus_)
      for (int j = 0; j < t; ++j) {
        PVec v = zero_vec(ring_, t);
        v[j] = f;
        trels.push_back(v);
      }
    kernel = syzygies(ring_, t, diff(deg).columns(), trels);
  }
  std::vector<PVec> rels = diff(deg - 1).columns();
  for (auto& f : modulus_)
    for (int j = 0; j < r; ++j) {
      PVec v = zero_vec(ring_, r);
      v[j] = f;
      rels.push_back(v);
    }
  return Module(ring_, r, kernel, rels);
}

std::vector<int> Complex::cohomology_support() const {
  std::vector<int> out;
  for (int k = lo_; k <= hi(); ++k)
    if (!cohomology(k).is_zero()) out.push_back(k);
  return out;
}

std::string Complex::describe() const {
  std::ostringstream os;
  os << "complex [" << lo_ << ".." << hi() << "] ranks";
  for (int r : ranks_) os << ' ' << r;
  return os.str();
}

// ---- layouts and constructions ----------------------------------------------------

std::vector<HomBlock> hom_layout(const Complex& X, const Complex& Y, int n) {
  std::vector<HomBlock> out;
  int off = 0;
  for (int p = X.lo(); p <= X.hi(); ++p) {
    const int rows = Y.rank(p + n), cols = X.rank(p);
    if (rows == 0 || cols == 0) continue;
    out.push_back({p, off, rows, cols});
    off += rows * cols;
  }
  return out;
}

std::vector<TensorBlock> tensor_layout(const Complex& X, const Complex& Y, int n) {
  std::vector<TensorBlock> out;
  int off = 0;
  for (int p = X.lo(); p <= X.hi(); ++p) {
    const int rows = X.rank(p), cols = Y.rank(n - p);
    if (rows == 0 || cols == 0) continue;
    out.push_back({p, off, rows, cols});
    off += rows * cols;
  }
  return out;
}

Complex hom_complex(const Complex& X, const Complex& Y) {
  const RingPtr& R = X.ring();
  auto mod = merge_modulus(X.modulus(), Y.modulus());
  if (empty_complex(X) || empty_complex(Y)) return Complex(R, 0, {}, {}, mod);
  const int lo = Y.lo() - X.hi(), hi = Y.hi() - X.lo();
  std::vector<int> ranks;
  std::vector<Matrix> d;
  for (int n = lo; n <= hi; ++n) ranks.push_back(layout_size(hom_layout(X, Y, n)));
  for (int n = lo; n < hi; ++n) {
    auto Ls = hom_layout(X, Y, n), Lt = hom_layout(X, Y, n + 1);
    Matrix D(R, layout_size(Lt), layout_size(Ls));
    const Poly minus_sign = sgn(R, !odd(n));  // -(-1)^n
    for (auto& bt : Lt) {
      const int p = bt.p;
      if (auto bs = find_block(Ls, p)) {
        Matrix dy = Y.diff(p + n);
        for (int j = 0; j < bt.cols; ++j)
          for (int i2 = 0; i2 < bt.rows; ++i2)
            for (int i = 0; i < bs->rows; ++i) {
              const Poly& c = dy.at(i2, i);
              if (!c.is_zero()) D.at(bt.offset + j * bt.rows + i2, bs->offset + j * bs->rows + i) =
                  D.at(bt.offset + j * bt.rows + i2, bs->offset + j * bs->rows + i) + c;
            }
      }
      if (auto bs = find_block(Ls, p + 1)) {
        Matrix dx = X.diff(p);
        for (int j = 0; j < bt.cols; ++j)
          for (int i2 = 0; i2 < bt.rows; ++i2)
            for (int k = 0; k < bs->cols; ++k) {
              const Poly& c = dx.at(k, j);
              if (c.is_zero()) continue;
              Poly& e = D.at(bt.offset + j * bt.rows + i2, bs->offset + k * bs->rows + i2);
              e = e + c * minus_sign;
            }
      }
    }
    d.push_back(D);
  }
  return Complex(R, lo, ranks, d, mod);
}

Complex tensor_complex(const Complex& X, const Complex& Y) {
  const RingPtr& R = X.ring();
  auto mod = merge_modulus(X.modulus(), Y.modulus());
  if (empty_complex(X) || empty_complex(Y)) return Complex(R, 0, {}, {}, mod);
  const int lo = X.lo() + Y.lo(), hi = X.hi() + Y.hi();
  std::vector<int> ranks;
  std::vector<Matrix> d;
  for (int n = lo; n <= hi; ++n) ranks.push_back(layout_size(tensor_layout(X, Y, n)));
  for (int n = lo; n < hi; ++n) {
    auto Ls = tensor_layout(X, Y, n), Lt = tensor_layout(X, Y, n + 1);
    Matrix D(R, layout_size(Lt), layout_size(Ls));
    for (auto& bs : Ls) {
      const int p = bs.p, q = n - p;
      if (auto bt = find_block(Lt, p + 1)) {
        Matrix dx = X.diff(p);
        for (int i = 0; i < bs.rows; ++i)
          for (int j = 0; j < bs.cols; ++j)
            for (int i2 = 0; i2 < bt->rows; ++i2) {
              const Poly& c = dx.at(i2, i);
              if (c.is_zero()) continue;
              Poly& e = D.at(bt->offset + i2 * bt->cols + j, bs.offset + i * bs.cols + j);
              e = e + c;
            }
      }
      if (auto bt = find_block(Lt, p)) {
        Matrix dy = Y.diff(q);
        const Poly s = sgn(R, odd(p));
        for (int i = 0; i < bs.rows; ++i)
          for (int j = 0; j < bs.cols; ++j)
            for (int j2 = 0; j2 < bt->cols; ++j2) {
              const Poly& c = dy.at(j2, j);
              if (c.is_zero()) continue;
              Poly& e = D.at(bt->offset + i * bt->cols + j2, bs.offset + i * bs.cols + j);
              e = e + c * s;
            }
      }
    }
    d.push_back(D);
  }
  return Complex(R, lo, ranks, d, mod);
}

Complex koszul_complex(const RingPtr& r, const std::vector<Poly>& u) {
  const int d = static_cast<int>(u.size());
  std::vector<int> ranks;
  std::vector<Matrix> diffs;
  for (int i = d; i >= 0; --i) ranks.push_back(static_cast<int>(subsets(d, i).size()));
  for (int i = d; i >= 1; --i) {
    auto src = subsets(d, i), tgt = subsets(d, i - 1);
    Matrix D(r, static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (size_t c = 0; c < src.size(); ++c)
      for (int pos = 0; pos < i; ++pos) {
        std::vector<int> J = src[c];
        J.erase(J.begin() + pos);
        const int row = static_cast<int>(std::lower_bound(tgt.begin(), tgt.end(), J) - tgt.begin());
        const Poly& a = u[src[c][pos]];
        D.at(row, static_cast<int>(c)) = odd(pos) ? D.at(row, static_cast<int>(c)) - a : D.at(row, static_cast<int>(c)) + a;
      }
    diffs.push_back(D);
  }
  return Complex(r, -d, ranks, diffs);
}

Complex resolution_complex(const Module& M, int length_cap) {
  const RingPtr& R = M.ring();
  Module Mp = M.presentation();
  const int k = Mp.ngens();
  auto d = free_resolution(R, k, Mp.rels(), length_cap);
  std::vector<int> F{k};
  for (auto& m : d) F.push_back(m.cols);
  size_t len = F.size();
  while (len > 1 && F[len - 1] == 0) --len;
  std::vector<int> ranks;
  std::vector<Matrix> diffs;
  for (size_t i = len; i-- > 0;) ranks.push_back(F[i]);
  for (size_t i = len - 1; i-- > 0;) diffs.push_back(d[i]);
  return Complex(R, -static_cast<int>(len - 1), ranks, diffs);
}

Complex rhom_to_module(const Module& M, const Complex& T, int length_cap) {
  return hom_complex(resolution_complex(M, length_cap), T);
}

// ---- chain maps -------------------------------------------------------------------

ChainMap::ChainMap(Complex src, Complex tgt, std::map<int, Matrix> f, bool check)
    : src_(std::move(src)), tgt_(std::move(tgt)), f_(std::move(f)) {
  for (auto& [deg, m] : f_)
    if (m.rows != tgt_.rank(deg) || m.cols != src_.rank(deg))
      throw Error("InvalidArgument", "chain map: component shape mismatch");
  if (check && !is_chain_map()) throw Error("NotWellDefined", "chain map does not commute with differentials");
}

ChainMap ChainMap::identity(const Complex& X) {
  std::map<int, Matrix> f;
  for (int k = X.lo(); k <= X.hi(); ++k) f[k] = Matrix::identity(X.ring(), X.rank(k));
  return ChainMap(X, X, f, false);
}

Matrix ChainMap::at(int deg) const {
  auto it = f_.find(deg);
  if (it != f_.end()) return it->second;
  return Matrix(tgt_.ring(), tgt_.rank(deg), src_.rank(deg));
}

bool ChainMap::is_chain_map() const {
  const int lo = std::min(src_.lo(), tgt_.lo()) - 1, hi = std::max(src_.hi(), tgt_.hi());
  for (int k = lo; k <= hi; ++k) {
    Matrix lhs = tgt_.diff(k) * at(k);
    Matrix rhs = at(k + 1) * src_.diff(k);
    if (!zero_mod(lhs - rhs, tgt_.modulus())) return false;
  }
  return true;
}

ModuleMap ChainMap::induced(int deg, const std::vector<Poly>& extra) const {
  Module Hs = src_.cohomology(deg);
  if (!extra.empty()) {
    std::vector<PVec> rels = Hs.rels();
    for (auto& f : extra)
      for (int j = 0; j < Hs.ambient(); ++j) {
        PVec v = zero_vec(Hs.ring(), Hs.ambient());
        v[j] = f;
        rels.push_back(v);
      }
    Hs = Module(Hs.ring(), Hs.ambient(), Hs.gens(), rels);
  }
  Module Ht = tgt_.cohomology(deg);
  Matrix m = at(deg);
  std::vector<PVec> imgs;
  for (auto& g : Hs.gens()) imgs.push_back(m.apply(g));
  return ModuleMap(Hs, Ht, imgs);
}

bool ChainMap::quasi_iso(const std::vector<Poly>& extra) const {
  const int lo = std::min(src_.lo(), tgt_.lo()), hi = std::max(src_.hi(), tgt_.hi());
  for (int k = lo; k <= hi; ++k)
    if (!induced(k, extra).is_iso()) return false;
  return true;
}

ChainMap ChainMap::compose_after(const ChainMap& first) const {
  std::map<int, Matrix> f;
  const int lo = first.source().lo(), hi = first.source().hi();
  for (int k = lo; k <= hi; ++k) f[k] = at(k) * first.at(k);
  return ChainMap(first.source(), tgt_, f, false);
}

ChainMap hom_map(const ChainMap& pre, const ChainMap& post) {
  const Complex& X2 = pre.source();
  const Complex& X1 = pre.target();
  const Complex& Y1 = post.source();
  const Complex& Y2 = post.target();
  Complex H1 = hom_complex(X1, Y1), H2 = hom_complex(X2, Y2);
  const RingPtr& R = H1.ring();
  std::map<int, Matrix> f;
  for (int n = H2.lo(); n <= H2.hi(); ++n) {
    auto L1 = hom_layout(X1, Y1, n), L2 = hom_layout(X2, Y2, n);
    Matrix M(R, H2.rank(n), H1.rank(n));
    for (auto& b2 : L2) {
      auto b1 = find_block(L1, b2.p);
      if (!b1) continue;
      Matrix po = post.at(b2.p + n), pr = pre.at(b2.p);
      for (int i2 = 0; i2 < b2.rows; ++i2)
        for (int j2 = 0; j2 < b2.cols; ++j2)
          for (int i = 0; i < b1->rows; ++i) {
            const Poly& a = po.at(i2, i);
            if (a.is_zero()) continue;
            for (int j = 0; j < b1->cols; ++j) {
              const Poly& b = pr.at(j, j2);
              if (b.is_zero()) continue;
              Poly& e = M.at(b2.offset + j2 * b2.rows + i2, b1->offset + j * b1->rows + i);
              e = e + a * b;
            }
          }
    }
    f[n] = M;
  }
  return ChainMap(H1, H2, f);
}

ChainMap tensor_map(const ChainMap& a, const ChainMap& b) {
  Complex S = tensor_complex(a.source(), b.source()), T = tensor_complex(a.target(), b.target());
  const RingPtr& R = S.ring();
  std::map<int, Matrix> f;
  for (int n = S.lo(); n <= S.hi(); ++n) {
    auto Ls = tensor_layout(a.source(), b.source(), n), Lt = tensor_layout(a.target(), b.target(), n);
    Matrix M(R, T.rank(n), S.rank(n));
    for (auto& bs : Ls) {
      auto bt = find_block(Lt, bs.p);
      if (!bt) continue;
      Matrix A = a.at(bs.p), B = b.at(n - bs.p);
      for (int i = 0; i < bs.rows; ++i)
        for (int j = 0; j < bs.cols; ++j)
          for (int i2 = 0; i2 < bt->rows; ++i2) {
            if (A.at(i2, i).is_zero()) continue;
            for (int j2 = 0; j2 < bt->cols; ++j2) {
              if (B.at(j2, j).is_zero()) continue;
              M.at(bt->offset + i2 * bt->cols + j2, bs.offset + i * bs.cols + j) = A.at(i2, i) * B.at(j2, j);
            }
          }
    }
    f[n] = M;
  }
  return ChainMap(S, T, f);
}

ChainMap tensor_swap(const Complex& X, const Complex& Y) {
  Complex S = tensor_complex(X, Y), T = tensor_complex(Y, X);
  const RingPtr& R = S.ring();
  std::map<int, Matrix> f;
  for (int n = S.lo(); n <= S.hi(); ++n) {
    auto Ls = tensor_layout(X, Y, n), Lt = tensor_layout(Y, X, n);
    Matrix M(R, T.rank(n), S.rank(n));
    for (auto& bs : Ls) {
      const int p = bs.p, q = n - p;
      auto bt = find_block(Lt, q);
      const Poly s = sgn(R, odd(static_cast<long>(p) * q));
      for (int i = 0; i < bs.rows; ++i)
        for (int j = 0; j < bs.cols; ++j) M.at(bt->offset + j * bt->cols + i, bs.offset + i * bs.cols + j) = s;
    }
    f[n] = M;
  }
  return ChainMap(S, T, f);
}

ChainMap hom_tensor_adjunction(const Complex& A, const Complex& B, const Complex& C) {
  Complex H = hom_complex(B, C);
  Complex S = hom_complex(A, H);
  Complex AB = tensor_complex(A, B);
  Complex T = hom_complex(AB, C);
  const RingPtr& R = S.ring();
  const Poly one = Poly::constant(R, 1);
  std::map<int, Matrix> f;
  for (int n = S.lo(); n <= S.hi(); ++n) {
    Matrix M(R, T.rank(n), S.rank(n));
    auto Ls = hom_layout(A, H, n), Lt = hom_layout(AB, C, n);
    for (auto& ba : Ls) {
      const int p = ba.p;
      for (auto& bb : hom_layout(B, C, p + n)) {
        const int q = bb.p, s = p + q;
        auto bt = find_block(Lt, s);
        auto tl = tensor_layout(A, B, s);
        auto tb = find_block(tl, p);
        if (!bt || !tb) continue;
        for (int ja = 0; ja < ba.cols; ++ja)
          for (int jb = 0; jb < bb.cols; ++jb)
            for (int ic = 0; ic < bb.rows; ++ic) {
              const int src = ba.offset + ja * ba.rows + bb.offset + jb * bb.rows + ic;
              const int col = tb->offset + ja * tb->cols + jb;
              M.at(bt->offset + col * bt->rows + ic, src) = one;
            }
      }
    }
    f[n] = M;
  }
  return ChainMap(S, T, f);
}

ChainMap hom_tensor_pull(const Complex& B, const Complex& Y, const Complex& K) {
  Complex H = hom_complex(B, Y);
  Complex S = tensor_complex(H, K);
  Complex YK = tensor_complex(Y, K);
  Complex T = hom_complex(B, YK);
  const RingPtr& R = S.ring();
  std::map<int, Matrix> f;
  for (int n = S.lo(); n <= S.hi(); ++n) {
    Matrix M(R, T.rank(n), S.rank(n));
    auto Lt = hom_layout(B, YK, n);
    for (auto& tb : tensor_layout(H, K, n)) {
      const int p = tb.p, q = n - p;
      for (auto& hb : hom_layout(B, Y, p)) {
        const int s = hb.p;
        auto ob = find_block(Lt, s);
        auto yl = tensor_layout(Y, K, s + n);
        auto yb = find_block(yl, s + p);
        if (!ob || !yb) continue;
        const Poly sign = sgn(R, odd(static_cast<long>(q) * s));
        for (int jb = 0; jb < hb.cols; ++jb)
          for (int iy = 0; iy < hb.rows; ++iy)
            for (int k = 0; k < tb.cols; ++k) {
              const int h = hb.offset + jb * hb.rows + iy;
              const int src = tb.offset + h * tb.cols + k;
              const int t = yb->offset + iy * yb->cols + k;
              M.at(ob->offset + jb * ob->rows + t, src) = sign;
            }
      }
    }
    f[n] = M;
  }
  return ChainMap(S, T, f);
}

}  // namespace art
