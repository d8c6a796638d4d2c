// Bounded cochain complexes of finite free modules over P/I.
//
// Conventions (fixed library-wide):
//   Hom:    (df) = d_Y f - (-1)^{deg f} f d_X
//   Tensor: d(x (x) y) = dx (x) y + (-1)^{deg x} x (x) dy
//   Shift:  X[k]^n = X^{n+k}, d_{X[k]} = (-1)^k d_X
#pragma once

#include <map>
#include <string>
#include <vector>

#include "art/modules.hpp"

namespace art {

class Complex {
 public:
  Complex() = default;
  // Term in degree lo+i has rank ranks[i]; d[i] maps degree lo+i to lo+i+1.
  // Throws InvalidArgument if shapes disagree or d o d != 0 modulo the modulus.
  Complex(RingPtr r, int lo, std::vector<int> ranks, std::vector<Matrix> d, std::vector<Poly> modulus = {});

  static Complex single(RingPtr r, int rank, int degree, std::vector<Poly> modulus = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& modulus() const { return modulus_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  int rank(int deg) const;
  Matrix diff(int deg) const;  // rank(deg+1) x rank(deg), possibly empty

  Complex shift(int k) const;
  Complex with_modulus(const std::vector<Poly>& extra) const;
  // Substitute ring variables (ring change along a homomorphism of polynomial rings).
  Complex map_ring(const RingPtr& target, const std::vector<Poly>& images) const;

  Module cohomology(int deg) const;
  // Degrees with nonzero cohomology, ascending.
  std::vector<int> cohomology_support() const;
  std::string describe() const;

 private:
  RingPtr ring_;
  int lo_ = 0;
  std::vector<int> ranks_;
  std::vector<Matrix> d_;
  std::vector<Poly> modulus_;
};

// Position of Hom(X^p, Y^{p+n}) inside Hom^n(X, Y); entry (i, j) sits at offset + j*rows + i.
struct HomBlock {
  int p, offset, rows, cols;
};
std::vector<HomBlock> hom_layout(const Complex& X, const Complex& Y, int n);

// Position of X^p (x) Y^{n-p} inside (X (x) Y)^n; basis (i, j) sits at offset + i*cols + j.
struct TensorBlock {
  int p, offset, rows, cols;
};
std::vector<TensorBlock> tensor_layout(const Complex& X, const Complex& Y, int n);

Complex hom_complex(const Complex& X, const Complex& Y);
Complex tensor_complex(const Complex& X, const Complex& Y);

// Koszul complex on u_1..u_d in cochain degrees -d..0; K^{-i} has basis the sorted i-subsets.
Complex koszul_complex(const RingPtr& r, const std::vector<Poly>& u);
// Free resolution of M as a complex in degrees <= 0 (F_i in degree -i).
Complex resolution_complex(const Module& M, int length_cap);
// Hom(resolution of M, T).
Complex rhom_to_module(const Module& M, const Complex& T, int length_cap);

// Degree-preserving map of complexes; missing degrees are zero.
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(Complex src, Complex tgt, std::map<int, Matrix> f, bool check = true);
  static ChainMap identity(const Complex& X);

  const Complex& source() const { return src_; }
  const Complex& target() const { return tgt_; }
  Matrix at(int deg) const;
  bool is_chain_map() const;
  // H^deg(src) -> H^deg(tgt). Extra source relations (times every basis vector) may be added.
  ModuleMap induced(int deg, const std::vector<Poly>& extra_source_modulus = {}) const;
  bool quasi_iso(const std::vector<Poly>& extra_source_modulus = {}) const;
  ChainMap compose_after(const ChainMap& first) const;  // this o first

 private:
  Complex src_, tgt_;
  std::map<int, Matrix> f_;
};

// f |-> post o f o pre, for pre: X2 -> X1 and post: Y1 -> Y2.
ChainMap hom_map(const ChainMap& pre, const ChainMap& post);
ChainMap tensor_map(const ChainMap& a, const ChainMap& b);
// x (x) y |-> (-1)^{|x||y|} y (x) x
ChainMap tensor_swap(const Complex& X, const Complex& Y);
// Hom(A, Hom(B, C)) -> Hom(A (x) B, C), phi |-> (a (x) b |-> phi(a)(b)).
ChainMap hom_tensor_adjunction(const Complex& A, const Complex& B, const Complex& C);
// Hom(B, Y) (x) K -> Hom(B, Y (x) K), f (x) k |-> (b |-> (-1)^{|k||b|} f(b) (x) k).
ChainMap hom_tensor_pull(const Complex& B, const Complex& Y, const Complex& K);

}  // namespace art
