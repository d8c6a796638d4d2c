// Buchberger engine for ideals and submodules of free modules P^r.
#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "art/poly.hpp"

namespace art {

// Dense element of P^r.
using PVec = std::vector<Poly>;

PVec zero_vec(const RingPtr& r, int n);
PVec unit_vec(const RingPtr& r, int n, int i);
PVec vec_add(const PVec& a, const PVec& b);
PVec vec_sub(const PVec& a, const PVec& b);
PVec vec_scale(const PVec& a, const Poly& f);
bool vec_is_zero(const PVec& a);
PVec vec_concat(const PVec& a, const PVec& b);
PVec vec_slice(const PVec& a, int from, int count);

// Dense matrix; column j is the image of the j-th basis vector.
struct Matrix {
  RingPtr ring;
  int rows = 0, cols = 0;
  std::vector<Poly> a;  // row major

  Matrix() = default;
  Matrix(RingPtr r, int m, int n);
  static Matrix from_columns(RingPtr r, int rows, const std::vector<PVec>& cols);
  static Matrix identity(RingPtr r, int n);

  Poly& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Poly& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  PVec column(int j) const;
  std::vector<PVec> columns() const;
  PVec apply(const PVec& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scale(const Poly& f) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
};

// ---- sparse module elements ---------------------------------------------------

struct VTerm {
  Mono m;
  int pos;
  coef c;
};

// Sorted descending in position-over-term order (lower position is larger).
struct SVec {
  std::vector<VTerm> t;
  bool zero() const { return t.empty(); }
  const VTerm& lead() const { return t.front(); }
};

SVec to_sparse(const PVec& v);
PVec to_dense(const SVec& v, const RingPtr& r, int rank);

// Reduced Groebner basis of a submodule of P^rank.
class GB {
 public:
  GB() = default;
  GB(RingPtr r, int rank, std::vector<SVec> elems) : ring_(std::move(r)), rank_(rank), elems_(std::move(elems)) {}

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<SVec>& elems() const { return elems_; }
  size_t size() const { return elems_.size(); }

  SVec reduce(const SVec& f) const;
  PVec reduce(const PVec& f) const;
  Poly reduce(const Poly& f) const;
  bool contains(const PVec& f) const { return vec_is_zero(reduce(f)); }
  bool contains(const Poly& f) const { return reduce(f).is_zero(); }
  // Every basis vector e_i lies in the module.
  bool is_everything() const;
  std::vector<PVec> dense() const;
  std::vector<Poly> polys() const;  // rank 1 only
  // Post-hoc Buchberger criterion: all S-vectors reduce to zero.
  bool verify_criterion() const;

 private:
  RingPtr ring_;
  int rank_ = 0;
  std::vector<SVec> elems_;
};

GB groebner(const RingPtr& r, int rank, const std::vector<PVec>& gens);
GB groebner(const RingPtr& r, const std::vector<Poly>& gens);

// Augmented computation over gens g_1..g_k (plus fixed relations) in P^rank:
// a Groebner basis of (g_i | e_i) rows, yielding syzygies and lifts.
class Presenter {
 public:
  Presenter(RingPtr r, int rank, std::vector<PVec> gens, std::vector<PVec> rels = {});
  // Generators of {a in P^k : sum a_i g_i in span(rels)}.
  std::vector<PVec> syzygies() const;
  // a with v - sum a_i g_i in span(rels), or nullopt.
  std::optional<PVec> lift(const PVec& v) const;
  const GB& image_gb() const { return image_; }
  int ngens() const { return k_; }

 private:
  RingPtr ring_;
  int rank_, k_;
  GB aug_;
  GB image_;
};

std::vector<PVec> syzygies(const RingPtr& r, int rank, const std::vector<PVec>& gens,
                           const std::vector<PVec>& rels = {});
std::optional<PVec> lift(const RingPtr& r, int rank, const PVec& v, const std::vector<PVec>& gens,
                         const std::vector<PVec>& rels = {});

// ---- ideals -------------------------------------------------------------------

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr r, std::vector<Poly> gens);
  static Ideal parse(const RingPtr& r, const std::vector<std::string>& gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  const GB& gb() const;  // write-once cache
  bool contains(const Poly& f) const { return gb().contains(f); }
  Poly reduce(const Poly& f) const { return gb().reduce(f); }
  bool is_zero() const;
  bool is_unit() const;
  bool contains(const Ideal& o) const;
  bool operator==(const Ideal& o) const;  // ideal equality via reduced GBs
  bool is_homogeneous() const;
  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  struct Cache {
    std::once_flag once;
    GB gb;
  };
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_quotient(const Ideal& a, const Ideal& b);
// f in I^{[p^e]}
bool bracket_membership(const Poly& f, const Ideal& I, int e);

// ---- ring maps, elimination ------------------------------------------------------

struct ElimData;

// Graph-ideal data for a substitution map S -> T/I_T: kernel, image test, preimages.
class GraphIdeal {
 public:
  explicit GraphIdeal(const RingMap& phi);
  // ker(phi) as an ideal of the source ambient (contains the source relations).
  Ideal kernel() const;
  // g in target with g = phi(h); returns h (in source ambient) or nullopt.
  std::optional<Poly> preimage(const Poly& g) const;
  bool surjective() const;

 private:
  std::shared_ptr<ElimData> d_;
};

Ideal elimination_kernel(const RingMap& phi);

// Free resolution of coker(rels) with rels columns in P^rank: d[0] is the
// presentation matrix (rank x #rels), d[i] maps stage i+1 to stage i.
// Stops when a kernel is zero or at length_cap stages.
std::vector<Matrix> free_resolution(const RingPtr& r, int rank, const std::vector<PVec>& rels, int length_cap);

// Cancel unit entries in a chain of free modules d[0], d[1], ... (d[i]: F_{i+1} -> F_i).
// Entries of d[i] with i >= first_level are eligible.
void minimize_chain(std::vector<Matrix>& d, int first_level);

}  // namespace art
