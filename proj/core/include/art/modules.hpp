// Finitely presented modules as subquotients (span(gens) + span(rels)) / span(rels)
// of a free module P^r over the ambient polynomial ring P.  A module over a
// quotient ring P/I carries I * P^r among its relations.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "art/groebner.hpp"

namespace art {

class Module {
 public:
  Module() = default;
  Module(RingPtr r, int ambient, std::vector<PVec> gens, std::vector<PVec> rels, std::vector<int> degrees = {});

  // P^n / (modulus * P^n)
  static Module free(const RingPtr& r, int n, const std::vector<Poly>& modulus = {});
  // P^n / span(rels) (+ modulus * P^n)
  static Module cokernel(const RingPtr& r, int n, const std::vector<PVec>& rels,
                         const std::vector<Poly>& modulus = {});
  // The ideal (J + I)/I inside P/I.
  static Module ideal(const RingPtr& r, const std::vector<Poly>& J, const std::vector<Poly>& modulus = {});

  const RingPtr& ring() const { return ring_; }
  int ambient() const { return amb_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  const std::vector<PVec>& gens() const { return gens_; }
  const std::vector<PVec>& rels() const { return rels_; }
  const std::vector<int>& degrees() const { return degrees_; }
  bool graded() const { return !degrees_.empty(); }
  Module with_degrees(std::vector<int> d) const;

  const GB& rel_gb() const;
  const Presenter& presenter() const;

  bool is_zero() const;
  // v (ambient) is zero modulo the relations.
  bool is_zero_element(const PVec& v) const;
  bool contains(const PVec& v) const;  // v in span(gens) + span(rels)
  // Coordinates of v with respect to gens, modulo rels.
  std::optional<PVec> coords(const PVec& v) const;
  PVec reduce(const PVec& v) const { return rel_gb().reduce(v); }

  // Cokernel presentation on the same generators: P^k / syzygies.
  Module presentation() const;
  // Drop generators that are redundant with a unit coefficient or zero.
  Module trim() const;

  std::string describe() const;

 private:
  RingPtr ring_;
  int amb_ = 0;
  std::vector<PVec> gens_, rels_;
  std::vector<int> degrees_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Map given by the images (ambient vectors of the target) of the source generators.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(Module src, Module tgt, std::vector<PVec> images, bool check = true);
  // Images in target *generator* coordinates: column j = image of source gen j.
  static ModuleMap from_matrix(Module src, Module tgt, const Matrix& m, bool check = true);

  const Module& source() const { return src_; }
  const Module& target() const { return tgt_; }
  const std::vector<PVec>& images() const { return img_; }

  bool well_defined() const;
  Module kernel() const;
  Module image() const;
  Module cokernel() const;
  bool is_iso() const { return kernel().is_zero() && cokernel().is_zero(); }
  PVec apply_coords(const PVec& a) const;  // sum a_j * image_j
  ModuleMap compose_after(const ModuleMap& first) const;  // this o first
  // Target-generator coordinates of each image (throws if an image leaves the target).
  Matrix matrix() const;

 private:
  Module src_, tgt_;
  std::vector<PVec> img_;
};

struct IsoReport {
  bool kernel_zero = false;
  bool cokernel_zero = false;
  bool iso() const { return kernel_zero && cokernel_zero; }
};
IsoReport kernel_cokernel_report(const ModuleMap& f);

// Hom(M, N) as a subquotient of P^{l*k} (l = N gens, k = M gens); block j holds phi(m_j).
struct HomModule {
  Module M, N;
  Module hom;
  int k = 0, l = 0;
  ModuleMap decode(const PVec& element) const;
  PVec encode(const ModuleMap& f) const;
  // phi as the l x k matrix of N-generator coordinates.
  Matrix as_matrix(const PVec& element) const;
  PVec from_matrix(const Matrix& m) const;
};
HomModule hom_module(const Module& M, const Module& N);
// Search for an isomorphism: generator i |-> generator i, then each Hom generator, then sums of two.
std::optional<ModuleMap> find_isomorphism(const Module& A, const Module& B);

Module tensor_module(const Module& M, const Module& N);
Module exterior_power(const Module& M, int k);
// k x k minors of m arranged on sorted k-subsets (rows: subsets of m.rows, cols: of m.cols).
Matrix wedge_matrix(const Matrix& m, int k);
std::vector<std::vector<int>> subsets(int n, int k);

// dim_{P/m}(M / mM) for a maximal ideal with residue field F_p.
int minimal_generators_at(const Module& M, const std::vector<Poly>& m);
// dim_{F_p} M_d for 0 <= d <= dmax.
std::vector<long> hilbert_function(const Module& M, int dmax);
// Rank over the fraction field of the domain P/I.
int generic_rank(const Module& M, const std::vector<Poly>& domain_ideal);
// Rank over F_p of a constant matrix.
int fp_rank(const Matrix& m);

}  // namespace art
