// Kaehler differentials, exterior forms, the conormal sequence and omega of a regular ring.
#pragma once

#include <string>
#include <vector>

#include "art/complexes.hpp"
#include "art/frobenius.hpp"

namespace art {

// Omega_{R/F_p} for R = P/I: generators dx_i (unit vectors), relations dg for g in I plus I.
struct KahlerModule {
  RingSpec ring;
  Module module;
  PVec d(const Poly& f) const;
  std::string tag(int i) const;  // "dx"
};
KahlerModule kahler(const RingSpec& R);

// A k-form on n generators: coefficients on the sorted k-subsets, in subsets(n, k) order.
struct Form {
  int n = 0, k = 0;
  PVec c;
  static Form one(const PVec& v);
  static Form unit(const RingPtr& r, int n);  // the constant 0-form 1
  Form wedge(const Form& o) const;
  Form scale(const Poly& f) const;
  Form operator+(const Form& o) const;
  Form reduce(const Ideal& I) const;
  bool is_zero() const;
  std::string str(const std::vector<std::string>& names) const;
};
// Sign of the shuffle putting the disjoint sorted lists a, b in order; 0 if they meet.
int shuffle_sign(const std::vector<int>& a, const std::vector<int>& b);

// 0 -> J/J^2 -> S (x) Omega_T -> Omega_S -> 0 for S = T/J, J = I_T + (r),
// with a splitting theta(dz_k) = d(z_k) for lifts z_k of a differential basis of Omega_S.
// All three modules are presented over the ambient of T and are annihilated by J.
struct ConormalSequence {
  RingSpec T;
  std::vector<Poly> r;
  std::vector<Poly> J;
  std::vector<Poly> z;
  Module conormal;  // on r_i
  Module middle;    // on dX_i
  Module omega_S;   // on dX_i
  ModuleMap alpha;  // r_i |-> d r_i
  ModuleMap beta;   // dX_i |-> dX_i
  ModuleMap theta;  // Omega_S -> middle
  bool alpha_injective = false;
  bool beta_surjective = false;
  bool exact_middle = false;
  bool theta_section = false;
  bool direct_sum_iso = false;
  bool certified() const {
    return alpha_injective && beta_surjective && exact_middle && theta_section && direct_sum_iso;
  }
};
// Throws SplittingNotFound when {dz_k} is not a basis of Omega_S.
ConormalSequence conormal_sequence(const RingSpec& T, const std::vector<Poly>& r, const std::vector<Poly>& z);
// For a surjection pi: T ->> S; r is read off the kernel. Throws NotSurjective.
ConormalSequence conormal_sequence(const RingMap& pi, const std::vector<Poly>& z);

// Direct sum A (+) B on the concatenated ambient.
Module direct_sum(const Module& A, const Module& B);

struct CanonicalOmega {
  RingSpec ring;
  std::vector<Poly> pbasis;
  int n = 0;
  Complex complex;        // rank one in degree -n, generator dx_1 ^ ... ^ dx_n
  std::string generator;
  bool differential_basis = false;  // {dx_i} freely generates Omega_R
};
// Polynomial rings use their variables when xs is empty; otherwise xs must be a p-basis.
// Throws NotCertifiedRegular.
CanonicalOmega canonical_omega_regular(const RingSpec& R, const std::vector<Poly>& xs = {});

}  // namespace art
