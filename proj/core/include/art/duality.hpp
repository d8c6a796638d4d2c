// Explicit duality: the fundamental local isomorphism, upper shriek for the basic map types,
// the comparison maps xi, canonical dualizing complexes and Frobenius duality.
//
// Conventions:
//   omega_S of a polynomial ring is rank one in degree -n with generator dx_1 ^ ... ^ dx_n.
//   For a regular sequence r with Koszul complex K(r) (e_top in degree -c), the class
//   r_1^* ^ ... ^ r_c^* (x) m in H^k Hom(K, M) is the cocycle f with f(e_top) = (-1)^{ck} m,
//   so that eta(f) = m.
//   lci:     alpha |-> r^* (x) dr_c ^ ... ^ dr_1 ^ theta(alpha)
//   smooth:  alpha (x) beta |-> alpha ^ f^* beta, relative forms first.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "art/complexes.hpp"
#include "art/differentials.hpp"
#include "art/frobenius.hpp"

namespace art {

constexpr int kDefaultLengthCap = 16;

// Chain map F -> G between resolutions (degrees <= 0) lifting f0 in degree 0.
// Throws NotWellDefined if a lift does not exist.
ChainMap lift_comparison(const Complex& F, const Complex& G, const Matrix& f0);

// ---- fundamental local isomorphism --------------------------------------------------------

struct FliReport {
  std::vector<Poly> r;
  Complex koszul;        // K(r)
  Complex rhom;          // Hom(K, M)
  Complex target;        // (M / J)[-c]
  ChainMap eta;
  bool quasi_iso = false;
  std::vector<int> support;  // degrees of nonzero Hom(K, M) cohomology
};
// Throws NotRegularSequence when K(r) has cohomology below degree 0.
FliReport fli_eta(const RingSpec& S, const std::vector<Poly>& r, const Complex& M);

// For M = S[0]: H^c Hom(K, S) -> Hom(Lambda^c(J/J^2), S/J), f |-> (r_1 ^ ... ^ r_c |-> eta(f)).
struct FliModuleReport {
  ModuleMap map;
  bool iso = false;
};
FliModuleReport fli_eta_module(const RingSpec& S, const std::vector<Poly>& r);

// Two pipelines for Ext(S/J, S): Koszul versus the engine resolution.
struct ExtCrossCheck {
  std::vector<int> koszul_support, engine_support;
  std::vector<long> koszul_hilbert, engine_hilbert;  // of H^c, cyclic generator in degree 0
  bool comparison_quasi_iso = false;                  // Hom(resolution) -> Hom(Koszul) from a lifted map
  bool eta_iso = false;
  bool module_iso = false;
  bool agree() const {
    return koszul_support == engine_support && koszul_hilbert == engine_hilbert && comparison_quasi_iso && eta_iso &&
           module_iso;
  }
};
ExtCrossCheck ext_cross_check(const RingSpec& S, const std::vector<Poly>& r, int hilbert_degree = 6);

// ---- upper shriek -----------------------------------------------------------------------------

// f^flat(T) = RHom_R(S, T) for S given as an R-module.
Complex upper_shriek_finite(const Module& S_over_R, const Complex& T, int length_cap = kDefaultLengthCap);
// Surjection R ->> R/J.
Complex upper_shriek_surjection(const RingSpec& R, const std::vector<Poly>& J, const Complex& T,
                                int length_cap = kDefaultLengthCap);
// Frobenius of R, with F_*R presented by frobenius_pushforward.
Complex upper_shriek_frobenius(const RingSpec& R, const Complex& T, int length_cap = kDefaultLengthCap);
// R -> R[y_1..y_d]: L (x) T, L rank one in degree -d (generator dy_1 ^ ... ^ dy_d) first.
Complex upper_shriek_smooth(const RingPtr& R, const std::vector<std::string>& new_vars, const Complex& T);

// Ring R with extra variables appended.
RingPtr adjoin_variables(const RingPtr& R, const std::vector<std::string>& vars);

// ---- xi -----------------------------------------------------------------------------------------

struct XiIso {
  ChainMap map;                   // omega_target -> f^! omega_source
  std::vector<Poly> extra_modulus;
  bool iso = false;
  Poly coefficient;               // scalar relative to the canonical generators
  std::string description;
};

// R polynomial in n variables -> R[y_1..y_d]: dx ^ dy |-> (-1)^{nd} dy (x) dx.
XiIso xi_smooth(const RingPtr& R, const std::vector<std::string>& new_vars);
int smooth_sign(int n, int d);

// T polynomial ->> S = T/(r), with lifts z of a p-basis of S.
XiIso xi_lci(const RingSpec& T, const std::vector<Poly>& r, const std::vector<Poly>& z);
// kappa with dr_c ^ ... ^ dr_1 ^ dz_1 ^ ... ^ dz_n = kappa dt_1 ^ ... ^ dt_N, reduced modulo (r).
Poly lci_coefficient(const RingSpec& T, const std::vector<Poly>& r, const std::vector<Poly>& z);

// R polynomial (n variables) -> S = R[y_1..y_d]/(r_1..r_d) finite free over R, S with p-basis z (lifts in T).
// xi(dz)(s) = sign * tau(s * kappa) dx, tau the Bezoutian residue of S over R.
struct FiniteXi {
  RingPtr T;                       // R variables then y
  std::vector<Poly> r, z;
  std::vector<Poly> basis;         // standard monomials of S over R (in T)
  std::vector<Poly> table;         // xi(dz)(basis_k), coefficients of dx in R (as T polynomials)
  bool iso = false;                // s |-> xi(dz)(s . _) is an isomorphism S -> Hom_R(S, R)
  Poly evaluate(const Poly& s) const;  // xi(dz)(s)
  // Coordinates of s over the basis, coefficients in R (as T polynomials).
  std::vector<Poly> expand(const Poly& s) const;
  Poly tau(const Poly& s) const;       // Bezoutian residue
  Poly kappa;
  int sign = 1;
  int nx = 0, ny = 0;
  RingPtr Ty;                      // y then x, y block dominant
  std::vector<int> to_ty;          // T variable i -> Ty position
  Ideal relations_ty;
  std::vector<Mono> ymonos;        // basis as Ty monomials
  std::vector<Poly> tau_basis;     // tau(basis_k)
};
// Throws NotFinite when S is not finite free over R with the given presentation.
FiniteXi xi_finite_type(const RingPtr& T, int nx, const std::vector<Poly>& r, const std::vector<Poly>& z);

// ---- sign bookkeeping ----------------------------------------------------------------------------

// Compare the two legs of the smooth/lci square for R = F_p[x_1..x_c] ->> F_p -> F_p[y_1..y_d]
// and R -> R[y] ->> F_p[y], with r = x. The legs agree after the swap sign (-1)^{cd}.
struct KoszulSignReport {
  Poly leg_lci_first;
  Poly leg_smooth_first;
  bool equal_with_sign = false;
  bool equal_without_sign = false;
};
KoszulSignReport koszul_sign_check(coef p, int c, int d);

// Frobenius of F_p[x] through F_p[x,y]/(y^p - x) and through F_p[x,y,w]/(y^p - x, w - y - x) with
// p-basis w - x: the evaluation tables of xi(dz) on z^j, 0 <= j < 2p, must coincide.
struct FactorizationReport {
  std::vector<std::string> direct, through_section;
  bool all_iso = false;
  bool matrix_equal = false;
  bool certified() const { return all_iso && matrix_equal; }
};
FactorizationReport frobenius_factorizations(coef p);

// ---- dualizing complexes ------------------------------------------------------------------------

struct DualizingComplex {
  RingPtr S;                 // polynomial ring presenting A
  std::vector<Poly> kernel;  // A = S / kernel
  Complex resolution;        // of A over S, degrees <= 0
  Complex complex;           // Hom_S(resolution, omega_S)
  std::vector<int> support;
};
DualizingComplex canonical_dualizing(const RingSpec& A, int length_cap = kDefaultLengthCap);
DualizingComplex canonical_dualizing(const RingPtr& S, const std::vector<Poly>& kernel,
                                     int length_cap = kDefaultLengthCap);

// For A = S/I and T = S[y] with y_j |-> g_j (g in S): Hom_S(P, omega_S) (x) T -> Hom_T(K(y - g) (x) P, omega_T).
struct KoszulExtension {
  Complex source;
  Complex target;
  ChainMap map;
  std::vector<Poly> u;         // y - g in T
  Complex resolution;          // K(u) (x) P over T
  bool quasi_iso = false;      // on cohomology, with u added to the source
};
KoszulExtension koszul_extension(const RingPtr& S, const std::vector<Poly>& kernel, const RingPtr& T,
                                 const std::map<std::string, Poly>& lifts, int length_cap = kDefaultLengthCap);
// General form for a resolution P and any complex M over S:
// Hom_S(P, M) (x) T -> Hom_T(K(u) (x) P, M (x) L), L rank one in degree -d placed last,
// f |-> (e_top (x) p |-> sigma (-1)^{d |p|} f(p) (x) l), sigma the orientation sign of the variables of T.
KoszulExtension koszul_extension(const RingPtr& S, const Complex& resolution, const Complex& M, const RingPtr& T,
                                 const std::map<std::string, Poly>& lifts);

struct PresentationComparison {
  KoszulExtension first, second;
  ChainMap bridge;             // Hom_T(second resolution) -> Hom_T(first resolution)
  bool bridge_quasi_iso = false;
  std::vector<int> first_support, second_support;
  bool certified() const {
    return first.quasi_iso && second.quasi_iso && bridge_quasi_iso && first_support == second_support;
  }
};
// A = S1/I1 = S2/I2 compared inside T, which contains the variables of both.
PresentationComparison compare_presentations(const RingPtr& S1, const std::vector<Poly>& I1,
                                             const std::map<std::string, Poly>& lifts1, const RingPtr& S2,
                                             const std::vector<Poly>& I2, const std::map<std::string, Poly>& lifts2,
                                             const RingPtr& T, int length_cap = kDefaultLengthCap);

// ---- Frobenius duality ----------------------------------------------------------------------------

struct FrobeniusDualityReport {
  int degree = 0;                // the single cohomology degree of omega_A
  Module omega;                  // W = H^degree
  std::vector<Poly> trace_table; // Phi_P on the restricted monomials, from xi of Frobenius on P
  ModuleMap candidate;           // F_*W -> Hom_A(F_*A, W)
  bool well_defined = false;
  bool iso = false;
};
// Throws NotCohenMacaulay if omega_A has cohomology in more than one degree.
FrobeniusDualityReport verify_frobenius_duality(const RingSpec& A, int length_cap = kDefaultLengthCap);

}  // namespace art
