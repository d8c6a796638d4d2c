// The shriek tensor product over a finite-type F_p-algebra A = S/I, S polynomial.
//
// An A-complex M is carried as RHom_S(A, M') for a bounded complex M' of free S-modules
// (for A = S this is M' itself). Then
//   M (x)^! N = RHom_{S (x) S}(A, M' [x] N') = Hom(K(x' - x) (x) P_A, M'(x) (x) N'(x')),
// with P_A the resolution of A over S. The completed product is never formed; inputs are bounded
// with coherent cohomology. Doubled variables are written x' and follow all unprimed ones.
#pragma once

#include <string>
#include <vector>

#include "art/duality.hpp"

namespace art {

struct EnvelopingRing {
  RingSpec A;
  RingPtr AxA;                   // x then x'
  std::vector<Poly> relations;   // I(x) and I(x')
  std::vector<Poly> diag;        // x_i' - x_i
  std::vector<Poly> left, right; // images of the variables of S
  RingMap mult;                  // AxA ->> A
  bool verified() const;         // mult o inclusions = id, ker(mult) = I + I' + diag
};
EnvelopingRing enveloping_ring(const RingSpec& A);
// Ring with k copies of the variables: x, x', x'', ...
RingPtr multiple_ring(const RingPtr& S, int copies);
std::vector<Poly> copy_images(const RingPtr& S, const RingPtr& big, int copy);

// M [x] N over AxA.
Module external_tensor(const EnvelopingRing& E, const Module& M, const Module& N);
Complex external_tensor(const EnvelopingRing& E, const Complex& M, const Complex& N);

struct ShriekProduct {
  EnvelopingRing env;
  Complex resolution;            // K(x' - x) (x) P_A over AxA
  Complex complex;
  std::vector<int> support;
  bool within_bound = false;     // support inside [a+a'-2 dim, b+b'+2 dim]
};
ShriekProduct shriek_tensor(const RingSpec& A, const Complex& M, const Complex& N,
                            int length_cap = kDefaultLengthCap);

// M -> M (x)^! omega_A as the Koszul extension map along S -> S (x) S, x' |-> x.
struct UnitReport {
  KoszulExtension map;
  std::vector<int> source_support, target_support;
  bool iso = false;
};
UnitReport verify_unit(const RingSpec& A, const Complex& M, int length_cap = kDefaultLengthCap);
// omega_A as a carried complex: omega_S.
Complex omega_carrier(const RingSpec& A);

// Polynomial A only.
struct SymmetryReport {
  ChainMap map;                  // (swap of M (x)^! N) -> N (x)^! M
  bool quasi_iso = false;
};
SymmetryReport verify_symmetry(const RingPtr& S, const Complex& M, const Complex& N);

// (M (x)^! N) (x)^! K against the triple product; both eta maps land on the same complex over S.
struct AssociativityReport {
  bool triple_eta_iso = false;
  bool inner_eta_iso = false;
  bool outer_eta_iso = false;
  bool same_model = false;
  std::vector<int> iterated_support, triple_support;
  bool certified() const {
    return triple_eta_iso && inner_eta_iso && outer_eta_iso && same_model && iterated_support == triple_support;
  }
};
AssociativityReport verify_associativity(const RingPtr& S, const Complex& M, const Complex& N, const Complex& K);

// Hom(X, Y) [x] Hom(X2, Y2) -> Hom(X [x] X2, Y [x] Y2), f (x) g |-> (x (x) x2 |-> (-1)^{|g||x|} f(x) (x) g(x2)).
ChainMap exterior_hom_map(const EnvelopingRing& E, const Complex& X, const Complex& Y, const Complex& X2,
                          const Complex& Y2);

// Frobenius on F_p[x_1..x_n]: F^!(omega (x)^! omega) ~= F^!omega (x)^! F^!omega through tau and the trace generator.
struct FrobeniusMonoidality {
  bool tau_iso = false;
  bool trace_free = false;
  bool pullbacks_iso = false;
  bool certified() const { return tau_iso && trace_free && pullbacks_iso; }
};
FrobeniusMonoidality frobenius_monoidality(const RingPtr& S);

}  // namespace art
