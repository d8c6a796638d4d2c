// Frobenius: bracket powers, pushforward presentations, p-bases and the trace generator.
//
// F^e_*M is presented over the ambient P: P acts through r . F_*m = F_*(r^q m), q = p^e.
// F^e_*P^K is free on F_*(x^a e_k) with 0 <= a_i < q, since x^m = x^a (x^b)^q for m = a + q b.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "art/modules.hpp"

namespace art {

// (g^{p^e} : g a generator of I)
Ideal bracket_power(const Ideal& I, int e);

// Restricted monomials x^a, 0 <= a_i < q, last variable fastest.
std::vector<Mono> restricted_monomials(int nvars, coef q);

struct FrobPushforward {
  RingSpec ring;
  int e = 0;
  coef q = 1;
  int rank = 1;              // K, generators of the module pushed forward
  std::vector<Mono> basis;   // restricted monomials
  Module module;             // over P with modulus I; generator (b, k) at index(b, k)

  int index(int b, int k) const { return b * rank + k; }
  // Coordinates of F_*(v) for v in P^K.
  PVec decompose(const PVec& v) const;
  PVec decompose(const Poly& f) const { return decompose(PVec{f}); }
  // Matrix of F_*t |-> F_*(s t); only for the pushforward of the ring itself.
  Matrix multiplication(const Poly& s) const;
  std::string tag(int i) const;
};

// Throws SizeCapExceeded when q^n * K exceeds the configured cap.
FrobPushforward frobenius_pushforward(const RingSpec& R, int e);
FrobPushforward frobenius_pushforward(const Module& W, const RingSpec& R, int e);

bool is_p_generating(const RingSpec& R, const std::vector<Poly>& xs);
bool is_p_basis(const RingSpec& R, const std::vector<Poly>& xs);

struct TraceGenerator {
  ModuleMap phi;                  // F_*R -> R, R standing for the free module on dx_1 ^ ... ^ dx_n
  std::vector<Mono> exponents;    // restricted exponents a, as monomials
  std::vector<Poly> table;        // phi(F_*(xs^a)) reduced in R
  bool free_generator = false;    // F_*R -> Hom(F_*R, R), s |-> phi o s, certified iso
  bool matches_projection = false;
};

// Throws NoPBasis unless xs is a certified p-basis.
TraceGenerator pbasis_trace_generator(const RingSpec& R, const std::vector<Poly>& xs);

struct EllipticReport {
  int generic_rank = -1;
  bool det_iso = false;          // Lambda^2 F_*R ~= Q via an explicit map
  int min_generators = -1;       // dim Q/mQ at m = Q
  std::vector<std::string> refuted_candidates;  // single elements shown not to be a p-basis
};

// Runs the determinant checks for P/(f) with Q = (x+1, y+1); f is the elliptic curve equation.
EllipticReport elliptic_curve_checks(const RingSpec& R, const std::vector<Poly>& Q,
                                     const std::vector<Poly>& candidates);

}  // namespace art
