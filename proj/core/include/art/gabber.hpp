// Gabber's p-th root tower at finite level.
//
// Stage i over R_{i-1} with tuple x: R_i = R_{i-1}[X_1..X_n]/(X_j^p - x_j).
// phi: R_i -> R_{i-1} raises R_{i-1} to the p-th power and sends X_j to x_j; iota is the inclusion.
// Iterating with x replaced by the classes of X gives the truncation R_e ~= G(R;x)/I^[p^e].
#pragma once

#include <vector>

#include "art/frobenius.hpp"

namespace art {

struct GabberStage {
  int level;
  RingSpec ring;                     // R_level
  RingMap phi;                       // R_level -> R_{level-1}
  RingMap iota;                      // R_{level-1} -> R_level
  std::vector<Poly> pbasis_images;   // classes of X_1..X_n
  bool frobenius_identities;         // phi o iota and iota o phi are Frobenius (generators and samples)
  bool phi_surjective;
  bool iota_injective;               // elimination kernel of iota equals the base relations
};

// Variable name of X_j at stage i.
std::string gabber_var(int j, int level);

// Throws NotPGenerating unless xs p-generates R.
GabberStage gabber_step(const RingSpec& R, const std::vector<Poly>& xs, int level = 1, unsigned seed = 1);

struct GabberTruncation {
  RingSpec base;
  std::vector<Poly> xs;
  int e;
  std::vector<GabberStage> stages;
  RingSpec ring;  // R_e
  RingMap pi;     // R_e -> R, composite of the phi
  bool verified() const;
};

GabberTruncation gabber_truncation(const RingSpec& R, const std::vector<Poly>& xs, int e, unsigned seed = 1);

// g o f
RingMap compose(const RingMap& g, const RingMap& f);

// G(F_p; t) at level e: kernel of F_p[X] -> R_e, X |-> X_e, against ((X - t)^{p^e}).
struct PointTruncation {
  Ideal kernel;
  Ideal expected;
  bool surjective = false;
  bool equal = false;
};
PointTruncation gabber_point_truncation(coef p, long t, int e);

// For pi: S ->> R with S carrying a p-basis in its variables: ker(S -> R_i) = (ker pi)^[p^i] for i <= e,
// where S -> R_i sends the j-th variable to X_j at stage i. Throws NotSurjective, NoPBasis.
bool verify_kernel_bracket(const RingSpec& S, const RingMap& pi, int e);

// G(R; x, y)/I^[p^e] ~= (G(R; x)/I^[p^e])[t]/(t^[p^e]) via t_j |-> Y_j - g_j, g_j a lift of y_j.
bool extend_pgens_check(const RingSpec& R, const std::vector<Poly>& x, const std::vector<Poly>& y, int e);

}  // namespace art
