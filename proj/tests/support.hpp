// Small helpers shared by the unit tests.
#pragma once

#include <random>
#include <string>

#include "art/groebner.hpp"

namespace art {

inline Poly P(const RingPtr& r, const std::string& s) { return parse_poly(r, s); }

inline Mono random_mono(std::mt19937& rng, int n, int maxdeg) {
  Mono m;
  std::uniform_int_distribution<int> d(0, maxdeg);
  int left = d(rng);
  for (int i = 0; i < n && left > 0; ++i) {
    std::uniform_int_distribution<int> e(0, left);
    int k = (i == n - 1) ? left : e(rng);
    m.e[i] = static_cast<std::uint8_t>(k);
    m.deg = static_cast<std::uint16_t>(m.deg + k);
    left -= k;
  }
  return m;
}

inline Poly random_poly(const RingPtr& r, std::mt19937& rng, int maxdeg, int nterms) {
  PolyBuilder b(r);
  std::uniform_int_distribution<int> c(0, static_cast<int>(r->p()) - 1);
  for (int k = 0; k < nterms; ++k) b.add(random_mono(rng, r->nvars(), maxdeg), static_cast<coef>(c(rng)));
  return b.build();
}

inline std::vector<Poly> Ps(const RingPtr& r, std::initializer_list<const char*> xs) {
  std::vector<Poly> v;
  for (auto s : xs) v.push_back(parse_poly(r, s));
  return v;
}

}  // namespace art
