// Exact arithmetic in F_p and in F_p[x_1..x_n].
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace art {

// Every library failure carries a stable kind string; the CLI maps kinds to report statuses.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Process-wide resource caps. Defaults: degree 60, pushforward basis 4096.
struct Budget {
  static int degree();
  static void set_degree(int d);
  static long size_cap();
  static void set_size_cap(long n);
};

// ---- F_p -------------------------------------------------------------------

using coef = std::uint32_t;

bool is_prime(std::uint32_t p);
coef fp_inverse(coef a, coef p);

inline coef fp_add(coef a, coef b, coef p) { coef s = a + b; return s >= p ? s - p : s; }
inline coef fp_sub(coef a, coef b, coef p) { return a >= b ? a - b : a + p - b; }
inline coef fp_neg(coef a, coef p) { return a == 0 ? 0 : p - a; }
inline coef fp_mul(coef a, coef b, coef p) {
  return static_cast<coef>((static_cast<std::uint64_t>(a) * b) % p);
}
coef fp_pow(coef a, std::uint64_t k, coef p);
coef fp_from_int(long long v, coef p);

struct FpElement {
  coef value = 0;
  coef p = 2;
  FpElement() = default;
  FpElement(long long v, coef prime);
  FpElement operator+(FpElement o) const;
  FpElement operator-(FpElement o) const;
  FpElement operator*(FpElement o) const;
  FpElement inverse() const;
  bool operator==(const FpElement& o) const = default;
};

// ---- monomials ---------------------------------------------------------------

constexpr int kMaxVars = 40;

struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  bool operator==(const Mono& o) const { return deg == o.deg && e == o.e; }
  bool divides(const Mono& o, int n) const;
  Mono operator*(const Mono& o) const;
  Mono operator/(const Mono& o) const;  // requires divisibility
  Mono lcm(const Mono& o, int n) const;
  bool coprime(const Mono& o, int n) const;
};

enum class OrderKind { DegRevLex, Lex, Block };

struct MonoOrder {
  OrderKind kind = OrderKind::DegRevLex;
  int block = 0;  // Block: first `block` variables dominate
  bool operator==(const MonoOrder& o) const = default;
  static MonoOrder degrevlex() { return {}; }
  static MonoOrder lex() { return {OrderKind::Lex, 0}; }
  static MonoOrder blocked(int k) { return {OrderKind::Block, k}; }
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  Ring(coef p, std::vector<std::string> vars, MonoOrder order = {});
  static RingPtr make(coef p, std::vector<std::string> vars, MonoOrder order = {});

  coef p() const { return p_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const MonoOrder& order() const { return order_; }
  int var_index(const std::string& name) const;  // -1 if absent

  // <0, 0, >0 like strcmp; larger means earlier in a sorted polynomial.
  int cmp(const Mono& a, const Mono& b) const;
  bool same_as(const Ring& o) const;

  std::string mono_str(const Mono& m) const;

 private:
  coef p_;
  std::vector<std::string> vars_;
  MonoOrder order_;
};

struct Term {
  Mono m;
  coef c;
};

// Immutable polynomial with terms sorted descending in the ring order.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr r) : ring_(std::move(r)) {}
  static Poly constant(RingPtr r, long long c);
  static Poly var(RingPtr r, int i);
  static Poly var(RingPtr r, const std::string& name);
  static Poly monomial(RingPtr r, const Mono& m, coef c);
  static Poly from_terms(RingPtr r, std::vector<Term> terms);  // any order, merges duplicates

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  coef constant_term() const;
  const Term& lead() const { return terms_.front(); }
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scale(coef c) const;
  Poly mul_term(const Mono& m, coef c) const;
  Poly pow(std::uint64_t k) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Partial derivative, exponents taken mod p as integers.
  Poly diff(int var) const;
  // Same terms, re-sorted for another ring with identical variables/characteristic.
  Poly in_ring(RingPtr other) const;
  // Copy into a ring with more variables: variable i goes to position map[i].
  Poly embed(RingPtr other, const std::vector<int>& map) const;

  std::string str() const;

  struct Cmp;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
  friend class PolyBuilder;
};

// Accumulates terms then canonicalizes once.
class PolyBuilder {
 public:
  explicit PolyBuilder(RingPtr r) : ring_(std::move(r)) {}
  void add(const Mono& m, coef c);
  void add(const Poly& f, coef c = 1);
  Poly build();

 private:
  RingPtr ring_;
  std::vector<Term> buf_;
};

void check_same_ring(const Poly& a, const Poly& b);

// Parse `+ - * ^`, parentheses, integer literals and variable names.
Poly parse_poly(const RingPtr& r, const std::string& text);

// ---- ring maps ---------------------------------------------------------------

// A ring together with an ideal of relations (empty = polynomial ring).
// Relations are kept as given; reduction happens through the Groebner engine.
struct RingSpec {
  RingPtr ring;
  std::vector<Poly> relations;
  static RingSpec poly(RingPtr r) { return {std::move(r), {}}; }
};

// Substitution homomorphism source -> target, one image per source variable.
class RingMap {
 public:
  // Throws NotWellDefined unless every source relation maps into the target ideal.
  RingMap(RingSpec source, RingSpec target, std::vector<Poly> images);

  const RingSpec& source() const { return src_; }
  const RingSpec& target() const { return tgt_; }
  const std::vector<Poly>& images() const { return images_; }

  // Substitute then reduce modulo the target relations.
  Poly apply(const Poly& f) const;
  // Substitution without reduction.
  Poly substitute(const Poly& f) const;

 private:
  RingSpec src_, tgt_;
  std::vector<Poly> images_;
};

// Plain substitution helper used by several modules.
Poly substitute(const Poly& f, const RingPtr& target, const std::vector<Poly>& images);

}  // namespace art
