#include "art/poly.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace art {

namespace {
std::atomic<int> g_degree_cap{60};
std::atomic<long> g_size_cap{4096};
}  // namespace

int Budget::degree() { return g_degree_cap.load(); }
void Budget::set_degree(int d) { g_degree_cap.store(d); }
long Budget::size_cap() { return g_size_cap.load(); }
void Budget::set_size_cap(long n) { g_size_cap.store(n); }

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

coef fp_pow(coef a, std::uint64_t k, coef p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return static_cast<coef>(r);
}

coef fp_inverse(coef a, coef p) {
  a %= p;
  if (a == 0) throw Error("ZeroInverse", "0 has no inverse mod " + std::to_string(p));
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    long long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += p;
  return static_cast<coef>(t);
}

coef fp_from_int(long long v, coef p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<coef>(r);
}

FpElement::FpElement(long long v, coef prime) : value(fp_from_int(v, prime)), p(prime) {}
FpElement FpElement::operator+(FpElement o) const { return FpElement(fp_add(value, o.value, p), p); }
FpElement FpElement::operator-(FpElement o) const { return FpElement(fp_sub(value, o.value, p), p); }
FpElement FpElement::operator*(FpElement o) const { return FpElement(fp_mul(value, o.value, p), p); }
FpElement FpElement::inverse() const { return FpElement(fp_inverse(value, p), p); }

// ---- Mono ------------------------------------------------------------------

bool Mono::divides(const Mono& o, int n) const {
  if (deg > o.deg) return false;
  for (int i = 0; i < n; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(e[i]) + o.e[i];
    if (s > 255) throw Error("DegreeBudgetExceeded", "exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = static_cast<std::uint16_t>(deg + o.deg);
  return r;
}

Mono Mono::operator/(const Mono& o) const {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
  r.deg = static_cast<std::uint16_t>(deg - o.deg);
  return r;
}

Mono Mono::lcm(const Mono& o, int n) const {
  Mono r;
  int d = 0;
  for (int i = 0; i < n; ++i) {
    r.e[i] = std::max(e[i], o.e[i]);
    d += r.e[i];
  }
  r.deg = static_cast<std::uint16_t>(d);
  return r;
}

bool Mono::coprime(const Mono& o, int n) const {
  for (int i = 0; i < n; ++i)
    if (e[i] && o.e[i]) return false;
  return true;
}

// ---- Ring ------------------------------------------------------------------

Ring::Ring(coef p, std::vector<std::string> vars, MonoOrder order)
    : p_(p), vars_(std::move(vars)), order_(order) {
  if (p >= (1u << 16) || !is_prime(p))
    throw Error("InvalidArgument", "characteristic must be a prime below 2^16, got " + std::to_string(p));
  if (static_cast<int>(vars_.size()) > kMaxVars)
    throw Error("InvalidArgument", "too many variables");
  std::unordered_set<std::string> seen;
  for (auto& v : vars_)
    if (!seen.insert(v).second) throw Error("InvalidArgument", "duplicate variable " + v);
  if (order_.kind == OrderKind::Block && (order_.block < 0 || order_.block > nvars()))
    throw Error("InvalidArgument", "bad block size");
}

RingPtr Ring::make(coef p, std::vector<std::string> vars, MonoOrder order) {
  return std::make_shared<const Ring>(p, std::move(vars), order);
}

int Ring::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

namespace {
int drl(const Mono& a, const Mono& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}
}  // namespace

int Ring::cmp(const Mono& a, const Mono& b) const {
  const int n = nvars();
  switch (order_.kind) {
    case OrderKind::DegRevLex: {
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (int i = n - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      return 0;
    }
    case OrderKind::Lex:
      for (int i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    case OrderKind::Block: {
      int c = drl(a, b, 0, order_.block);
      if (c) return c;
      return drl(a, b, order_.block, n);
    }
  }
  return 0;
}

bool Ring::same_as(const Ring& o) const {
  return this == &o || (p_ == o.p_ && vars_ == o.vars_ && order_ == o.order_);
}

std::string Ring::mono_str(const Mono& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

// ---- Poly ------------------------------------------------------------------

void check_same_ring(const Poly& a, const Poly& b) {
  if (!a.ring() || !b.ring() || !a.ring()->same_as(*b.ring()))
    throw Error("RingMismatch", "operands live in different rings");
}

Poly Poly::constant(RingPtr r, long long c) {
  Poly f(r);
  coef v = fp_from_int(c, r->p());
  if (v) f.terms_.push_back({Mono{}, v});
  return f;
}

Poly Poly::var(RingPtr r, int i) {
  Mono m;
  m.e[i] = 1;
  m.deg = 1;
  return monomial(std::move(r), m, 1);
}

Poly Poly::var(RingPtr r, const std::string& name) {
  int i = r->var_index(name);
  if (i < 0) throw Error("NameError", "unknown variable " + name);
  return var(std::move(r), i);
}

Poly Poly::monomial(RingPtr r, const Mono& m, coef c) {
  Poly f(r);
  c %= r->p();
  if (c) f.terms_.push_back({m, c});
  return f;
}

Poly Poly::from_terms(RingPtr r, std::vector<Term> terms) {
  PolyBuilder b(std::move(r));
  for (auto& t : terms) b.add(t.m, t.c);
  return b.build();
}

void PolyBuilder::add(const Mono& m, coef c) {
  c %= ring_->p();
  if (c) buf_.push_back({m, c});
}

void PolyBuilder::add(const Poly& f, coef c) {
  if (c % ring_->p() == 0) return;
  for (auto& t : f.terms()) buf_.push_back({t.m, fp_mul(t.c, c, ring_->p())});
}

Poly PolyBuilder::build() {
  const Ring& R = *ring_;
  std::sort(buf_.begin(), buf_.end(), [&](const Term& a, const Term& b) { return R.cmp(a.m, b.m) > 0; });
  Poly f(ring_);
  for (auto& t : buf_) {
    if (!f.terms_.empty() && f.terms_.back().m == t.m) {
      f.terms_.back().c = fp_add(f.terms_.back().c, t.c, R.p());
      if (f.terms_.back().c == 0) f.terms_.pop_back();
    } else {
      f.terms_.push_back(t);
    }
  }
  buf_.clear();
  return f;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.deg == 0); }

coef Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().m.deg == 0) return terms_.back().c;
  return 0;
}

int Poly::degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max<int>(d, t.m.deg);
  return d;
}

bool Poly::is_homogeneous() const {
  for (auto& t : terms_)
    if (t.m.deg != terms_.front().m.deg) return false;
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  check_same_ring(*this, o);
  const Ring& R = *ring_;
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = R.cmp(terms_[i].m, o.terms_[j].m);
    if (c > 0) r.terms_.push_back(terms_[i++]);
    else if (c < 0) r.terms_.push_back(o.terms_[j++]);
    else {
      coef s = fp_add(terms_[i].c, o.terms_[j].c, R.p());
      if (s) r.terms_.push_back({terms_[i].m, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = fp_neg(t.c, ring_->p());
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scale(coef c) const {
  if (!ring_) return *this;
  c %= ring_->p();
  Poly r(ring_);
  if (!c) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = fp_mul(t.c, c, ring_->p());
  return r;
}

Poly Poly::mul_term(const Mono& m, coef c) const {
  Poly r(ring_);
  if (!ring_ || c % ring_->p() == 0) return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.m * m, fp_mul(t.c, c, ring_->p())});
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  check_same_ring(*this, o);
  PolyBuilder b(ring_);
  for (auto& s : terms_)
    for (auto& t : o.terms_) b.add(s.m * t.m, fp_mul(s.c, t.c, ring_->p()));
  return b.build();
}

Poly Poly::pow(std::uint64_t k) const {
  Poly result = Poly::constant(ring_, 1), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

Poly Poly::diff(int var) const {
  PolyBuilder b(ring_);
  for (auto& t : terms_) {
    if (!t.m.e[var]) continue;
    coef k = t.m.e[var] % ring_->p();
    if (!k) continue;
    Mono m = t.m;
    m.e[var]--;
    m.deg--;
    b.add(m, fp_mul(t.c, k, ring_->p()));
  }
  return b.build();
}

Poly Poly::in_ring(RingPtr other) const {
  if (other->nvars() != (ring_ ? ring_->nvars() : other->nvars()))
    throw Error("RingMismatch", "variable count differs");
  PolyBuilder b(other);
  for (auto& t : terms_) b.add(t.m, t.c);
  return b.build();
}

Poly Poly::embed(RingPtr other, const std::vector<int>& map) const {
  PolyBuilder b(other);
  for (auto& t : terms_) {
    Mono m;
    for (int i = 0; i < ring_->nvars(); ++i) m.e[map[i]] = t.m.e[i];
    m.deg = t.m.deg;
    b.add(m, t.c);
  }
  return b.build();
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  // Canonical printing is descending degrevlex regardless of the ring order.
  std::vector<Term> ts = terms_;
  Ring drl(ring_->p(), ring_->vars());
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return drl.cmp(a.m, b.m) > 0; });
  std::ostringstream os;
  bool first = true;
  for (auto& t : ts) {
    if (!first) os << " + ";
    first = false;
    if (t.m.deg == 0) os << t.c;
    else if (t.c == 1) os << ring_->mono_str(t.m);
    else os << t.c << "*" << ring_->mono_str(t.m);
  }
  return os.str();
}

Poly substitute(const Poly& f, const RingPtr& target, const std::vector<Poly>& images) {
  const int n = f.ring()->nvars();
  if (static_cast<int>(images.size()) != n) throw Error("InvalidArgument", "image count mismatch");
  // Cache powers per variable.
  std::vector<std::vector<Poly>> pw(n);
  auto power = [&](int i, int k) -> const Poly& {
    auto& v = pw[i];
    if (v.empty()) v.push_back(Poly::constant(target, 1));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * images[i]);
    return v[k];
  };
  Poly acc(target);
  for (auto& t : f.terms()) {
    Poly m = Poly::constant(target, t.c);
    for (int i = 0; i < n && !m.is_zero(); ++i)
      if (t.m.e[i]) m = m * power(i, t.m.e[i]);
    acc = acc + m;
  }
  return acc;
}

}  // namespace art
