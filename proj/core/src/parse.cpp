#include <cctype>

#include "art/poly.hpp"

namespace art {

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& r, const std::string& s) : r_(r), s_(s) {}

  Poly run() {
    Poly f = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return f;
  }

 private:
  const RingPtr& r_;
  const std::string& s_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& m) const {
    throw Error("ParseError", m + " at offset " + std::to_string(i_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  long long integer() {
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected integer");
    long long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_++] - '0');
      if (v > (1LL << 40)) fail("integer too large");
    }
    return v;
  }
  Poly expr() {
    Poly f = term();
    for (;;) {
      if (eat('+')) f = f + term();
      else if (eat('-')) f = f - term();
      else return f;
    }
  }
  Poly term() {
    Poly f = unary();
    while (eat('*')) f = f * unary();
    return f;
  }
  // -x^2 is -(x^2)
  Poly unary() {
    if (eat('-')) return -unary();
    return factor();
  }
  Poly factor() {
    Poly b = atom();
    if (eat('^')) {
      long long k = integer();
      if (k > Budget::degree() * 8L) fail("exponent too large");
      b = b.pow(static_cast<std::uint64_t>(k));
    }
    return b;
  }
  Poly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Poly f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(r_, integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      std::string name = s_.substr(i_, j - i_);
      int v = r_->var_index(name);
      if (v < 0) fail("unknown variable " + name);
      i_ = j;
      return Poly::var(r_, v);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Poly parse_poly(const RingPtr& r, const std::string& text) { return PolyParser(r, text).run(); }

}  // namespace art
