#include "art/session.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "art/gabber.hpp"
#include "art/shriek.hpp"
#include "json.hpp"

namespace art {

// ---- tokens ----------------------------------------------------------------------------------------

namespace {

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  long long value = 0;
  int line = 1, col = 1;
  size_t offset = 0, end = 0;
};

std::string where(int line, int col) { return "line " + std::to_string(line) + ", column " + std::to_string(col); }

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t k) {
    for (size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    t.offset = i;
    if (std::isalpha(c) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Token::Kind::Ident;
      t.text = s.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(c)) {
      size_t j = i;
      long long v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        v = v * 10 + (s[j] - '0');
        if (v > (1LL << 40)) throw Error("ParseError", "integer too large at " + where(line, col));
        ++j;
      }
      t.kind = Token::Kind::Int;
      t.text = s.substr(i, j - i);
      t.value = v;
      advance(j - i);
    } else if (std::string("=()[],;/+-*^.").find(static_cast<char>(c)) != std::string::npos) {
      t.kind = Token::Kind::Punct;
      t.text = std::string(1, static_cast<char>(c));
      advance(1);
    } else {
      throw Error("ParseError", "unexpected character '" + std::string(1, static_cast<char>(c)) + "' at " +
                                    where(line, col));
    }
    t.end = i;
    out.push_back(t);
  }
  Token e;
  e.line = line;
  e.col = col;
  e.offset = e.end = s.size();
  out.push_back(e);
  return out;
}

std::string collapse(const std::string& s) {
  std::string out;
  bool space = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
      space = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += s[i];
  }
  return out;
}

const char* kKeywords[] = {"ring", "let", "set", "print", "check"};

class Parser {
 public:
  Parser(const std::string& text) : src_(text), toks_(tokenize(text)) {}

  std::vector<Command> run() {
    std::vector<Command> out;
    while (peek().kind != Token::Kind::End) out.push_back(statement());
    return out;
  }

 private:
  const std::string& src_;
  std::vector<Token> toks_;
  size_t k_ = 0;

  const Token& peek() const { return toks_[k_]; }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string tok = t.kind == Token::Kind::End ? "end of input" : "token '" + t.text + "'";
    throw Error("ParseError", what + " at " + tok + " (" + where(t.line, t.col) + ")");
  }
  bool is(const char* p) const { return peek().kind == Token::Kind::Punct && peek().text == p; }
  void expect(const char* p) {
    if (!is(p)) fail(std::string("expected '") + p + "'");
    ++k_;
  }
  bool accept(const char* p) {
    if (!is(p)) return false;
    ++k_;
    return true;
  }
  std::string ident(const char* what) {
    if (peek().kind != Token::Kind::Ident) fail(std::string("expected ") + what);
    return toks_[k_++].text;
  }
  std::string binding() {
    std::string n = ident("a name");
    for (auto kw : kKeywords)
      if (n == kw) {
        --k_;
        fail("reserved word used as a name");
      }
    return n;
  }
  long long integer() {
    if (peek().kind != Token::Kind::Int) fail("expected an integer");
    return toks_[k_++].value;
  }

  Command statement() {
    const Token& first = peek();
    Command c;
    c.line = first.line;
    c.col = first.col;
    const size_t from = first.offset;
    std::string kw = ident("a statement");
    if (kw == "ring") {
      c.kind = Command::Kind::Ring;
      c.name = binding();
      expect("=");
      if (peek().kind != Token::Kind::Ident || peek().text != "Fp") fail("expected 'Fp'");
      ++k_;
      expect("(");
      c.value = integer();
      expect(")");
      expect("[");
      if (!is("]")) {
        c.vars.push_back(ident("a variable"));
        while (accept(",")) c.vars.push_back(ident("a variable"));
      }
      expect("]");
      if (accept("/")) {
        expect("(");
        c.relations.push_back(expr());
        while (accept(",")) c.relations.push_back(expr());
        expect(")");
      }
    } else if (kw == "let") {
      c.kind = Command::Kind::Let;
      c.name = binding();
      expect("=");
      c.expr = expr();
    } else if (kw == "set") {
      c.kind = Command::Kind::Set;
      c.name = ident("a setting");
      while (accept(".")) c.name += "." + ident("a setting");
      expect("=");
      c.value = integer();
    } else if (kw == "print" || kw == "check") {
      c.kind = kw == "print" ? Command::Kind::Print : Command::Kind::Check;
      c.expr = expr();
    } else {
      --k_;
      fail("expected a statement");
    }
    if (!is(";")) fail("expected ';'");
    c.echo = collapse(src_.substr(from, peek().offset - from));
    ++k_;
    return c;
  }

  Expr node(Expr::Kind k, const Token& at) {
    Expr e;
    e.kind = k;
    e.line = at.line;
    e.col = at.col;
    return e;
  }
  Expr expr() {
    Expr f = term();
    for (;;) {
      const Token at = peek();
      Expr::Kind k;
      if (accept("+")) k = Expr::Kind::Add;
      else if (accept("-")) k = Expr::Kind::Sub;
      else return f;
      Expr g = node(k, at);
      g.args.push_back(std::move(f));
      g.args.push_back(term());
      f = std::move(g);
    }
  }
  Expr term() {
    Expr f = unary();
    while (is("*")) {
      Expr g = node(Expr::Kind::Mul, peek());
      ++k_;
      g.args.push_back(std::move(f));
      g.args.push_back(unary());
      f = std::move(g);
    }
    return f;
  }
  Expr unary() {
    if (is("-")) {
      Expr g = node(Expr::Kind::Neg, peek());
      ++k_;
      g.args.push_back(unary());
      return g;
    }
    return power();
  }
  Expr power() {
    Expr b = atom();
    if (is("^")) {
      Expr g = node(Expr::Kind::Pow, peek());
      ++k_;
      g.value = integer();
      g.args.push_back(std::move(b));
      return g;
    }
    return b;
  }
  Expr atom() {
    const Token at = peek();
    if (at.kind == Token::Kind::Int) {
      Expr e = node(Expr::Kind::Int, at);
      e.value = at.value;
      ++k_;
      return e;
    }
    if (at.kind == Token::Kind::Ident) {
      ++k_;
      if (accept("(")) {
        Expr e = node(Expr::Kind::Call, at);
        e.name = at.text;
        if (!is(")")) {
          e.args.push_back(expr());
          while (accept(",")) e.args.push_back(expr());
        }
        expect(")");
        return e;
      }
      Expr e = node(Expr::Kind::Name, at);
      e.name = at.text;
      return e;
    }
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    if (is("[")) {
      Expr e = node(Expr::Kind::List, at);
      ++k_;
      if (!is("]")) {
        e.args.push_back(expr());
        while (accept(",")) e.args.push_back(expr());
      }
      expect("]");
      return e;
    }
    fail("expected an expression");
  }
};

}  // namespace

std::vector<Command> parse_session(const std::string& text) { return Parser(text).run(); }

// ---- reports -----------------------------------------------------------------------------------------

namespace {

nlohmann::json field_json(const FieldValue& v) {
  return std::visit([](const auto& x) { return nlohmann::json(x); }, v);
}

std::string field_text(const FieldValue& v) {
  struct V {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(long long n) const { return std::to_string(n); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const std::vector<long long>& xs) const {
      std::string o = "(";
      for (size_t i = 0; i < xs.size(); ++i) o += (i ? ", " : "") + std::to_string(xs[i]);
      return o + ")";
    }
    std::string operator()(const std::vector<std::string>& xs) const {
      std::string o = "[";
      for (size_t i = 0; i < xs.size(); ++i) o += (i ? ", " : "") + xs[i];
      return o + "]";
    }
  };
  return std::visit(V{}, v);
}

std::vector<const Field*> sorted_fields(const std::vector<Field>& fs) {
  std::vector<const Field*> out;
  for (auto& f : fs) out.push_back(&f);
  std::stable_sort(out.begin(), out.end(), [](const Field* a, const Field* b) { return a->key < b->key; });
  return out;
}

}  // namespace

std::string Report::text() const {
  std::ostringstream os;
  os << "[" << line << "] " << command << " -> ";
  if (!ok) os << "error " << error_kind << ": " << error_message;
  else if (is_check) os << (certified ? "certified" : "NOT certified");
  else os << "ok";
  os << "\n";
  for (const Field* f : sorted_fields(payload)) os << "    " << f->key << " = " << field_text(f->value) << "\n";
  return os.str();
}

std::string Report::json() const {
  nlohmann::json j;
  j["line"] = line;
  j["command"] = command;
  j["status"] = ok ? "ok" : "error";
  if (!ok) j["error"] = {{"kind", error_kind}, {"message", error_message}};
  if (is_check) j["certified"] = certified;
  nlohmann::json p = nlohmann::json::object();
  for (auto& f : payload) p[f.key] = field_json(f.value);
  j["payload"] = p;
  return j.dump();
}

bool all_passed(const std::vector<Report>& reports) {
  for (auto& r : reports)
    if (!r.ok || (r.is_check && !r.certified)) return false;
  return true;
}

// ---- values ------------------------------------------------------------------------------------------

namespace {

struct Value {
  enum class Kind { Ring, Poly, Ideal, Module, Complex, Map, Int, Record };
  Kind kind = Kind::Int;
  std::string ring;          // ambient ring name; Map: target
  std::string source;        // Map only
  RingSpec spec;             // ambient ring with its relations
  Poly poly;
  std::vector<Poly> polys;   // Ideal generators
  Module module;
  Complex complex;
  std::optional<RingMap> map;
  long long integer = 0;
  std::vector<Field> record;
  bool certificate = false;  // Record carries a certificate verdict
  bool certified = false;
};

const char* kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::Ring: return "ring";
    case Value::Kind::Poly: return "poly";
    case Value::Kind::Ideal: return "ideal";
    case Value::Kind::Module: return "module";
    case Value::Kind::Complex: return "complex";
    case Value::Kind::Map: return "map";
    case Value::Kind::Int: return "int";
    case Value::Kind::Record: return "record";
  }
  return "?";
}

std::vector<std::string> strs(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (auto& p : ps) out.push_back(p.str());
  return out;
}

std::vector<long long> ints(const std::vector<int>& xs) { return {xs.begin(), xs.end()}; }

// Builder for certificate records.
struct Rec {
  Value v;
  Rec() { v.kind = Value::Kind::Record; }
  Rec& add(std::string k, FieldValue x) {
    v.record.push_back({std::move(k), std::move(x)});
    return *this;
  }
  Value verdict(bool ok) {
    v.certificate = true;
    v.certified = ok;
    v.record.push_back({"certified", ok});
    return v;
  }
  Value done() { return v; }
};

std::vector<Field> describe(const Value& v) {
  std::vector<Field> out;
  out.push_back({"type", std::string(kind_name(v.kind))});
  switch (v.kind) {
    case Value::Kind::Ring:
      out.push_back({"characteristic", static_cast<long long>(v.spec.ring->p())});
      out.push_back({"variables", v.spec.ring->vars()});
      out.push_back({"relations", strs(v.spec.relations)});
      break;
    case Value::Kind::Poly:
      out.push_back({"ring", v.ring});
      out.push_back({"value", v.poly.str()});
      break;
    case Value::Kind::Ideal:
      out.push_back({"ring", v.ring});
      out.push_back({"generators", strs(v.polys)});
      break;
    case Value::Kind::Module:
      out.push_back({"ring", v.ring});
      out.push_back({"generators", static_cast<long long>(v.module.ngens())});
      out.push_back({"ambient_rank", static_cast<long long>(v.module.ambient())});
      out.push_back({"relations", static_cast<long long>(v.module.rels().size())});
      break;
    case Value::Kind::Complex: {
      out.push_back({"ring", v.ring});
      out.push_back({"lo", static_cast<long long>(v.complex.lo())});
      out.push_back({"hi", static_cast<long long>(v.complex.hi())});
      std::vector<long long> r;
      for (int n = v.complex.lo(); n <= v.complex.hi(); ++n) r.push_back(v.complex.rank(n));
      out.push_back({"ranks", r});
      break;
    }
    case Value::Kind::Map:
      out.push_back({"source", v.source});
      out.push_back({"target", v.ring});
      out.push_back({"images", strs(v.map->images())});
      break;
    case Value::Kind::Int:
      out.push_back({"value", v.integer});
      break;
    case Value::Kind::Record:
      out.pop_back();
      out.insert(out.end(), v.record.begin(), v.record.end());
      break;
  }
  return out;
}

}  // namespace

// ---- interpreter ---------------------------------------------------------------------------------------

struct Session::Impl {
  SessionOptions opts;
  std::map<std::string, Value> env;

  using Builtin = std::function<Value(struct Args&)>;
  std::map<std::string, Builtin> builtins;

  Impl();
  void apply_budget() const {
    Budget::set_degree(opts.budget_degree);
    Budget::set_size_cap(opts.size_cap);
  }

  const Value& lookup(const std::string& name, const Expr& at) const {
    auto it = env.find(name);
    if (it == env.end()) throw Error("NameError", "unbound name " + name + " at " + where(at.line, at.col));
    return it->second;
  }
  const Value& ring_value(const std::string& name) const { return env.at(name); }

  Value eval(const Expr& e);
  Poly eval_poly(const Expr& e, const Value& ring);
  Value call(const Expr& e);
  void bind(const std::string& name, Value v) {
    if (env.count(name)) throw Error("NameError", "name " + name + " is already bound");
    env.emplace(name, std::move(v));
  }
};

namespace {

[[noreturn]] void type_error(const Expr& at, const std::string& msg) {
  throw Error("TypeError", msg + " at " + where(at.line, at.col));
}

void same_ring(const Value& a, const std::string& ring, const Expr& at) {
  if (a.ring != ring) throw Error("RingMismatch", "value over " + a.ring + " used where " + ring + " is expected at " +
                                                      where(at.line, at.col));
}

}  // namespace

// Argument access for builtins; arguments are evaluated on demand in the context they need.
struct Args {
  Session::Impl& s;
  const Expr& call;

  size_t size() const { return call.args.size(); }
  void arity(size_t lo, size_t hi) const {
    if (size() < lo || size() > hi) {
      std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      type_error(call, call.name + " takes " + want + " arguments, got " + std::to_string(size()));
    }
  }
  void arity(size_t n) const { arity(n, n); }
  const Expr& at(size_t i) const { return call.args[i]; }

  Value value(size_t i, Value::Kind k) const {
    Value v = s.eval(at(i));
    if (v.kind != k)
      type_error(at(i), "argument " + std::to_string(i + 1) + " of " + call.name + " must be a " + kind_name(k) +
                            ", got " + kind_name(v.kind));
    return v;
  }
  Value ring(size_t i) const { return value(i, Value::Kind::Ring); }
  // Polynomial rings only.
  Value poly_ring(size_t i) const {
    Value r = ring(i);
    if (!r.spec.relations.empty()) type_error(at(i), call.name + " needs a polynomial ring");
    return r;
  }
  long long integer(size_t i) const { return value(i, Value::Kind::Int).integer; }
  int small(size_t i, long long lo, long long hi) const {
    long long n = integer(i);
    if (n < lo || n > hi)
      type_error(at(i), "argument " + std::to_string(i + 1) + " of " + call.name + " must lie in [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(n);
  }
  Poly poly(size_t i, const Value& r) const { return s.eval_poly(at(i), r); }
  // A list literal, or a bound ideal over the same ring.
  std::vector<Poly> polys(size_t i, const Value& r) const {
    const Expr& e = at(i);
    if (e.kind == Expr::Kind::List) {
      std::vector<Poly> out;
      for (auto& x : e.args) out.push_back(s.eval_poly(x, r));
      return out;
    }
    Value v = s.eval(e);
    if (v.kind != Value::Kind::Ideal) type_error(e, "expected a list of polynomials or an ideal");
    same_ring(v, r.ring, e);
    return v.polys;
  }
  Value module(size_t i) const {
    Value v = s.eval(at(i));
    if (v.kind == Value::Kind::Ring) return as_module(v);
    if (v.kind == Value::Kind::Ideal) {
      Value m = v;
      m.kind = Value::Kind::Module;
      m.module = Module::ideal(v.spec.ring, v.polys, v.spec.relations);
      // graded by generator degree when every generator is homogeneous
      std::vector<int> deg;
      for (auto& g : v.polys)
        if (!g.is_zero() && g.is_homogeneous()) deg.push_back(g.degree());
      if (deg.size() == v.polys.size()) m.module = m.module.with_degrees(deg);
      return m;
    }
    if (v.kind != Value::Kind::Module) type_error(at(i), "expected a module");
    return v;
  }
  Value complex(size_t i, const std::string& ring) const {
    Value v = value(i, Value::Kind::Complex);
    same_ring(v, ring, at(i));
    return v;
  }
  Value map(size_t i) const { return value(i, Value::Kind::Map); }

  static Value as_module(const Value& r) {
    Value m = r;
    m.kind = Value::Kind::Module;
    m.module = Module::free(r.spec.ring, 1, r.spec.relations).with_degrees({0});
    return m;
  }
  static Value over(const Value& r, Value::Kind k) {
    Value v;
    v.kind = k;
    v.ring = r.ring;
    v.spec = r.spec;
    return v;
  }
};

Value Session::Impl::eval(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Int: {
      Value v;
      v.kind = Value::Kind::Int;
      v.integer = e.value;
      return v;
    }
    case Expr::Kind::Name:
      return lookup(e.name, e);
    case Expr::Kind::Call:
      return call(e);
    case Expr::Kind::Neg:
      if (e.args[0].kind == Expr::Kind::Int) {
        Value v;
        v.kind = Value::Kind::Int;
        v.integer = -e.args[0].value;
        return v;
      }
      [[fallthrough]];
    default:
      type_error(e, "polynomial arithmetic needs a ring; wrap it as poly(R, ...)");
  }
}

Poly Session::Impl::eval_poly(const Expr& e, const Value& r) {
  const RingPtr& R = r.spec.ring;
  switch (e.kind) {
    case Expr::Kind::Int:
      return Poly::constant(R, e.value);
    case Expr::Kind::Name: {
      int v = R->var_index(e.name);
      if (v >= 0) return Poly::var(R, v);
      const Value& b = lookup(e.name, e);
      if (b.kind == Value::Kind::Int) return Poly::constant(R, b.integer);
      if (b.kind != Value::Kind::Poly) type_error(e, e.name + " is a " + kind_name(b.kind) + ", not a polynomial");
      same_ring(b, r.ring, e);
      return b.poly;
    }
    case Expr::Kind::Call: {
      Value b = call(e);
      if (b.kind == Value::Kind::Int) return Poly::constant(R, b.integer);
      if (b.kind != Value::Kind::Poly) type_error(e, e.name + " does not return a polynomial");
      same_ring(b, r.ring, e);
      return b.poly;
    }
    case Expr::Kind::Add: return eval_poly(e.args[0], r) + eval_poly(e.args[1], r);
    case Expr::Kind::Sub: return eval_poly(e.args[0], r) - eval_poly(e.args[1], r);
    case Expr::Kind::Mul: return eval_poly(e.args[0], r) * eval_poly(e.args[1], r);
    case Expr::Kind::Neg: return -eval_poly(e.args[0], r);
    case Expr::Kind::Pow:
      if (e.value > Budget::degree())
        throw Error("DegreeBudgetExceeded", "exponent " + std::to_string(e.value) + " exceeds budget.degree = " +
                                                std::to_string(Budget::degree()));
      return eval_poly(e.args[0], r).pow(static_cast<std::uint64_t>(e.value));
    case Expr::Kind::List:
      type_error(e, "a list is not a polynomial");
  }
  type_error(e, "bad expression");
}

Value Session::Impl::call(const Expr& e) {
  auto it = builtins.find(e.name);
  if (it == builtins.end()) throw Error("NameError", "unknown function " + e.name + " at " + where(e.line, e.col));
  Args a{*this, e};
  return it->second(a);
}

// ---- builtins ------------------------------------------------------------------------------------------

namespace {

using K = Value::Kind;

Value make_poly(const Value& r, Poly f) {
  Value v = Args::over(r, K::Poly);
  v.poly = std::move(f);
  return v;
}

Value make_ideal(const Value& r, std::vector<Poly> gens) {
  Value v = Args::over(r, K::Ideal);
  v.polys = std::move(gens);
  return v;
}

Value make_module(const Value& r, Module m) {
  Value v = Args::over(r, K::Module);
  v.module = std::move(m);
  return v;
}

Value make_complex(const Value& r, Complex c) {
  Value v = Args::over(r, K::Complex);
  v.complex = std::move(c);
  return v;
}

Value make_int(long long n) {
  Value v;
  v.kind = K::Int;
  v.integer = n;
  return v;
}

std::vector<Poly> concat(std::vector<Poly> a, const std::vector<Poly>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Poly> variables(const RingPtr& R) {
  std::vector<Poly> xs;
  for (int i = 0; i < R->nvars(); ++i) xs.push_back(Poly::var(R, i));
  return xs;
}

Ideal full_ideal(const Value& I) { return Ideal(I.spec.ring, concat(I.polys, I.spec.relations)); }

// Variables of both sources, the first one's order first.
RingPtr union_ring(const RingPtr& a, const RingPtr& b) {
  std::vector<std::string> vars = a->vars();
  for (auto& v : b->vars())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  return Ring::make(a->p(), vars);
}

// Lifts along pi of the images of the variables of T missing from pi's source.
std::map<std::string, Poly> lifts_for(const RingMap& pi, const RingMap& other, const RingPtr& T) {
  GraphIdeal G(pi);
  const RingPtr& S = pi.source().ring;
  const RingPtr& O = other.source().ring;
  std::map<std::string, Poly> out;
  for (auto& v : T->vars()) {
    if (S->var_index(v) >= 0) continue;
    Poly img = other.apply(Poly::var(O, O->var_index(v)));
    std::optional<Poly> h = G.preimage(img);
    if (!h) throw Error("NotSurjective", "no preimage of the image of " + v);
    out.emplace(v, *h);
  }
  return out;
}

}  // namespace

Session::Impl::Impl() {
  auto& B = builtins;

  // polynomial rings, ideals and maps
  B["poly"] = [](Args& a) {
    a.arity(2);
    Value r = a.ring(0);
    return make_poly(r, a.poly(1, r));
  };
  B["ideal"] = [](Args& a) {
    a.arity(2);
    Value r = a.ring(0);
    return make_ideal(r, a.polys(1, r));
  };
  B["map"] = [this](Args& a) {
    a.arity(3);
    Value src = a.ring(0), tgt = a.ring(1);
    std::vector<Poly> images = a.polys(2, tgt);
    if (static_cast<int>(images.size()) != src.spec.ring->nvars())
      type_error(a.at(2), "map needs one image per source variable");
    Value v = Args::over(tgt, K::Map);
    v.source = src.ring;
    v.map.emplace(src.spec, tgt.spec, images);
    return v;
  };
  B["apply"] = [this](Args& a) {
    a.arity(2);
    Value m = a.map(0);
    Poly f = a.poly(1, ring_value(m.source));
    return make_poly(ring_value(m.ring), m.map->apply(f));
  };
  B["reduce"] = [](Args& a) {
    a.arity(2);
    Value I = a.value(0, K::Ideal);
    return make_poly(I, full_ideal(I).reduce(a.poly(1, I)));
  };
  B["member"] = [](Args& a) {
    a.arity(2);
    Value I = a.value(0, K::Ideal);
    Poly f = a.poly(1, I);
    Poly r = full_ideal(I).reduce(f);
    return Rec().add("remainder", r.str()).verdict(r.is_zero());
  };
  B["equal"] = [](Args& a) {
    a.arity(2);
    Value I = a.value(0, K::Ideal), J = a.value(1, K::Ideal);
    same_ring(J, I.ring, a.at(1));
    return Rec().verdict(full_ideal(I) == full_ideal(J));
  };
  B["gb"] = [](Args& a) {
    a.arity(1);
    Value I = a.value(0, K::Ideal);
    return Rec().add("basis", strs(full_ideal(I).gb().polys())).done();
  };
  B["kernel"] = [this](Args& a) {
    a.arity(1);
    Value m = a.map(0);
    return make_ideal(ring_value(m.source), elimination_kernel(*m.map).gens());
  };
  B["bracket_power"] = [](Args& a) {
    a.arity(2);
    Value I = a.value(0, K::Ideal);
    return make_ideal(I, bracket_power(Ideal(I.spec.ring, I.polys), a.small(1, 0, 8)).gens());
  };

  // modules
  B["module"] = [](Args& a) {
    a.arity(1);
    return a.module(0);
  };
  B["free"] = [](Args& a) {
    a.arity(2);
    Value r = a.ring(0);
    int n = a.small(1, 0, 64);
    return make_module(r, Module::free(r.spec.ring, n, r.spec.relations).with_degrees(std::vector<int>(n, 0)));
  };
  B["quotient"] = [](Args& a) {
    a.arity(2);
    Value r = a.ring(0);
    return make_module(r, Module::free(r.spec.ring, 1, concat(a.polys(1, r), r.spec.relations)).with_degrees({0}));
  };
  B["kahler"] = [](Args& a) {
    a.arity(1);
    Value r = a.ring(0);
    Module m = kahler(r.spec).module;
    if (!m.graded()) m = m.with_degrees(std::vector<int>(m.ngens(), 1));
    return make_module(r, m);
  };
  B["exterior_power"] = [](Args& a) {
    a.arity(2);
    Value m = a.module(0);
    return make_module(m, exterior_power(m.module, a.small(1, 0, 16)));
  };
  B["tensor"] = [](Args& a) {
    a.arity(2);
    Value m = a.module(0), n = a.module(1);
    same_ring(n, m.ring, a.at(1));
    return make_module(m, tensor_module(m.module, n.module));
  };
  B["hom"] = [](Args& a) {
    a.arity(2);
    Value m = a.module(0), n = a.module(1);
    same_ring(n, m.ring, a.at(1));
    return make_module(m, hom_module(m.module, n.module).hom);
  };
  B["isomorphic"] = [](Args& a) {
    a.arity(2);
    Value m = a.module(0), n = a.module(1);
    same_ring(n, m.ring, a.at(1));
    return Rec().verdict(find_isomorphism(m.module, n.module).has_value());
  };
  B["is_zero"] = [](Args& a) {
    a.arity(1);
    return Rec().verdict(a.module(0).module.is_zero());
  };
  B["hilbert"] = [](Args& a) {
    a.arity(2);
    Value m = a.module(0);
    Module M = m.module.graded() ? m.module : m.module.with_degrees(std::vector<int>(m.module.ngens(), 0));
    std::vector<long> h = hilbert_function(M, a.small(1, 0, Budget::degree()));
    return Rec().add("values", std::vector<long long>(h.begin(), h.end())).done();
  };
  B["generic_rank"] = [](Args& a) {
    a.arity(1);
    Value m = a.module(0);
    return make_int(generic_rank(m.module, m.spec.relations));
  };
  B["minimal_generators_at"] = [](Args& a) {
    a.arity(2);
    Value m = a.module(0);
    return make_int(minimal_generators_at(m.module, concat(a.polys(1, m), m.spec.relations)));
  };

  // complexes (over the ambient polynomial ring of the named ring)
  B["single"] = [](Args& a) {
    a.arity(3);
    Value r = a.ring(0);
    return make_complex(r, Complex::single(r.spec.ring, a.small(1, 0, 64), a.small(2, -64, 64)));
  };
  B["cone"] = [](Args& a) {
    a.arity(2);
    Value r = a.ring(0);
    Matrix d(r.spec.ring, 1, 1);
    d.at(0, 0) = a.poly(1, r);
    return make_complex(r, Complex(r.spec.ring, -1, {1, 1}, {d}));
  };
  B["koszul"] = [](Args& a) {
    a.arity(2);
    Value r = a.ring(0);
    return make_complex(r, koszul_complex(r.spec.ring, a.polys(1, r)));
  };
  B["resolution"] = [](Args& a) {
    a.arity(1);
    Value m = a.module(0);
    return make_complex(m, resolution_complex(m.module, kDefaultLengthCap));
  };
  B["omega_carrier"] = [](Args& a) {
    a.arity(1);
    Value r = a.ring(0);
    return make_complex(r, omega_carrier(r.spec));
  };
  B["dualizing"] = [](Args& a) {
    a.arity(1);
    Value r = a.ring(0);
    return make_complex(r, canonical_dualizing(r.spec).complex);
  };
  B["shift"] = [](Args& a) {
    a.arity(2);
    Value c = a.value(0, K::Complex);
    c.complex = c.complex.shift(a.small(1, -64, 64));
    return c;
  };
  B["cohomology"] = [](Args& a) {
    a.arity(1);
    Value c = a.value(0, K::Complex);
    return Rec().add("support", ints(c.complex.cohomology_support())).done();
  };
  B["upper_shriek_frobenius"] = [](Args& a) {
    a.arity(2);
    Value r = a.ring(0);
    Value c = a.complex(1, r.ring);
    return make_complex(r, upper_shriek_frobenius(r.spec, c.complex));
  };

  // Frobenius and p-bases
  B["frobenius_pushforward"] = [](Args& a) {
    a.arity(2);
    Value r = a.ring(0);
    return make_module(r, frobenius_pushforward(r.spec, a.small(1, 0, 8)).module);
  };
  B["is_p_basis"] = [](Args& a) {
    a.arity(2);
    Value r = a.ring(0);
    return Rec().verdict(is_p_basis(r.spec, a.polys(1, r)));
  };
  B["is_p_generating"] = [](Args& a) {
    a.arity(2);
    Value r = a.ring(0);
    return Rec().verdict(is_p_generating(r.spec, a.polys(1, r)));
  };
  B["trace_generator"] = [](Args& a) {
    a.arity(1, 2);
    Value r = a.ring(0);
    std::vector<Poly> xs = a.size() == 2 ? a.polys(1, r) : variables(r.spec.ring);
    TraceGenerator t = pbasis_trace_generator(r.spec, xs);
    return Rec()
        .add("free_generator", t.free_generator)
        .add("matches_projection", t.matches_projection)
        .add("table", strs(t.table))
        .verdict(t.free_generator && t.matches_projection);
  };
  B["elliptic_checks"] = [](Args& a) {
    a.arity(3);
    Value r = a.ring(0);
    std::vector<Poly> cands = a.polys(2, r);
    EllipticReport e = elliptic_curve_checks(r.spec, a.polys(1, r), cands);
    return Rec()
        .add("generic_rank", static_cast<long long>(e.generic_rank))
        .add("det_iso", e.det_iso)
        .add("min_generators", static_cast<long long>(e.min_generators))
        .add("refuted_candidates", e.refuted_candidates)
        .verdict(e.det_iso && e.refuted_candidates.size() == cands.size());
  };

  // Gabber
  B["gabber_truncation"] = [this](Args& a) {
    a.arity(3);
    Value r = a.ring(0);
    GabberTruncation t = gabber_truncation(r.spec, a.polys(1, r), a.small(2, 0, 4), opts.seed);
    return Rec()
        .add("stages", static_cast<long long>(t.stages.size()))
        .add("variables", t.ring.ring->vars())
        .add("relations", strs(t.ring.relations))
        .verdict(t.verified());
  };
  B["point_truncation"] = [](Args& a) {
    a.arity(3);
    long long p = a.integer(0);
    if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint32_t>(p))) type_error(a.at(0), "expected a prime");
    PointTruncation t = gabber_point_truncation(static_cast<coef>(p), static_cast<long>(a.integer(1)), a.small(2, 0, 4));
    return Rec()
        .add("kernel", t.kernel.str())
        .add("expected", t.expected.str())
        .add("surjective", t.surjective)
        .verdict(t.surjective && t.equal);
  };
  B["gabber_kernels"] = [](Args& a) {
    a.arity(3);
    Value S = a.poly_ring(0);
    Value pi = a.map(1);
    if (pi.source != S.ring)
      throw Error("RingMismatch", "map source is " + pi.source + ", not " + S.ring + " at " +
                                      where(a.at(1).line, a.at(1).col));
    return Rec().verdict(verify_kernel_bracket(S.spec, *pi.map, a.small(2, 0, 4)));
  };
  B["extend_pgens"] = [](Args& a) {
    a.arity(4);
    Value r = a.ring(0);
    return Rec().verdict(extend_pgens_check(r.spec, a.polys(1, r), a.polys(2, r), a.small(3, 0, 4)));
  };

  // differentials
  B["conormal"] = [this](Args& a) {
    a.arity(2);
    Value pi = a.map(0);
    ConormalSequence c = conormal_sequence(*pi.map, a.polys(1, ring_value(pi.source)));
    return Rec()
        .add("alpha_injective", c.alpha_injective)
        .add("beta_surjective", c.beta_surjective)
        .add("exact_middle", c.exact_middle)
        .add("theta_section", c.theta_section)
        .add("direct_sum_iso", c.direct_sum_iso)
        .verdict(c.certified());
  };
  B["omega_regular"] = [](Args& a) {
    a.arity(1, 2);
    Value r = a.ring(0);
    CanonicalOmega w = canonical_omega_regular(r.spec, a.size() == 2 ? a.polys(1, r) : std::vector<Poly>{});
    return Rec()
        .add("degree", static_cast<long long>(-w.n))
        .add("generator", w.generator)
        .verdict(w.differential_basis);
  };

  // duality
  B["fli"] = [](Args& a) {
    a.arity(2);
    Value S = a.poly_ring(0);
    ExtCrossCheck x = ext_cross_check(S.spec, a.polys(1, S));
    return Rec()
        .add("koszul_support", ints(x.koszul_support))
        .add("engine_support", ints(x.engine_support))
        .add("hilbert", std::vector<long long>(x.koszul_hilbert.begin(), x.koszul_hilbert.end()))
        .add("comparison_quasi_iso", x.comparison_quasi_iso)
        .add("eta_iso", x.eta_iso)
        .add("module_iso", x.module_iso)
        .verdict(x.agree());
  };
  B["frobenius_duality"] = [](Args& a) {
    a.arity(1);
    Value r = a.ring(0);
    FrobeniusDualityReport d = verify_frobenius_duality(r.spec);
    return Rec()
        .add("degree", static_cast<long long>(d.degree))
        .add("trace_table", strs(d.trace_table))
        .add("well_defined", d.well_defined)
        .add("iso", d.iso)
        .verdict(d.well_defined && d.iso);
  };
  B["compare_presentations"] = [](Args& a) {
    a.arity(2);
    Value p1 = a.map(0), p2 = a.map(1);
    same_ring(p2, p1.ring, a.at(1));
    const RingMap& f = *p1.map;
    const RingMap& g = *p2.map;
    if (!f.source().relations.empty() || !g.source().relations.empty())
      type_error(a.call, "presentations must start from polynomial rings");
    RingPtr S1 = f.source().ring, S2 = g.source().ring;
    for (auto& v : S1->vars())
      if (S2->var_index(v) >= 0 &&
          f.apply(Poly::var(S1, S1->var_index(v))) != g.apply(Poly::var(S2, S2->var_index(v))))
        throw Error("NotCompatible", "shared variable " + v + " has different images");
    RingPtr T = union_ring(S1, S2);
    PresentationComparison c = compare_presentations(S1, elimination_kernel(f).gens(), lifts_for(f, g, T), S2,
                                                     elimination_kernel(g).gens(), lifts_for(g, f, T), T);
    return Rec()
        .add("first_support", ints(c.first_support))
        .add("second_support", ints(c.second_support))
        .add("first_quasi_iso", c.first.quasi_iso)
        .add("second_quasi_iso", c.second.quasi_iso)
        .add("bridge_quasi_iso", c.bridge_quasi_iso)
        .verdict(c.certified());
  };
  B["koszul_sign"] = [](Args& a) {
    a.arity(3);
    long long p = a.integer(0);
    if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint32_t>(p))) type_error(a.at(0), "expected a prime");
    KoszulSignReport k = koszul_sign_check(static_cast<coef>(p), a.small(1, 0, 6), a.small(2, 0, 6));
    return Rec()
        .add("leg_lci_first", k.leg_lci_first.str())
        .add("leg_smooth_first", k.leg_smooth_first.str())
        .add("equal_without_sign", k.equal_without_sign)
        .verdict(k.equal_with_sign);
  };
  B["factorizations"] = [](Args& a) {
    a.arity(1);
    long long p = a.integer(0);
    if (p < 2 || p > 7 || !is_prime(static_cast<std::uint32_t>(p))) type_error(a.at(0), "expected a prime below 8");
    FactorizationReport f = frobenius_factorizations(static_cast<coef>(p));
    return Rec().add("direct", f.direct).add("through_section", f.through_section).verdict(f.certified());
  };
  B["xi_lci"] = [](Args& a) {
    a.arity(3);
    Value T = a.ring(0);
    std::vector<Poly> r = a.polys(1, T), z = a.polys(2, T);
    XiIso x = xi_lci(T.spec, r, z);
    return Rec().add("coefficient", x.coefficient.str()).add("description", x.description).verdict(x.iso);
  };

  // shriek products
  B["shriek"] = [](Args& a) {
    a.arity(3);
    Value r = a.ring(0);
    ShriekProduct s = shriek_tensor(r.spec, a.complex(1, r.ring).complex, a.complex(2, r.ring).complex);
    return Rec().add("support", ints(s.support)).verdict(s.within_bound);
  };
  B["unit"] = [](Args& a) {
    a.arity(2);
    Value r = a.ring(0);
    UnitReport u = verify_unit(r.spec, a.complex(1, r.ring).complex);
    return Rec()
        .add("source_support", ints(u.source_support))
        .add("target_support", ints(u.target_support))
        .verdict(u.iso && u.source_support == u.target_support);
  };
  B["symmetry"] = [](Args& a) {
    a.arity(3);
    Value r = a.poly_ring(0);
    return Rec().verdict(
        verify_symmetry(r.spec.ring, a.complex(1, r.ring).complex, a.complex(2, r.ring).complex).quasi_iso);
  };
  B["associativity"] = [](Args& a) {
    a.arity(4);
    Value r = a.poly_ring(0);
    AssociativityReport s = verify_associativity(r.spec.ring, a.complex(1, r.ring).complex,
                                                 a.complex(2, r.ring).complex, a.complex(3, r.ring).complex);
    return Rec()
        .add("iterated_support", ints(s.iterated_support))
        .add("triple_support", ints(s.triple_support))
        .verdict(s.certified());
  };
  B["frobenius_monoidality"] = [](Args& a) {
    a.arity(1);
    FrobeniusMonoidality m = frobenius_monoidality(a.poly_ring(0).spec.ring);
    return Rec()
        .add("tau_iso", m.tau_iso)
        .add("trace_free", m.trace_free)
        .add("pullbacks_iso", m.pullbacks_iso)
        .verdict(m.certified());
  };
}

// ---- session -------------------------------------------------------------------------------------------

Session::Session(SessionOptions opts) : impl_(std::make_unique<Impl>()) { impl_->opts = opts; }
Session::~Session() = default;
Session::Session(Session&&) noexcept = default;
Session& Session::operator=(Session&&) noexcept = default;

Report Session::execute(const Command& c) {
  Impl& s = *impl_;
  Report rep;
  rep.line = c.line;
  rep.command = c.echo;
  rep.is_check = c.kind == Command::Kind::Check;
  try {
    s.apply_budget();
    switch (c.kind) {
      case Command::Kind::Ring: {
        if (c.value < 2 || c.value > 65521 || !is_prime(static_cast<std::uint32_t>(c.value)))
          throw Error("InvalidArgument", "characteristic " + std::to_string(c.value) + " is not a supported prime");
        if (c.vars.size() > static_cast<size_t>(kMaxVars)) throw Error("SizeCapExceeded", "too many variables");
        for (size_t i = 0; i < c.vars.size(); ++i)
          for (size_t j = 0; j < i; ++j)
            if (c.vars[i] == c.vars[j]) throw Error("NameError", "variable " + c.vars[i] + " is repeated");
        Value r;
        r.kind = K::Ring;
        r.ring = c.name;
        r.spec = RingSpec::poly(Ring::make(static_cast<coef>(c.value), c.vars));
        for (auto& e : c.relations) r.spec.relations.push_back(s.eval_poly(e, r));
        rep.payload = describe(r);
        s.bind(c.name, std::move(r));
        break;
      }
      case Command::Kind::Let: {
        if (s.env.count(c.name)) throw Error("NameError", "name " + c.name + " is already bound");
        Value v = s.eval(c.expr);
        rep.payload = describe(v);
        s.bind(c.name, std::move(v));
        break;
      }
      case Command::Kind::Set: {
        if (c.name == "budget.degree") {
          if (c.value < 1 || c.value > 255) throw Error("InvalidArgument", "budget.degree must lie in [1, 255]");
          s.opts.budget_degree = static_cast<int>(c.value);
        } else if (c.name == "budget.size_cap") {
          if (c.value < 1) throw Error("InvalidArgument", "budget.size_cap must be positive");
          s.opts.size_cap = static_cast<long>(c.value);
        } else if (c.name == "seed") {
          s.opts.seed = static_cast<unsigned>(c.value);
        } else {
          throw Error("NameError", "unknown setting " + c.name);
        }
        s.apply_budget();
        rep.payload.push_back({c.name, c.value});
        break;
      }
      case Command::Kind::Print:
        rep.payload = describe(s.eval(c.expr));
        break;
      case Command::Kind::Check: {
        Value v = s.eval(c.expr);
        if (!v.certificate) type_error(c.expr, "check needs a certificate, got a " + std::string(kind_name(v.kind)));
        rep.payload = describe(v);
        rep.certified = v.certified;
        break;
      }
    }
  } catch (const Error& e) {
    rep.ok = false;
    rep.error_kind = e.kind();
    std::string m = e.what();
    rep.error_message = m.rfind(e.kind() + ": ", 0) == 0 ? m.substr(e.kind().size() + 2) : m;
    rep.payload.clear();
  } catch (const std::exception& e) {
    rep.ok = false;
    rep.error_kind = "InternalError";
    rep.error_message = e.what();
    rep.payload.clear();
  }
  return rep;
}

std::vector<Report> Session::run(const std::string& text) {
  std::vector<Command> cmds;
  try {
    cmds = parse_session(text);
  } catch (const Error& e) {
    Report r;
    r.ok = false;
    r.command = "<parse>";
    r.error_kind = e.kind();
    std::string m = e.what();
    r.error_message = m.substr(e.kind().size() + 2);
    size_t at = r.error_message.rfind("line ");
    if (at != std::string::npos) r.line = std::atoi(r.error_message.c_str() + at + 5);
    return {r};
  }
  std::vector<Report> out;
  for (auto& c : cmds) out.push_back(execute(c));
  return out;
}

}  // namespace art
