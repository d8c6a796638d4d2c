#include <random>

#include "art/session.hpp"
#include "doctest.h"

using namespace art;

namespace {

std::vector<Report> run(const std::string& text, SessionOptions o = {}) { return Session(o).run(text); }

const Field* field(const Report& r, const std::string& key) {
  for (auto& f : r.payload)
    if (f.key == key) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("parse: ring declaration") {
  auto cmds = parse_session("ring R = Fp(2)[x,y] / (x*y);");
  REQUIRE(cmds.size() == 1);
  CHECK(cmds[0].kind == Command::Kind::Ring);
  CHECK(cmds[0].name == "R");
  CHECK(cmds[0].value == 2);
  CHECK(cmds[0].vars == std::vector<std::string>{"x", "y"});
  CHECK(cmds[0].relations.size() == 1);
  CHECK(cmds[0].echo == "ring R = Fp(2)[x,y] / (x*y)");
}

TEST_CASE("parse: let binds a call") {
  auto cmds = parse_session("let M = frobenius_pushforward(R, 1);");
  REQUIRE(cmds.size() == 1);
  CHECK(cmds[0].kind == Command::Kind::Let);
  CHECK(cmds[0].expr.kind == Expr::Kind::Call);
  CHECK(cmds[0].expr.name == "frobenius_pushforward");
  CHECK(cmds[0].expr.args.size() == 2);
}

TEST_CASE("parse: malformed ring reports the offending token") {
  try {
    parse_session("ring R = ;");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == "ParseError");
    std::string m = e.what();
    CHECK(m.find("token ';'") != std::string::npos);
    CHECK(m.find("line 1, column 10") != std::string::npos);
  }
}

TEST_CASE("parse: positions across lines and comments") {
  try {
    parse_session("# header\nring R = Fp(2)[x];\nprint hilbert(R 3);\n");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3, column 17") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_session("ring R = Fp(2)[x];\nprint x';"), Error);
  CHECK_THROWS_AS(parse_session("let ring = 1;"), Error);
  CHECK_THROWS_AS(parse_session("print 1"), Error);
  CHECK(parse_session("  # only a comment\n").empty());
  auto r = Session().run("ring R = Fp(2)[x];\n\nprint (x;");
  REQUIRE(r.size() == 1);
  CHECK(r[0].error_kind == "ParseError");
  CHECK(r[0].line == 3);
}

TEST_CASE("parse: precedence") {
  auto cmds = parse_session("print -x^2 + y*z;");
  const Expr& e = cmds[0].expr;
  REQUIRE(e.kind == Expr::Kind::Add);
  CHECK(e.args[0].kind == Expr::Kind::Neg);
  CHECK(e.args[0].args[0].kind == Expr::Kind::Pow);
  CHECK(e.args[1].kind == Expr::Kind::Mul);
}

TEST_CASE("execute: frobenius_duality on F_2[x] is certified") {
  auto r = run("ring R = Fp(2)[x];\ncheck frobenius_duality(R);");
  REQUIRE(r.size() == 2);
  CHECK(r[1].ok);
  CHECK(r[1].is_check);
  CHECK(r[1].certified);
  CHECK(all_passed(r));
}

TEST_CASE("execute: hilbert returns a vector") {
  auto r = run("ring R = Fp(2)[x,y] / (x*y);\nlet M = kahler(R);\nprint hilbert(M, 4);");
  REQUIRE(r.size() == 3);
  REQUIRE(r[2].ok);
  const Field* v = field(r[2], "values");
  REQUIRE(v);
  CHECK(std::get<std::vector<long long>>(v->value) == std::vector<long long>{0, 2, 3, 2, 2});
  auto q = run("ring R = Fp(2)[x,y];\nprint hilbert(quotient(R, [x^2, y^3]), 5);");
  CHECK(std::get<std::vector<long long>>(field(q[1], "values")->value) == std::vector<long long>{1, 2, 2, 1, 0, 0});
}

TEST_CASE("execute: gabber_kernels is certified") {
  auto r = run(
      "ring S = Fp(2)[X,Y];\n"
      "ring A = Fp(2)[x] / (x^2);\n"
      "let pi = map(S, A, [x, 0]);\n"
      "check gabber_kernels(S, pi, 2);\n");
  REQUIRE(r.size() == 4);
  CHECK(r[3].ok);
  CHECK(r[3].certified);
}

TEST_CASE("execute: compare_presentations from two surjections") {
  auto r = run(
      "ring A = Fp(2)[x] / (x^2);\n"
      "ring S1 = Fp(2)[x];\n"
      "ring S2 = Fp(2)[x,y];\n"
      "let p1 = map(S1, A, [x]);\n"
      "let p2 = map(S2, A, [x, 0]);\n"
      "check compare_presentations(p1, p2);\n");
  REQUIRE(r.size() == 6);
  CHECK(r[5].certified);
  CHECK(std::get<std::vector<long long>>(field(r[5], "first_support")->value) == std::vector<long long>{0});
}

TEST_CASE("errors: names, rings and types") {
  auto r = run(
      "ring R = Fp(2)[x];\n"
      "ring S = Fp(3)[y];\n"
      "print hilbert(M, 3);\n"
      "let f = poly(S, y + 1);\n"
      "print ideal(R, [x, f]);\n"
      "print frobenius_duality(R, 2);\n"
      "ring R = Fp(5)[z];\n"
      "ring T = Fp(4)[z];\n"
      "print nothing(R);\n"
      "check hilbert(R, 2);\n");
  REQUIRE(r.size() == 10);
  CHECK(r[2].error_kind == "NameError");
  CHECK(r[3].ok);
  CHECK(r[4].error_kind == "RingMismatch");
  CHECK(r[5].error_kind == "TypeError");
  CHECK(r[6].error_kind == "NameError");
  CHECK(r[7].error_kind == "InvalidArgument");
  CHECK(r[8].error_kind == "NameError");
  CHECK(r[9].error_kind == "TypeError");
  CHECK(!all_passed(r));
}

TEST_CASE("errors: library failures become reports") {
  auto r = run(
      "ring R = Fp(2)[x];\n"
      "ring U = Fp(2)[x,y,z] / (x*z, y*z, z^2);\n"
      "check frobenius_duality(U);\n"
      "check trace_generator(R, [x^2]);\n"
      "print poly(R, x^70);\n");
  REQUIRE(r.size() == 5);
  CHECK(r[2].error_kind == "NotCohenMacaulay");
  CHECK(!r[3].ok);
  CHECK(r[4].error_kind == "DegreeBudgetExceeded");
}

TEST_CASE("budgets are configurable") {
  auto r = run("ring R = Fp(2)[x];\nset budget.degree = 80;\nprint poly(R, x^70);\nset budget.nothing = 1;");
  CHECK(r[1].ok);
  CHECK(r[2].ok);
  CHECK(r[3].error_kind == "NameError");
  SessionOptions small;
  small.size_cap = 2;
  auto s = run("ring R = Fp(2)[x,y];\nprint frobenius_pushforward(R, 1);", small);
  CHECK(s[1].error_kind == "SizeCapExceeded");
}

TEST_CASE("a failed check is reported and fails the run") {
  auto r = run("ring R = Fp(2)[x,y];\ncheck is_p_basis(R, [x]);");
  CHECK(r[1].ok);
  CHECK(!r[1].certified);
  CHECK(!all_passed(r));
  CHECK(r[1].text().find("NOT certified") != std::string::npos);
}

TEST_CASE("json: sorted keys and canonical polynomials") {
  auto r = run("ring R = Fp(5)[x,y];\nprint poly(R, -x + y^2 - 1);");
  std::string j = r[1].json();
  CHECK(j.find("\"value\":\"y^2 + 4*x + 4\"") != std::string::npos);
  CHECK(j.find("\"command\"") < j.find("\"line\""));
  CHECK(j.find("\"line\"") < j.find("\"payload\""));
  CHECK(j.find("\"payload\"") < j.find("\"status\""));
  CHECK(j.find('\n') == std::string::npos);
}

TEST_CASE("property: replaying a transcript is byte-identical") {
  const std::string script =
      "ring R = Fp(3)[x,y] / (x*y);\n"
      "let M = frobenius_pushforward(R, 1);\n"
      "print M;\n"
      "print generic_rank(free(R, 2));\n"
      "let I = ideal(R, [x^2 + y, y^3]);\n"
      "print gb(I);\n"
      "check member(I, x^2*y + y^2);\n"
      "print nothing;\n"
      "check fli(S, [x]);\n";
  auto a = run(script), b = run(script);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].json() == b[i].json());
    CHECK(a[i].text() == b[i].text());
  }
}

TEST_CASE("property: garbage never escapes as an exception") {
  std::mt19937 rng(5);
  const std::string alphabet = "ringletsprchk=()[],;/+-*^.xyRSFp0123 \n'#";
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1), len(0, 60);
  for (int t = 0; t < 300; ++t) {
    std::string s;
    for (size_t k = len(rng); k > 0; --k) s += alphabet[pick(rng)];
    std::vector<Report> r;
    CHECK_NOTHROW(r = run("ring R = Fp(2)[x,y];\n" + s));
  }
}
