// Session scripts: a small declarative language over the library.
//
//   ring R = Fp(2)[x,y] / (x*y);
//   let M = frobenius_pushforward(R, 1);
//   set budget.degree = 40;
//   print hilbert(M, 5);
//   check frobenius_duality(R);
//
// Statements end with `;`. `#` starts a comment running to the end of the line.
#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "art/poly.hpp"

namespace art {

// ---- syntax ------------------------------------------------------------------------------------

struct Expr {
  enum class Kind { Int, Name, Call, List, Add, Sub, Mul, Neg, Pow };
  Kind kind = Kind::Int;
  long long value = 0;               // Int, exponent of Pow
  std::string name;                  // Name, Call
  std::vector<Expr> args;            // Call, List, operands
  int line = 0, col = 0;
};

struct Command {
  enum class Kind { Ring, Let, Set, Print, Check };
  Kind kind = Kind::Print;
  int line = 0, col = 0;
  std::string echo;                  // source text, whitespace collapsed
  std::string name;                  // Ring, Let: bound name; Set: dotted key
  long long value = 0;               // Set; Ring: characteristic
  std::vector<std::string> vars;     // Ring
  std::vector<Expr> relations;       // Ring
  Expr expr;                         // Let, Print, Check
};

// Throws ParseError with "line L, column C" in the message.
std::vector<Command> parse_session(const std::string& text);

// ---- reports -----------------------------------------------------------------------------------

using FieldValue = std::variant<bool, long long, std::string, std::vector<long long>, std::vector<std::string>>;

struct Field {
  std::string key;
  FieldValue value;
};

struct Report {
  int line = 0;
  std::string command;
  bool ok = true;
  std::string error_kind, error_message;
  std::vector<Field> payload;  // printed in key order
  bool is_check = false;
  bool certified = false;      // check commands only

  std::string text() const;
  std::string json() const;    // one line, sorted keys
};

// ---- execution ---------------------------------------------------------------------------------

struct SessionOptions {
  int budget_degree = 60;
  long size_cap = 4096;
  unsigned seed = 1;
};

class Session {
 public:
  explicit Session(SessionOptions opts = {});
  ~Session();
  Session(Session&&) noexcept;
  Session& operator=(Session&&) noexcept;

  // Library errors become error reports; nothing escapes.
  Report execute(const Command& c);
  // Parse then execute every statement; a parse error yields a single error report.
  std::vector<Report> run(const std::string& text);

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

// True iff no report is an error and every check is certified.
bool all_passed(const std::vector<Report>& reports);

}  // namespace art
