#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "msolve/mahler.hpp"

namespace msolve {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// Polynomial in x with rational coefficients: + - * / ^ and parentheses; division by constants only.
Poly parse_polynomial(const std::string& text);

// Sum of terms <poly>, <poly>*M^k, M^k or M. Coefficients stand left of M.
MahlerOperator parse_operator(const std::string& expr, int radix);

// Lines "radix: <int>", "operator: <expr>", optional "name: ..." and "expected: ...".
// '#' starts a comment.
struct ProblemFile {
  std::string name;
  int radix = 0;
  MahlerOperator op;
  std::optional<std::string> expected;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile read_problem(const std::string& path);
std::string format_problem(const ProblemFile& p);

}  // namespace msolve
