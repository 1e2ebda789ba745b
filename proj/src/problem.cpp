#include "msolve/problem.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace msolve {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

// Coefficients by power of M; a polynomial is the case of size 1.
using OpCoeffs = std::vector<Poly>;

void trim(OpCoeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

bool has_m(const OpCoeffs& c) { return c.size() > 1; }

OpCoeffs add(OpCoeffs a, const OpCoeffs& b, int sign) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = sign > 0 ? a[i] + b[i] : a[i] - b[i];
  trim(a);
  return a;
}

// Index of the single unit monomial M^j, or -1.
int pure_m_power(const OpCoeffs& c) {
  if (c.empty() || c.back() != Poly(1)) return -1;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!c[i].is_zero()) return -1;
  return static_cast<int>(c.size()) - 1;
}

class Parser {
 public:
  Parser(const std::string& text, int line, int column) : s_(text), line_(line), col0_(column) {}

  OpCoeffs parse_all() {
    skip_space();
    if (at_end()) fail("empty expression");
    OpCoeffs v = sum();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek_char() + "'");
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const {
    int col = col0_;
    for (std::size_t i = 0; i < pos && i < s_.size(); ++i)
      if ((static_cast<unsigned char>(s_[i]) & 0xC0) != 0x80) ++col;
    throw ParseError(msg, line_, col);
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek_char() const { return at_end() ? '\0' : s_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // '-' or the Unicode minus sign.
  bool minus_here() const {
    if (peek_char() == '-') return true;
    return s_.compare(pos_, 3, "\xE2\x88\x92") == 0;
  }

  void take_minus() { pos_ += peek_char() == '-' ? 1 : 3; }

  OpCoeffs sum() {
    skip_space();
    int sign = 1;
    if (peek_char() == '+') {
      ++pos_;
    } else if (minus_here()) {
      take_minus();
      sign = -1;
    }
    OpCoeffs acc = add({}, product(), sign);
    for (;;) {
      skip_space();
      if (peek_char() == '+') {
        ++pos_;
        acc = add(acc, product(), 1);
      } else if (minus_here()) {
        take_minus();
        acc = add(acc, product(), -1);
      } else {
        return acc;
      }
    }
  }

  OpCoeffs product() {
    OpCoeffs acc = power();
    for (;;) {
      skip_space();
      char c = peek_char();
      if (c != '*' && c != '/') return acc;
      ++pos_;
      skip_space();
      std::size_t rhs_at = pos_;
      OpCoeffs rhs = power();
      if (c == '/') {
        if (rhs.empty() || has_m(rhs) || rhs[0].deg() > 0) fail_at("division by a non-constant", rhs_at);
        Rational d = rhs[0].coeff(0);
        for (auto& p : acc) p = p * Poly(Rational(1) / d);
        continue;
      }
      if (has_m(acc)) {
        int j = pure_m_power(rhs);
        if (j < 0) fail_at("coefficient to the right of M; write coefficients on the left", rhs_at);
        acc.insert(acc.begin(), j, Poly());
        continue;
      }
      if (acc.empty()) continue;
      Poly p = acc[0];
      for (auto& q : rhs) q = p * q;
      acc = rhs;
      trim(acc);
    }
  }

  OpCoeffs power() {
    std::size_t base_at = pos_;
    OpCoeffs base = primary();
    skip_space();
    if (peek_char() != '^') return base;
    ++pos_;
    skip_space();
    std::size_t exp_at = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek_char()))) fail("expected a nonnegative integer exponent");
    Integer e = digits();
    if (e > 100000) fail_at("exponent too large", exp_at);
    const long k = e.get_si();
    if (has_m(base)) {
      int j = pure_m_power(base);
      if (j < 0) fail_at("only powers of M itself are supported", base_at);
      OpCoeffs r(j * k + 1);
      r.back() = Poly(1);
      return r;
    }
    if (base.empty()) return k == 0 ? OpCoeffs{Poly(1)} : OpCoeffs{};
    return {pow(base[0], static_cast<int>(k))};
  }

  Integer digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek_char()))) ++pos_;
    return Integer(s_.substr(start, pos_ - start));
  }

  OpCoeffs primary() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    char c = peek_char();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Poly p{Rational(digits())};
      return p.is_zero() ? OpCoeffs{} : OpCoeffs{p};
    }
    if (c == 'x') {
      ++pos_;
      return {Poly::x()};
    }
    if (c == 'M') {
      ++pos_;
      return {Poly(), Poly(1)};
    }
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      OpCoeffs v = sum();
      skip_space();
      if (peek_char() != ')') fail_at("unbalanced parenthesis", open);
      ++pos_;
      return v;
    }
    if (minus_here() || c == '+') fail("misplaced sign");
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_, col0_;
};

MahlerOperator build_operator(OpCoeffs c, int radix, int line, int column) {
  if (radix < 2) throw ParseError("radix must be at least 2", line, column);
  trim(c);
  if (c.size() < 2) throw ParseError("operator has order 0", line, column);
  if (c[0].is_zero()) throw ParseError("trailing coefficient l0 is zero", line, column);
  return MahlerOperator(radix, c);
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Poly parse_polynomial(const std::string& text) {
  Parser p(text, 1, 1);
  OpCoeffs c = p.parse_all();
  if (has_m(c)) throw ParseError("M is not allowed in a polynomial", 1, 1);
  return c.empty() ? Poly() : c[0];
}

MahlerOperator parse_operator(const std::string& expr, int radix) {
  Parser p(expr, 1, 1);
  return build_operator(p.parse_all(), radix, 1, 1);
}

ProblemFile parse_problem(const std::string& text) {
  ProblemFile out;
  std::optional<OpCoeffs> coeffs;
  int op_line = 0, op_col = 0;
  bool have_radix = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = raw.substr(0, raw.find('#'));
    if (strip(body).empty()) continue;
    std::size_t colon = body.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line, 1);
    std::string key = strip(body.substr(0, colon));
    std::size_t vstart = body.find_first_not_of(" \t", colon + 1);
    if (vstart == std::string::npos) vstart = body.size();
    std::string value = strip(body.substr(vstart));
    const int col = static_cast<int>(vstart) + 1;
    if (key == "radix") {
      try {
        std::size_t used = 0;
        out.radix = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw ParseError("radix must be an integer", line, col);
      }
      if (out.radix < 2) throw ParseError("radix must be at least 2", line, col);
      have_radix = true;
    } else if (key == "operator") {
      Parser p(value, line, col);
      coeffs = p.parse_all();
      op_line = line;
      op_col = col;
    } else if (key == "name") {
      out.name = value;
    } else if (key == "expected") {
      out.expected = value;
    } else {
      throw ParseError("unknown key '" + key + "'", line, 1);
    }
  }
  if (!coeffs) throw ParseError("missing 'operator:' line", line + 1, 1);
  if (!have_radix) throw ParseError("missing 'radix:' line", line + 1, 1);
  out.op = build_operator(*coeffs, out.radix, op_line, op_col);
  return out;
}

ProblemFile read_problem(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  ProblemFile p = parse_problem(ss.str());
  if (p.name.empty()) {
    std::string base = path.substr(path.find_last_of('/') + 1);
    p.name = base.substr(0, base.find('.'));
  }
  return p;
}

std::string format_problem(const ProblemFile& p) {
  std::string s;
  if (!p.name.empty()) s += "name: " + p.name + "\n";
  s += "radix: " + std::to_string(p.op.radix()) + "\n";
  s += "operator: " + p.op.to_string() + "\n";
  if (p.expected) s += "expected: " + *p.expected + "\n";
  return s;
}

}  // namespace msolve
