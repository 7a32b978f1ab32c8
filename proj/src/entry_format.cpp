#include "udk/entry_format.hpp"

#include <cctype>

#include "udk/errors.hpp"

namespace udk {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& str) : s(str) { skip(); }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError("at position " + std::to_string(pos) + ": expected " + expected);
  }

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      skip();
      return true;
    }
    return false;
  }

  long long integer(bool allow_sign) {
    size_t start = pos;
    bool neg = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) neg = (s[pos++] == '-');
    if (!std::isdigit((unsigned char)peek())) {
      pos = start;
      fail("an integer");
    }
    unsigned long long v = 0;
    while (std::isdigit((unsigned char)peek())) {
      v = v * 10 + (unsigned)(s[pos++] - '0');
      if (v > (1ULL << 62)) fail("a smaller integer literal");
    }
    skip();
    return neg ? -(long long)v : (long long)v;
  }

  // root := 'z' positive-integer ('^' integer)?
  Cyc root() {
    ++pos;  // consume 'z'
    if (!std::isdigit((unsigned char)peek())) fail("a root order after 'z'");
    long long n = integer(false);
    if (n < 1) fail("a positive root order");
    long long e = 1;
    if (peek() == '^') {
      ++pos;
      skip();
      e = integer(true);
    }
    return Cyc::zeta((uint32_t)n, e);
  }

  // term := coeff ('*' root)? | root
  Cyc term() {
    if (peek() == 'z') return root();
    long long num = integer(true);
    long long den = 1;
    if (peek() == '/') {
      ++pos;
      skip();
      den = integer(false);
      if (den == 0) throw ZeroDenominator("zero denominator in entry");
    }
    Rat c(num, den);
    if (eat('*')) {
      if (peek() != 'z') fail("a root after '*'");
      return root() * Cyc(c);
    }
    return Cyc(c);
  }

  Cyc expr() {
    if (done()) fail("a term");
    Cyc acc(Rat(0));
    if (eat('-'))
      acc = -term();
    else
      acc = term();
    while (!done()) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc += -term();
      } else {
        fail("'+' or '-'");
      }
    }
    return acc;
  }
};

}  // namespace

Cyc parse_entry(const std::string& s) {
  Parser p(s);
  return p.expr();
}

std::string render_entry(const Cyc& x) {
  uint32_t n = x.conductor();
  const auto& c = x.coeffs();
  std::string out;
  for (uint32_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    Rat v = c[k];
    bool neg = v.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) v = -v;
    std::string cs = v.to_string();
    if (k == 0) {
      out += cs;
    } else {
      if (!v.is_one()) {
        out += cs;
        out += "*";
      }
      out += "z" + std::to_string(n);
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace udk
