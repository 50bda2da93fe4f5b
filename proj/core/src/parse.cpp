#include "polystab/parse.hpp"

#include <cctype>
#include <map>

namespace polystab {

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& text) : s_(text) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const std::string& what) {
    if (!accept(c)) throw ParseError(pos_, what);
  }
  std::size_t pos() {
    skip_ws();
    return pos_;
  }
  [[noreturn]] void fail(const std::string& expected) { throw ParseError(pos(), expected); }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  Integer integer() {
    skip_ws();
    if (!at_digit()) fail("a digit");
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(s_.substr(start, pos_ - start));
  }

  // unsigned `p` or `p/q`
  Rational unsigned_rational() {
    Integer num = integer();
    if (accept('/')) {
      Integer den = integer();
      if (den == 0) throw ParseError(pos_, "a nonzero denominator");
      return Rational(num) / Rational(den);
    }
    return Rational(num);
  }

  // optional leading sign, at most one
  int sign_opt() {
    if (accept('+')) return 1;
    if (accept('-')) return -1;
    return 1;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

constexpr int kMaxPower = 4096;

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  Scanner sc(text);
  std::map<int, Rational> powers;
  bool first = true;
  if (sc.done()) sc.fail("a polynomial");
  while (!sc.done()) {
    int sign = 1;
    if (first) {
      sign = sc.sign_opt();
      first = false;
    } else {
      if (sc.accept('+'))
        sign = 1;
      else if (sc.accept('-'))
        sign = -1;
      else
        sc.fail("'+' or '-'");
    }
    Rational coeff(1);
    bool have_coeff = false;
    if (sc.at_digit()) {
      coeff = sc.unsigned_rational();
      have_coeff = true;
    }
    int power = 0;
    if (sc.accept('x')) {
      power = 1;
      if (sc.accept('^')) {
        Integer p = sc.integer();
        if (p > kMaxPower) sc.fail("a smaller exponent");
        power = static_cast<int>(p);
      }
    } else if (!have_coeff) {
      sc.fail("a coefficient or 'x'");
    }
    powers[power] += sign * coeff;
  }
  int max_power = 0;
  for (const auto& [p, c] : powers)
    if (c != 0) max_power = std::max(max_power, p);
  std::vector<Rational> coeffs(static_cast<std::size_t>(max_power) + 1, Rational(0));
  for (const auto& [p, c] : powers)
    if (c != 0) coeffs[static_cast<std::size_t>(max_power - p)] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial parse_coefficient_list(const std::string& text) {
  Scanner sc(text);
  std::vector<Rational> coeffs;
  if (sc.done()) sc.fail("a coefficient");
  while (true) {
    int sign = sc.sign_opt();
    coeffs.push_back(sign * sc.unsigned_rational());
    if (sc.done()) break;
    sc.expect(',', "','");
  }
  return Polynomial(std::move(coeffs));
}

std::vector<GaussianRational> parse_spectrum(const std::string& text) {
  Scanner sc(text);
  std::vector<GaussianRational> out;
  if (sc.done()) sc.fail("a spectrum entry");
  while (true) {
    int sign = sc.sign_opt();
    Rational first = sign * sc.unsigned_rational();
    GaussianRational entry;
    if (sc.accept('i')) {
      entry = GaussianRational(Rational(0), first);
    } else if (sc.peek() == '+' || sc.peek() == '-') {
      int isign = sc.accept('+') ? 1 : (sc.accept('-'), -1);
      Rational imag = isign * sc.unsigned_rational();
      sc.expect('i', "'i'");
      entry = GaussianRational(first, imag);
    } else {
      entry = GaussianRational(first);
    }
    out.push_back(entry);
    if (sc.done()) break;
    sc.expect(',', "','");
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  Scanner sc(text);
  if (sc.done()) sc.fail("a rational");
  int sign = sc.sign_opt();
  Rational v = sign * sc.unsigned_rational();
  if (!sc.done()) sc.fail("end of input");
  return v;
}

}  // namespace polystab
