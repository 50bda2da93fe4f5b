#ifndef POLYSTAB_POLYNOMIAL_HPP
#define POLYSTAB_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "polystab/errors.hpp"
#include "polystab/rational.hpp"

namespace polystab {

// Dense univariate polynomial with exact rational coefficients, stored from
// the highest power down to the constant term. The zero polynomial is the
// empty coefficient vector; otherwise the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return {}; }
  static Polynomial constant(Rational v) { return Polynomial({std::move(v)}); }
  static Polynomial one() { return constant(1); }
  static Polynomial x() { return Polynomial({Rational(1), Rational(0)}); }
  // c * x^k
  static Polynomial monomial(int k, Rational c);
  // prod (x - r) over the given rational roots
  static Polynomial from_roots(const std::vector<Rational>& roots);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.front(); }
  bool is_monic() const { return !c_.empty() && c_.front() == 1; }

  // Coefficient of x^power (zero when out of range).
  Rational coeff(int power) const;
  // a_i in the indexing f = a_0 x^n + a_1 x^(n-1) + ... + a_n.
  const Rational& a(int i) const { return c_.at(static_cast<std::size_t>(i)); }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(eval(x)); }
  int sign_at_pos_inf() const { return is_zero() ? 0 : sgn(leading()); }
  int sign_at_neg_inf() const {
    if (is_zero()) return 0;
    return degree() % 2 == 0 ? sgn(leading()) : -sgn(leading());
  }

  Polynomial derivative() const;
  // x -> -x
  Polynomial negate_argument() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
// Exact rational division with remainder; divisor must be nonzero.
DivMod divmod(const Polynomial& a, const Polynomial& b);
// a / b when the division is exact; throws InternalAssertion otherwise.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

// f(x) = p(x^2) + x q(x^2); returns (p, q).
std::pair<Polynomial, Polynomial> even_odd_split(const Polynomial& f);

// For monic f = x^n + a_1 x^(n-1) + ... + a_n, the pair
//   P(x) = x^n - a_2 x^(n-2) + a_4 x^(n-4) - ...
//   Q(x) = a_1 x^(n-1) - a_3 x^(n-3) + ...
// so that P + iQ = i^n f(-ix). Throws NonMonic.
std::pair<Polynomial, Polynomial> hb_polynomials(const Polynomial& f);

// Monic greatest common divisor, via a fraction-free subresultant remainder
// sequence on the primitive integer parts. Throws BothZero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct SquareFreeFactor {
  Polynomial factor;  // monic, square-free
  int multiplicity;
};
// Yun decomposition: f = lc * prod factor_i^mult_i with pairwise coprime
// square-free monic factors. Throws ZeroPolynomial.
std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& f);

// Square-free part f / gcd(f, f'), made monic.
Polynomial square_free_part(const Polynomial& f);

// e_k of the given values; e_0 = 1. Throws IndexOutOfRange.
Rational elementary_symmetric(const std::vector<Rational>& values, int k);

// p(-x^2) as a polynomial in x.
Polynomial substitute_neg_x_squared(const Polynomial& p);

// 1 + max |a_i / a_0|: every real root lies in (-B, B).
Rational cauchy_root_bound(const Polynomial& f);

// Multiplicity of zero as a root (number of trailing zero coefficients).
int zero_root_multiplicity(const Polynomial& f);

}  // namespace polystab

#endif
