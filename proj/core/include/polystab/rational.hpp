#ifndef POLYSTAB_RATIONAL_HPP
#define POLYSTAB_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

namespace polystab {

// Exact arithmetic carriers. mpq_rational keeps denominators positive and
// fractions reduced, which is exactly the canonical form we need.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline int sgn(const Rational& r) { return r.sign(); }
inline int sgn(const Integer& z) { return z.sign(); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Complex number with rational real and imaginary parts. Enough for the
// spectra and root lists handled here; no division needed.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace polystab

#endif
