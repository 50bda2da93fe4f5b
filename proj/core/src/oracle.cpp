#include "polystab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <boost/math/constants/constants.hpp>

namespace polystab {

namespace {

struct Cx {
  BigFloat re, im;

  Cx() : re(0), im(0) {}
  Cx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator/(const Cx& a, const Cx& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  BigFloat abs() const { return sqrt(re * re + im * im); }
};

std::vector<BigFloat> to_float_coeffs(const Polynomial& f) {
  std::vector<BigFloat> c;
  c.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) c.emplace_back(q);
  return c;
}

Cx horner(const std::vector<BigFloat>& c, const Cx& z) {
  Cx acc;
  for (const auto& ci : c) acc = acc * z + Cx(ci, BigFloat(0));
  return acc;
}

// Aberth-Ehrlich on a square-free polynomial; returns one approximation per
// root or nullopt when the iteration fails to settle.
std::optional<std::vector<Cx>> aberth(const Polynomial& g, unsigned bits) {
  int m = g.degree();
  std::vector<BigFloat> c = to_float_coeffs(g.monic());
  std::vector<BigFloat> dc;
  for (int i = 0; i < m; ++i) dc.push_back(BigFloat(m - i) * c[static_cast<std::size_t>(i)]);

  BigFloat bound(cauchy_root_bound(g));
  BigFloat pi = boost::math::constants::pi<BigFloat>();

  std::vector<Cx> z(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    // staggered radii and an irrational-ish phase offset break symmetry
    BigFloat r = bound * (BigFloat(1) / 2 + BigFloat(i) / (3 * m + 1));
    BigFloat theta = 2 * pi * (BigFloat(i) + BigFloat(37) / 100) / m;
    z[static_cast<std::size_t>(i)] = {r * cos(theta), r * sin(theta)};
  }

  BigFloat eps = pow(BigFloat(2), -static_cast<int>(bits) + 6);
  for (int iter = 0; iter < 500; ++iter) {
    BigFloat worst(0);
    for (int i = 0; i < m; ++i) {
      Cx& zi = z[static_cast<std::size_t>(i)];
      Cx p = horner(c, zi);
      Cx dp = horner(dc, zi);
      if (dp.abs() == 0) {
        zi.re += eps;
        continue;
      }
      Cx w = p / dp;
      Cx s;
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        Cx diff = zi - z[static_cast<std::size_t>(j)];
        BigFloat d2 = diff.re * diff.re + diff.im * diff.im;
        if (d2 == 0) {
          diff.re += eps;
          d2 = diff.re * diff.re + diff.im * diff.im;
        }
        s = s + Cx(diff.re / d2, -diff.im / d2);  // 1 / (zi - zj)
      }
      Cx denom = Cx(BigFloat(1), BigFloat(0)) - w * s;
      if (denom.abs() == 0) continue;
      Cx corr = w / denom;
      zi = zi - corr;
      worst = std::max(worst, corr.abs() / (1 + zi.abs()));
    }
    if (worst < eps) return z;
  }
  return std::nullopt;
}

}  // namespace

std::vector<NumericRoot> numeric_roots(const Polynomial& f, unsigned precision_bits) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "numeric roots of zero");
  if (f.degree() < 1) throw Error(Errc::ZeroPolynomial, "numeric roots need degree >= 1");

  unsigned digits = static_cast<unsigned>(std::ceil(precision_bits * 0.30103)) + 4;
  BigFloat::default_precision(digits);

  std::vector<NumericRoot> out;
  for (const auto& [factor, mult] : square_free_decomposition(f)) {
    int m = factor.degree();
    if (m == 0) continue;
    auto zs = aberth(factor, precision_bits);
    if (!zs)
      throw Error(Errc::PrecisionExhausted, "root iteration failed to converge");
    std::vector<BigFloat> c = to_float_coeffs(factor.monic());
    std::vector<BigFloat> dc;
    for (int i = 0; i < m; ++i) dc.push_back(BigFloat(m - i) * c[static_cast<std::size_t>(i)]);
    for (const auto& z : *zs) {
      NumericRoot r;
      r.re = z.re;
      r.im = z.im;
      Cx p = horner(c, z);
      Cx dp = horner(dc, z);
      // for simple roots: |z - root| <= m |p(z) / p'(z)|, padded with a
      // resolution floor so evaluation rounding cannot fake certainty
      BigFloat denom = dp.abs();
      BigFloat floor = pow(BigFloat(2), -static_cast<int>(precision_bits) + 8) * (1 + z.abs());
      r.radius = (denom == 0 ? BigFloat(1) : BigFloat(m) * p.abs() / denom) + floor;
      r.multiplicity = mult;
      out.push_back(std::move(r));
    }
  }
  return out;
}

HalfPlaneCount numeric_half_plane_counts(const Polynomial& f, unsigned precision_bits) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "counts of the zero polynomial");
  int n = f.monic().degree();
  if (n == 0) return {};

  // exact count of imaginary-axis roots, so near-axis ambiguity is decidable
  auto [P, Q] = hb_polynomials(f.monic());
  int n0;
  if (Q.is_zero())
    n0 = count_real_roots_with_multiplicity(P);
  else {
    Polynomial g = gcd(P, Q);
    n0 = g.degree() > 0 ? count_real_roots_with_multiplicity(g) : 0;
  }

  unsigned bits = precision_bits;
  for (int attempt = 0; attempt < 4; ++attempt, bits *= 2) {
    std::vector<NumericRoot> roots;
    try {
      roots = numeric_roots(f, bits);
    } catch (const Error& e) {
      if (e.code() == Errc::PrecisionExhausted) continue;
      throw;
    }
    HalfPlaneCount c;
    int ambiguous = 0;
    for (const auto& r : roots) {
      if (r.re - r.radius > 0)
        c.n_plus += r.multiplicity;
      else if (r.re + r.radius < 0)
        c.n_minus += r.multiplicity;
      else
        ambiguous += r.multiplicity;
    }
    if (ambiguous == n0) {
      c.n_zero = n0;
      return c;
    }
  }
  throw Error(Errc::Undecidable, "roots too close to the imaginary axis at maximal precision");
}

}  // namespace polystab
