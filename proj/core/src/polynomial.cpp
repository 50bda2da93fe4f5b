#include "polystab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace polystab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NonMonic: return "NonMonic";
    case Errc::BothZero: return "BothZero";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::EndpointIsPole: return "EndpointIsPole";
    case Errc::AllRootsImaginary: return "AllRootsImaginary";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::HypothesisViolation: return "HypothesisViolation";
    case Errc::NotSelfConjugate: return "NotSelfConjugate";
    case Errc::RNonPositive: return "RNonPositive";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::Undecidable: return "Undecidable";
    case Errc::ParseError: return "ParseError";
    case Errc::InternalAssertion: return "InternalAssertion";
  }
  return "UnknownError";
}

void Polynomial::trim() {
  std::size_t i = 0;
  while (i < c_.size() && c_[i] == 0) ++i;
  if (i > 0) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(i));
}

Polynomial Polynomial::monomial(int k, Rational c) {
  if (c == 0) return zero();
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
  v[0] = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial f = one();
  for (const auto& r : roots) f = f * Polynomial({Rational(1), -r});
  return f;
}

Rational Polynomial::coeff(int power) const {
  int idx = degree() - power;
  if (power < 0 || idx < 0 || idx > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(idx)];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (const auto& c : c_) acc = acc * x + c;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() <= 0) return zero();
  std::vector<Rational> d;
  d.reserve(c_.size() - 1);
  int n = degree();
  for (int i = 0; i < n; ++i) d.push_back(Rational(n - i) * c_[static_cast<std::size_t>(i)]);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::negate_argument() const {
  std::vector<Rational> v = c_;
  int n = degree();
  for (int i = 0; i <= n; ++i)
    if ((n - i) % 2 != 0) v[static_cast<std::size_t>(i)] = -v[static_cast<std::size_t>(i)];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "cannot normalize the zero polynomial");
  return (Rational(1) / leading()) * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<Rational> v(n, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[n - a.c_.size() + i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[n - b.c_.size() + i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Rational> v = a.c_;
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  if (s == 0) return Polynomial::zero();
  std::vector<Rational> v = a.c_;
  for (auto& c : v) c *= s;
  return Polynomial(std::move(v));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(Errc::ZeroDenominator, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial::zero(), a};
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  std::vector<Rational> quo(static_cast<std::size_t>(dq) + 1, Rational(0));
  for (int i = 0; i <= dq; ++i) {
    Rational f = rem[static_cast<std::size_t>(i)] / b.leading();
    quo[static_cast<std::size_t>(i)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(Errc::InternalAssertion, "division expected to be exact");
  return q;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  int n = degree();
  bool first = true;
  for (int i = 0; i <= n; ++i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    int power = n - i;
    Rational mag = rational_abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (!unit || power == 0) out << mag;
    if (power > 0) {
      if (!unit) out << " ";
      out << "x";
      if (power > 1) out << "^" << power;
    }
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> even_odd_split(const Polynomial& f) {
  // index by power: even powers feed p, odd powers feed q
  std::vector<Rational> p, q;
  int n = f.degree();
  if (n < 0) return {Polynomial::zero(), Polynomial::zero()};
  int pm = n / 2, qm = (n - 1) / 2;
  p.assign(static_cast<std::size_t>(pm) + 1, Rational(0));
  if (qm >= 0) q.assign(static_cast<std::size_t>(qm) + 1, Rational(0));
  for (int power = 0; power <= n; ++power) {
    Rational c = f.coeff(power);
    if (power % 2 == 0)
      p[static_cast<std::size_t>(pm - power / 2)] = c;
    else
      q[static_cast<std::size_t>(qm - (power - 1) / 2)] = c;
  }
  return {Polynomial(std::move(p)), Polynomial(std::move(q))};
}

std::pair<Polynomial, Polynomial> hb_polynomials(const Polynomial& f) {
  if (!f.is_monic()) throw Error(Errc::NonMonic, "hb_polynomials requires a monic input");
  int n = f.degree();
  // P + iQ = i^n f(-ix): the x^(n-k) coefficient picks up a factor i^k.
  std::vector<Rational> pc(static_cast<std::size_t>(n) + 1, Rational(0));
  std::vector<Rational> qc(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    const Rational& ak = f.a(k);
    switch (k % 4) {
      case 0: pc[static_cast<std::size_t>(k)] = ak; break;
      case 1: qc[static_cast<std::size_t>(k)] = ak; break;
      case 2: pc[static_cast<std::size_t>(k)] = -ak; break;
      case 3: qc[static_cast<std::size_t>(k)] = -ak; break;
    }
  }
  return {Polynomial(std::move(pc)), Polynomial(std::move(qc))};
}

namespace {

using IntPoly = std::vector<Integer>;  // highest power first, nonempty, lead != 0

Integer int_content(const IntPoly& p) {
  Integer g(0);
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

void int_trim(IntPoly& p) {
  std::size_t i = 0;
  while (i < p.size() && p[i] == 0) ++i;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i));
}

IntPoly int_primitive(IntPoly p) {
  Integer g = int_content(p);
  if (g != 0)
    for (auto& c : p) c /= g;
  if (!p.empty() && p.front() < 0)
    for (auto& c : p) c = -c;
  return p;
}

// Clears denominators and strips the rational content.
IntPoly to_primitive_int(const Polynomial& f) {
  Integer lcm(1);
  for (const auto& c : f.coeffs()) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  IntPoly p;
  p.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) p.push_back(numerator(c) * (lcm / denominator(c)));
  return int_primitive(std::move(p));
}

Polynomial from_int(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p) v.emplace_back(c);
  return Polynomial(std::move(v));
}

Integer int_pow(Integer b, int e) {
  Integer r(1);
  while (e-- > 0) r *= b;
  return r;
}

// prem(a, b): remainder of lc(b)^(da-db+1) * a by b, exact over the integers.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  int e = static_cast<int>(a.size()) - 1 - db + 1;
  const Integer& lb = b.front();
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    Integer la = a.front();
    for (auto& c : a) c *= lb;
    // subtract la * x^(da-db) * b, which lines up with a's top db+1 slots
    for (int j = 0; j <= db; ++j)
      a[static_cast<std::size_t>(j)] -= la * b[static_cast<std::size_t>(j)];
    int_trim(a);
    --e;
  }
  // normalize to the canonical prem scaling
  if (e > 0) {
    Integer f = int_pow(lb, e);
    for (auto& c : a) c *= f;
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();

  IntPoly u = to_primitive_int(a), v = to_primitive_int(b);
  if (u.size() < v.size()) std::swap(u, v);

  // Subresultant PRS (Collins/Brown-Traub) keeps the intermediate
  // coefficients from exploding while staying integral.
  Integer g(1), h(1);
  while (true) {
    int delta = static_cast<int>(u.size()) - static_cast<int>(v.size());
    IntPoly r = pseudo_rem(u, v);
    if (r.empty()) break;
    u = std::move(v);
    Integer divisor = g * int_pow(h, delta);
    for (auto& c : r) c /= divisor;
    v = std::move(r);
    g = u.front();
    if (delta >= 1)
      h = int_pow(g, delta) / int_pow(h, delta - 1);
    else
      h = int_pow(h, 1 - delta) * int_pow(g, delta);
    if (v.size() == 1) return Polynomial::one();
  }
  return from_int(int_primitive(std::move(v))).monic();
}

Polynomial square_free_part(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "square_free_part of zero");
  if (f.degree() == 0) return Polynomial::one();
  Polynomial g = gcd(f, f.derivative());
  return exact_div(f.monic(), g);
}

std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "square_free_decomposition of zero");
  std::vector<SquareFreeFactor> out;
  Polynomial fm = f.monic();
  if (fm.degree() == 0) return out;

  // Yun's algorithm.
  Polynomial df = fm.derivative();
  Polynomial a = gcd(fm, df);
  Polynomial b = exact_div(fm, a);
  Polynomial c = exact_div(df, a);
  Polynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Polynomial ai = d.is_zero() ? b : gcd(b, d);
    if (ai.degree() > 0) out.push_back({ai, i});
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Rational elementary_symmetric(const std::vector<Rational>& values, int k) {
  if (k < 0 || k > static_cast<int>(values.size()))
    throw Error(Errc::IndexOutOfRange, "elementary_symmetric index out of range");
  // DP over the product of (1 + v t), keeping the first k+1 coefficients.
  std::vector<Rational> e(static_cast<std::size_t>(k) + 1, Rational(0));
  e[0] = 1;
  for (std::size_t idx = 0; idx < values.size(); ++idx)
    for (int j = std::min<int>(k, static_cast<int>(idx) + 1); j >= 1; --j)
      e[static_cast<std::size_t>(j)] += values[idx] * e[static_cast<std::size_t>(j - 1)];
  return e[static_cast<std::size_t>(k)];
}

Polynomial substitute_neg_x_squared(const Polynomial& p) {
  if (p.is_zero()) return Polynomial::zero();
  int m = p.degree();
  std::vector<Rational> v(static_cast<std::size_t>(2 * m) + 1, Rational(0));
  for (int j = 0; j <= m; ++j) {
    // coefficient of y^j becomes (-1)^j x^(2j)
    Rational c = p.coeff(j);
    if (j % 2 != 0) c = -c;
    v[static_cast<std::size_t>(2 * m - 2 * j)] = c;
  }
  return Polynomial(std::move(v));
}

Rational cauchy_root_bound(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "root bound of zero polynomial");
  Rational m(0);
  for (int i = 1; i <= f.degree(); ++i) m = std::max(m, rational_abs(f.a(i) / f.a(0)));
  return 1 + m;
}

int zero_root_multiplicity(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "zero polynomial");
  int k = 0;
  while (k <= f.degree() && f.coeff(k) == 0) ++k;
  return k;
}

}  // namespace polystab
