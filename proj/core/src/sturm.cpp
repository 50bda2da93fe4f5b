#include "polystab/sturm.hpp"

#include <algorithm>
#include <sstream>

namespace polystab {

int sign_variations_of_signs(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int sign_variations(const std::vector<Rational>& values) {
  std::vector<int> s;
  s.reserve(values.size());
  for (const auto& v : values) s.push_back(sgn(v));
  return sign_variations_of_signs(s);
}

SturmChain SturmChain::build(const Polynomial& f0, const Polynomial& f1) {
  SturmChain sc;
  sc.chain.push_back(f0);
  if (f1.is_zero()) return sc;
  sc.chain.push_back(f1);
  while (true) {
    const Polynomial& a = sc.chain[sc.chain.size() - 2];
    const Polynomial& b = sc.chain.back();
    Polynomial r = divmod(a, b).remainder;
    if (r.is_zero()) break;
    sc.chain.push_back(-r);
  }
  return sc;
}

int SturmChain::variations_at(const Endpoint& e) const {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& f : chain) {
    switch (e.kind) {
      case Endpoint::NegInf: signs.push_back(f.sign_at_neg_inf()); break;
      case Endpoint::PosInf: signs.push_back(f.sign_at_pos_inf()); break;
      case Endpoint::Finite: signs.push_back(f.sign_at(e.value)); break;
    }
  }
  return sign_variations_of_signs(signs);
}

namespace {

bool endpoint_less(const Endpoint& a, const Endpoint& b) {
  if (a.kind == Endpoint::NegInf) return b.kind != Endpoint::NegInf;
  if (a.kind == Endpoint::PosInf) return false;
  if (b.kind == Endpoint::PosInf) return true;
  if (b.kind == Endpoint::NegInf) return false;
  return a.value < b.value;
}

}  // namespace

int cauchy_index(const Polynomial& Q, const Polynomial& P, const Endpoint& theta,
                 const Endpoint& phi) {
  if (P.is_zero()) throw Error(Errc::ZeroDenominator, "Cauchy index with zero denominator");
  if (!endpoint_less(theta, phi))
    throw Error(Errc::HypothesisViolation, "Cauchy index requires theta < phi");
  for (const Endpoint* e : {&theta, &phi})
    if (e->kind == Endpoint::Finite && P.eval(e->value) == 0)
      throw Error(Errc::EndpointIsPole, "finite endpoint is a root of the denominator");
  SturmChain sc = SturmChain::build(P, Q);
  return sc.variations_at(theta) - sc.variations_at(phi);
}

int count_real_roots(const Polynomial& f, const Endpoint& theta, const Endpoint& phi) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "root counting on the zero polynomial");
  if (!endpoint_less(theta, phi))
    throw Error(Errc::HypothesisViolation, "root counting requires theta < phi");
  Polynomial g = square_free_part(f);
  if (g.degree() <= 0) return 0;
  SturmChain sc = SturmChain::build(g, g.derivative());
  return sc.variations_at(theta) - sc.variations_at(phi);
}

int count_real_roots(const Polynomial& f) {
  return count_real_roots(f, Endpoint::neg_inf(), Endpoint::pos_inf());
}

int count_real_roots_with_multiplicity(const Polynomial& f, const Endpoint& theta,
                                       const Endpoint& phi) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "root counting on the zero polynomial");
  int total = 0;
  for (const auto& [factor, mult] : square_free_decomposition(f))
    total += mult * count_real_roots(factor, theta, phi);
  return total;
}

int count_real_roots_with_multiplicity(const Polynomial& f) {
  return count_real_roots_with_multiplicity(f, Endpoint::neg_inf(), Endpoint::pos_inf());
}

AlgebraicRoot AlgebraicRoot::exact(Rational value, int multiplicity) {
  AlgebraicRoot r;
  r.exact_ = std::move(value);
  r.multiplicity_ = multiplicity;
  return r;
}

AlgebraicRoot AlgebraicRoot::bracketed(Polynomial defining, Rational lo, Rational hi,
                                       int multiplicity) {
  if (!(lo < hi)) throw Error(Errc::HypothesisViolation, "isolating interval must be nonempty");
  if (defining.sign_at(lo) * defining.sign_at(hi) >= 0)
    throw Error(Errc::HypothesisViolation,
                "defining polynomial must change sign across the isolating interval");
  AlgebraicRoot r;
  r.defining_ = std::move(defining);
  r.lo_ = std::move(lo);
  r.hi_ = std::move(hi);
  r.multiplicity_ = multiplicity;
  return r;
}

void AlgebraicRoot::refine() {
  if (is_exact()) return;
  Rational mid = (lo_ + hi_) / 2;
  int sm = defining_.sign_at(mid);
  if (sm == 0) {
    exact_ = mid;
    return;
  }
  if (defining_.sign_at(lo_) * sm < 0)
    hi_ = mid;
  else
    lo_ = mid;
}

std::string AlgebraicRoot::to_string() const {
  std::ostringstream out;
  if (is_exact()) {
    out << exact_value();
  } else {
    out << "{" << defining_.to_string() << "; (" << lo_ << ", " << hi_ << ")";
  }
  if (multiplicity_ != 1) out << "; mult " << multiplicity_;
  if (!is_exact()) out << "}";
  return out.str();
}

namespace {

// distinct roots of the square-free g in (lo, hi], via a prebuilt chain
int count_in(const SturmChain& sc, const Endpoint& lo, const Endpoint& hi) {
  return sc.variations_at(lo) - sc.variations_at(hi);
}

Ordering flip(Ordering o) {
  if (o == Ordering::LT) return Ordering::GT;
  if (o == Ordering::GT) return Ordering::LT;
  return Ordering::EQ;
}

Ordering compare_exact_vs_interval(const Rational& r, const AlgebraicRoot& b) {
  if (r <= b.lo()) return Ordering::LT;
  if (r >= b.hi()) return Ordering::GT;
  if (b.defining().eval(r) == 0) return Ordering::EQ;
  int c = count_real_roots(b.defining(), Endpoint::at(b.lo()), Endpoint::at(r));
  return c == 1 ? Ordering::GT : Ordering::LT;  // root of b below r -> r greater
}

}  // namespace

Ordering compare_roots(const AlgebraicRoot& a, const AlgebraicRoot& b) {
  if (a.is_exact() && b.is_exact()) {
    if (a.exact_value() < b.exact_value()) return Ordering::LT;
    if (a.exact_value() > b.exact_value()) return Ordering::GT;
    return Ordering::EQ;
  }
  if (a.is_exact()) return compare_exact_vs_interval(a.exact_value(), b);
  if (b.is_exact()) return flip(compare_exact_vs_interval(b.exact_value(), a));

  AlgebraicRoot x = a, y = b;
  // Shared algebraic number: a common root inside the overlap settles EQ.
  {
    Rational olo = std::max(x.lo(), y.lo());
    Rational ohi = std::min(x.hi(), y.hi());
    if (olo < ohi) {
      Polynomial h = gcd(x.defining(), y.defining());
      if (h.degree() > 0 &&
          count_real_roots(h, Endpoint::at(olo), Endpoint::at(ohi)) > 0)
        return Ordering::EQ;
    }
  }
  // Roots are distinct: refine until the intervals separate.
  while (true) {
    if (x.is_exact() || y.is_exact()) return compare_roots(x, y);
    if (x.hi() <= y.lo()) return Ordering::LT;
    if (y.hi() <= x.lo()) return Ordering::GT;
    if (x.hi() - x.lo() >= y.hi() - y.lo())
      x.refine();
    else
      y.refine();
  }
}

namespace {

// Divisors of |n| (factorization by trial division); nullopt when n is too
// hard to factor within the budget or has too many divisors.
std::optional<std::vector<Integer>> small_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n == 0) return std::nullopt;
  std::vector<std::pair<Integer, int>> fact;
  Integer m = n;
  for (Integer p = 2; p * p <= m && p < 10000; p = (p == 2 ? Integer(3) : Integer(p + 2))) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      fact.emplace_back(p, e);
    }
  }
  if (m > 1) {
    // any remaining cofactor below 10^8 is prime (no factor under 10^4)
    if (m >= Integer(100000000)) return std::nullopt;
    fact.emplace_back(m, 1);
  }
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : fact) {
    std::size_t sz = divs.size();
    Integer pk(1);
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
    }
    if (divs.size() > 4096) return std::nullopt;
  }
  return divs;
}

// Exact rational roots of the square-free monic g, deflating as found.
// Roots that cannot be proven rational stay in g for interval isolation.
std::vector<Rational> extract_rational_roots(Polynomial& g) {
  std::vector<Rational> roots;
  if (g.coeff(0) == 0) {
    roots.emplace_back(0);
    g = exact_div(g, Polynomial::x());
  }
  if (g.degree() < 1) return roots;

  // candidates p/q with p | constant, q | leading of the primitive integer form
  Integer lcm(1);
  for (const auto& c : g.coeffs()) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  std::vector<Integer> ic;
  for (const auto& c : g.coeffs()) ic.push_back(numerator(c) * (lcm / denominator(c)));
  auto pd = small_divisors(ic.back());
  auto qd = small_divisors(ic.front());
  if (!pd || !qd) return roots;

  std::vector<Rational> candidates;
  for (const auto& p : *pd)
    for (const auto& q : *qd) {
      candidates.emplace_back(Rational(p) / Rational(q));
      candidates.emplace_back(Rational(-p) / Rational(q));
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& r : candidates) {
    if (g.degree() < 1) break;
    if (g.eval(r) == 0) {
      roots.push_back(r);
      g = exact_div(g, Polynomial({Rational(1), -r}));
    }
  }
  return roots;
}

// Interval isolation of the square-free h (no assumption that rational roots
// were all removed).
void isolate_square_free(const Polynomial& h, std::vector<AlgebraicRoot>& out) {
  if (h.degree() < 1) return;
  if (h.degree() == 1) {
    out.push_back(AlgebraicRoot::exact(-h.coeff(0) / h.coeff(1)));
    return;
  }
  SturmChain sc = SturmChain::build(h, h.derivative());
  Rational bound = cauchy_root_bound(h);

  struct Seg {
    Rational lo, hi;
  };
  std::vector<Seg> stack{{-bound, bound}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    int c = count_in(sc, Endpoint::at(s.lo), Endpoint::at(s.hi));
    if (c == 0) continue;
    if (c == 1 && h.sign_at(s.lo) * h.sign_at(s.hi) < 0) {
      out.push_back(AlgebraicRoot::bracketed(h, s.lo, s.hi));
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    if (h.eval(mid) == 0) {
      out.push_back(AlgebraicRoot::exact(mid));
      // carve out a punctured neighbourhood of mid with no other root
      Rational delta = (s.hi - s.lo) / 4;
      while (h.eval(mid - delta) == 0 || h.eval(mid + delta) == 0 ||
             count_in(sc, Endpoint::at(mid - delta), Endpoint::at(mid + delta)) != 1)
        delta /= 2;
      stack.push_back({s.lo, mid - delta});
      stack.push_back({mid + delta, s.hi});
    } else {
      stack.push_back({s.lo, mid});
      stack.push_back({mid, s.hi});
    }
  }
}

}  // namespace

std::vector<AlgebraicRoot> isolate_real_roots(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "isolation of the zero polynomial");
  std::vector<AlgebraicRoot> all;
  for (const auto& [factor, mult] : square_free_decomposition(f)) {
    std::vector<AlgebraicRoot> roots;
    Polynomial rest = factor;
    for (const auto& r : extract_rational_roots(rest)) roots.push_back(AlgebraicRoot::exact(r));
    isolate_square_free(rest, roots);
    for (auto& r : roots) {
      r.set_multiplicity(mult);
      all.push_back(std::move(r));
    }
  }
  std::sort(all.begin(), all.end(), [](const AlgebraicRoot& a, const AlgebraicRoot& b) {
    return compare_roots(a, b) == Ordering::LT;
  });
  // Certificates from different square-free factors may overlap; refine until
  // they separate (the roots are distinct, so this terminates).
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    while (all[i].upper_bound() > all[i + 1].lower_bound()) {
      AlgebraicRoot& wide =
          (!all[i].is_exact() &&
           (all[i + 1].is_exact() ||
            all[i].hi() - all[i].lo() >= all[i + 1].hi() - all[i + 1].lo()))
              ? all[i]
              : all[i + 1];
      wide.refine();
    }
  }
  return all;
}

}  // namespace polystab
