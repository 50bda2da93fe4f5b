#include "polystab/signrules.hpp"

#include <algorithm>

#include "polystab/halfplane.hpp"
#include "polystab/sturm.hpp"

namespace polystab {

std::pair<int, std::string> descartes_bound(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "Descartes bound of zero");
  int k = sign_variations(f.coeffs());
  return {k, "positive root count equals the bound or falls short of it by an even number"};
}

ParitySignPattern parity_sign_pattern(const Polynomial& f, Parity parity) {
  if (!f.is_monic()) throw Error(Errc::NonMonic, "parity_sign_pattern requires a monic input");
  if (f.degree() < 1) throw Error(Errc::DegreeTooSmall, "degree >= 1 required");

  ParitySignPattern out;
  out.parity = parity;
  int n = f.degree();

  // entry(j) = a_{2j} (even) or a_{2j-1} (odd), j = 1..count
  auto index_of = [&](int j) { return parity == Parity::Even ? 2 * j : 2 * j - 1; };
  int count = 0;
  while (index_of(count + 1) <= n) ++count;

  int t = 0;
  for (int j = 1; j <= count; ++j)
    if (f.a(index_of(j)) != 0) t = j;
  out.t = t;
  if (t == 0) {
    out.verdict = ParitySignPattern::Verdict::AllZero;
    return out;
  }

  bool all_pos = true, all_neg = true;
  for (int j = 1; j <= t; ++j) {
    int s = sgn(f.a(index_of(j)));
    if (s <= 0) all_pos = false;
    if (s >= 0) all_neg = false;
  }
  if (all_pos) {
    out.verdict = ParitySignPattern::Verdict::AllPositive;
    return out;
  }
  if (all_neg) {
    out.verdict = ParitySignPattern::Verdict::AllNegative;
    return out;
  }

  // positive prefix, one switch entry <= 0, negative tail
  int s = 1;
  while (sgn(f.a(index_of(s))) > 0) ++s;
  bool fits = true;
  for (int j = s + 1; j <= t; ++j)
    if (sgn(f.a(index_of(j))) >= 0) fits = false;
  if (fits) {
    out.verdict = ParitySignPattern::Verdict::OneSwitch;
    out.switch_index = s;
    out.zero_at_switch = f.a(index_of(s)) == 0;
  }
  return out;
}

bool check_thm41(const Polynomial& f) {
  return parity_sign_pattern(f, Parity::Even).matches() &&
         parity_sign_pattern(f, Parity::Odd).matches();
}

bool check_thm46(const Polynomial& f) {
  if (!f.is_monic()) throw Error(Errc::NonMonic, "check_thm46 requires a monic input");
  int n = f.degree();
  for (int k = 1; k <= n - 2; ++k)
    if (f.a(k) <= 0 && f.a(k + 2) >= 0) return false;
  return true;
}

std::optional<std::pair<Rational, Polynomial>> degenerate_form(const Polynomial& g) {
  if (!g.is_monic() || g.degree() % 2 == 0) return std::nullopt;
  auto [p, q] = even_odd_split(g);
  // g = (x + mu) h(x^2) means q = h and p = mu h
  if (q.is_zero() || p.is_zero() || p.degree() != q.degree()) return std::nullopt;
  Rational mu = p.leading() / q.leading();
  if (mu <= 0) return std::nullopt;
  if (!(p == mu * q)) return std::nullopt;
  if (q.coeff(0) == 0) return std::nullopt;
  if (count_real_roots_with_multiplicity(q, Endpoint::neg_inf(), Endpoint::at(0)) != q.degree())
    return std::nullopt;
  return std::make_pair(mu, q);
}

NewtonEqualityClass newton_like(const Polynomial& g) {
  if (!g.is_monic()) throw Error(Errc::NonMonic, "newton_like requires a monic input");
  int n = g.degree();
  if (n < 3) throw Error(Errc::DegreeTooSmall, "newton_like needs degree >= 3");

  NewtonEqualityClass out;
  out.holds = true;

  std::optional<bool> all_imaginary;  // computed on demand
  std::optional<bool> degenerate;

  for (int k = 1; k < n - 1; ++k) {
    for (int l = k + 1; l <= n - 1; ++l) {
      if ((k + l) % 2 == 0) continue;
      Rational lhs = g.a(k) * g.a(l);
      Rational rhs = g.a(k - 1) * g.a(l + 1);
      if (lhs < rhs) {
        out.holds = false;
        continue;
      }
      if (lhs > rhs) continue;

      NewtonEqualityClass::Pair pair;
      pair.k = k;
      pair.l = l;
      if (zero_root_multiplicity(g) >= n - l + 1)
        pair.classes.push_back(NewtonEqualityClass::Classification::ZeroRootHighMult);
      if (!all_imaginary) all_imaginary = half_plane_counts(g).n_zero == n;
      if (*all_imaginary)
        pair.classes.push_back(NewtonEqualityClass::Classification::AllImaginary);
      if (k % 2 == 1 && l % 2 == 0) {
        if (!degenerate) degenerate = degenerate_form(g).has_value();
        if (*degenerate)
          pair.classes.push_back(NewtonEqualityClass::Classification::DegenerateForm);
      }
      out.equality_pairs.push_back(std::move(pair));
    }
  }
  return out;
}

bool obreschkoff_wedge(const std::vector<GaussianRational>& roots, const Rational& r) {
  if (r <= 0) throw Error(Errc::RNonPositive, "wedge test requires r > 0");
  // self-conjugacy of the multiset
  std::vector<GaussianRational> pool;
  for (const auto& z : roots)
    if (z.im != 0) pool.push_back(z);
  while (!pool.empty()) {
    GaussianRational z = pool.back();
    pool.pop_back();
    auto it = std::find(pool.begin(), pool.end(), z.conj());
    if (it == pool.end())
      throw Error(Errc::HypothesisViolation, "root list is not self-conjugate");
    pool.erase(it);
  }
  for (const auto& z : roots) {
    if (z.re >= 0) return false;
    if (z.im * z.im > 3 * z.re * z.re) return false;
  }
  return true;
}

Polynomial critical_beta_family(int m, const Rational& beta_sq, const Rational& r) {
  if (m < 1) throw Error(Errc::HypothesisViolation, "m >= 1 required");
  Polynomial base({Rational(1), Rational(2), 1 + beta_sq});  // (x+1)^2 + beta^2
  Polynomial f = Polynomial({Rational(1), -r});
  for (int i = 0; i < m; ++i) f = f * base;
  return f;
}

}  // namespace polystab
