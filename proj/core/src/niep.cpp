#include "polystab/niep.hpp"

#include <algorithm>

namespace polystab {

bool SpectrumCandidate::is_self_conjugate() const {
  std::vector<GaussianRational> pool;
  for (const auto& z : entries)
    if (z.im != 0) pool.push_back(z);
  while (!pool.empty()) {
    GaussianRational z = pool.back();
    pool.pop_back();
    auto it = std::find(pool.begin(), pool.end(), z.conj());
    if (it == pool.end()) return false;
    pool.erase(it);
  }
  return true;
}

bool RationalMatrix::is_entrywise_nonnegative() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& v) { return v >= 0; });
}

Rational RationalMatrix::trace() const {
  Rational t(0);
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

RationalMatrix companion_matrix(const Polynomial& f) {
  if (!f.is_monic()) throw Error(Errc::NonMonic, "companion matrix of a non-monic polynomial");
  int n = f.degree();
  if (n < 1) throw Error(Errc::DegreeTooSmall, "companion matrix needs degree >= 1");
  RationalMatrix c(n);
  for (int i = 0; i + 1 < n; ++i) c.at(i, i + 1) = 1;
  for (int j = 0; j < n; ++j) c.at(n - 1, j) = -f.a(n - j);
  return c;
}

Polynomial characteristic_polynomial(const RationalMatrix& m) {
  int n = m.size();
  std::vector<Rational> coeffs{Rational(1)};  // highest power first

  auto mat_mul = [n](const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (a.at(i, k) == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  };

  RationalMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    Rational ck = -mk.trace() / k;
    coeffs.push_back(ck);
    if (k == n) break;
    for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
    mk = mat_mul(m, mk);
  }
  return Polynomial(std::move(coeffs));
}

Polynomial polynomial_from_spectrum(const std::vector<GaussianRational>& entries) {
  // multiply out over the Gaussian rationals, then demand a real result
  std::vector<GaussianRational> c{GaussianRational(Rational(1))};
  for (const auto& z : entries) {
    std::vector<GaussianRational> next(c.size() + 1, GaussianRational(Rational(0)));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] = next[i] + c[i];
      next[i + 1] = next[i + 1] - z * c[i];
    }
    c = std::move(next);
  }
  std::vector<Rational> real;
  real.reserve(c.size());
  for (const auto& v : c) {
    if (v.im != 0)
      throw Error(Errc::NotSelfConjugate, "spectrum product has nonreal coefficients");
    real.push_back(v.re);
  }
  return Polynomial(std::move(real));
}

RealizationResult suleimanova_check(const Rational& rho, const std::vector<Rational>& negatives) {
  if (rho < 0) throw Error(Errc::HypothesisViolation, "rho must be nonnegative");
  for (const auto& v : negatives)
    if (v > 0) throw Error(Errc::HypothesisViolation, "lambda_i must be nonpositive");

  RealizationResult out;
  Rational sum = rho;
  for (const auto& v : negatives) sum += v;
  if (sum < 0) {
    out.failed_condition = RealizationResult::FailedCondition::SumNonneg;
    return out;
  }
  std::vector<Rational> roots = negatives;
  roots.push_back(rho);
  Polynomial f = Polynomial::from_roots(roots);
  RationalMatrix c = companion_matrix(f);
  if (!c.is_entrywise_nonnegative())
    throw Error(Errc::InternalAssertion, "Suleimanova companion matrix has a negative entry");
  out.realizable = true;
  out.matrix = std::move(c);
  out.alpha = Rational(0);
  return out;
}

namespace {

// Index of the designated Perron entry: the unique entry with positive real
// part, or any real zero entry when no entry has positive real part.
std::optional<std::size_t> designate_rho(const std::vector<GaussianRational>& entries) {
  std::optional<std::size_t> pos;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].re > 0) {
      if (pos || entries[i].im != 0) return std::nullopt;
      pos = i;
    }
  }
  if (pos) return pos;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].re == 0 && entries[i].im == 0) return i;
  return std::nullopt;
}

}  // namespace

RealizationResult laffey_smigoc_check(const SpectrumCandidate& sigma) {
  RealizationResult out;
  if (sigma.entries.empty())
    throw Error(Errc::HypothesisViolation, "empty spectrum");
  if (!sigma.is_self_conjugate()) {
    out.failed_condition = RealizationResult::FailedCondition::SelfConjugate;
    return out;
  }
  if (!designate_rho(sigma.entries)) {
    out.failed_condition = RealizationResult::FailedCondition::RealPartSigns;
    return out;
  }

  int n = static_cast<int>(sigma.entries.size());
  GaussianRational s1g(Rational(0)), s2g(Rational(0));
  for (const auto& z : sigma.entries) {
    s1g = s1g + z;
    s2g = s2g + z * z;
  }
  // conjugate pairing makes both power sums real
  if (s1g.im != 0 || s2g.im != 0)
    throw Error(Errc::InternalAssertion, "power sums of a self-conjugate list must be real");
  const Rational& s1 = s1g.re;
  const Rational& s2 = s2g.re;

  if (s1 < 0) {
    out.failed_condition = RealizationResult::FailedCondition::SumNonneg;
    return out;
  }
  if (s1 * s1 > n * s2) {
    out.failed_condition = RealizationResult::FailedCondition::SumOfSquares;
    return out;
  }
  return realize_shifted(sigma);
}

RealizationResult realize_shifted(const SpectrumCandidate& sigma) {
  int n = static_cast<int>(sigma.entries.size());
  if (n == 0) throw Error(Errc::HypothesisViolation, "empty spectrum");
  if (!sigma.is_self_conjugate())
    throw Error(Errc::NotSelfConjugate, "realization needs a self-conjugate list");

  GaussianRational s1g(Rational(0));
  for (const auto& z : sigma.entries) s1g = s1g + z;
  Rational alpha = s1g.re / n;

  std::vector<GaussianRational> shifted = sigma.entries;
  for (auto& z : shifted) z.re -= alpha;

  Polynomial g = polynomial_from_spectrum(shifted);  // trace-zero characteristic polynomial
  for (int i = 1; i <= n; ++i)
    if (g.a(i) > 0)
      throw Error(Errc::InternalAssertion,
                  "shifted characteristic polynomial has a positive coefficient");

  RationalMatrix c = companion_matrix(g);
  for (int i = 0; i < n; ++i) c.at(i, i) += alpha;

  // independent verification of the realization
  Polynomial target = polynomial_from_spectrum(sigma.entries);
  if (!(characteristic_polynomial(c) == target))
    throw Error(Errc::InternalAssertion, "characteristic polynomial mismatch");
  if (!c.is_entrywise_nonnegative())
    throw Error(Errc::InternalAssertion, "realizing matrix has a negative entry");

  RealizationResult out;
  out.realizable = true;
  out.matrix = std::move(c);
  out.alpha = alpha;
  return out;
}

bool lemma15_check(const Polynomial& f) {
  if (!f.is_monic()) throw Error(Errc::NonMonic, "lemma15_check requires a monic input");
  int n = f.degree();
  if (n < 2) return true;
  if (f.a(1) > 0 || f.a(2) > 0) return true;  // antecedent fails
  for (int i = 3; i <= n; ++i)
    if (f.a(i) > 0) return false;
  return true;
}

}  // namespace polystab
