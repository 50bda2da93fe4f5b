#include "polystab/halfplane.hpp"

#include <algorithm>

namespace polystab {

namespace detail {

HalfPlaneCount counts_from_pq(const Polynomial& P, const Polynomial& Q) {
  if (P.is_zero()) throw Error(Errc::ZeroPolynomial, "P must be nonzero");
  int n = P.degree();
  // n0 with multiplicity: real roots of gcd(P, Q); the multiplicity of a
  // shared real root in the gcd equals its multiplicity in P + iQ.
  int n0 = 0;
  if (Q.is_zero()) {
    n0 = count_real_roots_with_multiplicity(P);
  } else {
    Polynomial g = gcd(P, Q);
    if (g.degree() > 0) n0 = count_real_roots_with_multiplicity(g);
  }
  int index = cauchy_index(Q, P, Endpoint::neg_inf(), Endpoint::pos_inf());
  int rest = n - n0;
  if ((rest - index) % 2 != 0 || rest < std::abs(index))
    throw Error(Errc::InternalAssertion, "Cauchy index inconsistent with root counts");
  HalfPlaneCount c;
  c.n_zero = n0;
  c.n_minus = (rest + index) / 2;
  c.n_plus = (rest - index) / 2;
  return c;
}

}  // namespace detail

HalfPlaneCount half_plane_counts(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "half_plane_counts of zero");
  Polynomial fm = f.monic();
  if (fm.degree() == 0) return {};
  auto [P, Q] = hb_polynomials(fm);
  return detail::counts_from_pq(P, Q);
}

namespace {

// all roots of g real and distinct; vacuously true for nonzero constants
bool roots_real_and_distinct(const Polynomial& g) {
  if (g.is_zero()) return false;
  if (g.degree() == 0) return true;
  if (gcd(g, g.derivative()).degree() != 0) return false;
  return count_real_roots(g) == g.degree();
}

std::vector<AlgebraicRoot> nonnegative_roots(const Polynomial& g) {
  std::vector<AlgebraicRoot> out;
  if (g.degree() < 1) return out;
  AlgebraicRoot zero = AlgebraicRoot::exact(0);
  for (auto& r : isolate_real_roots(g))
    if (compare_roots(r, zero) != Ordering::LT) out.push_back(std::move(r));
  return out;
}

}  // namespace

StabilityReport is_hurwitz_stable(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "stability of the zero polynomial");
  if (f.degree() == 0) throw Error(Errc::DegreeZero, "stability needs degree >= 1");

  StabilityReport rep;
  rep.counts = half_plane_counts(f);

  auto [p, q] = even_odd_split(f);
  Polynomial pe = substitute_neg_x_squared(p);  // p(-x^2)
  Polynomial qe = substitute_neg_x_squared(q);  // q(-x^2)

  rep.cond_real_distinct = roots_real_and_distinct(pe) && roots_real_and_distinct(qe);
  rep.cond_leading_signs = f.degree() >= 1 && sgn(f.a(0)) * sgn(f.a(1)) > 0;

  rep.cond_interleaving = false;
  if (rep.cond_real_distinct) {
    auto xe = nonnegative_roots(pe);
    auto xo = nonnegative_roots(qe);
    std::size_t ne = xe.size(), no = xo.size();
    bool ok = (ne == no || ne == no + 1);
    AlgebraicRoot prev = AlgebraicRoot::exact(0);
    std::vector<AlgebraicRoot> chain;
    for (std::size_t k = 0; ok && k < ne + no; ++k) {
      const AlgebraicRoot& next = (k % 2 == 0) ? xe[k / 2] : xo[k / 2];
      if (compare_roots(prev, next) != Ordering::LT) {
        ok = false;
        break;
      }
      chain.push_back(next);
      prev = next;
    }
    if (ok) {
      rep.cond_interleaving = true;
      rep.witnesses = std::move(chain);
    }
  }

  rep.stable = rep.cond_real_distinct && rep.cond_leading_signs && rep.cond_interleaving;

  bool counts_stable = rep.counts.n_plus == 0 && rep.counts.n_zero == 0 &&
                       rep.counts.n_minus == f.degree();
  if (rep.stable != counts_stable)
    throw Error(Errc::InternalAssertion,
                "Hermite-Biehler conditions disagree with half-plane counts");
  if (!rep.stable) rep.witnesses.clear();
  return rep;
}

namespace {

std::vector<AlgebraicRoot> expand_with_multiplicity(const std::vector<AlgebraicRoot>& roots) {
  std::vector<AlgebraicRoot> out;
  for (const auto& r : roots)
    for (int i = 0; i < r.multiplicity(); ++i) {
      out.push_back(r);
      out.back().set_multiplicity(1);
    }
  return out;
}

// first index >= from whose root satisfies (root >= floor), or (root > floor)
// in strict mode; npos when exhausted
std::size_t advance(const std::vector<AlgebraicRoot>& roots, std::size_t from,
                    const AlgebraicRoot& floor, bool strict) {
  for (std::size_t i = from; i < roots.size(); ++i) {
    Ordering o = compare_roots(roots[i], floor);
    if (o == Ordering::GT || (!strict && o == Ordering::EQ)) return i;
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

InterlacingCertificate interlacing_certificate(const Polynomial& f) {
  HalfPlaneCount counts = half_plane_counts(f);
  int n = f.monic().degree();
  if (counts.n_zero == n)
    throw Error(Errc::AllRootsImaginary, "every root lies on the imaginary axis");

  InterlacingCertificate cert;
  cert.d = n - 2 * std::min(counts.n_plus, counts.n_minus);
  cert.strict = counts.n_zero == 0;
  if (cert.d == 0) return cert;

  auto [P, Q] = hb_polynomials(f.monic());
  auto rootsP = expand_with_multiplicity(isolate_real_roots(P));

  if (Q.is_zero()) {
    // Every real number is a root of Q == 0; pair each needed nu with the
    // preceding mu. Only reachable with roots on the axis, so ties are fine.
    if (static_cast<int>(rootsP.size()) < cert.d)
      throw Error(Errc::InternalAssertion, "fewer real roots of P than guaranteed");
    for (int k = 0; k < cert.d; ++k) {
      cert.mu.push_back(rootsP[static_cast<std::size_t>(k)]);
      if (k > 0) cert.nu.push_back(rootsP[static_cast<std::size_t>(k)]);
    }
    return cert;
  }

  auto rootsQ = expand_with_multiplicity(isolate_real_roots(Q));

  // Greedy alternating selection over the two sorted lists; earliest
  // feasible choices maximize what remains.
  std::size_t pi = 0, qi = 0;
  if (rootsP.empty()) throw Error(Errc::InternalAssertion, "P has no real roots but d > 0");
  cert.mu.push_back(rootsP[pi++]);
  for (int k = 1; k < cert.d; ++k) {
    std::size_t j = advance(rootsQ, qi, cert.mu.back(), cert.strict);
    if (j == static_cast<std::size_t>(-1))
      throw Error(Errc::InternalAssertion, "interlacing chain shorter than guaranteed");
    cert.nu.push_back(rootsQ[j]);
    qi = j + 1;
    std::size_t i = advance(rootsP, pi, cert.nu.back(), cert.strict);
    if (i == static_cast<std::size_t>(-1))
      throw Error(Errc::InternalAssertion, "interlacing chain shorter than guaranteed");
    cert.mu.push_back(rootsP[i]);
    pi = i + 1;
  }
  return cert;
}

InterlacingCertificate obs36_extensions(const Polynomial& f, const InterlacingCertificate& cert) {
  HalfPlaneCount counts = half_plane_counts(f);
  if (counts.n_plus == counts.n_minus)
    throw Error(Errc::NotApplicable, "requires n+ != n-");
  auto [P, Q] = hb_polynomials(f.monic());
  if (Q.is_zero()) throw Error(Errc::NotApplicable, "Q is identically zero");
  if (cert.d < 1 || cert.mu.empty())
    throw Error(Errc::HypothesisViolation, "certificate must carry at least one mu");

  // sign of lim P/Q at +inf and -inf, from degrees and leading coefficients
  int ddeg = P.degree() - Q.degree();
  int s_pos = sgn(Q.leading());  // P monic
  int s_neg = s_pos * (ddeg % 2 == 0 ? 1 : -1);

  bool minus_heavy = counts.n_minus > counts.n_plus;
  bool fire_pre = minus_heavy ? s_neg > 0 : s_neg < 0;
  bool fire_post = minus_heavy ? s_pos < 0 : s_pos > 0;
  if (!fire_pre && !fire_post)
    throw Error(Errc::NotApplicable, "no limit condition fires");

  // Q roots not already consumed by the certificate, by value.
  auto remaining = expand_with_multiplicity(isolate_real_roots(Q));
  for (const auto& used : cert.nu) {
    auto it = std::find_if(remaining.begin(), remaining.end(), [&](const AlgebraicRoot& r) {
      return compare_roots(r, used) == Ordering::EQ;
    });
    if (it != remaining.end()) remaining.erase(it);
  }

  InterlacingCertificate out = cert;
  bool strict = cert.strict;
  if (fire_pre) {
    const AlgebraicRoot& mu1 = cert.mu.front();
    std::optional<AlgebraicRoot> best;
    for (const auto& r : remaining) {
      Ordering o = compare_roots(r, mu1);
      if (o == Ordering::LT || (!strict && o == Ordering::EQ)) best = r;
    }
    if (!best)
      throw Error(Errc::InternalAssertion, "guaranteed additional root nu_0 not found");
    out.nu_pre = *best;
  }
  if (fire_post) {
    const AlgebraicRoot& mud = cert.mu.back();
    std::optional<AlgebraicRoot> best;
    for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) {
      Ordering o = compare_roots(*it, mud);
      if (o == Ordering::GT || (!strict && o == Ordering::EQ)) best = *it;
    }
    if (!best)
      throw Error(Errc::InternalAssertion, "guaranteed additional root nu_d not found");
    out.nu_post = *best;
  }
  return out;
}

}  // namespace polystab
