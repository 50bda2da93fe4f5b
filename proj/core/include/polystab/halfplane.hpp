#ifndef POLYSTAB_HALFPLANE_HPP
#define POLYSTAB_HALFPLANE_HPP

#include <optional>
#include <vector>

#include "polystab/sturm.hpp"

namespace polystab {

// Root counts of a real polynomial by sign of the real part.
struct HalfPlaneCount {
  int n_plus = 0;   // roots with positive real part
  int n_minus = 0;  // roots with negative real part
  int n_zero = 0;   // purely imaginary roots (with multiplicity)

  friend bool operator==(const HalfPlaneCount&, const HalfPlaneCount&) = default;
};

struct StabilityReport {
  bool stable = false;
  HalfPlaneCount counts;
  // Hermite-Biehler conditions: (i) roots of p(-x^2), q(-x^2) real and
  // distinct; (ii) leading coefficients of like sign; (iii) the strict
  // interleaving chain starting from the even part.
  bool cond_real_distinct = false;
  bool cond_leading_signs = false;
  bool cond_interleaving = false;
  // 0 < x_e1 < x_o1 < x_e2 < ... when stable
  std::vector<AlgebraicRoot> witnesses;
};

struct InterlacingCertificate {
  int d = 0;
  std::vector<AlgebraicRoot> mu;  // from P, size d
  std::vector<AlgebraicRoot> nu;  // from Q, size d-1 (d >= 1)
  bool strict = false;
  std::optional<AlgebraicRoot> nu_pre;   // additional Q root <= mu_1
  std::optional<AlgebraicRoot> nu_post;  // additional Q root >= mu_d
};

// Exact (n+, n-, n0) for nonzero f, via the Cauchy index of Q/P for
// (P, Q) = hb_polynomials of the monic normalization.
HalfPlaneCount half_plane_counts(const Polynomial& f);

// Classical Hermite-Biehler test, cross-validated against half_plane_counts.
StabilityReport is_hurwitz_stable(const Polynomial& f);

// Interlacing chain mu_1 <= nu_1 <= ... <= mu_d guaranteed whenever some
// root of f lies off the imaginary axis; strict when no roots lie on it.
InterlacingCertificate interlacing_certificate(const Polynomial& f);

// Extends a certificate with bracketing roots of Q when the symbolic limit
// conditions fire; requires n+ != n-.
InterlacingCertificate obs36_extensions(const Polynomial& f, const InterlacingCertificate& cert);

namespace detail {
// Raw (P, Q) pathway: counts of P + iQ roots by sign of the imaginary part,
// returned as (n_plus, n_minus, n_zero) with n_plus counting positive
// imaginary parts. P must be nonzero with deg P > deg Q.
HalfPlaneCount counts_from_pq(const Polynomial& P, const Polynomial& Q);
}  // namespace detail

}  // namespace polystab

#endif
