#ifndef POLYSTAB_STURM_HPP
#define POLYSTAB_STURM_HPP

#include <optional>
#include <vector>

#include "polystab/polynomial.hpp"

namespace polystab {

// Endpoint of an interval on the extended real line.
struct Endpoint {
  enum Kind { NegInf, Finite, PosInf } kind = Finite;
  Rational value;  // meaningful only when kind == Finite

  static Endpoint neg_inf() { return {NegInf, Rational(0)}; }
  static Endpoint pos_inf() { return {PosInf, Rational(0)}; }
  static Endpoint at(Rational v) { return {Finite, std::move(v)}; }
};

// Number of sign changes between consecutive nonzero entries; zeros skipped.
int sign_variations(const std::vector<Rational>& values);
int sign_variations_of_signs(const std::vector<int>& signs);

// Generalized Sturm chain f0, f1, -rem(f0, f1), ... down to a constant
// multiple of gcd(f0, f1).
struct SturmChain {
  std::vector<Polynomial> chain;

  static SturmChain build(const Polynomial& f0, const Polynomial& f1);
  int variations_at(const Endpoint& e) const;
};

// Cauchy index I_theta^phi (Q/P), computed as V(theta) - V(phi) over the
// chain started at (P, Q). Finite endpoints must not be roots of P.
int cauchy_index(const Polynomial& Q, const Polynomial& P, const Endpoint& theta,
                 const Endpoint& phi);

// Number of distinct real roots of f in (theta, phi].
int count_real_roots(const Polynomial& f, const Endpoint& theta, const Endpoint& phi);
int count_real_roots(const Polynomial& f);

// Real roots in (theta, phi] counted with multiplicity.
int count_real_roots_with_multiplicity(const Polynomial& f, const Endpoint& theta,
                                       const Endpoint& phi);
int count_real_roots_with_multiplicity(const Polynomial& f);

// A certified real algebraic number: either an exact rational, or the unique
// root of a square-free monic polynomial inside an open isolating interval
// with rational endpoints (the polynomial changes sign across it).
class AlgebraicRoot {
 public:
  static AlgebraicRoot exact(Rational value, int multiplicity = 1);
  static AlgebraicRoot bracketed(Polynomial defining, Rational lo, Rational hi,
                                 int multiplicity = 1);

  bool is_exact() const { return exact_.has_value(); }
  const Rational& exact_value() const { return *exact_; }
  const Polynomial& defining() const { return defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  int multiplicity() const { return multiplicity_; }
  void set_multiplicity(int m) { multiplicity_ = m; }

  // Halve the isolating interval (no-op for exact roots). May discover that
  // the root is a rational bisection point and switch to exact form.
  void refine();

  // Rational lower/upper bounds on the value (the exact value twice, for
  // exact roots).
  Rational lower_bound() const { return is_exact() ? *exact_ : lo_; }
  Rational upper_bound() const { return is_exact() ? *exact_ : hi_; }

  std::string to_string() const;

 private:
  AlgebraicRoot() = default;
  std::optional<Rational> exact_;
  Polynomial defining_;  // square-free, monic (interval form only)
  Rational lo_, hi_;
  int multiplicity_ = 1;
};

enum class Ordering { LT, EQ, GT };

// Exact total-order comparison; EQ only when equality is proven.
Ordering compare_roots(const AlgebraicRoot& a, const AlgebraicRoot& b);

// Distinct real roots of f, ascending, with multiplicities from the
// square-free decomposition. Rational roots come out in exact form.
std::vector<AlgebraicRoot> isolate_real_roots(const Polynomial& f);

// Real roots of f restricted to an interval predicate handled by callers.

}  // namespace polystab

#endif
