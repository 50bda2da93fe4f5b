#ifndef POLYSTAB_NIEP_HPP
#define POLYSTAB_NIEP_HPP

#include <optional>
#include <vector>

#include "polystab/polynomial.hpp"
#include "polystab/rational.hpp"

namespace polystab {

// Candidate spectrum: a self-conjugate list of Gaussian rationals.
struct SpectrumCandidate {
  std::vector<GaussianRational> entries;

  bool is_self_conjugate() const;
};

// Square matrix with exact rational entries; dense row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {}
  int size() const { return n_; }
  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_entrywise_nonnegative() const;
  Rational trace() const;

 private:
  int n_;
  std::vector<Rational> a_;
};

// Companion matrix of a monic polynomial: ones on the superdiagonal and
// (-a_n, ..., -a_1) in the last row, so the matrix is nonnegative exactly
// when every non-leading coefficient is nonpositive.
RationalMatrix companion_matrix(const Polynomial& f);

// Exact characteristic polynomial by the Faddeev-LeVerrier recursion.
Polynomial characteristic_polynomial(const RationalMatrix& m);

// prod (x - lambda) for a self-conjugate list; all coefficients come out real.
Polynomial polynomial_from_spectrum(const std::vector<GaussianRational>& entries);

struct RealizationResult {
  enum class FailedCondition { SumNonneg, SumOfSquares, SelfConjugate, RealPartSigns };

  bool realizable = false;
  std::optional<FailedCondition> failed_condition;
  std::optional<RationalMatrix> matrix;
  std::optional<Rational> alpha;
};

// Suleimanova: rho >= 0 and lambda_i <= 0 realizable iff the sum is >= 0;
// the companion matrix of the product realizes the list.
RealizationResult suleimanova_check(const Rational& rho, const std::vector<Rational>& negatives);

// Laffey-Smigoc: one nonnegative entry, the rest with nonpositive real
// parts; realizable iff self-conjugate, s1 >= 0 and s1^2 <= n * sum of
// squares. Builds the realization when all conditions hold.
RealizationResult laffey_smigoc_check(const SpectrumCandidate& sigma);

// The shifted companion construction C + alpha I with alpha = s1 / n;
// assumes the Laffey-Smigoc conditions hold.
RealizationResult realize_shifted(const SpectrumCandidate& sigma);

// (a_1 <= 0 and a_2 <= 0) implies a_i <= 0 for all i.
bool lemma15_check(const Polynomial& f);

}  // namespace polystab

#endif
