#include <doctest.h>

#include "generators.hpp"
#include "polystab/niep.hpp"

using namespace polystab;

namespace {

Polynomial P(std::vector<Rational> c) { return Polynomial(std::move(c)); }
using FC = RealizationResult::FailedCondition;

// One rho >= 0 plus negatives and left-half-plane conjugate pairs, with rho
// inflated until the trace conditions hold.
SpectrumCandidate random_realizable(testgen::Rng& rng) {
  std::vector<GaussianRational> rest;
  int reals = testgen::rand_int(rng, 0, 3);
  int pairs = testgen::rand_int(rng, reals == 0 ? 1 : 0, 2);
  for (int i = 0; i < reals; ++i)
    rest.push_back(GaussianRational(-testgen::rand_rational(rng, 0, 5)));
  for (int i = 0; i < pairs; ++i) {
    Rational a = testgen::rand_rational(rng, 0, 4);
    Rational b = testgen::rand_rational(rng, 1, 4);
    rest.push_back({-a, b});
    rest.push_back({-a, -b});
  }
  GaussianRational s1(Rational(0)), s2(Rational(0));
  for (const auto& z : rest) {
    s1 = s1 + z;
    s2 = s2 + z * z;
  }
  Rational rho = -s1.re;  // makes the sum zero
  int n = static_cast<int>(rest.size()) + 1;
  while (true) {
    Rational sum = rho + s1.re;
    Rational squares = rho * rho + s2.re;
    if (sum >= 0 && sum * sum <= n * squares) break;
    rho += 1;
  }
  SpectrumCandidate sigma;
  sigma.entries.push_back(GaussianRational(rho));
  for (auto& z : rest) sigma.entries.push_back(z);
  return sigma;
}

}  // namespace

TEST_CASE("self-conjugacy of entry lists") {
  CHECK(SpectrumCandidate{{{2, 0}, {-1, 1}, {-1, -1}}}.is_self_conjugate());
  CHECK_FALSE(SpectrumCandidate{{{2, 0}, {-1, 1}, {-1, 1}}}.is_self_conjugate());
  CHECK(SpectrumCandidate{{GaussianRational(3)}}.is_self_conjugate());
}

TEST_CASE("companion matrix layout and characteristic polynomial") {
  Polynomial f = P({1, -1, -5, -3});  // (x-3)(x+1)^2
  RationalMatrix c = companion_matrix(f);
  REQUIRE(c.size() == 3);
  CHECK(c.at(0, 1) == 1);
  CHECK(c.at(1, 2) == 1);
  CHECK(c.at(2, 0) == 3);
  CHECK(c.at(2, 1) == 5);
  CHECK(c.at(2, 2) == 1);
  CHECK(c.is_entrywise_nonnegative());
  CHECK(c.trace() == 1);
  CHECK(characteristic_polynomial(c) == f);
  CHECK_THROWS_AS(companion_matrix(P({2, 0})), Error);
}

TEST_CASE("characteristic polynomial property: random companions round-trip") {
  testgen::Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    Polynomial f = testgen::random_planted(rng, 6, true).f.monic();
    if (f.degree() < 1) continue;
    CHECK(characteristic_polynomial(companion_matrix(f)) == f);
  }
}

TEST_CASE("spectrum product demands self-conjugacy") {
  CHECK(polynomial_from_spectrum({{2, 0}, {-1, 1}, {-1, -1}}) == P({1, 0, -2, -4}));
  CHECK_THROWS_AS(polynomial_from_spectrum({{0, 1}}), Error);
}

TEST_CASE("nonnegative real spectra with one dominant entry") {
  RealizationResult r = suleimanova_check(3, {-1, -1});
  CHECK(r.realizable);
  REQUIRE(r.matrix.has_value());
  CHECK(r.matrix->is_entrywise_nonnegative());
  CHECK(r.matrix->at(2, 0) == 3);
  CHECK(r.matrix->at(2, 1) == 5);
  CHECK(r.matrix->at(2, 2) == 1);

  RealizationResult no = suleimanova_check(1, {-2});
  CHECK_FALSE(no.realizable);
  CHECK(no.failed_condition == FC::SumNonneg);

  RealizationResult zero = suleimanova_check(0, {0, 0});
  CHECK(zero.realizable);
  CHECK(zero.matrix->trace() == 0);

  CHECK_THROWS_AS(suleimanova_check(-1, {}), Error);
  CHECK_THROWS_AS(suleimanova_check(1, {2}), Error);
}

TEST_CASE("shifted companion realization: worked examples") {
  RealizationResult r = laffey_smigoc_check(SpectrumCandidate{{{2, 0}, {-1, 1}, {-1, -1}}});
  CHECK(r.realizable);
  CHECK(*r.alpha == 0);
  REQUIRE(r.matrix.has_value());
  CHECK(r.matrix->at(2, 0) == 4);
  CHECK(r.matrix->at(2, 1) == 2);
  CHECK(r.matrix->at(2, 2) == 0);

  RealizationResult s = laffey_smigoc_check(SpectrumCandidate{
      {GaussianRational(3), GaussianRational(-1), GaussianRational(-1)}});
  CHECK(s.realizable);
  CHECK(*s.alpha == Rational(1, 3));
  CHECK(s.matrix->is_entrywise_nonnegative());
  CHECK(s.matrix->trace() == 1);
  CHECK(characteristic_polynomial(*s.matrix) == P({1, -1, -5, -3}));

  RealizationResult z = laffey_smigoc_check(SpectrumCandidate{
      {GaussianRational(0), GaussianRational(0), GaussianRational(0)}});
  CHECK(z.realizable);
  CHECK(*z.alpha == 0);
}

TEST_CASE("rejections carry the failing condition") {
  RealizationResult sum = laffey_smigoc_check(SpectrumCandidate{{{1, 0}, {-1, 3}, {-1, -3}}});
  CHECK_FALSE(sum.realizable);
  CHECK(sum.failed_condition == FC::SumNonneg);

  RealizationResult conj = laffey_smigoc_check(SpectrumCandidate{{{2, 0}, {-1, 1}, {-1, 1}}});
  CHECK_FALSE(conj.realizable);
  CHECK(conj.failed_condition == FC::SelfConjugate);

  RealizationResult signs = laffey_smigoc_check(SpectrumCandidate{
      {GaussianRational(2), GaussianRational(1), GaussianRational(-4)}});
  CHECK_FALSE(signs.realizable);
  CHECK(signs.failed_condition == FC::RealPartSigns);

  // s1 = 0 but the sum of squares is negative
  RealizationResult sq = laffey_smigoc_check(SpectrumCandidate{{{2, 0}, {-1, 5}, {-1, -5}}});
  CHECK_FALSE(sq.realizable);
  CHECK(sq.failed_condition == FC::SumOfSquares);

  CHECK_THROWS_AS(laffey_smigoc_check(SpectrumCandidate{}), Error);
}

TEST_CASE("realization property: random admissible spectra") {
  testgen::Rng rng(52);
  for (int i = 0; i < 120; ++i) {
    SpectrumCandidate sigma = random_realizable(rng);
    RealizationResult r = laffey_smigoc_check(sigma);
    REQUIRE(r.realizable);
    REQUIRE(r.matrix.has_value());
    CHECK(r.matrix->is_entrywise_nonnegative());
    CHECK(characteristic_polynomial(*r.matrix) == polynomial_from_spectrum(sigma.entries));
    // trace identity: trace(C + alpha I) = s1
    GaussianRational s1(Rational(0));
    for (const auto& z : sigma.entries) s1 = s1 + z;
    CHECK(r.matrix->trace() == s1.re);
  }
}

TEST_CASE("condition necessity: perturbing a realizable list flips the verdict") {
  testgen::Rng rng(53);
  for (int i = 0; i < 60; ++i) {
    SpectrumCandidate sigma = random_realizable(rng);
    GaussianRational s1(Rational(0));
    for (const auto& z : sigma.entries) s1 = s1 + z;

    // push a left-half-plane pair far down, keeping rho admissible
    SpectrumCandidate below = sigma;
    Rational shift = s1.re + 1;
    below.entries.push_back({-shift, 1});
    below.entries.push_back({-shift, -1});
    RealizationResult rb = laffey_smigoc_check(below);
    CHECK_FALSE(rb.realizable);
    CHECK(rb.failed_condition == FC::SumNonneg);

    // a huge imaginary pair keeps s1 but wrecks the sum of squares
    SpectrumCandidate wide = sigma;
    wide.entries.push_back({0, 1000});
    wide.entries.push_back({0, -1000});
    RealizationResult rw = laffey_smigoc_check(wide);
    CHECK_FALSE(rw.realizable);
    CHECK(rw.failed_condition == FC::SumOfSquares);
  }
}

TEST_CASE("coefficient sign propagation") {
  CHECK(lemma15_check(P({1, 0, -2, -4})));
  CHECK(lemma15_check(P({1, 1, 1, 1})));  // antecedent fails
  CHECK(lemma15_check(P({1, -1, -5, -3})));
  CHECK_FALSE(lemma15_check(P({1, 0, -1, 2})));  // no admissible root set
  CHECK_THROWS_AS(lemma15_check(P({2, 0, 0})), Error);
}

TEST_CASE("coefficient sign propagation property") {
  testgen::Rng rng(54);
  for (int i = 0; i < 300; ++i) {
    Rational rho = testgen::rand_rational(rng, 0, 5);
    Polynomial f = P({1, -rho}) * testgen::random_left_half_plane(rng, 6, false);
    CHECK(lemma15_check(f.monic()));
  }
}
