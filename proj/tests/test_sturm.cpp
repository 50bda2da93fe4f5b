#include <doctest.h>

#include "generators.hpp"
#include "polystab/sturm.hpp"

using namespace polystab;

namespace {
Polynomial P(std::vector<Rational> c) { return Polynomial(std::move(c)); }
}  // namespace

TEST_CASE("sign variation counting skips zeros") {
  CHECK(sign_variations({1, -1, 3, -4, 1}) == 4);
  CHECK(sign_variations({1, 0, 0, -2}) == 1);
  CHECK(sign_variations({1, 2, 3}) == 0);
  CHECK(sign_variations({}) == 0);
  CHECK(sign_variations({0, 0}) == 0);
  CHECK(sign_variations_of_signs({1, 0, -1, 1}) == 2);
}

TEST_CASE("chain construction ends at a gcd multiple") {
  Polynomial f = P({1, 0, -1});
  SturmChain sc = SturmChain::build(f, f.derivative());
  REQUIRE(sc.chain.size() == 3);
  CHECK(sc.chain.back().degree() == 0);
  SturmChain trivial = SturmChain::build(f, Polynomial::zero());
  CHECK(trivial.chain.size() == 1);
}

TEST_CASE("index of 1/(x^2 - 1) over three intervals") {
  Polynomial Q = Polynomial::one();
  Polynomial D = P({1, 0, -1});
  CHECK(cauchy_index(Q, D, Endpoint::neg_inf(), Endpoint::at(0)) == -1);
  CHECK(cauchy_index(Q, D, Endpoint::at(0), Endpoint::pos_inf()) == 1);
  CHECK(cauchy_index(Q, D, Endpoint::neg_inf(), Endpoint::pos_inf()) == 0);
}

TEST_CASE("index of 1/x over the whole line") {
  CHECK(cauchy_index(Polynomial::one(), Polynomial::x(), Endpoint::neg_inf(),
                     Endpoint::pos_inf()) == 1);
}

TEST_CASE("index of the degree-five sample pair") {
  Polynomial Pp = P({1, 0, -3, 0, -4, 0});  // x^5 - 3x^3 - 4x
  Polynomial Qq = P({-1, 0, 0, 0, 1});      // -x^4 + 1
  CHECK(cauchy_index(Qq, Pp, Endpoint::neg_inf(), Endpoint::pos_inf()) == -3);
}

TEST_CASE("index endpoint validation") {
  Polynomial D = P({1, 0, -1});
  CHECK_THROWS_AS(cauchy_index(Polynomial::one(), D, Endpoint::at(1), Endpoint::pos_inf()),
                  Error);
  CHECK_THROWS_AS(cauchy_index(Polynomial::one(), Polynomial::zero(), Endpoint::neg_inf(),
                               Endpoint::pos_inf()),
                  Error);
  CHECK_THROWS_AS(cauchy_index(Polynomial::one(), D, Endpoint::at(3), Endpoint::at(2)), Error);
}

TEST_CASE("index is additive at interior split points") {
  testgen::Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    Polynomial D = testgen::random_planted(rng, 6, true).f;
    Polynomial Q = testgen::random_planted(rng, 4, true).f;
    Rational m = testgen::rand_rational(rng, -6, 6);
    if (D.eval(m) == 0) continue;
    int whole = cauchy_index(Q, D, Endpoint::neg_inf(), Endpoint::pos_inf());
    int left = cauchy_index(Q, D, Endpoint::neg_inf(), Endpoint::at(m));
    int right = cauchy_index(Q, D, Endpoint::at(m), Endpoint::pos_inf());
    CHECK(whole == left + right);
  }
}

TEST_CASE("root counting, distinct and with multiplicity") {
  CHECK(count_real_roots(P({1, 0, -1, 0}), Endpoint::at(-2), Endpoint::at(2)) == 3);
  CHECK(count_real_roots(P({1, 0, 1})) == 0);
  CHECK(count_real_roots(P({2, 0, -94, 0})) == 3);
  Polynomial sq = P({1, -1}) * P({1, -1}) * P({1, 1});
  CHECK(count_real_roots(sq) == 2);
  CHECK(count_real_roots_with_multiplicity(sq) == 3);
  // interval convention: (theta, phi] includes the right endpoint only
  CHECK(count_real_roots(P({1, -1}), Endpoint::at(0), Endpoint::at(1)) == 1);
  CHECK(count_real_roots(P({1, -1}), Endpoint::at(1), Endpoint::at(2)) == 0);
  CHECK_THROWS_AS(count_real_roots(Polynomial::zero()), Error);
}

TEST_CASE("root counting property: planted distinct roots") {
  testgen::Rng rng(4242);
  for (int i = 0; i < 200; ++i) {
    // up to 8 distinct rational roots plus rootless quadratics
    int k = testgen::rand_int(rng, 0, 8);
    std::vector<Rational> roots;
    for (int j = 0; j < k; ++j) {
      Rational r = testgen::rand_rational(rng, -10, 10, 3);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    Polynomial f = Polynomial::from_roots(roots);
    int quads = testgen::rand_int(rng, 0, 2);
    for (int j = 0; j < quads; ++j) {
      Rational a = testgen::rand_rational(rng, -3, 3);
      Rational b = testgen::rand_rational(rng, 1, 3);
      f = f * testgen::conjugate_pair(a, b);
    }
    if (f.degree() == 0) continue;
    CHECK(count_real_roots(f) == static_cast<int>(roots.size()));
  }
}

TEST_CASE("algebraic root certificates") {
  AlgebraicRoot e = AlgebraicRoot::exact(Rational(1, 2), 2);
  CHECK(e.is_exact());
  CHECK(e.multiplicity() == 2);
  CHECK(e.to_string() == "1/2; mult 2");

  AlgebraicRoot s = AlgebraicRoot::bracketed(P({1, 0, -2}), 1, 2);
  CHECK_FALSE(s.is_exact());
  CHECK(s.lower_bound() == 1);
  for (int i = 0; i < 20; ++i) s.refine();
  CHECK(s.hi() - s.lo() <= Rational(1, 1 << 20));
  CHECK(s.defining().sign_at(s.lo()) * s.defining().sign_at(s.hi()) < 0);

  // refinement lands exactly on a rational root when bisection reaches it
  AlgebraicRoot r = AlgebraicRoot::bracketed(P({1, 0, -1}), 0, 2);
  r.refine();
  CHECK(r.is_exact());
  CHECK(r.exact_value() == 1);

  CHECK_THROWS_AS(AlgebraicRoot::bracketed(P({1, 0, -2}), 2, 1), Error);
  CHECK_THROWS_AS(AlgebraicRoot::bracketed(P({1, 0, -2}), 3, 4), Error);
}

TEST_CASE("root comparison is exact") {
  AlgebraicRoot zero = AlgebraicRoot::exact(0);
  AlgebraicRoot one = AlgebraicRoot::exact(1);
  CHECK(compare_roots(zero, one) == Ordering::LT);
  CHECK(compare_roots(one, one) == Ordering::EQ);

  AlgebraicRoot rt2 = AlgebraicRoot::bracketed(P({1, 0, -2}), 1, 2);
  CHECK(compare_roots(rt2, one) == Ordering::GT);
  CHECK(compare_roots(one, rt2) == Ordering::LT);

  // same algebraic number under different certificates
  AlgebraicRoot rt2b = AlgebraicRoot::bracketed(P({1, 0, -2}), 0, 3);
  CHECK(compare_roots(rt2, rt2b) == Ordering::EQ);

  // nearby but distinct: sqrt(2) vs 3/2 vs sqrt(3)
  AlgebraicRoot rt3 = AlgebraicRoot::bracketed(P({1, 0, -3}), 1, 2);
  CHECK(compare_roots(rt2, rt3) == Ordering::LT);
  CHECK(compare_roots(rt3, AlgebraicRoot::exact(Rational(3, 2))) == Ordering::GT);
}

TEST_CASE("isolation: examples") {
  auto roots = isolate_real_roots(P({1, 0, -3, 0, -4, 0}));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].is_exact());
  CHECK(roots[0].exact_value() == -2);
  CHECK(roots[1].exact_value() == 0);
  CHECK(roots[2].exact_value() == 2);

  auto dbl = isolate_real_roots(P({1, -2, 1}));
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0].exact_value() == 1);
  CHECK(dbl[0].multiplicity() == 2);

  auto irr = isolate_real_roots(P({1, 0, -2}));
  REQUIRE(irr.size() == 2);
  CHECK_FALSE(irr[0].is_exact());
  CHECK(irr[0].upper_bound() <= 0);
  CHECK(irr[1].lower_bound() >= 0);

  CHECK(isolate_real_roots(P({1, 0, 1})).empty());
  CHECK_THROWS_AS(isolate_real_roots(Polynomial::zero()), Error);
}

TEST_CASE("isolation soundness: disjoint certified intervals") {
  testgen::Rng rng(555);
  for (int i = 0; i < 60; ++i) {
    Polynomial f = testgen::random_planted(rng, 7, true).f;
    if (testgen::rand_int(rng, 0, 1)) f = f * P({1, 0, -2});  // add irrational roots
    auto roots = isolate_real_roots(f);
    CHECK(static_cast<int>(roots.size()) == count_real_roots(f));
    int with_mult = 0;
    for (const auto& r : roots) with_mult += r.multiplicity();
    CHECK(with_mult == count_real_roots_with_multiplicity(f));
    for (std::size_t j = 0; j + 1 < roots.size(); ++j) {
      CHECK(roots[j].upper_bound() <= roots[j + 1].lower_bound());
      CHECK(compare_roots(roots[j], roots[j + 1]) == Ordering::LT);
    }
    for (auto r : roots) {
      if (r.is_exact()) {
        CHECK(f.eval(r.exact_value()) == 0);
      } else {
        for (int step = 0; step < 20 && !r.is_exact(); ++step) r.refine();
        if (!r.is_exact())
          CHECK(r.defining().sign_at(r.lo()) * r.defining().sign_at(r.hi()) < 0);
      }
    }
  }
}
