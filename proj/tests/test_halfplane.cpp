#include <doctest.h>

#include "generators.hpp"
#include "polystab/halfplane.hpp"
#include "polystab/polynomial.hpp"

using namespace polystab;

namespace {

Polynomial P(std::vector<Rational> c) { return Polynomial(std::move(c)); }

// Chain validity: mu_1 <= nu_1 <= mu_2 <= ... <= mu_d, strict when claimed,
// sizes d and d-1, and every entry certifies a root of its source polynomial.
void check_certificate(const Polynomial& f, const InterlacingCertificate& cert) {
  HalfPlaneCount c = half_plane_counts(f);
  int n = f.monic().degree();
  CHECK(cert.d == n - 2 * std::min(c.n_plus, c.n_minus));
  CHECK(cert.strict == (c.n_zero == 0));
  CHECK(static_cast<int>(cert.mu.size()) == cert.d);
  CHECK(static_cast<int>(cert.nu.size()) == std::max(0, cert.d - 1));

  auto [Pp, Qq] = hb_polynomials(f.monic());
  auto is_root_of = [](const AlgebraicRoot& r, const Polynomial& g) {
    if (g.is_zero()) return true;
    if (r.is_exact()) return g.eval(r.exact_value()) == 0;
    return count_real_roots(g, Endpoint::at(r.lo()), Endpoint::at(r.hi())) >= 1;
  };
  for (const auto& m : cert.mu) CHECK(is_root_of(m, Pp));
  for (const auto& m : cert.nu) CHECK(is_root_of(m, Qq));

  for (int k = 0; k + 1 < cert.d; ++k) {
    Ordering lo = compare_roots(cert.mu[static_cast<std::size_t>(k)],
                                cert.nu[static_cast<std::size_t>(k)]);
    Ordering hi = compare_roots(cert.nu[static_cast<std::size_t>(k)],
                                cert.mu[static_cast<std::size_t>(k) + 1]);
    if (cert.strict) {
      CHECK(lo == Ordering::LT);
      CHECK(hi == Ordering::LT);
    } else {
      CHECK(lo != Ordering::GT);
      CHECK(hi != Ordering::GT);
    }
  }
}

}  // namespace

TEST_CASE("counts of the degree-five sample") {
  Polynomial f = P({1, -1, 3, 0, -4, 1});
  HalfPlaneCount c = half_plane_counts(f);
  CHECK(c.n_plus == 4);
  CHECK(c.n_minus == 1);
  CHECK(c.n_zero == 0);
}

TEST_CASE("counts of a quartic with two roots on each side") {
  HalfPlaneCount c = half_plane_counts(P({1, 2, 23, 94, 130}));
  CHECK(c == HalfPlaneCount{2, 2, 0});
}

TEST_CASE("counts of small cases") {
  CHECK(half_plane_counts(P({1, 0, 1})) == HalfPlaneCount{0, 0, 2});
  CHECK(half_plane_counts(P({1, 0, -1})) == HalfPlaneCount{1, 1, 0});
  CHECK(half_plane_counts(P({5})) == HalfPlaneCount{0, 0, 0});
  CHECK(half_plane_counts(P({1, 0})) == HalfPlaneCount{0, 0, 1});
  CHECK(half_plane_counts(P({1, 0, 0, 0})) == HalfPlaneCount{0, 0, 3});
  CHECK_THROWS_AS(half_plane_counts(Polynomial::zero()), Error);
}

TEST_CASE("counts property: planted censuses, index identity") {
  testgen::Rng rng(910);
  for (int i = 0; i < 250; ++i) {
    testgen::Planted p = testgen::random_planted(rng, 8, i % 2 == 1);
    HalfPlaneCount c = half_plane_counts(p.f);
    CHECK(c.n_plus == p.n_plus);
    CHECK(c.n_minus == p.n_minus);
    CHECK(c.n_zero == p.n_zero);
    auto [Pp, Qq] = hb_polynomials(p.f.monic());
    CHECK(cauchy_index(Qq, Pp, Endpoint::neg_inf(), Endpoint::pos_inf()) ==
          p.n_minus - p.n_plus);
  }
}

TEST_CASE("stability: classic examples") {
  StabilityReport r = is_hurwitz_stable(P({1, 3, 3, 1}));
  CHECK(r.stable);
  CHECK(r.cond_real_distinct);
  CHECK(r.cond_leading_signs);
  CHECK(r.cond_interleaving);
  CHECK(r.counts == HalfPlaneCount{0, 3, 0});
  // witnesses form the strictly increasing chain from zero
  AlgebraicRoot prev = AlgebraicRoot::exact(0);
  for (const auto& w : r.witnesses) {
    CHECK(compare_roots(prev, w) == Ordering::LT);
    prev = w;
  }

  CHECK_FALSE(is_hurwitz_stable(P({1, -1, 3, 0, -4, 1})).stable);
  CHECK_FALSE(is_hurwitz_stable(P({1, 0, 1})).stable);   // axis roots
  CHECK_FALSE(is_hurwitz_stable(P({1, 0, -1})).stable);  // sign condition fails
  CHECK_THROWS_AS(is_hurwitz_stable(P({7})), Error);
  CHECK_THROWS_AS(is_hurwitz_stable(Polynomial::zero()), Error);
}

TEST_CASE("stability property: products of left-half-plane factors") {
  testgen::Rng rng(911);
  for (int i = 0; i < 150; ++i) {
    Polynomial f = testgen::random_left_half_plane(rng, 7, true);
    StabilityReport r = is_hurwitz_stable(f);
    CHECK(r.stable);
    CHECK(r.counts == HalfPlaneCount{0, f.degree(), 0});
  }
  for (int i = 0; i < 150; ++i) {
    // plant at least one right-half-plane root
    Polynomial f = testgen::random_left_half_plane(rng, 5, true);
    f = f * P({1, -testgen::rand_rational(rng, 1, 4)});
    StabilityReport r = is_hurwitz_stable(f);
    CHECK_FALSE(r.stable);
    CHECK(r.counts.n_plus > 0);
  }
}

TEST_CASE("interlacing certificate of the degree-five sample") {
  Polynomial f = P({1, -1, 3, 0, -4, 1});
  InterlacingCertificate cert = interlacing_certificate(f);
  CHECK(cert.d == 3);
  CHECK(cert.strict);
  REQUIRE(cert.mu.size() == 3);
  REQUIRE(cert.nu.size() == 2);
  CHECK(cert.mu[0].exact_value() == -2);
  CHECK(cert.mu[1].exact_value() == 0);
  CHECK(cert.mu[2].exact_value() == 2);
  CHECK(cert.nu[0].exact_value() == -1);
  CHECK(cert.nu[1].exact_value() == 1);
  check_certificate(f, cert);
}

TEST_CASE("interlacing certificate can be empty when the bound is zero") {
  InterlacingCertificate cert = interlacing_certificate(P({1, 2, 23, 94, 130}));
  CHECK(cert.d == 0);
  CHECK(cert.mu.empty());
  CHECK(cert.nu.empty());
  CHECK(cert.strict);
}

TEST_CASE("interlacing rejects polynomials with all roots on the axis") {
  CHECK_THROWS_AS(interlacing_certificate(P({1, 0, 1})), Error);
}

TEST_CASE("interlacing property: random planted inputs") {
  testgen::Rng rng(912);
  for (int i = 0; i < 120; ++i) {
    testgen::Planted p = testgen::random_planted(rng, 8, i % 3 == 0);
    if (p.n_zero == p.f.degree()) continue;
    InterlacingCertificate cert = interlacing_certificate(p.f);
    check_certificate(p.f, cert);
  }
}

TEST_CASE("extension roots appear when a limit condition fires") {
  // (x+1)^2 (x-5): counts (1,2,0), d=1, P = x^3 + 9x, Q = -3x^2 + 5
  Polynomial f = P({1, -3, -9, -5});
  REQUIRE(half_plane_counts(f) == HalfPlaneCount{1, 2, 0});
  InterlacingCertificate cert = interlacing_certificate(f);
  REQUIRE(cert.d == 1);
  REQUIRE(cert.mu.size() == 1);
  CHECK(cert.mu[0].exact_value() == 0);

  InterlacingCertificate ext = obs36_extensions(f, cert);
  REQUIRE(ext.nu_pre.has_value());
  REQUIRE(ext.nu_post.has_value());
  CHECK(compare_roots(*ext.nu_pre, cert.mu[0]) == Ordering::LT);
  CHECK(compare_roots(*ext.nu_post, cert.mu[0]) == Ordering::GT);
  // both are roots of Q = -3x^2 + 5
  Polynomial Q = P({-3, 0, 5});
  for (const auto& r : {*ext.nu_pre, *ext.nu_post}) {
    CHECK_FALSE(r.is_exact());
    CHECK(count_real_roots(Q, Endpoint::at(r.lo()), Endpoint::at(r.hi())) == 1);
  }
}

TEST_CASE("extension requires an unbalanced census") {
  // (x-2)(x+1)(x^2+4): n+ = n- = 1, so no extension is claimed
  Polynomial f = P({1, -1, 2, -4, -8});
  REQUIRE(half_plane_counts(f) == HalfPlaneCount{1, 1, 2});
  InterlacingCertificate cert = interlacing_certificate(f);
  CHECK_THROWS_AS(obs36_extensions(f, cert), Error);
}

TEST_CASE("extension property: claimed roots always verify") {
  testgen::Rng rng(913);
  int fired = 0;
  for (int i = 0; i < 150; ++i) {
    testgen::Planted p = testgen::random_planted(rng, 7, false);
    if (p.n_zero == p.f.degree() || p.n_plus == p.n_minus) continue;
    InterlacingCertificate cert = interlacing_certificate(p.f);
    InterlacingCertificate ext;
    try {
      ext = obs36_extensions(p.f, cert);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotApplicable);
      continue;
    }
    ++fired;
    auto [Pp, Qq] = hb_polynomials(p.f.monic());
    for (const auto* r : {ext.nu_pre ? &*ext.nu_pre : nullptr,
                          ext.nu_post ? &*ext.nu_post : nullptr}) {
      if (!r) continue;
      if (r->is_exact())
        CHECK(Qq.eval(r->exact_value()) == 0);
      else
        CHECK(count_real_roots(Qq, Endpoint::at(r->lo()), Endpoint::at(r->hi())) >= 1);
    }
    if (ext.nu_pre)
      CHECK(compare_roots(*ext.nu_pre, cert.mu.front()) != Ordering::GT);
    if (ext.nu_post)
      CHECK(compare_roots(*ext.nu_post, cert.mu.back()) != Ordering::LT);
  }
  CHECK(fired > 0);
}
