//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <random>

#include "distex/distex.hpp"
#include "oracles.hpp"

using namespace distex;

TEST(Rational, Arithmetic) {
  Rational a(6, -4);
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(a + Rational(3, 2), Rational(0));
  EXPECT_EQ(a * a, Rational(9, 4));
  EXPECT_EQ(Rational(1) / Rational(3) - Rational(1, 3), Rational(0));
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(8, 2).ceil(), 4);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(-5, 10).str(), "-1/2");
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW(Rational(INT64_MAX) * Rational(INT64_MAX), Error);
}

TEST(Rational, AgreesWithIntegerCrossMultiplication) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int t = 0; t < 2000; ++t) {
    int a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (b == 0 || e == 0) continue;
    Rational x(a, b), y(c, e);
    EXPECT_EQ(x + y, Rational(a * e + c * b, b * e));
    EXPECT_EQ(x * y, Rational(a * c, b * e));
    const long long lhs = static_cast<long long>(b > 0 ? a : -a) * std::abs(e);
    const long long rhs = static_cast<long long>(e > 0 ? c : -c) * std::abs(b);
    EXPECT_EQ(x < y, lhs < rhs);
  }
}

TEST(Certificate, Examples) {
  auto p3 = lemma_coefficients(LemmaFamily::BroomKite, 3);
  EXPECT_EQ(p3, (RationalQuadratic{Rational(1, 2), Rational(-9, 2), Rational(8)}));
  auto c3 = certify_positive_on_ray(p3, 13);
  EXPECT_EQ(c3.verdict, CertVerdict::PositiveOnRay);
  EXPECT_EQ(c3.reason, CertReason::LargestRootBelow);
  ASSERT_TRUE(c3.root_lo && c3.root_hi);
  // Largest root (9 + sqrt 17)/2 lies in the bracket: check by squaring.
  auto inside = [](const Rational& r) { return (Rational(2) * r - Rational(9)); };
  EXPECT_LE(inside(*c3.root_lo) * inside(*c3.root_lo), Rational(17));
  EXPECT_GE(inside(*c3.root_hi) * inside(*c3.root_hi), Rational(17));
  EXPECT_LT(*c3.root_hi, Rational(13));

  auto p8 = lemma_coefficients(LemmaFamily::BroomKite, 8);
  EXPECT_EQ(Rational(4) * p8.discriminant(), Rational(-55 + 36 * 8 - 4 * 64));
  EXPECT_EQ(certify_positive_on_ray(p8, 0).reason, CertReason::NegativeDiscriminant);

  auto bad = certify_positive_on_ray({Rational(1), Rational(0), Rational(-1)}, 0);
  EXPECT_EQ(bad.verdict, CertVerdict::CounterexampleAt);
  ASSERT_TRUE(bad.counterexample);
  EXPECT_EQ(*bad.counterexample, 0);
  EXPECT_THROW(certify_positive_on_ray({Rational(0), Rational(1), Rational(1)}, 0), Error);
}

TEST(Certificate, LemmaCoefficientExamples) {
  auto s21 = lemma_coefficients(LemmaFamily::Saw21, 2);
  EXPECT_EQ(s21, (RationalQuadratic{Rational(1, 2), Rational(-5, 2), Rational(-2)}));
  EXPECT_EQ(Rational(4) * s21.discriminant(), Rational(-15 + 36 * 2 - 4 * 4));
  auto s30 = lemma_coefficients(LemmaFamily::Saw30, 9);
  EXPECT_EQ(Rational(4) * s30.discriminant(), Rational(-4 * 81 + 44 * 9 - 95));
  EXPECT_THROW(lemma_coefficients(LemmaFamily::Saw30, 4), Error);
  EXPECT_THROW(lemma_coefficients(LemmaFamily::BroomKite, 2), Error);
  EXPECT_THROW(lemma_coefficients(LemmaFamily::Saw21, 1), Error);
}

TEST(Certificate, CoefficientsMatchDefiningSums) {
  int checked = 0;
  for (long long n = 11; n <= 30; ++n) {
    for (long long j = 3; j <= n - 2; ++j) {
      EXPECT_EQ(lemma_coefficients(LemmaFamily::BroomKite, j)(Rational(n)),
                Rational(oracle::broom_kite_sum(n, j)));
      ++checked;
    }
    for (long long k = 5; k <= n - 2; ++k) {
      EXPECT_EQ(lemma_coefficients(LemmaFamily::Saw30, k)(Rational(n)),
                Rational(oracle::saw30_sum(n, k)));
      ++checked;
    }
    for (long long k = 2; k <= n - 4; ++k) {
      EXPECT_EQ(lemma_coefficients(LemmaFamily::Saw21, k)(Rational(n)),
                Rational(oracle::saw21_sum(n, k)));
      ++checked;
    }
  }
  EXPECT_GE(checked, 50);
}

TEST(Certificate, AgreesWithIntegerScan) {
  // Brute-force positivity over n0..n0+200 for random small quadratics; a
  // positive leading coefficient makes the finite scan decisive past the
  // vertex.
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<int> d(-40, 40);
  for (int t = 0; t < 1000; ++t) {
    Rational a2(1 + rng() % 4, 1 + rng() % 3);
    Rational a1(d(rng), 1 + rng() % 3);
    Rational a0(d(rng) * 4, 1 + rng() % 3);
    const std::int64_t n0 = d(rng);
    RationalQuadratic q{a2, a1, a0};
    auto c = certify_positive_on_ray(q, n0);
    bool positive = true;
    for (std::int64_t n = n0; n <= n0 + 200; ++n)
      if (q(Rational(n)).sign() <= 0) {
        positive = false;
        break;
      }
    EXPECT_EQ(c.verdict == CertVerdict::PositiveOnRay, positive) << q.str() << " n0=" << n0;
    if (!positive) {
      ASSERT_TRUE(c.counterexample);
      EXPECT_LE(q(Rational(*c.counterexample)).sign(), 0);
      EXPECT_GE(*c.counterexample, n0);
    }
    EXPECT_TRUE(recheck(c));
  }
}

TEST(Certificate, FamilyClaims) {
  struct Row {
    LemmaFamily f;
    std::int64_t lo, n0, tail;
  };
  for (const Row& r : {Row{LemmaFamily::BroomKite, 3, 13, 8}, Row{LemmaFamily::Saw30, 5, 11, 9},
                       Row{LemmaFamily::Saw21, 2, 13, 9}}) {
    auto fc = certify_lemma_family(r.f, r.lo, r.n0);
    EXPECT_TRUE(fc.all_positive) << to_string(r.f);
    EXPECT_EQ(fc.tail_start, r.tail) << to_string(r.f);
    EXPECT_EQ(fc.tail.verdict, CertVerdict::PositiveOnRay);
    EXPECT_TRUE(recheck(fc.tail));
    EXPECT_EQ(fc.head.size(), static_cast<std::size_t>(r.tail - r.lo));
    for (const auto& [p, c] : fc.head) {
      EXPECT_EQ(c.verdict, CertVerdict::PositiveOnRay);
      EXPECT_TRUE(recheck(c));
    }
    // Beyond the tail start the discriminant in n is negative.
    for (std::int64_t p = fc.tail_start; p < fc.tail_start + 50; ++p)
      EXPECT_LT(lemma_coefficients(r.f, p).discriminant().sign(), 0);
    // Stated discriminant polynomials.
    for (std::int64_t p = 0; p < 20; ++p) {
      Rational four_disc = Rational(4) * fc.discriminant(Rational(p));
      if (r.f == LemmaFamily::BroomKite) { EXPECT_EQ(four_disc, Rational(-55 + 36 * p - 4 * p * p)); }
      if (r.f == LemmaFamily::Saw30) { EXPECT_EQ(four_disc, Rational(-95 + 44 * p - 4 * p * p)); }
      if (r.f == LemmaFamily::Saw21) { EXPECT_EQ(four_disc, Rational(-15 + 36 * p - 4 * p * p)); }
    }
  }
}

TEST(Certificate, DetectsFalseClaims) {
  // Saw21 at k = 2 fails for small n: f_2(n) = n^2/2 - 5n/2 - 2 <= 0 at n = 5.
  auto fc = certify_lemma_family(LemmaFamily::Saw21, 2, 5);
  EXPECT_FALSE(fc.all_positive);
  auto c = certify_positive_on_ray(lemma_coefficients(LemmaFamily::Saw21, 2), 5);
  EXPECT_EQ(c.verdict, CertVerdict::CounterexampleAt);
  EXPECT_TRUE(recheck(c));
}

TEST(Certificate, RecheckIsBitExact) {
  auto fc1 = certify_lemma_family(LemmaFamily::Saw30, 5, 11);
  auto fc2 = certify_lemma_family(LemmaFamily::Saw30, 5, 11);
  EXPECT_EQ(fc1.discriminant, fc2.discriminant);
  EXPECT_EQ(fc1.tail.root_lo, fc2.tail.root_lo);
  QuadraticCertificate tampered = fc1.tail;
  tampered.reason = CertReason::NegativeDiscriminant;
  EXPECT_FALSE(recheck(tampered));
}
