//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "distex/error.hpp"
#include "distex/rational.hpp"

// Exact positivity certificates for quadratics on integer rays. Nothing in
// this header touches floating point.

namespace distex {

/// a2 x^2 + a1 x + a0.
struct RationalQuadratic {
  Rational a2, a1, a0;

  Rational operator()(const Rational& x) const { return (a2 * x + a1) * x + a0; }
  Rational discriminant() const { return a1 * a1 - Rational(4) * a2 * a0; }
  RationalQuadratic operator-() const { return {-a2, -a1, -a0}; }
  friend bool operator==(const RationalQuadratic&, const RationalQuadratic&) = default;

  std::string str(const std::string& var = "n") const {
    return "(" + a2.str() + ")" + var + "^2 + (" + a1.str() + ")" + var + " + (" + a0.str() + ")";
  }
};

enum class CertVerdict { PositiveOnRay, CounterexampleAt };

enum class CertReason {
  /// No real roots.
  NegativeDiscriminant,
  /// Largest root r < n0, shown by 2 a2 n0 + a1 > 0 and disc < (2 a2 n0 + a1)^2.
  LargestRootBelow,
  /// Real roots at or beyond n0 but no integer between them.
  NoIntegerInRootInterval,
  /// q(counterexample) <= 0.
  Violated,
};

inline std::string to_string(CertVerdict v) {
  return v == CertVerdict::PositiveOnRay ? "PositiveOnRay" : "CounterexampleAt";
}

inline std::string to_string(CertReason r) {
  switch (r) {
    case CertReason::NegativeDiscriminant: return "NegativeDiscriminant";
    case CertReason::LargestRootBelow: return "LargestRootBelow";
    case CertReason::NoIntegerInRootInterval: return "NoIntegerInRootInterval";
    case CertReason::Violated: return "Violated";
  }
  return "?";
}

/// Proof object that q(n) > 0 for every integer n >= n0, or a violation.
struct QuadraticCertificate {
  RationalQuadratic quadratic;
  std::int64_t n0 = 0;
  CertVerdict verdict = CertVerdict::PositiveOnRay;
  CertReason reason = CertReason::NegativeDiscriminant;
  Rational discriminant;
  /// Exact bracket [root_lo, root_hi] of the largest root when real.
  std::optional<Rational> root_lo, root_hi;
  /// The violating integer for CounterexampleAt.
  std::optional<std::int64_t> counterexample;
};

namespace detail {

// Bisection on [lo, hi] with q(lo) <= 0 < q(hi); keeps the bracket exact.
inline std::pair<Rational, Rational> bracket_root(const RationalQuadratic& q,
                                                  Rational lo, Rational hi,
                                                  int steps = 16) {
  for (int i = 0; i < steps; ++i) {
    Rational mid = (lo + hi) / Rational(2);
    if (q(mid).sign() <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace detail

/// Decides q(n) > 0 for all integers n >= n0. Requires a2 > 0.
inline QuadraticCertificate certify_positive_on_ray(const RationalQuadratic& q,
                                                    std::int64_t n0) {
  if (q.a2.sign() <= 0) {
    throw Error(ErrorKind::BadParameters, "leading coefficient must be positive");
  }
  QuadraticCertificate c;
  c.quadratic = q;
  c.n0 = n0;
  c.discriminant = q.discriminant();
  if (c.discriminant.sign() < 0) {
    c.reason = CertReason::NegativeDiscriminant;
    return c;
  }
  const Rational two_a = Rational(2) * q.a2;
  const Rational vertex = -q.a1 / two_a;
  const Rational t = two_a * Rational(n0) + q.a1;
  if (t.sign() > 0 && c.discriminant < t * t) {
    c.reason = CertReason::LargestRootBelow;
    auto [lo, hi] = detail::bracket_root(q, vertex, Rational(n0));
    c.root_lo = lo;
    c.root_hi = hi;
    return c;
  }
  // Largest root >= n0. An integer violation exists iff q <= 0 at n0 or
  // at an integer next to the vertex (the integer minimum of q).
  std::vector<std::int64_t> candidates{n0, vertex.floor(), vertex.ceil()};
  for (std::int64_t m : candidates) {
    if (m >= n0 && q(Rational(m)).sign() <= 0) {
      c.verdict = CertVerdict::CounterexampleAt;
      c.reason = CertReason::Violated;
      c.counterexample = m;
      return c;
    }
  }
  c.reason = CertReason::NoIntegerInRootInterval;
  Rational hi = Rational(vertex.ceil() + 1);
  while (q(hi).sign() <= 0) hi = hi + Rational(1);
  auto [lo, h] = detail::bracket_root(q, vertex, hi);
  c.root_lo = lo;
  c.root_hi = h;
  return c;
}

/// Re-derives the verdict of a certificate from its own fields.
inline bool recheck(const QuadraticCertificate& c) {
  QuadraticCertificate again = certify_positive_on_ray(c.quadratic, c.n0);
  return again.verdict == c.verdict && again.reason == c.reason &&
         again.discriminant == c.discriminant && again.root_lo == c.root_lo &&
         again.root_hi == c.root_hi && again.counterexample == c.counterexample;
}

// ---------------------------------------------------------------------------
// The three lemma families

enum class LemmaFamily { BroomKite, Saw30, Saw21 };

inline std::string to_string(LemmaFamily f) {
  switch (f) {
    case LemmaFamily::BroomKite: return "BroomKite";
    case LemmaFamily::Saw30: return "Saw30";
    case LemmaFamily::Saw21: return "Saw21";
  }
  return "?";
}

/// Smallest admissible parameter of each family.
inline std::int64_t lemma_param_min(LemmaFamily f) {
  switch (f) {
    case LemmaFamily::BroomKite: return 3;
    case LemmaFamily::Saw30: return 5;
    case LemmaFamily::Saw21: return 2;
  }
  return 0;
}

namespace detail {

inline RationalQuadratic lemma_coefficients_unchecked(LemmaFamily f, std::int64_t p) {
  const Rational half(1, 2);
  const Rational P(p);
  switch (f) {
    case LemmaFamily::BroomKite:
      return {half, -(Rational(3, 2) + P), P * P - Rational(3) * P + Rational(8)};
    case LemmaFamily::Saw30:
      return {half, -(Rational(3, 2) + P), P * P - Rational(4) * P + Rational(13)};
    case LemmaFamily::Saw21:
      return {half, -(half + P), P * P - Rational(4) * P + Rational(2)};
  }
  throw Error(ErrorKind::BadParameters, "unknown lemma family");
}

}  // namespace detail

/// Coefficients in n of the family's quadratic at parameter p.
inline RationalQuadratic lemma_coefficients(LemmaFamily f, std::int64_t p) {
  if (p < lemma_param_min(f)) {
    throw Error(ErrorKind::ParamOutOfRange,
                to_string(f) + " needs parameter >= " +
                    std::to_string(lemma_param_min(f)));
  }
  return detail::lemma_coefficients_unchecked(f, p);
}

/// The discriminant in n, as an exact quadratic in the parameter, obtained
/// by interpolation at p = 0, 1, 2.
inline RationalQuadratic discriminant_in_param(LemmaFamily f) {
  Rational d0 = detail::lemma_coefficients_unchecked(f, 0).discriminant();
  Rational d1 = detail::lemma_coefficients_unchecked(f, 1).discriminant();
  Rational d2 = detail::lemma_coefficients_unchecked(f, 2).discriminant();
  Rational a = (d2 - Rational(2) * d1 + d0) / Rational(2);
  Rational b = d1 - d0 - a;
  return {a, b, d0};
}

struct FamilyCertificate {
  LemmaFamily family;
  std::int64_t param_lo = 0;
  std::int64_t n0 = 0;
  /// Discriminant in the parameter; negative from tail_start on.
  RationalQuadratic discriminant;
  std::int64_t tail_start = 0;
  /// Certifies -discriminant(p) > 0 for all integers p >= tail_start.
  QuadraticCertificate tail;
  /// Explicit certificates for param_lo .. tail_start-1.
  std::vector<std::pair<std::int64_t, QuadraticCertificate>> head;
  bool all_positive = false;
};

/// Positivity for every parameter p >= param_lo and every n >= n0: a finite
/// head of explicit certificates plus a tail where the discriminant stays
/// negative.
inline FamilyCertificate certify_lemma_family(LemmaFamily f, std::int64_t param_lo,
                                              std::int64_t n0) {
  if (param_lo < lemma_param_min(f)) {
    throw Error(ErrorKind::ParamOutOfRange,
                to_string(f) + " needs parameter >= " +
                    std::to_string(lemma_param_min(f)));
  }
  FamilyCertificate fc;
  fc.family = f;
  fc.param_lo = param_lo;
  fc.n0 = n0;
  fc.discriminant = discriminant_in_param(f);
  const RationalQuadratic neg = -fc.discriminant;
  if (neg.a2.sign() <= 0) {
    throw Error(ErrorKind::BadParameters, "discriminant is not eventually negative");
  }
  // First p past the vertex where the discriminant is negative.
  std::int64_t p = std::max(param_lo, (-neg.a1 / (Rational(2) * neg.a2)).ceil());
  while (neg(Rational(p)).sign() <= 0) ++p;
  fc.tail_start = p;
  fc.tail = certify_positive_on_ray(neg, p);
  fc.all_positive = fc.tail.verdict == CertVerdict::PositiveOnRay;
  for (std::int64_t k = param_lo; k < fc.tail_start; ++k) {
    auto c = certify_positive_on_ray(lemma_coefficients(f, k), n0);
    fc.all_positive = fc.all_positive && c.verdict == CertVerdict::PositiveOnRay;
    fc.head.emplace_back(k, std::move(c));
  }
  return fc;
}

}  // namespace distex
