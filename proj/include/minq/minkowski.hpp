#pragma once

/**
 * @file minkowski.hpp
 * @brief The Minkowski question mark function ?(x) and its inverse.
 *
 * ?(x) maps the regular continued fraction [0; a_1, a_2, ...] of x to the
 * dyadic value 2 * sum_i (-1)^{i+1} 2^{-(a_1+...+a_i)}. On rationals this
 * is computed exactly; no floating point enters until a caller asks for a
 * double. The inverse (Conway's box function) turns binary run lengths of
 * y back into continued fraction digits.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "minq/certified.hpp"
#include "minq/rational.hpp"

namespace minq {

/// Canonical regular continued fraction of some x in [0,1]:
/// x = [0; a_1, ..., a_n] with every a_i >= 1 and a_n >= 2 whenever n >= 2.
struct ContinuedFraction {
    std::vector<std::uint64_t> digits;
    /// Set when digits were cut off (irrational or precision-limited input).
    bool is_truncated = false;

    bool canonical() const;
    /// Folds a trailing 1 into the previous digit: [..., a, 1] -> [..., a+1].
    void normalize();
};

/// Euclidean-algorithm digits of an exact rational in [0,1].
/// Throws std::domain_error outside [0,1].
ContinuedFraction cf_encode(const Rational& x);

/// Exact ?(x) as a dyadic rational, from canonical digits.
Dyadic question_mark(const ContinuedFraction& cf);
Dyadic question_mark(const Rational& x);

/// Exact extension of ? to rational x >= 0 through ?(x) = 2 ?(x/(x+1)).
Dyadic question_mark_extended_exact(const Rational& x);

/// ?(x) for a double in [0,1]. The input is taken exactly (every double is
/// a dyadic rational); digit extraction stops once the convergent
/// denominator passes 2^53 and the returned bound covers the truncated
/// cylinder. `tol` is a target only: the bound reports what was achieved.
CertifiedReal question_mark_real(double x, double tol = 1e-15);

/// ? on [0, +inf]; question_mark_real on [0,1], 2 - ?(1/x) beyond,
/// ?(inf) = 2 exactly.
CertifiedReal question_mark_extended(double x, double tol = 1e-15);

/// Evaluates ?([0; a_1, a_2, ...]) from an explicit digit prefix, e.g. a
/// truncated periodic expansion of a quadratic irrational. The bound is
/// the mass 2^{-(a_1+...+a_n)} of the prefix cylinder.
CertifiedReal question_mark_from_digits(const std::vector<std::uint64_t>& digits);

/// Exact inverse on dyadic rationals y in [0,1].
Rational box_inverse_exact(const Dyadic& y);

struct BoxInverseResult {
    CertifiedReal approx;             // midpoint of the bracketing cylinder
    std::optional<Rational> exact;    // present when y was dyadic
};

/// Inverse for an arbitrary rational y in [0,1]: exact when y is dyadic,
/// otherwise bracketed to width <= tol by consecutive convergents.
BoxInverseResult box_inverse(const Rational& y, double tol);
BoxInverseResult box_inverse(double y, double tol);

/// Exact ?(p/q) assembled directly in double for int64 inputs in [0,1];
/// the hot path of the quadrature engines. Terms below 2^-1074 underflow
/// to zero, which is the correct rounding.
double question_mark_i64(std::int64_t p, std::int64_t q);

/// Holder exponent log 2 / (2 log((sqrt 5 + 1)/2)) = 0.7202...
double holder_alpha();

/// C |x-y|^alpha with the exponent above; C defaults to 6.
double holder_bound(double x, double y, double C = 6.0);

}  // namespace minq
