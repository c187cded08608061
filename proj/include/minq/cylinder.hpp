#pragma once

/**
 * @file cylinder.hpp
 * @brief Exact Stern-Brocot cylinders: the atoms of the d? measure.
 *
 * A cylinder is an interval [p/q, p'/q'] with |p'q - pq'| = 1 produced by
 * mediant subdivision of [0/1, 1/1]. The question mark function maps it
 * onto a dyadic interval of length exactly 2^{-depth}, so each cylinder
 * carries d?-mass 2^{-depth}; masses are stored as the exponent only.
 */

#include <cstdint>
#include <vector>

#include "minq/rational.hpp"

namespace minq {

struct Cylinder {
    Rational left;
    Rational right;
    std::uint32_t depth = 0;  // mass = 2^{-depth}

    static Cylinder root() { return {Rational{0}, Rational{1}, 0}; }

    Rational mediant() const { return Rational::mediant(left, right); }
    std::pair<Cylinder, Cylinder> split() const;

    /// |p'q - pq'| as BigInt; equals 1 for every valid cylinder.
    BigInt unimodularity_defect() const;
    Rational width() const { return right - left; }
};

/// The 2^k cylinders of depth k partitioning [0,1], in left-to-right
/// order. Throws std::domain_error for negative/overflowing k and
/// std::length_error when 2^k cylinders will not fit in memory (k > 24).
std::vector<Cylinder> root_partition(int k);

}  // namespace minq
