#pragma once

/**
 * @file quadrature.hpp
 * @brief Adaptive Gauss-Kronrod quadrature for ordinary integrals.
 *
 * Used for the smooth one-dimensional integrals outside the d? measure
 * (Bessel representations, index integrals, test oracles). Error fields
 * are the standard |G7 - K15| estimates, not certified enclosures; the
 * long double variant exists for cancellation-heavy integrands.
 */

#include <cstddef>
#include <functional>

namespace minq {

struct QuadResult {
    double value = 0;
    double error = 0;  // accumulated |G7-K15| estimate
    std::size_t evals = 0;
    bool converged = false;
};

/// conservative_error disables the (200|G-K|)^{3/2} sharpening, which can
/// flatter the estimate on integrands without high derivatives.
QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_intervals = 4000,
                        bool conservative_error = false);

struct QuadResultL {
    long double value = 0;
    long double error = 0;
    std::size_t evals = 0;
    bool converged = false;
};

QuadResultL integrate_gk_l(const std::function<long double(long double)>& f, long double a,
                           long double b, long double abs_tol, int max_intervals = 4000);

}  // namespace minq
