#pragma once

/**
 * @file oscillatory.hpp
 * @brief Oscillatory quadrature helpers.
 *
 * Filon-Simpson panels integrate g(u) e^{i omega u} with a cost that does
 * not grow with omega (the trigonometric moments are exact; only g is
 * interpolated), plus half-period partial sums with iterated averaging
 * for conditionally convergent tails.
 */

#include <complex>
#include <functional>

namespace minq {

struct FilonResult {
    std::complex<double> value;  // int_a^b g(u) e^{i omega u} du
    double est_error = 0;        // from panel-count doubling
    std::size_t evals = 0;
};

/// Composite Filon-Simpson rule with `panels` quadratic panels; the error
/// estimate compares against the half-panel count. g must be smooth.
FilonResult filon_exp(const std::function<double(double)>& g, double a, double b, double omega,
                      int panels);

struct AveragedTail {
    double value = 0;
    double est_error = 0;
    bool converged = false;
    int terms = 0;
};

/// Sums int_{a}^{inf} f via consecutive panels of width `panel` with
/// iterated averaging of the partial sums (repeated (S_j + S_{j+1})/2),
/// the standard accelerator for alternating half-period tails.
AveragedTail averaged_panel_tail(const std::function<double(double)>& f, double a, double panel,
                                 int max_panels, double tol);

}  // namespace minq
