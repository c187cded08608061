#pragma once

/**
 * @file bessel.hpp
 * @brief Modified Bessel function K_{i tau}(x) of imaginary order.
 *
 * Production evaluation uses the absolutely convergent representation
 * K_{i tau}(x) = int_0^inf e^{-x cosh u} cos(tau u) du while it is well
 * conditioned; for small x with large tau (where that integral loses
 * e^{x - pi tau/2} digits to cancellation) it switches to the power
 * series of I_{i tau} with a complex log-gamma, whose smallness is
 * analytic rather than numerical. The conditionally convergent Fourier
 * cosine form cosh(pi tau/2) K_{i tau}(x) = int_0^inf cos(tau u)
 * cos(x sinh u) du is kept as a verification target, summed by
 * half-period panels with iterated averaging. The index integral ties
 * them together:
 *
 *   (1/pi) int_-inf^inf tau e^{lambda tau} (t+sqrt(1+t^2))^{i tau}
 *          K_{i tau}(x) d tau
 *     = x exp(-x[sqrt(1+t^2) cos l - i t sin l])
 *         [sqrt(1+t^2) sin l + i t cos l],   0 <= lambda < pi/2.
 */

#include <complex>

namespace minq {

struct BesselPoint {
    double x = 0;
    double tau = 0;
    double value = 0;
    /// error estimate (quadrature/series tail + cancellation floor)
    double bound = 0;
    enum class Method { exp_representation, power_series, fourier_cosine } method =
        Method::exp_representation;
    bool converged = true;
};

/// K_{i tau}(x), x > 0, real for real tau and even in tau.
BesselPoint k_imag(double x, double tau, double tol = 1e-12);

/// Verification route through the Fourier cosine integral; restricted to
/// x <= 10, |tau| <= 10 where the conditional convergence is manageable.
/// value is K_{i tau}(x) (the cosh factor is divided out); converged is
/// false when the averaged partial sums fail to stabilise.
BesselPoint k_imag_fourier(double x, double tau, double tol = 1e-8);

struct UniformBoundReport {
    double x = 0, tau = 0;
    double value = 0;     // |K_{i tau}(x)|
    double rhs = 0;       // x^{-1/4} / sqrt(sinh pi tau)
    double margin = 0;    // rhs + slack - |value|; >= 0 when the bound holds
    bool holds = false;
};

/// |K_{i tau}(x)| <= x^{-1/4}/sqrt(sinh pi tau), x, tau > 0.
UniformBoundReport uniform_bound_check(double x, double tau, double tol = 1e-11);

enum class AsymptoticRegime { large_x, small_x_nonzero_order, small_x_zero_order, large_tau };

struct AsymptoticReport {
    AsymptoticRegime regime;
    double measured = 0;  // the regime's ratio or bounded quantity
    double expected = 0;
    double tolerance = 0;
    bool ok = false;
};

/// Ratio tests of the asymptotic regimes; report-only.
AsymptoticReport asymptotic_checks(AsymptoticRegime regime);

struct IndexIntegralSample {
    double x = 0, t = 0, lambda = 0;
    std::complex<double> lhs{};
    std::complex<double> rhs{};
    double bound = 0;
    bool slow_convergence = false;
};

/// Both sides of the index integral above; throws for lambda outside
/// [0, pi/2).
IndexIntegralSample index_integral(double x, double t, double lambda, double tol = 1e-8);

}  // namespace minq
