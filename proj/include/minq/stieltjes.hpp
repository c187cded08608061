#pragma once

/**
 * @file stieltjes.hpp
 * @brief Certified adaptive Riemann-Stieltjes quadrature against d?.
 *
 * The measure is refined over exact Stern-Brocot cylinders (int64
 * endpoints in the hot path; a cylinder's mass is exactly 2^{-depth}).
 * Two per-cylinder rules cooperate:
 *
 *  - midpoint rule with the rigorous mass * oscillation error bound,
 *    which needs no smoothness of measure or integrand;
 *  - for integrands exp(i t x) and exp(i t / x), a Mobius-series rule:
 *    on a cylinder [p/q, p'/q'] the phase is t*(a/c) -+ zeta/(u + s) in
 *    the self-similar coordinate u, so the integral collapses to a short
 *    Taylor series in Theta = zeta/s over the precomputed moment
 *    functions H_m (see moment_table.hpp) with remainder bounded by
 *    Theta^9 H_9 / 9!. This is what makes |t| ~ 10^3..10^5 feasible.
 *
 * Refinement is depth-first against per-leaf acceptance thresholds, so
 * the leaf set and the summation order are deterministic regardless of
 * any surrounding parallelism; values accumulate through compensated
 * summation.
 */

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

#include "minq/certified.hpp"

namespace minq {

struct QuadratureConfig {
    double tol = 1e-10;
    int max_depth = 64;         // hard spec cap 4096; int64 endpoints saturate at 86
    int parallel_grain = 2048;  // minimum records per task in scans
};

struct IntegrateResult {
    std::complex<double> value{};
    double bound = 0.0;
    std::uint64_t leaves = 0;
    bool tol_reached = false;

    CertifiedComplex certified() const { return {value, bound}; }
    CertifiedReal real_certified() const { return {value.real(), bound}; }
};

/// Integrand handle for quadrature against d? on [0,1].
class StieltjesIntegrand {
public:
    virtual ~StieltjesIntegrand() = default;
    virtual std::complex<double> eval(double x) const = 0;
    /// Upper bound for sup |g(u) - g(v)| over u,v in [lo,hi].
    virtual double osc(double lo, double hi) const = 0;
    /// Certified integral over the whole spine cylinder [0, 1/q] (mass
    /// 2^{1-q}), for integrands singular at 0; nullopt keeps refining.
    virtual std::optional<CertifiedComplex> left_tail(std::int64_t /*q*/) const {
        return std::nullopt;
    }
    /// Same for [(q-1)/q, 1], for integrands singular at 1.
    virtual std::optional<CertifiedComplex> right_tail(std::int64_t /*q*/) const {
        return std::nullopt;
    }
};

/// Adaptive certified integral of g against d? over (0,1).
IntegrateResult integrate(const StieltjesIntegrand& g, const QuadratureConfig& cfg);

/// Same, but restricted to the pure midpoint/oscillation rule. Reference
/// mode for oracles and for generating the moment table.
IntegrateResult integrate_reference(const StieltjesIntegrand& g, const QuadratureConfig& cfg);

/// int_0^1 e^{ixt} d?(x), t >= 0 (callers use conjugation for t < 0).
IntegrateResult unit_exp_transform(double t, const QuadratureConfig& cfg);
/// Reference-mode version of the same (midpoint rule only).
IntegrateResult unit_exp_transform_reference(double t, const QuadratureConfig& cfg);

/// int_1^inf e^{ixt} d?(x) = int_0^1 e^{it/u} d?(u), t >= 0.
IntegrateResult tail_exp_transform(double t, const QuadratureConfig& cfg);

/// int_0^1 x^lambda d?(x); finite for every real lambda. Negative lambda
/// bounds the spine cylinder [0,1/k] analytically via mass <= 2^{1-k}.
CertifiedReal moment(double lambda, const QuadratureConfig& cfg);

/// int_0^1 (1-x)^lambda d?(x); equals moment(lambda) by the symmetry of
/// d?, but is computed by its own quadrature (the equality is a test).
CertifiedReal moment_complement(double lambda, const QuadratureConfig& cfg);

/// Kernel for the Lebesgue-side integrals int_0^1 K(u) (?(u) - anchor) du.
/// These arise from integrating Stieltjes integrals by parts; exact dyadic
/// values of ? at the Stern-Brocot endpoints make the rule second order,
/// which is what the first-order mass*oscillation rule cannot be.
class DuKernel {
public:
    virtual ~DuKernel() = default;
    virtual std::complex<double> eval(double u) const = 0;
    /// Upper bound for sup |K(u) - K(v)| over u,v in [lo,hi].
    virtual double osc(double lo, double hi) const = 0;
    /// Kernels that also expose K' get the second-order rule: the engine
    /// then needs an oscillation bound for K' as well.
    virtual bool has_derivative() const { return false; }
    virtual std::complex<double> deriv(double /*u*/) const { return {}; }
    virtual double osc_deriv(double /*lo*/, double /*hi*/) const {
        return std::numeric_limits<double>::infinity();
    }
    /// Exact int_a^b K du when available. It lets the engine re-anchor a
    /// leaf to whichever of ?=0 / ?=1 is closer, which is what makes the
    /// spines opposite the kernel's own anchor decay geometrically.
    virtual std::optional<std::complex<double>> integral(double /*a*/, double /*b*/) const {
        return std::nullopt;
    }
    /// Certified integral of K * (? - anchor) over [0, 1/q], for kernels
    /// singular at 0.
    virtual std::optional<CertifiedComplex> left_tail(std::int64_t /*q*/) const {
        return std::nullopt;
    }
    /// Same over [(q-1)/q, 1], for kernels singular at 1.
    virtual std::optional<CertifiedComplex> right_tail(std::int64_t /*q*/) const {
        return std::nullopt;
    }
};

/// int_0^1 K(u) (?(u) - anchor) du, anchor 0 or 1.
IntegrateResult qmark_weighted_integral(const DuKernel& K, bool anchor_one,
                                        const QuadratureConfig& cfg);

/// Integrand over [1, +inf] with a finite limit at infinity. osc(a,b)
/// receives b = +infinity for the unbounded end.
struct TailIntegrand {
    std::function<std::complex<double>(double)> eval;
    std::function<double(double, double)> osc;
};

/// int over (1,inf) of g d?, computed entirely on the unit interval via
/// the substitution u = 1/x (the pushforward of d? under x -> 1/x is d?
/// again, up to orientation).
IntegrateResult tail_pushforward_integrate(const TailIntegrand& g, const QuadratureConfig& cfg);

}  // namespace minq
