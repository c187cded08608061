#pragma once

/**
 * @file fourier.hpp
 * @brief Fourier-Stieltjes transforms of the question mark function.
 *
 * Six transforms of d?: f, f_c, f_s over (0,1) and F, F_c, F_s over
 * (0,infinity), with
 *
 *   F(t)  = 2 f(t) / (2 - e^{it}),
 *   F_c(t) = 2 f_c(t) / (5 - 4 cos t),    F_s(t) = 6 f_s(t) / (5 - 4 cos t),
 *
 * the phase identity cos(t/2) f_s = sin(t/2) f_c, the sandwich
 * inequalities tying decay over (0,1) to decay over (0,inf), and the
 * Salem coefficients d_n = f_c(2 pi n) whose limit behaviour is the open
 * question; scans emit data and never a verdict.
 */

#include <complex>
#include <cstdint>
#include <vector>

#include "minq/certified.hpp"
#include "minq/stieltjes.hpp"

namespace minq {

struct TransformSample {
    double t = 0;
    std::complex<double> f{};  // int_0^1 e^{ixt} d?
    std::complex<double> F{};  // int_0^inf e^{ixt} d?
    double f_c = 0, f_s = 0, F_c = 0, F_s = 0;
    /// valid absolute error bound for every component above
    double bound = 0;
};

struct SalemRecord {
    std::uint64_t n = 0;
    double t = 0;        // 2 pi n
    double d_n = 0;      // f_c(2 pi n)
    double f_s_val = 0;  // exact value 0; reported as quadrature health
    double bound = 0;
};

struct SalemScan {
    std::vector<SalemRecord> records;
    /// sup_{m >= n} |d_m| per n (suffix maxima over the scanned range)
    std::vector<double> sup_tail;
    /// least-squares slope of log|d_n| against log n over records whose
    /// magnitude exceeds their bound; only descriptive, never a claim
    /// about the limit (Salem's question is open)
    double loglog_slope = 0;
    bool slope_valid = false;
};

/// f(t), f_c, f_s by certified quadrature; the F components are filled
/// through the closed-form relations above at no extra quadrature cost.
/// Negative t goes through conjugation.
TransformSample finite_transform(double t, const QuadratureConfig& cfg);

/// Same sample viewed from the (0,inf) side; alias of finite_transform's
/// closed-form route; kept as a named entry point for the (0,inf) view.
TransformSample infinite_transform(double t, const QuadratureConfig& cfg);

/// Independent oracle: F(t) = f(t) + int_1^inf e^{ixt} d? with the tail
/// computed by pushforward quadrature, never through the closed form.
TransformSample infinite_transform_direct(double t, const QuadratureConfig& cfg);

SalemRecord salem_coefficient(std::uint64_t n, const QuadratureConfig& cfg);

/// Records for n = 1..n_max computed on up to `parallelism` threads;
/// per-record results are schedule-independent.
SalemScan salem_scan(std::uint64_t n_max, const QuadratureConfig& cfg, int parallelism = 1);

/// |cos(t/2) f_s(t) - sin(t/2) f_c(t)| with its certified bound.
CertifiedReal phase_identity_residual(double t, const QuadratureConfig& cfg);

enum class RootBranch { cos, sin };

/// First `count` positive roots of sin(t/2) = +-1/(2 sqrt 2) (cos branch)
/// or sin(t/2) = +-sqrt(5/8) (sin branch), bisected to 1e-12. At these
/// frequencies the corresponding tail transform over (1,inf) vanishes.
std::vector<double> tail_roots(RootBranch branch, int count);

/// Certified value of int_1^inf cos(xt) d? (cos branch) or the sine
/// analogue, for checking the vanishing at the roots above.
CertifiedReal tail_component(RootBranch branch, double t, const QuadratureConfig& cfg);

struct SandwichReport {
    double t = 0;
    bool holds_f = false, holds_c = false, holds_s = false;
    /// worst signed slack across the six one-sided inequalities, after
    /// widening by the certified bounds; >= 0 when everything holds
    double min_margin = 0;
    double bound = 0;

    bool all_hold() const { return holds_f && holds_c && holds_s; }
};

/// Verifies |F|/2 <= |f| <= (3/2)|F|, |F_c|/2 <= |f_c| <= (9/2)|F_c|,
/// |F_s|/6 <= |f_s| <= (3/2)|F_s| with bound slack.
SandwichReport sandwich_check(double t, const QuadratureConfig& cfg);

/// f^{(k)}(t) = int_0^1 (ix)^k e^{ixt} d?(x), k <= 8, via integration by
/// parts against exact values of ?.
CertifiedComplex derivative_transform(int k, double t, const QuadratureConfig& cfg);

}  // namespace minq
