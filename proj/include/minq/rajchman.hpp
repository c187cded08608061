#pragma once

/**
 * @file rajchman.hpp
 * @brief Rajchman-measure machinery for continuous BV functions on [0,inf).
 *
 * For phi continuous, integrable, of bounded variation and vanishing at
 * infinity, the Fourier-Stieltjes transform Phi = Phi_c + i Phi_s has
 *
 *   Phi_c(t) = -phi(0) + t int_0^inf phi(x) sin(xt) dx,
 *   Phi_s(t) = -t int_0^inf phi(x) cos(xt) dx,
 *
 * and the averaged identity
 *
 *   (1/x) int_0^x [phi(y) - phi(0)] dy
 *       = (2/pi) int_0^inf Phi_c(y/x) (1 - cos y)/y^2 dy.
 *
 * phi supports a Rajchman measure iff Phi has a limit at infinity, iff
 * the two limits t int phi sin xt dx -> phi(0) and t int phi cos xt dx -> 0
 * hold together. With phi(x) = ?(1/x) those limits are equivalent to
 * Salem's open question, so the scans here emit data and error bars, never
 * a verdict.
 */

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "minq/certified.hpp"
#include "minq/stieltjes.hpp"

namespace minq {

/// A test measure: phi on [0, inf), continuous, BV, integrable, vanishing
/// at infinity. The numeric descriptors feed the uniform estimates; the
/// closed forms (when present) are oracles.
struct MeasureFunction {
    std::string name;
    std::function<double(double)> phi;
    double phi_zero = 0;
    double total_variation = 0;  // Phi_0
    double l1_norm = 0;
    double sup_norm = 0;
    /// upper bound for int_X^inf |phi|
    std::function<double(double)> tail_integral_bound;
    /// smooth measures carry a derivative and use Filon panels; the Salem
    /// measure is not smooth and integrates over pi/t half-periods
    bool smooth = false;
    std::function<double(double)> phi_deriv;
    /// closed forms of Phi_c / Phi_s where known (e^{-x}), else null
    std::function<double(double)> phi_c_closed;
    std::function<double(double)> phi_s_closed;
    /// decreasing envelope with |Phi_c(s)| <= phi_c_envelope(s); used to
    /// truncate outer integrals tightly. Defaults to the total variation.
    std::function<double(double)> phi_c_envelope;
};

MeasureFunction measure_exp();
MeasureFunction measure_inv_square();
MeasureFunction measure_bump();
/// phi(x) = ?(1/x), phi(0) = 2; pointwise through question_mark_extended.
MeasureFunction measure_salem();

/// Phi_c(t) through the integrated-by-parts form above.
CertifiedReal phi_cos_transform(const MeasureFunction& m, double t, double tol);
/// Phi_s(t) = -t int phi cos.
CertifiedReal phi_sin_transform(const MeasureFunction& m, double t, double tol);
/// The direct Stieltjes route (int cos xt dphi): through phi' for smooth
/// measures, through -F_c for the Salem measure. Cross-check companion of
/// phi_cos_transform.
CertifiedReal phi_cos_direct(const MeasureFunction& m, double t, double tol);

/// (2/pi) int_0^inf (1-cos y)/y^2 dy = 1.
CertifiedReal fejer_value(double tol);

/// |lhs - rhs| of the averaged identity at averaging length x, with the
/// combined certified/estimated bound.
CertifiedReal averaged_identity_residual(const MeasureFunction& m, double x, double tol);

struct LimitScanRecord {
    double t = 0;
    double sin_functional = 0;  // t int phi(x) sin xt dx
    double cos_functional = 0;  // t int phi(x) cos xt dx
    double bound = 0;
};

/// Corollary-1 functionals on an increasing t grid. For a Rajchman
/// measure they tend to phi(0) and 0.
std::vector<LimitScanRecord> corollary1_scan(const MeasureFunction& m,
                                             const std::vector<double>& t_grid, double tol);

/// The Salem case phi = ?(1/x): direct oscillatory-panel quadrature of
/// the two functionals (targets 2 and 0 iff Salem's answer is yes).
/// Emits data only.
std::vector<LimitScanRecord> salem_equivalent_scan(const std::vector<double>& t_grid,
                                                   const QuadratureConfig& cfg);

/// Residual of the Corollary-2 decomposition
///   Phi^{(n)}(t) = i^n [ Psi_n(t) - n int x^{n-1} phi e^{itx} dx ],
/// all three integrals computed independently. n <= 3, smooth measures.
CertifiedReal corollary2_residual(const MeasureFunction& m, int n, double t, double tol);

struct Theorem3Report {
    std::string psi_name;
    bool hypotheses_ok = false;    // psi(0)=psi(1)=0, BV, psi/x in L2
    double psi_over_x_l2 = 0;      // int_c^1 (psi/x)^2 with the near-0 cutoff
    double cutoff = 0;
    /// log-log slopes of t^m |psi_hat^(m)|, m = 0,1,2 (integrability
    /// proxy: slope < -1) over the tail of the grid
    double slope_m[3] = {0, 0, 0};
    /// sup of t^m |psi_hat^(m-1)| over the tail (o(1) proxy), m = 1,2
    double sup_m[2] = {0, 0};
    /// windowed-sup log-log slope of |Psi(t)| = |t psi_hat(t)|
    double psi_capital_slope = 0;
    bool slopes_valid = false;
    /// numerical decay slopes cannot prove integrability
    std::string caveat = "heuristic, not a proof";
};

/// Condition checker for psi on [0,1] with psi(0) = psi(1) = 0; psi_hat
/// and its derivatives via Filon panels.
Theorem3Report theorem3_condition_check(const std::string& psi_name,
                                        const std::function<double(double)>& psi,
                                        const std::vector<double>& t_grid, double tol);

}  // namespace minq
