#include "minq/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minq/parallel.hpp"

namespace minq {

namespace {

TransformSample from_unit(double t, const IntegrateResult& unit) {
    TransformSample s;
    s.t = t;
    s.f = unit.value;
    s.f_c = unit.value.real();
    s.f_s = unit.value.imag();
    // F(t) = 2 f / (2 - e^{it}); |2 - e^{it}|^2 = 5 - 4 cos t >= 1
    std::complex<double> den = 2.0 - std::polar(1.0, t);
    double den2 = 5.0 - 4.0 * std::cos(t);
    s.F = 2.0 * s.f / den;
    s.F_c = 2.0 * s.f_c / den2;
    s.F_s = 6.0 * s.f_s / den2;
    // the worst amplification among the closed forms is 6/(5-4cos t)
    double amp = std::max(2.0 / std::sqrt(den2), 6.0 / den2);
    s.bound = unit.bound * std::max(1.0, amp);
    return s;
}

}  // namespace

TransformSample finite_transform(double t, const QuadratureConfig& cfg) {
    double at = std::fabs(t);
    IntegrateResult unit = unit_exp_transform(at, cfg);
    if (t < 0) unit.value = std::conj(unit.value);
    return from_unit(t, unit);
}

TransformSample infinite_transform(double t, const QuadratureConfig& cfg) {
    return finite_transform(t, cfg);
}

TransformSample infinite_transform_direct(double t, const QuadratureConfig& cfg) {
    double at = std::fabs(t);
    IntegrateResult unit = unit_exp_transform(at, cfg);
    IntegrateResult tail = tail_exp_transform(at, cfg);
    std::complex<double> f = unit.value, T = tail.value;
    if (t < 0) {
        f = std::conj(f);
        T = std::conj(T);
    }
    TransformSample s;
    s.t = t;
    s.f = f;
    s.f_c = f.real();
    s.f_s = f.imag();
    s.F = f + T;
    s.F_c = s.F.real();
    s.F_s = s.F.imag();
    s.bound = unit.bound + tail.bound;
    return s;
}

SalemRecord salem_coefficient(std::uint64_t n, const QuadratureConfig& cfg) {
    if (n == 0) throw std::domain_error("salem_coefficient: n must be positive");
    double t = 2.0 * M_PI * static_cast<double>(n);
    IntegrateResult unit = unit_exp_transform(t, cfg);
    return {n, t, unit.value.real(), unit.value.imag(), unit.bound};
}

SalemScan salem_scan(std::uint64_t n_max, const QuadratureConfig& cfg, int parallelism) {
    if (n_max == 0) throw std::domain_error("salem_scan: n_max must be positive");
    SalemScan scan;
    scan.records.resize(n_max);
    // parallel_grain counts engine leaves; a record costs >= ~2000 of them
    std::size_t chunk = std::max<std::size_t>(1, static_cast<std::size_t>(cfg.parallel_grain) / 2048);
    parallel_for(
        n_max, parallelism,
        [&](std::size_t i) {
            scan.records[i] = salem_coefficient(static_cast<std::uint64_t>(i + 1), cfg);
        },
        chunk);

    scan.sup_tail.assign(n_max, 0.0);
    double running = 0;
    for (std::size_t i = n_max; i-- > 0;) {
        running = std::max(running, std::fabs(scan.records[i].d_n));
        scan.sup_tail[i] = running;
    }

    // descriptive log-log fit over records resolved beyond their bound
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (const auto& r : scan.records) {
        double mag = std::fabs(r.d_n);
        if (mag <= r.bound) continue;
        double x = std::log(static_cast<double>(r.n)), y = std::log(mag);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m >= 8) {
        double denom = static_cast<double>(m) * sxx - sx * sx;
        if (denom > 0) {
            scan.loglog_slope = (static_cast<double>(m) * sxy - sx * sy) / denom;
            scan.slope_valid = true;
        }
    }
    return scan;
}

CertifiedReal phase_identity_residual(double t, const QuadratureConfig& cfg) {
    TransformSample s = finite_transform(t, cfg);
    double c = std::cos(0.5 * t), sn = std::sin(0.5 * t);
    double residual = std::fabs(c * s.f_s - sn * s.f_c);
    return {residual, s.bound * (std::fabs(c) + std::fabs(sn))};
}

std::vector<double> tail_roots(RootBranch branch, int count) {
    if (count < 1) throw std::domain_error("tail_roots: count must be positive");
    double c2 = branch == RootBranch::cos ? 1.0 / 8.0 : 5.0 / 8.0;  // sin^2(t/2) target
    auto g = [c2](double t) {
        double s = std::sin(0.5 * t);
        return s * s - c2;
    };
    std::vector<double> roots;
    double step = 0.125;
    double prev_t = 0.0, prev_g = g(0.0);
    for (double t = step; roots.size() < static_cast<std::size_t>(count) && t < 1e6; t += step) {
        double cur = g(t);
        if ((prev_g < 0) != (cur < 0)) {
            double lo = prev_t, hi = t;
            while (hi - lo > 1e-12) {
                double mid = 0.5 * (lo + hi);
                if ((g(lo) < 0) != (g(mid) < 0))
                    hi = mid;
                else
                    lo = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_t = t;
        prev_g = cur;
    }
    return roots;
}

CertifiedReal tail_component(RootBranch branch, double t, const QuadratureConfig& cfg) {
    IntegrateResult tail = tail_exp_transform(std::fabs(t), cfg);
    double v = branch == RootBranch::cos ? tail.value.real() : tail.value.imag();
    return {v, tail.bound};
}

SandwichReport sandwich_check(double t, const QuadratureConfig& cfg) {
    TransformSample s = finite_transform(t, cfg);
    SandwichReport rep;
    rep.t = t;
    rep.bound = s.bound;
    double b = s.bound;
    double af = std::abs(s.f), aF = std::abs(s.F);
    double ac = std::fabs(s.f_c), aC = std::fabs(s.F_c);
    double as = std::fabs(s.f_s), aS = std::fabs(s.F_s);
    // each inequality widened by the bounds of both sides
    double m1 = (af + b) - 0.5 * (aF - b);
    double m2 = 1.5 * (aF + b) - (af - b);
    double m3 = (ac + b) - 0.5 * (aC - b);
    double m4 = 4.5 * (aC + b) - (ac - b);
    double m5 = (as + b) - (aS - b) / 6.0;
    double m6 = 1.5 * (aS + b) - (as - b);
    rep.holds_f = m1 >= 0 && m2 >= 0;
    rep.holds_c = m3 >= 0 && m4 >= 0;
    rep.holds_s = m5 >= 0 && m6 >= 0;
    rep.min_margin = std::min({m1, m2, m3, m4, m5, m6});
    return rep;
}

namespace {

// K(x) = (k x^{k-1} + i t x^k) e^{ixt} = d/dx [x^k e^{ixt}], so that
// int_0^1 x^k e^{ixt} d? = e^{it} - int_0^1 K(x) ?(x) dx.
class DerivativeKernel final : public DuKernel {
public:
    DerivativeKernel(int k, double t) : k_(k), t_(t) {
        double kk = static_cast<double>(k_);
        sup_d1_ = kk * std::max(kk - 1.0, 0.0) + 2.0 * kk * std::fabs(t_) + t_ * t_;
        sup_d2_ = kk * std::max(kk - 1.0, 0.0) * std::max(kk - 2.0, 0.0) +
                  3.0 * kk * std::max(kk - 1.0, 0.0) * std::fabs(t_) +
                  3.0 * kk * t_ * t_ + std::fabs(t_) * t_ * t_;
    }
    std::complex<double> eval(double x) const override {
        std::complex<double> phase = std::polar(1.0, t_ * x);
        double xk1 = k_ > 0 ? std::pow(x, k_ - 1) : 0.0;
        double xk = k_ > 0 ? xk1 * x : 1.0;
        return (std::complex<double>(k_ * xk1, t_ * xk)) * phase;
    }
    double osc(double lo, double hi) const override { return (hi - lo) * sup_d1_; }
    bool has_derivative() const override { return true; }
    std::complex<double> deriv(double x) const override {
        // K'(x) = (k(k-1) x^{k-2} + 2ikt x^{k-1} - t^2 x^k) e^{ixt}
        std::complex<double> phase = std::polar(1.0, t_ * x);
        double kk = static_cast<double>(k_);
        double xk2 = k_ > 1 ? std::pow(x, k_ - 2) : (k_ == 1 ? 0.0 : 0.0);
        double xk1 = k_ > 0 ? (k_ > 1 ? xk2 * x : 1.0) : 0.0;
        double xk = k_ > 0 ? xk1 * x : 1.0;
        std::complex<double> poly(kk * (kk - 1.0) * xk2 - t_ * t_ * xk, 2.0 * kk * t_ * xk1);
        return poly * phase;
    }
    double osc_deriv(double lo, double hi) const override { return (hi - lo) * sup_d2_; }
    std::optional<std::complex<double>> integral(double a, double b) const override {
        double ak = k_ > 0 ? std::pow(a, k_) : 1.0;
        double bk = k_ > 0 ? std::pow(b, k_) : 1.0;
        return bk * std::polar(1.0, t_ * b) - ak * std::polar(1.0, t_ * a);
    }

private:
    int k_;
    double t_;
    double sup_d1_, sup_d2_;
};

}  // namespace

CertifiedComplex derivative_transform(int k, double t, const QuadratureConfig& cfg) {
    if (k < 0 || k > 8) throw std::domain_error("derivative_transform: k must be in [0,8]");
    DerivativeKernel K(k, t);
    IntegrateResult r = qmark_weighted_integral(K, false, cfg);
    std::complex<double> moment_k = std::polar(1.0, t) - r.value;
    // i^k factor
    std::complex<double> ik{1.0, 0.0};
    for (int j = 0; j < (k & 3); ++j) ik *= std::complex<double>(0.0, 1.0);
    return {ik * moment_k, r.bound + 1e-15};
}

}  // namespace minq
