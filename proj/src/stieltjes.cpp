#include "minq/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

#include "minq/minkowski.hpp"
#include "minq/moment_table.hpp"

namespace minq {

namespace {

// int64 endpoints stay exact through mediant splitting up to depth 86
// (Fibonacci growth); deeper leaves carry mass below 2^-86 and are closed
// with their oscillation bound instead of being split.
constexpr int kDepthSaturation = 86;
constexpr int kSeriesOrder = 8;  // Taylor terms 0..8, remainder via H_9
constexpr double kInvFact[] = {1.0,
                               1.0,
                               1.0 / 2,
                               1.0 / 6,
                               1.0 / 24,
                               1.0 / 120,
                               1.0 / 720,
                               1.0 / 5040,
                               1.0 / 40320,
                               1.0 / 362880};

enum class PhaseKind { none, linear, reciprocal };

struct Frame {
    std::int64_t p, q, P, Q;
    std::int32_t depth;
};

struct Accum {
    double re = 0, im = 0, c_re = 0, c_im = 0;  // Neumaier compensation
    void add(double x, double y) {
        double s = re + x;
        c_re += std::fabs(re) >= std::fabs(x) ? (re - s) + x : (x - s) + re;
        re = s;
        s = im + y;
        c_im += std::fabs(im) >= std::fabs(y) ? (im - s) + y : (y - s) + im;
        im = s;
    }
    std::complex<double> total() const { return {re + c_re, im + c_im}; }
};

struct Engine {
    const StieltjesIntegrand* g = nullptr;
    PhaseKind kind = PhaseKind::none;
    double t = 0.0;
    bool allow_series = true;
    int max_depth = 64;
    double series_tol = 0.0;
    double tau_osc = 0.0;

    Accum acc;
    double bound_series = 0, bound_osc = 0, bound_misc = 0;
    std::uint64_t leaves = 0;

    void reset() {
        acc = Accum{};
        bound_series = bound_osc = bound_misc = 0;
        leaves = 0;
    }

    std::complex<double> eval_mid(double mid) const {
        switch (kind) {
            case PhaseKind::linear: {
                double ph = t * mid;
                return {std::cos(ph), std::sin(ph)};
            }
            case PhaseKind::reciprocal: {
                double ph = t / mid;
                return {std::cos(ph), std::sin(ph)};
            }
            case PhaseKind::none:
                return g->eval(mid);
        }
        return {};
    }

    double osc_bound(double lo, double hi, double width) const {
        switch (kind) {
            case PhaseKind::linear:
                return std::min(2.0, t * width);
            case PhaseKind::reciprocal: {
                if (t == 0.0) return 0.0;
                if (lo <= 0.0) return 2.0;
                return std::min(2.0, t * width / (lo * hi));
            }
            case PhaseKind::none:
                return g->osc(lo, hi);
        }
        return 0.0;
    }

    bool try_series(const Frame& f, double mass) {
        if (!allow_series || kind == PhaseKind::none) return false;
        double zeta, s_raw, phref;
        int chi;
        if (kind == PhaseKind::linear) {
            std::int64_t gam = f.Q - f.q;
            if (gam == 0) return false;
            double gd = static_cast<double>(gam);
            zeta = t / (gd * gd);
            s_raw = static_cast<double>(f.q) / gd;
            phref = t * (static_cast<double>(f.P - f.p) / gd);
            chi = -1;
        } else {
            std::int64_t alp = f.P - f.p;
            if (alp == 0 || f.p == 0) return false;
            double ad = static_cast<double>(alp);
            zeta = t / (ad * ad);
            s_raw = static_cast<double>(f.p) / ad;
            phref = t * (static_cast<double>(f.Q - f.q) / ad);
            chi = +1;
        }
        double s = s_raw;
        if (s_raw < 0) {
            chi = -chi;
            s = -(1.0 + s_raw);
        }
        if (!(s > 0)) return false;
        double theta = zeta / s;
        if (theta > 1.0) return false;
        double sigma = 1.0 / s;
        double H[gtable::kMMax + 1];
        if (!gtable::eval_all(sigma, H)) return false;
        double th9 = theta * theta * theta;
        th9 = th9 * th9 * th9;  // theta^9
        double rem = th9 * kInvFact[9] * H[9];
        if (rem > series_tol) return false;

        // C = sum_{m<=8} (chi i theta)^m / m! * H_m
        double cre = 0, cim = 0, pw = 1;
        for (int m = 0; m <= kSeriesOrder; ++m) {
            double coef = pw * kInvFact[m] * H[m];
            switch (m & 3) {
                case 0: cre += coef; break;
                case 1: cim += chi * coef; break;
                case 2: cre -= coef; break;
                case 3: cim -= chi * coef; break;
            }
            pw *= theta;
        }
        double cph = std::cos(phref), sph = std::sin(phref);
        acc.add(mass * (cre * cph - cim * sph), mass * (cre * sph + cim * cph));
        bound_series += mass * rem;
        // table noise (sum Theta^m/m! <= e) and phase rounding
        bound_misc += mass * (2.8 * gtable::error_bound() + std::fabs(phref) * 0x1p-50 + 0x1p-52);
        ++leaves;
        return true;
    }

    void run(Frame root) {
        std::vector<Frame> stack;
        stack.reserve(256);
        stack.push_back(root);
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            double mass = std::ldexp(1.0, -f.depth);

            if (try_series(f, mass)) continue;

            double lo = static_cast<double>(f.p) / static_cast<double>(f.q);
            double hi = static_cast<double>(f.P) / static_cast<double>(f.Q);
            double width = 1.0 / (static_cast<double>(f.q) * static_cast<double>(f.Q));

            // spine hooks for integrands with endpoint singularities
            if (kind == PhaseKind::none && g) {
                if (f.p == 0) {
                    if (auto tail = g->left_tail(f.Q)) {
                        if (tail->bound <= tau_osc) {
                            acc.add(tail->value.real(), tail->value.imag());
                            bound_osc += tail->bound;
                            ++leaves;
                            continue;
                        }
                    }
                }
                if (f.P == 1 && f.Q == 1 && f.depth > 0) {
                    if (auto tail = g->right_tail(f.q)) {
                        if (tail->bound <= tau_osc) {
                            acc.add(tail->value.real(), tail->value.imag());
                            bound_osc += tail->bound;
                            ++leaves;
                            continue;
                        }
                    }
                }
            }

            double local = mass * osc_bound(lo, hi, width);
            std::int64_t mq;
            bool overflow = __builtin_add_overflow(f.q, f.Q, &mq);
            bool can_split = f.depth < max_depth && f.depth < kDepthSaturation && !overflow;
            if (local <= tau_osc || !can_split) {
                double mid = 0.5 * (lo + hi);
                std::complex<double> v = eval_mid(mid);
                acc.add(mass * v.real(), mass * v.imag());
                bound_osc += local;
                ++leaves;
                continue;
            }
            std::int64_t mp = f.p + f.P;
            stack.push_back({mp, mq, f.P, f.Q, f.depth + 1});
            stack.push_back({f.p, f.q, mp, mq, f.depth + 1});
        }
    }
};

IntegrateResult drive(Engine& eng, const QuadratureConfig& cfg) {
    if (cfg.tol <= 0) throw std::domain_error("QuadratureConfig: tol must be positive");
    if (cfg.max_depth < 0 || cfg.max_depth > 4096)
        throw std::domain_error("QuadratureConfig: max_depth out of range");
    eng.max_depth = cfg.max_depth;
    eng.series_tol = 0.25 * cfg.tol;
    // The series path pays ~(e^Theta - 1) * err_bound of table noise per
    // unit mass; below that floor only the reference rule is honest.
    if (eng.allow_series &&
        !(gtable::available() && cfg.tol >= 20.0 * gtable::error_bound()))
        eng.allow_series = false;
    double slack = (1.0 + std::fabs(eng.t)) * 5e-15;
    double tau = 0.125 * cfg.tol;
    double prev_tau = 0, prev_osc = 0;
    IntegrateResult out;
    for (int iter = 0; iter < 16; ++iter) {
        eng.reset();
        eng.tau_osc = tau;
        eng.run({0, 1, 1, 1, 0});
        double total = eng.bound_series + eng.bound_osc + eng.bound_misc + slack;
        out.value = eng.acc.total();
        out.bound = total;
        out.leaves = eng.leaves;
        out.tol_reached = total <= cfg.tol;
        if (out.tol_reached) break;
        // Only the oscillation-rule part contracts with tau; its observed
        // scaling exponent steers the next threshold.
        double headroom = cfg.tol - eng.bound_series - eng.bound_misc - slack;
        if (headroom <= 0 || tau <= 1e-300 || eng.bound_osc <= 0) break;
        double p = 0.5;
        if (prev_osc > 0 && tau != prev_tau && eng.bound_osc != prev_osc) {
            p = std::log(eng.bound_osc / prev_osc) / std::log(tau / prev_tau);
            p = std::clamp(p, 0.25, 1.0);
        }
        prev_tau = tau;
        prev_osc = eng.bound_osc;
        tau *= std::clamp(std::pow(0.5 * headroom / eng.bound_osc, 1.0 / p), 1e-4, 0.5);
    }
    return out;
}

class FunctionIntegrand final : public StieltjesIntegrand {
public:
    FunctionIntegrand(std::function<std::complex<double>(double)> f,
                      std::function<double(double, double)> o)
        : f_(std::move(f)), o_(std::move(o)) {}
    std::complex<double> eval(double x) const override { return f_(x); }
    double osc(double lo, double hi) const override { return o_(lo, hi); }

private:
    std::function<std::complex<double>(double)> f_;
    std::function<double(double, double)> o_;
};

// ---- Lebesgue-side engine: int_0^1 K(u) (?(u) - anchor) du -------------
//
// On a cylinder J = [p/q, P/Q] (depth k, env = ?(P/Q) - ?(p/q) = 2^{-k})
// the self-similarity ?(M(v)) = ?(a) + env * ?(v) with M'(v) = (gv+q)^{-2}
// gives the leaf integral of ? in closed form through G_1(s) = int d?/(v+s):
//
//   int_J ? du = ?(a) w + env [ G_1(q/g)/g^2 - 1/(gQ) ],   g = Q - q,
//
// and G_1 comes from the precomputed H_1 table. The only remaining leaf
// error is the kernel's own variation against |? - A|:
//
//   | int_J K (?-A) du - K(mid) int_J (?-A) du | <= osc_J(K) w sup_J|?-A|,
//
// which is second order in the refinement. Without table data the engine
// degrades to the first-order average-envelope rule.

struct DuEngine {
    const DuKernel* K = nullptr;
    bool anchor_one = false;
    int max_depth = 86;
    double tau = 0.0;

    Accum acc;
    double bound = 0.0;
    std::uint64_t leaves = 0;

    void reset() {
        acc = Accum{};
        bound = 0.0;
        leaves = 0;
    }

    // Closed-form leaf moments of ? (with table noise coefficients):
    //   W2 = int_0^1 ?(v) (gv+q)^{-2} dv,  W3 = int_0^1 ?(v) (gv+q)^{-3} dv,
    // so that int_J ? du = qa w + env W2 (with w = int (gv+q)^{-2} dv) and
    // int_J u ? du = qa (b^2-a^2)/2 + env [ (a/g) W2 - W3 / g ].
    struct LeafMoments {
        double W2, W3;
        double noise2, noise3;  // table error contributions
    };
    static std::optional<LeafMoments> leaf_moments(std::int64_t q, std::int64_t Q) {
        std::int64_t g = Q - q;
        if (g == 0) return std::nullopt;  // root is always split once
        double H[gtable::kMMax + 1];
        double eps = gtable::error_bound();
        LeafMoments lm;
        if (g > 0) {
            double gd = static_cast<double>(g), qd = static_cast<double>(q),
                   Qd = static_cast<double>(Q);
            double sigma = gd / qd;
            if (sigma > 64.0 || !gtable::eval_all(sigma, H)) return std::nullopt;
            // G_r(q/g) = (g/q)^r H_r(g/q)
            lm.W2 = (H[1] / qd - 1.0 / Qd) / gd;
            lm.noise2 = eps / (gd * qd);
            lm.W3 = (H[2] / (qd * qd) - 1.0 / (Qd * Qd)) / (2.0 * gd);
            lm.noise3 = eps / (2.0 * gd * qd * qd);
            return lm;
        }
        double ag = static_cast<double>(-g), Qd = static_cast<double>(Q);
        double sigma = ag / Qd;
        if (sigma > 64.0 || !gtable::eval_all(sigma, H)) return std::nullopt;
        // reflection v -> 1-v: G_1(s) = -G_1(-(1+s)), G_2(s) = +G_2(-(1+s))
        lm.W2 = (1.0 - H[1]) / (ag * Qd);
        lm.noise2 = eps / (ag * Qd);
        lm.W3 = (1.0 - H[2]) / (2.0 * ag * Qd * Qd);
        lm.noise3 = eps / (2.0 * ag * Qd * Qd);
        return lm;
    }

    void run() {
        struct Frame {
            std::int64_t p, q, P, Q;
            double qa, qb;  // exact ?(p/q), ?(P/Q)
            int depth;
        };
        std::vector<Frame> stack;
        stack.push_back({0, 1, 1, 1, 0.0, 1.0, 0});
        const double A = anchor_one ? 1.0 : 0.0;
        const bool second_order = K->has_derivative() && gtable::available();
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();

            if (f.p == 0) {
                if (auto tail = K->left_tail(f.Q)) {
                    if (tail->bound <= tau) {
                        acc.add(tail->value.real(), tail->value.imag());
                        bound += tail->bound;
                        ++leaves;
                        continue;
                    }
                }
            }
            if (f.P == 1 && f.Q == 1 && f.depth > 0) {
                if (auto tail = K->right_tail(f.q)) {
                    if (tail->bound <= tau) {
                        acc.add(tail->value.real(), tail->value.imag());
                        bound += tail->bound;
                        ++leaves;
                        continue;
                    }
                }
            }

            double a = static_cast<double>(f.p) / static_cast<double>(f.q);
            double b = static_cast<double>(f.P) / static_cast<double>(f.Q);
            double w = b - a;
            double env = f.qb - f.qa;
            double mid = 0.5 * (a + b);

            // Re-anchor the leaf at its own ?(a): the deviation |? - ?(a)|
            // is then exactly bounded by env = 2^{-depth}, which decays
            // geometrically along every path (the global anchor only does
            // so near its own endpoint). Needs the exact kernel integral
            // for the constant shift.
            double Aeff = A;
            std::complex<double> shift{};
            double sup_dev;
            if (f.qa != A) {
                if (auto Ki = K->integral(a, b); Ki && std::isfinite(std::abs(*Ki))) {
                    Aeff = f.qa;
                    shift = (f.qa - A) * *Ki;
                }
            }
            if (Aeff == f.qa)
                sup_dev = env;
            else
                sup_dev = anchor_one ? 1.0 - f.qa : f.qb;  // sup |? - A| on J

            std::complex<double> Km = K->eval(mid);
            std::complex<double> leaf_value;
            double local;
            std::optional<LeafMoments> lm = leaf_moments(f.q, f.Q);
            if (lm) {
                double I0 = (f.qa - Aeff) * w + env * lm->W2;
                // first-order candidate (exact I0, kernel frozen at mid)
                leaf_value = Km * I0 + shift;
                local = w * K->osc(a, b) * sup_dev + env * std::abs(Km) * lm->noise2 + 1e-18;
                if (second_order) {
                    double alpha = static_cast<double>(f.P - f.p);
                    double gam = static_cast<double>(f.Q - f.q);
                    double uInt = (f.qa - Aeff) * 0.5 * (b * b - a * a) +
                                  env * ((alpha / gam) * lm->W2 - lm->W3 / gam);
                    double I1 = uInt - mid * I0;
                    std::complex<double> Kd = K->deriv(mid);
                    double noise =
                        env * (std::abs(Km) * lm->noise2 +
                               std::abs(Kd) * (std::fabs(alpha / gam) * lm->noise2 +
                                               lm->noise3 / std::fabs(gam) + mid * lm->noise2));
                    double local2 =
                        0.5 * w * w * K->osc_deriv(a, b) * sup_dev + noise + 1e-18;
                    if (local2 < local) {
                        leaf_value = Km * I0 + Kd * I1 + shift;
                        local = local2;
                    }
                }
            } else {
                // no table service for this leaf: average-envelope rule
                leaf_value = Km * ((0.5 * (f.qa + f.qb) - Aeff) * w) + shift;
                local = w * (K->osc(a, b) * sup_dev + 0.5 * env * std::abs(Km)) + 1e-18;
            }

            std::int64_t mq;
            bool overflow = __builtin_add_overflow(f.q, f.Q, &mq);
            bool can_split = f.depth < max_depth && !overflow;
            if ((local <= tau && std::isfinite(local)) || !can_split) {
                acc.add(leaf_value.real(), leaf_value.imag());
                bound += local;
                ++leaves;
                continue;
            }
            std::int64_t mp = f.p + f.P;
            double qm = question_mark_i64(mp, mq);
            stack.push_back({mp, mq, f.P, f.Q, qm, f.qb, f.depth + 1});
            stack.push_back({f.p, f.q, mp, mq, f.qa, qm, f.depth + 1});
        }
    }
};

// Spine bound for power kernels: |int over band k of u^{c} (? - A) du|
// with ? <= 2^{1-k} on [1/(k+1), 1/k] (anchor 0) or 1-? = ?(1-u) mirrored
// (anchor 1); band width <= 1/(k(k+1)).
double power_spine_tail(std::int64_t Kfrom, double c) {
    double sum = 0;
    double k = static_cast<double>(Kfrom);
    for (int i = 0; i < 400; ++i, k += 1.0) {
        double umax_pow = c >= 0 ? std::pow(1.0 / k, c) : std::pow(k + 1.0, -c);
        double term = umax_pow * std::exp2(1.0 - k) / (k * (k + 1.0));
        sum += term;
        double ratio = 0.5 * std::pow((k + 2.0) / (k + 1.0), std::fabs(c));
        if (ratio < 0.75 && term < 1e-4 * sum) {
            sum += term * ratio / (1.0 - ratio);
            return sum;
        }
    }
    return std::numeric_limits<double>::infinity();
}

// Kernel u^{c} (singular at 0 for c < 0), for moment(lambda) by parts.
class PowerKernel final : public DuKernel {
public:
    explicit PowerKernel(double c) : c_(c) {}
    std::complex<double> eval(double u) const override { return {std::pow(u, c_), 0.0}; }
    double osc(double lo, double hi) const override {
        if (c_ == 0.0) return 0.0;
        if (lo <= 0.0 && c_ < 0) return std::numeric_limits<double>::infinity();
        return std::fabs(std::pow(hi, c_) - std::pow(lo, c_));
    }
    bool has_derivative() const override { return true; }
    std::complex<double> deriv(double u) const override {
        if (c_ == 0.0) return {0.0, 0.0};
        return {c_ * std::pow(u, c_ - 1.0), 0.0};
    }
    double osc_deriv(double lo, double hi) const override {
        if (c_ == 0.0 || c_ == 1.0) return 0.0;
        if (lo <= 0.0 && c_ < 1.0) return std::numeric_limits<double>::infinity();
        return std::fabs(c_) * std::fabs(std::pow(hi, c_ - 1.0) - std::pow(lo, c_ - 1.0));
    }
    std::optional<std::complex<double>> integral(double a, double b) const override {
        if (c_ == -1.0) return std::nullopt;
        double e = c_ + 1.0;
        return std::complex<double>{(std::pow(b, e) - std::pow(a, e)) / e, 0.0};
    }
    std::optional<CertifiedComplex> left_tail(std::int64_t q) const override {
        if (c_ >= 0) return std::nullopt;
        double T = power_spine_tail(q, c_);
        if (!std::isfinite(T)) return std::nullopt;
        return CertifiedComplex{{0.5 * T, 0.0}, 0.5 * T};
    }

private:
    double c_;
};

// Kernel (1-u)^{c} against (? - 1), for moment_complement by parts.
class ComplementPowerKernel final : public DuKernel {
public:
    explicit ComplementPowerKernel(double c) : c_(c) {}
    std::complex<double> eval(double u) const override { return {std::pow(1.0 - u, c_), 0.0}; }
    double osc(double lo, double hi) const override {
        if (c_ == 0.0) return 0.0;
        if (hi >= 1.0 && c_ < 0) return std::numeric_limits<double>::infinity();
        return std::fabs(std::pow(1.0 - lo, c_) - std::pow(1.0 - hi, c_));
    }
    bool has_derivative() const override { return true; }
    std::complex<double> deriv(double u) const override {
        if (c_ == 0.0) return {0.0, 0.0};
        return {-c_ * std::pow(1.0 - u, c_ - 1.0), 0.0};
    }
    double osc_deriv(double lo, double hi) const override {
        if (c_ == 0.0 || c_ == 1.0) return 0.0;
        if (hi >= 1.0 && c_ < 1.0) return std::numeric_limits<double>::infinity();
        return std::fabs(c_) *
               std::fabs(std::pow(1.0 - hi, c_ - 1.0) - std::pow(1.0 - lo, c_ - 1.0));
    }
    std::optional<std::complex<double>> integral(double a, double b) const override {
        if (c_ == -1.0) return std::nullopt;
        double e = c_ + 1.0;
        return std::complex<double>{(std::pow(1.0 - a, e) - std::pow(1.0 - b, e)) / e, 0.0};
    }
    std::optional<CertifiedComplex> right_tail(std::int64_t q) const override {
        if (c_ >= 0) return std::nullopt;
        // mirror of the left spine: 1-u in a band [1/(k+1), 1/k] and
        // |?(u)-1| = ?(1-u) <= 2^{1-k}; the integrand K*(?-1) is <= 0
        double T = power_spine_tail(q, c_);
        if (!std::isfinite(T)) return std::nullopt;
        return CertifiedComplex{{-0.5 * T, 0.0}, 0.5 * T};
    }

private:
    double c_;
};

}  // namespace

IntegrateResult integrate(const StieltjesIntegrand& g, const QuadratureConfig& cfg) {
    Engine eng;
    eng.g = &g;
    eng.kind = PhaseKind::none;
    return drive(eng, cfg);
}

IntegrateResult integrate_reference(const StieltjesIntegrand& g, const QuadratureConfig& cfg) {
    Engine eng;
    eng.g = &g;
    eng.kind = PhaseKind::none;
    eng.allow_series = false;
    return drive(eng, cfg);
}

IntegrateResult unit_exp_transform(double t, const QuadratureConfig& cfg) {
    if (t < 0) throw std::domain_error("unit_exp_transform: t must be >= 0");
    Engine eng;
    eng.kind = PhaseKind::linear;
    eng.t = t;
    return drive(eng, cfg);
}

IntegrateResult unit_exp_transform_reference(double t, const QuadratureConfig& cfg) {
    if (t < 0) throw std::domain_error("unit_exp_transform_reference: t must be >= 0");
    Engine eng;
    eng.kind = PhaseKind::linear;
    eng.t = t;
    eng.allow_series = false;
    return drive(eng, cfg);
}

IntegrateResult tail_exp_transform(double t, const QuadratureConfig& cfg) {
    if (t < 0) throw std::domain_error("tail_exp_transform: t must be >= 0");
    Engine eng;
    eng.kind = PhaseKind::reciprocal;
    eng.t = t;
    return drive(eng, cfg);
}

IntegrateResult qmark_weighted_integral(const DuKernel& K, bool anchor_one,
                                        const QuadratureConfig& cfg) {
    if (cfg.tol <= 0) throw std::domain_error("QuadratureConfig: tol must be positive");
    if (cfg.max_depth < 0 || cfg.max_depth > 4096)
        throw std::domain_error("QuadratureConfig: max_depth out of range");
    DuEngine eng;
    eng.K = &K;
    eng.anchor_one = anchor_one;
    eng.max_depth = std::min(cfg.max_depth, kDepthSaturation);
    double tau = 0.25 * cfg.tol;
    double prev_tau = 0, prev_bound = 0;
    IntegrateResult out;
    for (int iter = 0; iter < 16; ++iter) {
        eng.reset();
        eng.tau = tau;
        eng.run();
        out.value = eng.acc.total();
        out.bound = eng.bound + 1e-15;
        out.leaves = eng.leaves;
        out.tol_reached = out.bound <= cfg.tol;
        if (std::getenv("MINQ_DEBUG_QUAD"))
            std::fprintf(stderr, "du iter=%d tau=%.3g bound=%.3g leaves=%llu\n", iter, tau,
                         out.bound, static_cast<unsigned long long>(out.leaves));
        if (out.tol_reached || tau <= 1e-300) break;
        double p = 0.5;
        if (prev_bound > 0 && tau != prev_tau && eng.bound != prev_bound) {
            p = std::log(eng.bound / prev_bound) / std::log(tau / prev_tau);
            p = std::clamp(p, 0.25, 1.0);
        }
        prev_tau = tau;
        prev_bound = eng.bound;
        tau *= std::clamp(std::pow(0.5 * cfg.tol / eng.bound, 1.0 / p), 1e-4, 0.5);
    }
    return out;
}

CertifiedReal moment(double lambda, const QuadratureConfig& cfg) {
    // int x^l d? = [x^l ?]_0^1 - l int x^{l-1} ? dx = 1 - l int x^{l-1} ? dx;
    // the boundary term at 0 vanishes since ?(x) = O(2^{-1/x}).
    if (lambda == 0.0) return {1.0, 0.0};
    PowerKernel K(lambda - 1.0);
    IntegrateResult r = qmark_weighted_integral(K, false, cfg);
    return {1.0 - lambda * r.value.real(), std::fabs(lambda) * r.bound + 1e-15};
}

CertifiedReal moment_complement(double lambda, const QuadratureConfig& cfg) {
    // int (1-x)^l d? = [(1-x)^l (?-1)]_0^1 + l int (1-x)^{l-1} (?-1) dx
    //                = 1 + l int (1-x)^{l-1} (?(x)-1) dx,
    // anchored on ?-1 so the boundary term at 1 dies at every order.
    if (lambda == 0.0) return {1.0, 0.0};
    ComplementPowerKernel K(lambda - 1.0);
    IntegrateResult r = qmark_weighted_integral(K, true, cfg);
    return {1.0 + lambda * r.value.real(), std::fabs(lambda) * r.bound + 1e-15};
}

IntegrateResult tail_pushforward_integrate(const TailIntegrand& g, const QuadratureConfig& cfg) {
    FunctionIntegrand h(
        [&g](double u) { return g.eval(1.0 / u); },
        [&g](double lo, double hi) {
            double a = 1.0 / hi;
            double b = lo > 0 ? 1.0 / lo : std::numeric_limits<double>::infinity();
            return g.osc(a, b);
        });
    return integrate(h, cfg);
}

}  // namespace minq
