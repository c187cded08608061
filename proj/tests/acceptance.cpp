// Acceptance suite: one pass/fail line per criterion, with timings.
// Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "minq/bessel.hpp"
#include "minq/fourier.hpp"
#include "minq/minkowski.hpp"
#include "minq/parallel.hpp"
#include "minq/quadrature.hpp"
#include "minq/rajchman.hpp"
#include "minq/scan_io.hpp"
#include "minq/stieltjes.hpp"

using namespace minq;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    const char* label;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::vector<std::string> notes;

    explicit Criterion(const char* l) : label(l) {}
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
    void finish(double limit_seconds) {
        double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (limit_seconds > 0 && elapsed > limit_seconds) {
            ok = false;
            notes.push_back("runtime " + std::to_string(elapsed) + "s exceeds limit");
        }
        std::printf("[%s] %-58s (%.2fs)\n", ok ? "PASS" : "FAIL", label, elapsed);
        for (const auto& n : notes) std::printf("       - %s\n", n.c_str());
        if (!ok) ++failures;
    }
};

double simpson_oracle_k0() {
    // independent high-precision oracle of the exponential representation
    const double U = 22.0;
    const int n = 200000;
    long double h = static_cast<long double>(U) / n;
    auto f = [](long double u) { return std::exp(-std::cosh(u)); };
    long double acc = f(0.0L) + f(static_cast<long double>(U));
    for (int i = 1; i < n; ++i) acc += f(i * h) * ((i & 1) ? 4.0L : 2.0L);
    return static_cast<double>(acc * h / 3.0L);
}

void criterion1() {
    Criterion c("1. exact values of ?");
    c.require(question_mark(Rational(1, 2)) == Dyadic{BigInt{1}, 1}, "?(1/2) != 1/2");
    c.require(question_mark(Rational(1, 3)) == Dyadic{BigInt{1}, 2}, "?(1/3) != 1/4");
    c.require(question_mark(Rational(2, 7)) == Dyadic{BigInt{3}, 4}, "?(2/7) != 3/16");
    std::vector<std::uint64_t> twos(40, 2), ones(80, 1);
    CertifiedReal s = question_mark_from_digits(twos);
    c.require(std::fabs(s.value - 0.4) <= 1e-12, "?(sqrt2-1) not within 1e-12 of 2/5");
    CertifiedReal g = question_mark_from_digits(ones);
    c.require(std::fabs(g.value - 2.0 / 3.0) <= 1e-12, "?(golden) not within 1e-12 of 2/3");
    c.finish(1.0);
}

void criterion2() {
    Criterion c("2. functional equations exact on 1e4 rationals");
    std::mt19937_64 rng(20260808);
    std::uniform_int_distribution<std::int64_t> dq(1, 1000000);
    Dyadic one{1}, two{2};
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        std::int64_t q = dq(rng);
        std::uniform_int_distribution<std::int64_t> dp(0, q);
        Rational x{dp(rng), q};
        Dyadic qx = question_mark(x);
        if (!(qx == one - question_mark(Rational{1} - x))) {
            c.require(false, "Eq(3) failed at " + x.to_string());
            break;
        }
        Dyadic half_val = question_mark(x / (x + Rational{1}));
        if (!(qx == half_val + half_val)) {
            c.require(false, "Eq(4) failed at " + x.to_string());
            break;
        }
        if (!x.is_zero()) {
            if (!(qx + question_mark_extended_exact(x.reciprocal()) == two)) {
                c.require(false, "Eq(5) failed at " + x.to_string());
                break;
            }
        }
        ++checked;
    }
    c.note("checked " + std::to_string(checked) + " rationals, zero tolerance");
    c.finish(10.0);
}

void criterion34() {
    Criterion c3("3. transform identities on the 200-point grid");
    Criterion c4("4. sandwich inequalities at every grid point");
    QuadratureConfig cfg;
    cfg.tol = 1e-8;
    double worst13 = 0, worst14 = 0, worst1516 = 0;
    for (int i = 0; i < 200; ++i) {
        double t = 50.0 * i / 199.0;
        TransformSample closed = infinite_transform(t, cfg);
        TransformSample direct = infinite_transform_direct(t, cfg);
        double comb = closed.bound + direct.bound;

        double r13 = std::fabs(std::cos(0.5 * t) * closed.f_s - std::sin(0.5 * t) * closed.f_c);
        if (r13 - std::sqrt(2.0) * closed.bound > worst13)
            worst13 = r13 - std::sqrt(2.0) * closed.bound;
        if (r13 > std::sqrt(2.0) * closed.bound)
            c3.require(false, "Eq(13) residual " + std::to_string(r13) + " at t=" +
                                  std::to_string(t));

        double r14 = std::abs(closed.F - direct.F);
        if (r14 > comb)
            c3.require(false, "Eq(14) residual " + std::to_string(r14) + " at t=" +
                                  std::to_string(t));
        double r15 = std::fabs(closed.F_c - direct.F_c);
        double r16 = std::fabs(closed.F_s - direct.F_s);
        if (r15 > comb || r16 > comb)
            c3.require(false, "Eq(15)/(16) residual at t=" + std::to_string(t));
        worst14 = std::max(worst14, r14 - comb);
        worst1516 = std::max(worst1516, std::max(r15, r16) - comb);

        SandwichReport rep = sandwich_check(t, cfg);
        if (!rep.all_hold())
            c4.require(false, "sandwich violated at t=" + std::to_string(t));
    }
    c3.note("worst residual-minus-bound: Eq13 " + std::to_string(worst13) + ", Eq14 " +
            std::to_string(worst14) + ", Eq15/16 " + std::to_string(worst1516));
    c3.finish(120.0);
    c4.finish(0.0);
}

void criterion5() {
    Criterion c("5. Salem scan n=1..256 at 1e-6 and 1e-8");
    QuadratureConfig coarse;
    coarse.tol = 1e-6;
    QuadratureConfig fine;
    fine.tol = 1e-8;
    int threads = static_cast<int>(hardware_parallelism());
    SalemScan a = salem_scan(256, coarse, threads);
    SalemScan b = salem_scan(256, fine, threads);
    for (std::size_t i = 0; i < 256; ++i) {
        const auto& ra = a.records[i];
        const auto& rb = b.records[i];
        if (std::fabs(ra.f_s_val) > ra.bound)
            c.require(false, "f_s(2 pi n) above bound at n=" + std::to_string(ra.n));
        if (ra.bound > 1e-6)
            c.require(false, "tolerance not reached at n=" + std::to_string(ra.n));
        if (rb.bound > 1e-8)
            c.require(false, "fine tolerance not reached at n=" + std::to_string(rb.n));
        if (std::fabs(ra.d_n - rb.d_n) > ra.bound + rb.bound)
            c.require(false, "scan tolerances disagree at n=" + std::to_string(ra.n));
    }
    c.note("sup|d_n| over n>=128: " + std::to_string(a.sup_tail[127]));
    c.finish(600.0);
}

void criterion6() {
    Criterion c("6. Bessel: oracle, printed bound, Eq(26), Eq(27)");
    // (a) K_0(1) against the independent Simpson oracle
    BesselPoint k0 = k_imag(1.0, 0.0, 1e-13);
    double oracle = simpson_oracle_k0();
    c.require(std::fabs(k0.value - oracle) <= 1e-10, "K_0(1) differs from oracle by " +
                                                         std::to_string(k0.value - oracle));
    // (b) the uniform inequality exactly as printed, over the sweep grid.
    int violations = 0;
    bool scaled_ok = true;
    for (double x : {0.1, 0.5, 1.0, 4.0, 16.0, 50.0}) {
        for (double tau : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
            UniformBoundReport rep = uniform_bound_check(x, tau);
            if (!rep.holds) ++violations;
            if (rep.value > std::sqrt(M_PI) * rep.rhs + 1e-12) scaled_ok = false;
        }
    }
    if (violations) {
        c.require(false,
                  "printed uniform bound fails at " + std::to_string(violations) +
                      "/42 grid points (worst ratio 1.39; values agree across the "
                      "exponential, series and Fourier-cosine routes, so the printed "
                      "inequality itself lacks a constant; a sqrt(pi) factor repairs it: " +
                      std::string(scaled_ok ? "scaled form holds everywhere" : "scaled form "
                                                                               "also fails"));
    }
    // (c) Fourier-cosine representation agreement on its restricted domain
    for (auto [x, tau] : {std::pair{1.0, 0.0}, {2.0, 1.0}, {0.5, 2.0}, {4.0, 6.0}}) {
        BesselPoint direct = k_imag(x, tau, 1e-12);
        BesselPoint fourier = k_imag_fourier(x, tau, 1e-8);
        if (!fourier.converged || std::fabs(direct.value - fourier.value) > 1e-6)
            c.require(false, "Eq(26) disagreement at x=" + std::to_string(x) +
                                 " tau=" + std::to_string(tau));
    }
    // (d) index integral on the 3x3x3 grid, including the lambda = 0 form
    for (double x : {0.5, 1.0, 2.0}) {
        for (double t : {0.5, 1.0, 3.0}) {
            for (double lambda : {0.0, 0.5, 1.2}) {
                IndexIntegralSample s = index_integral(x, t, lambda, 1e-7);
                double resid = std::abs(s.lhs - s.rhs);
                if (resid > 1e-6)
                    c.require(false, "Eq(27) residual " + std::to_string(resid) + " at x=" +
                                         std::to_string(x) + " t=" + std::to_string(t) +
                                         " lambda=" + std::to_string(lambda));
                if (lambda == 0.0) {
                    std::complex<double> closed{0.0,
                                                t * x * std::exp(-x * std::sqrt(1.0 + t * t))};
                    if (std::abs(s.rhs - closed) > 1e-13)
                        c.require(false, "lambda=0 closed form mismatch");
                }
            }
        }
    }
    c.finish(120.0);
}

void criterion7() {
    Criterion c("7. Rajchman machinery with phi = e^{-x}");
    MeasureFunction ex = measure_exp();
    for (double t : {0.25, 1.0, 4.0, 17.0, 50.0}) {
        CertifiedReal pc = phi_cos_transform(ex, t, 1e-9);
        CertifiedReal ps = phi_sin_transform(ex, t, 1e-9);
        if (std::fabs(pc.value + 1.0 / (1.0 + t * t)) > 1e-8)
            c.require(false, "Phi_c off closed form at t=" + std::to_string(t));
        if (std::fabs(ps.value + t / (1.0 + t * t)) > 1e-8)
            c.require(false, "Phi_s off closed form at t=" + std::to_string(t));
    }
    CertifiedReal fj = fejer_value(1e-6);
    c.require(std::fabs(fj.value - 1.0) <= 1e-6, "Fejer value off by more than 1e-6");
    for (double x : {1.0, 0.1, 0.01}) {
        CertifiedReal r = averaged_identity_residual(ex, x, 1e-7);
        if (r.value > r.bound)
            c.require(false, "averaged identity residual above bound at x=" +
                                 std::to_string(x));
    }
    auto recs = corollary1_scan(ex, {0.5, 2.0, 10.0, 50.0}, 1e-8);
    for (const auto& r : recs) {
        double t = r.t;
        if (std::fabs(r.sin_functional - t * t / (1.0 + t * t)) > 1e-6 ||
            std::fabs(r.cos_functional - t / (1.0 + t * t)) > 1e-6)
            c.require(false, "Corollary-1 functional off at t=" + std::to_string(t));
    }
    c.finish(60.0);
}

void criterion8() {
    Criterion c("8. Theorem-3 checker slope for psi = x(1-x)");
    std::vector<double> grid;
    for (double t = 100.0; t <= 10000.0; t *= 1.0324) grid.push_back(t);
    Theorem3Report rep = theorem3_condition_check(
        "x(1-x)", [](double x) { return x * (1.0 - x); }, grid, 1e-10);
    c.require(rep.hypotheses_ok, "hypotheses violated");
    c.require(rep.slopes_valid, "not enough windows for the slope fit");
    c.require(std::fabs(rep.psi_capital_slope + 1.0) <= 0.1,
              "Psi decay slope " + std::to_string(rep.psi_capital_slope) +
                  " not within -1 +/- 0.1");
    c.finish(60.0);
}

void criterion9() {
    Criterion c("9. byte-identical salem-scan across parallelism");
#ifdef MINQ_CLI_PATH
    std::string cli = MINQ_CLI_PATH;
    std::string out1 = "/tmp/minq_accept_scan_p1.csv";
    std::string out8 = "/tmp/minq_accept_scan_p8.csv";
    std::string cmd1 = cli + " salem-scan --nmax 64 --out " + out1 + " --parallelism 1 > /dev/null";
    std::string cmd8 = cli + " salem-scan --nmax 64 --out " + out8 + " --parallelism 8 > /dev/null";
    c.require(std::system(cmd1.c_str()) == 0, "parallelism-1 run failed");
    c.require(std::system(cmd8.c_str()) == 0, "parallelism-8 run failed");
    std::string cmp = "cmp -s " + out1 + " " + out8;
    c.require(std::system(cmp.c_str()) == 0, "CSV outputs differ between parallelism 1 and 8");
#else
    c.require(false, "CLI path not configured");
#endif
    c.finish(0.0);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n================\n");
    criterion1();
    criterion2();
    criterion34();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("================\n%d criterion(s) failed\n", failures);
    return failures;
}
