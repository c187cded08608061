#include "doctest.h"

#include <cmath>
#include <complex>

#include "minq/fourier.hpp"
#include "minq/stieltjes.hpp"

using namespace minq;

namespace {
QuadratureConfig cfg_at(double tol) {
    QuadratureConfig cfg;
    cfg.tol = tol;
    return cfg;
}
}  // namespace

TEST_CASE("transform at t = 0 is the total mass") {
    TransformSample s = finite_transform(0.0, cfg_at(1e-10));
    CHECK(std::fabs(s.f_c - 1.0) <= s.bound);
    CHECK(std::fabs(s.f_s) <= s.bound);
    CHECK(std::fabs(s.F.real() - 2.0) <= s.bound);
    CHECK(std::fabs(s.F_c - 2.0) <= s.bound);
    CHECK(std::fabs(s.F_s) <= s.bound);
}

TEST_CASE("f_s vanishes at 2 pi n") {
    for (std::uint64_t n : {1, 2, 7}) {
        TransformSample s = finite_transform(2.0 * M_PI * static_cast<double>(n), cfg_at(1e-9));
        CAPTURE(n);
        CHECK(std::fabs(s.f_s) <= s.bound);
    }
}

TEST_CASE("e^{-it/2} f(t) is real within bound") {
    for (double t : {M_PI, 1.7, 11.3}) {
        TransformSample s = finite_transform(t, cfg_at(1e-9));
        std::complex<double> rotated = std::polar(1.0, -0.5 * t) * s.f;
        CAPTURE(t);
        CHECK(std::fabs(rotated.imag()) <= s.bound);
    }
}

TEST_CASE("conjugate symmetry f(-t) = conj f(t)") {
    for (double t : {0.9, 2.0 * M_PI, 25.0}) {
        TransformSample plus = finite_transform(t, cfg_at(1e-9));
        TransformSample minus = finite_transform(-t, cfg_at(1e-9));
        CHECK(std::abs(minus.f - std::conj(plus.f)) <= plus.bound + minus.bound);
    }
}

TEST_CASE("closed-form F agrees with the direct pushforward route") {
    for (double t : {0.0, 1.0, M_PI, 7.7, 23.0, 40.0}) {
        TransformSample closed = infinite_transform(t, cfg_at(1e-9));
        TransformSample direct = infinite_transform_direct(t, cfg_at(1e-9));
        CAPTURE(t);
        CHECK(std::abs(closed.F - direct.F) <= closed.bound + direct.bound);
        CHECK(std::fabs(closed.F_c - direct.F_c) <= closed.bound + direct.bound);
        CHECK(std::fabs(closed.F_s - direct.F_s) <= closed.bound + direct.bound);
    }
}

TEST_CASE("F(pi) = (2/3) f(pi) against the direct route") {
    TransformSample direct = infinite_transform_direct(M_PI, cfg_at(1e-10));
    std::complex<double> expect = direct.f * (2.0 / 3.0);
    CHECK(std::abs(direct.F - expect) <= 2.0 * direct.bound);
}

TEST_CASE("at t = 2 pi n the tail equals the unit part in cosine and kills the sine") {
    // Eq (15)/(16) specialisations, via the tail pushforward route
    for (std::uint64_t n : {1, 3}) {
        double t = 2.0 * M_PI * static_cast<double>(n);
        QuadratureConfig cfg = cfg_at(1e-9);
        TransformSample s = finite_transform(t, cfg);
        CertifiedReal tail_cos = tail_component(RootBranch::cos, t, cfg);
        CertifiedReal tail_sin = tail_component(RootBranch::sin, t, cfg);
        CAPTURE(n);
        CHECK(std::fabs(tail_cos.value - s.f_c) <= tail_cos.bound + s.bound);
        CHECK(std::fabs(tail_sin.value) <= tail_sin.bound);
    }
}

TEST_CASE("salem coefficient d_1 regression-locked against the reference rule") {
    SalemRecord r = salem_coefficient(1, cfg_at(1e-9));
    IntegrateResult oracle = unit_exp_transform_reference(2.0 * M_PI, cfg_at(2e-6));
    CHECK(oracle.tol_reached);
    CHECK(std::fabs(r.d_n - oracle.value.real()) <= r.bound + oracle.bound);
    CHECK(std::fabs(r.d_n) <= 1.0);
    CHECK(std::fabs(r.f_s_val) <= r.bound);
}

TEST_CASE("salem scan consistency") {
    QuadratureConfig cfg = cfg_at(1e-7);
    SalemScan scan = salem_scan(8, cfg, 2);
    REQUIRE(scan.records.size() == 8);
    SalemRecord single = salem_coefficient(1, cfg);
    CHECK(scan.records[0].d_n == single.d_n);  // same deterministic path
    for (std::size_t i = 0; i < scan.records.size(); ++i) {
        const auto& r = scan.records[i];
        CHECK(r.n == i + 1);
        CHECK(std::fabs(r.d_n) <= 1.0);
        CHECK(std::fabs(r.f_s_val) <= r.bound);
        CHECK(scan.sup_tail[i] >= std::fabs(r.d_n));
        if (i + 1 < scan.records.size()) CHECK(scan.sup_tail[i] >= scan.sup_tail[i + 1]);
    }
    // self-consistency between tolerances
    SalemScan finer = salem_scan(8, cfg_at(1e-8), 1);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(std::fabs(scan.records[i].d_n - finer.records[i].d_n) <=
              scan.records[i].bound + finer.records[i].bound);
    }
}

TEST_CASE("scan is schedule independent") {
    QuadratureConfig cfg = cfg_at(1e-6);
    SalemScan a = salem_scan(6, cfg, 1);
    SalemScan b = salem_scan(6, cfg, 4);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(a.records[i].d_n == b.records[i].d_n);
        CHECK(a.records[i].f_s_val == b.records[i].f_s_val);
        CHECK(a.records[i].bound == b.records[i].bound);
    }
}

TEST_CASE("phase identity residual") {
    CertifiedReal r0 = phase_identity_residual(0.0, cfg_at(1e-10));
    CHECK(r0.value == 0.0);
    for (double t : {2.0 * M_PI, 1.7, 9.4}) {
        CertifiedReal r = phase_identity_residual(t, cfg_at(1e-9));
        CAPTURE(t);
        CHECK(r.value <= r.bound);
    }
}

TEST_CASE("tail roots: closed forms and vanishing tails") {
    auto cos_roots = tail_roots(RootBranch::cos, 4);
    REQUIRE(cos_roots.size() == 4);
    double t1 = 2.0 * std::asin(1.0 / (2.0 * std::sqrt(2.0)));
    CHECK(std::fabs(cos_roots[0] - t1) <= 1e-11);
    CHECK(std::fabs(cos_roots[1] - (2.0 * M_PI - t1)) <= 1e-11);

    auto sin_roots = tail_roots(RootBranch::sin, 3);
    double s1 = 2.0 * std::asin(std::sqrt(5.0 / 8.0));
    CHECK(std::fabs(sin_roots[0] - s1) <= 1e-11);

    for (double r : {cos_roots[0], cos_roots[1]}) {
        CertifiedReal tail = tail_component(RootBranch::cos, r, cfg_at(1e-9));
        CHECK(std::fabs(tail.value) <= tail.bound + 1e-11);
    }
    CertifiedReal tail_s = tail_component(RootBranch::sin, sin_roots[0], cfg_at(1e-9));
    CHECK(std::fabs(tail_s.value) <= tail_s.bound + 1e-11);
}

TEST_CASE("sandwich inequalities hold at the anchors and on a grid") {
    SandwichReport zero = sandwich_check(0.0, cfg_at(1e-10));
    CHECK(zero.all_hold());
    SandwichReport pi = sandwich_check(M_PI, cfg_at(1e-9));
    CHECK(pi.all_hold());
    for (int i = 1; i <= 24; ++i) {
        double t = 37.0 * i / 24.0;
        SandwichReport rep = sandwich_check(t, cfg_at(1e-8));
        CAPTURE(t);
        CHECK(rep.all_hold());
    }
}

TEST_CASE("derivative transform anchors") {
    // k = 0 reduces to the plain transform
    for (double t : {0.7, 5.0}) {
        CertifiedComplex d0 = derivative_transform(0, t, cfg_at(1e-10));
        TransformSample s = finite_transform(t, cfg_at(1e-10));
        CHECK(std::abs(d0.value - s.f) <= d0.bound + s.bound);
    }
    // k = 1 at t = 0: i * moment(1) = i/2
    CertifiedComplex d1 = derivative_transform(1, 0.0, cfg_at(1e-11));
    CHECK(std::fabs(d1.value.real()) <= d1.bound);
    CHECK(std::fabs(d1.value.imag() - 0.5) <= d1.bound);
    // |f^(k)| <= 1
    for (int k : {1, 2, 3, 8}) {
        CertifiedComplex dk = derivative_transform(k, 3.3, cfg_at(1e-9));
        CAPTURE(k);
        CHECK(std::abs(dk.value) <= 1.0 + dk.bound);
    }
    CHECK_THROWS_AS(derivative_transform(9, 1.0, cfg_at(1e-8)), std::domain_error);
}

TEST_CASE("derivative transform matches central differences at the expected order") {
    QuadratureConfig tight = cfg_at(2e-11);
    for (double t : {1.3, 4.0}) {
        CertifiedComplex d1 = derivative_transform(1, t, tight);
        CertifiedComplex d2 = derivative_transform(2, t, tight);
        double prev_err1 = 0, prev_err2 = 0;
        int step = 0;
        for (double h : {1e-2, 1e-3}) {
            TransformSample up = finite_transform(t + h, tight);
            TransformSample dn = finite_transform(t - h, tight);
            TransformSample mid = finite_transform(t, tight);
            std::complex<double> fd1 = (up.f - dn.f) / (2.0 * h);
            std::complex<double> fd2 = (up.f - 2.0 * mid.f + dn.f) / (h * h);
            double err1 = std::abs(fd1 - d1.value);
            double err2 = std::abs(fd2 - d2.value);
            double quad_noise = (up.bound + dn.bound + mid.bound) / (h * h);
            CAPTURE(t);
            CAPTURE(h);
            // third derivative is bounded by 1, so the fd error is <= h^2/6
            CHECK(err1 <= h * h / 6.0 + d1.bound + quad_noise);
            CHECK(err2 <= h * h / 12.0 + d2.bound + quad_noise * 4.0);
            if (step == 1) {
                // second-order convergence: two decades of h^2, with slack
                CHECK(err1 <= prev_err1 / 25.0 + d1.bound + quad_noise);
                CHECK(err2 <= prev_err2 / 25.0 + d2.bound + quad_noise * 4.0);
            }
            prev_err1 = err1;
            prev_err2 = err2;
            ++step;
        }
    }
}
