#include "minq/oscillatory.hpp"

#include <cmath>
#include <vector>

#include "minq/quadrature.hpp"

namespace minq {

namespace {

// Trigonometric moments M_k = int_{-1}^{1} xi^k e^{i theta xi} d xi.
void moments(double theta, std::complex<double>& M0, std::complex<double>& M1,
             std::complex<double>& M2) {
    double t2 = theta * theta;
    if (std::fabs(theta) < 1e-3) {
        M0 = {2.0 * (1.0 - t2 / 6.0 + t2 * t2 / 120.0), 0.0};
        M1 = {0.0, 2.0 * theta * (1.0 / 3.0 - t2 / 30.0 + t2 * t2 / 840.0)};
        M2 = {2.0 * (1.0 / 3.0 - t2 / 10.0 + t2 * t2 / 168.0), 0.0};
        return;
    }
    double s = std::sin(theta), c = std::cos(theta);
    M0 = {2.0 * s / theta, 0.0};
    M1 = {0.0, 2.0 * (s - theta * c) / t2};
    M2 = {2.0 * ((t2 - 2.0) * s + 2.0 * theta * c) / (t2 * theta), 0.0};
}

std::complex<double> filon_pass(const std::function<double(double)>& g, double a, double b,
                                double omega, int panels, std::size_t& evals) {
    std::complex<double> acc{};
    double h = (b - a) / (2.0 * panels);
    double theta = omega * h;
    std::complex<double> M0, M1, M2;
    moments(theta, M0, M1, M2);
    double g_right = g(a);
    ++evals;
    for (int p = 0; p < panels; ++p) {
        double u0 = a + 2.0 * p * h;
        double u1 = u0 + h, u2 = u0 + 2.0 * h;
        double g0 = g_right, g1 = g(u1), g2 = g(u2);
        evals += 2;
        g_right = g2;
        double c1 = 0.5 * (g2 - g0), c2 = 0.5 * (g2 - 2.0 * g1 + g0);
        std::complex<double> panel_val = g1 * M0 + c1 * M1 + c2 * M2;
        acc += std::polar(1.0, omega * u1) * panel_val;
    }
    return acc * h;
}

}  // namespace

FilonResult filon_exp(const std::function<double(double)>& g, double a, double b, double omega,
                      int panels) {
    if (panels < 1) panels = 1;
    FilonResult out;
    std::complex<double> coarse = filon_pass(g, a, b, omega, std::max(1, panels / 2), out.evals);
    std::complex<double> fine = filon_pass(g, a, b, omega, panels, out.evals);
    out.value = fine;
    out.est_error = std::abs(fine - coarse);
    return out;
}

AveragedTail averaged_panel_tail(const std::function<double(double)>& f, double a, double panel,
                                 int max_panels, double tol) {
    AveragedTail out;
    std::vector<double> sums;
    sums.reserve(64);
    double acc = 0;
    double left = a;
    double prev_diag = 0;
    for (int j = 0; j < max_panels; ++j) {
        QuadResult piece = integrate_gk(f, left, left + panel, tol * 0.05, 600);
        left += panel;
        acc += piece.value;
        sums.push_back(acc);
        out.terms = j + 1;
        if (sums.size() < 4) continue;
        // iterated averaging of the last up-to-24 partial sums
        std::size_t m = std::min<std::size_t>(sums.size(), 24);
        std::vector<double> row(sums.end() - static_cast<std::ptrdiff_t>(m), sums.end());
        while (row.size() > 1) {
            for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
            row.pop_back();
        }
        double diag = row[0];
        double delta = std::fabs(diag - prev_diag);
        prev_diag = diag;
        if (sums.size() > 6 && delta <= tol * 0.5) {
            out.value = diag;
            out.est_error = delta + tol * 0.5;
            out.converged = true;
            return out;
        }
    }
    out.value = prev_diag;
    out.est_error = std::fabs(prev_diag - sums.back()) + tol;
    out.converged = false;
    return out;
}

}  // namespace minq
