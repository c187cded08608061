#include "minq/moment_table.hpp"

#include <cmath>

namespace minq::gtable {

// Generated by tools/gen_moment_table; see gtable_data.cpp.
namespace data {
extern const bool has_data;
extern const double err_bound;
extern const int n_low;    // coefficients per m on sigma in [0,1]
extern const int n_high;   // coefficients per m on log sigma in [0, log 64]
extern const double low[];   // [m-1][n_low], m = 1..kMMax
extern const double high[];  // [m-1][n_high]
}  // namespace data

bool available() { return data::has_data; }

double error_bound() { return data::err_bound; }

namespace {

double clenshaw(const double* c, int n, double z) {
    double b1 = 0, b2 = 0;
    for (int j = n - 1; j >= 1; --j) {
        double b0 = 2 * z * b1 - b2 + c[j];
        b2 = b1;
        b1 = b0;
    }
    return z * b1 - b2 + c[0];
}

}  // namespace

bool eval_all(double sigma, double* H) {
    if (!data::has_data || !(sigma > 0.0) || sigma > 64.0) return false;
    H[0] = 1.0;
    if (sigma <= 1.0) {
        double z = 2.0 * sigma - 1.0;
        for (int m = 1; m <= kMMax; ++m)
            H[m] = clenshaw(&data::low[(m - 1) * data::n_low], data::n_low, z);
    } else {
        static const double inv_log64 = 1.0 / std::log(64.0);
        double z = 2.0 * std::log(sigma) * inv_log64 - 1.0;
        for (int m = 1; m <= kMMax; ++m)
            H[m] = clenshaw(&data::high[(m - 1) * data::n_high], data::n_high, z);
    }
    return true;
}

}  // namespace minq::gtable
