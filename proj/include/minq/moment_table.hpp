#pragma once

/**
 * @file moment_table.hpp
 * @brief Precomputed Mobius moment functions of the d? measure.
 *
 * H_m(sigma) = int_0^1 (1 + sigma*u)^{-m} d?(u) for m = 1..9 and
 * sigma in (0, 64], stored as Chebyshev expansions on [0,1] and [1,64].
 * Every Stern-Brocot cylinder is a Mobius image of [0,1], so these nine
 * functions turn the per-cylinder integral of exp(i*t*x) (and of
 * exp(i*t/x)) into a short Taylor series with a rigorous remainder; they
 * are what makes large-t transforms tractable.
 *
 * The coefficient data is generated by tools/gen_moment_table from the
 * oscillation-bound reference quadrature and committed as
 * src/gtable_data.cpp together with a uniform error bound.
 */

namespace minq::gtable {

inline constexpr int kMMax = 9;

/// False until generated data is linked in; the quadrature engine then
/// falls back to pure oscillation bounds (slow but correct).
bool available();

/// Uniform absolute error bound of eval_all results (node quadrature plus
/// Chebyshev truncation plus evaluation rounding).
double error_bound();

/// Fills H[0..kMMax] with H_m(sigma) (H_0 = 1 exactly). Returns false when
/// sigma is outside (0, 64] or no data is linked.
bool eval_all(double sigma, double* H);

}  // namespace minq::gtable
