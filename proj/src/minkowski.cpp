#include "minq/minkowski.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace minq {

namespace {

constexpr double kDoubleSlack = 0x1p-50;  // covers dyadic->double rounding
constexpr std::uint64_t kDenomCap = std::uint64_t{1} << 53;
// ?(x) underflows double range long before this many mass bits.
constexpr std::uint64_t kMassBitCap = 1100;

}  // namespace

bool ContinuedFraction::canonical() const {
    for (auto a : digits)
        if (a == 0) return false;
    if (digits.size() >= 2 && digits.back() < 2) return false;
    return true;
}

void ContinuedFraction::normalize() {
    if (digits.size() >= 2 && digits.back() == 1) {
        digits.pop_back();
        digits.back() += 1;
    }
}

ContinuedFraction cf_encode(const Rational& x) {
    if (x < Rational{0} || x > Rational{1})
        throw std::domain_error("cf_encode: input outside [0,1]");
    ContinuedFraction cf;
    if (x.is_zero()) return cf;
    // Euclid on (den, num): quotients are the digits of [0; a_1, ...].
    BigInt n = x.den(), d = x.num();
    while (!d.is_zero()) {
        BigInt q, r;
        BigInt::divmod(n, d, q, r);
        if (!q.fits_int64())
            throw std::domain_error("cf_encode: continued fraction digit overflows 64 bits");
        cf.digits.push_back(static_cast<std::uint64_t>(q.to_int64()));
        n = std::move(d);
        d = std::move(r);
    }
    return cf;
}

Dyadic question_mark(const ContinuedFraction& cf) {
    if (!cf.canonical())
        throw std::domain_error("question_mark: digits not in canonical form");
    // 2 * sum (-1)^{i+1} 2^{-s_i} with s_i = a_1 + ... + a_i, assembled at
    // the common exponent s_n.
    std::uint64_t total = 0;
    for (auto a : cf.digits) total += a;
    BigInt num{0};
    std::uint64_t s = 0;
    bool positive = true;
    for (auto a : cf.digits) {
        s += a;
        BigInt term = BigInt::pow2(static_cast<std::size_t>(total - s + 1));
        num = positive ? num + term : num - term;
        positive = !positive;
    }
    return Dyadic{num, total};
}

Dyadic question_mark(const Rational& x) { return question_mark(cf_encode(x)); }

Dyadic question_mark_extended_exact(const Rational& x) {
    if (x < Rational{0}) throw std::domain_error("question_mark_extended: negative input");
    if (x <= Rational{1}) return question_mark(x);
    Dyadic half_image = question_mark(x / (x + Rational{1}));
    // multiply by 2
    if (half_image.exp() == 0) return Dyadic{half_image.num() * BigInt{2}, 0};
    return Dyadic{half_image.num(), half_image.exp() - 1};
}

CertifiedReal question_mark_real(double x, double tol) {
    (void)tol;  // the achieved bound is reported; see header
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("question_mark_real: input outside [0,1]");
    if (x == 0.0) return {0.0, 0.0};
    if (x == 1.0) return {1.0, 0.0};

    // The double is an exact dyadic rational; run Euclid with a denominator
    // cap so digit sums stay bounded for inputs close to irrationals.
    int e;
    double m = std::frexp(x, &e);
    std::int64_t mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    std::int64_t shift = 53 - e;  // x = mant / 2^shift
    BigInt n = BigInt::pow2(static_cast<std::size_t>(shift)), d{mant};

    ContinuedFraction cf;
    std::uint64_t q_prev = 1, q_cur = 0;  // q_{-1}, q_0
    std::uint64_t mass_bits = 0;
    while (!d.is_zero()) {
        BigInt q, r;
        BigInt::divmod(n, d, q, r);
        std::uint64_t a = q.fits_int64() ? static_cast<std::uint64_t>(q.to_int64())
                                         : kMassBitCap;
        mass_bits += a;
        if (mass_bits >= kMassBitCap) {
            cf.is_truncated = true;
            break;
        }
        cf.digits.push_back(a);
        // convergent denominators, saturating at the cap
        std::uint64_t q_next;
        if (q_cur != 0 && a > kDenomCap / q_cur)
            q_next = kDenomCap + 1;
        else
            q_next = a * q_cur + q_prev;
        q_prev = q_cur;
        q_cur = q_next;
        if (q_cur > kDenomCap) {
            cf.is_truncated = true;
            break;
        }
        n = std::move(d);
        d = std::move(r);
    }

    double bound;
    if (cf.is_truncated) {
        int mb = static_cast<int>(mass_bits > 1074 ? 1074 : mass_bits);
        bound = std::ldexp(1.0, -mb) + kDoubleSlack;
    } else {
        bound = kDoubleSlack;
    }
    if (cf.digits.empty()) return {0.0, bound};
    cf.normalize();
    ContinuedFraction exactcf{cf.digits, false};
    return {question_mark(exactcf).to_double(), bound};
}

CertifiedReal question_mark_extended(double x, double tol) {
    if (std::isinf(x) && x > 0) return {2.0, 0.0};
    if (x < 0) throw std::domain_error("question_mark_extended: negative input");
    if (x <= 1.0) return question_mark_real(x, tol);
    CertifiedReal inner = question_mark_real(1.0 / x, tol);
    // 1/x rounds to a neighbouring dyadic; absorb via the Holder modulus.
    double rounding = holder_bound(0.0, std::ldexp(1.0 / x, -52));
    return {2.0 - inner.value, inner.bound + rounding};
}

CertifiedReal question_mark_from_digits(const std::vector<std::uint64_t>& digits) {
    ContinuedFraction cf{digits, false};
    cf.normalize();
    if (!cf.canonical())
        throw std::domain_error("question_mark_from_digits: digits not canonical");
    std::uint64_t mass_bits = 0;
    for (auto a : cf.digits) mass_bits += a;
    double bound = std::ldexp(1.0, -static_cast<int>(mass_bits > 1074 ? 1074 : mass_bits)) +
                   kDoubleSlack;
    return {question_mark(cf).to_double(), bound};
}

namespace {

Rational convergent_from_digits(const std::vector<std::uint64_t>& digits) {
    BigInt p_prev{1}, p_cur{0};  // p_{-1}, p_0
    BigInt q_prev{0}, q_cur{1};
    for (auto a : digits) {
        BigInt ab{static_cast<std::int64_t>(a)};
        BigInt p_next = ab * p_cur + p_prev;
        BigInt q_next = ab * q_cur + q_prev;
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next);
    }
    return {p_cur, q_cur};
}

}  // namespace

Rational box_inverse_exact(const Dyadic& y) {
    if (y.num().is_negative() || y > Dyadic{1})
        throw std::domain_error("box_inverse_exact: input outside [0,1]");
    if (y.is_zero()) return Rational{0};
    if (y == Dyadic{1}) return Rational{1};
    // Binary runs of y = 0.b_1 b_2 ... map to digits [r_0 + 1, r_1, ...].
    std::vector<std::uint64_t> digits;
    std::uint64_t run = 0;
    bool run_bit = false;  // current run is of this bit value; start on zeros
    for (std::uint64_t i = y.exp(); i-- > 0;) {
        bool b = y.num().bit(i);
        if (b == run_bit) {
            ++run;
        } else {
            digits.push_back(run + (digits.empty() ? 1 : 0));
            run = 1;
            run_bit = b;
        }
    }
    digits.push_back(run + (digits.empty() ? 1 : 0));
    ContinuedFraction cf{std::move(digits), false};
    cf.normalize();
    return convergent_from_digits(cf.digits);
}

BoxInverseResult box_inverse(const Rational& y, double tol) {
    if (y < Rational{0} || y > Rational{1})
        throw std::domain_error("box_inverse: input outside [0,1]");
    if (tol <= 0) throw std::domain_error("box_inverse: tol must be positive");
    Dyadic yd;
    if (Dyadic::from_rational(y, yd)) {
        Rational exact = box_inverse_exact(yd);
        return {{exact.to_double(), kDoubleSlack}, exact};
    }
    // Stream binary digits of y by exact doubling, build run-length digits,
    // and stop once consecutive convergents bracket x to width tol.
    std::vector<std::uint64_t> digits;
    BigInt rem = y.num();
    const BigInt& den = y.den();
    std::uint64_t run = 0;
    bool run_bit = false;
    BigInt p_prev{1}, p_cur{0}, q_prev{0}, q_cur{1};
    auto push_digit = [&](std::uint64_t a) {
        digits.push_back(a);
        BigInt ab{static_cast<std::int64_t>(a)};
        BigInt p_next = ab * p_cur + p_prev;
        BigInt q_next = ab * q_cur + q_prev;
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next);
    };
    const std::size_t bit_cap = 1u << 20;
    for (std::size_t bits = 0; bits < bit_cap; ++bits) {
        rem = rem + rem;
        bool b = rem >= den;
        if (b) rem = rem - den;
        if (b == run_bit) {
            ++run;
        } else {
            push_digit(run + (digits.empty() ? 1 : 0));
            run = 1;
            run_bit = b;
            if (digits.size() >= 2) {
                double width = 1.0 / (q_cur.to_double() * q_prev.to_double());
                if (width <= tol) break;
            }
        }
    }
    double lo = (p_cur.to_double()) / q_cur.to_double();
    double hi = (p_cur + p_prev).to_double() / (q_cur + q_prev).to_double();
    // x lies in the cylinder between the last convergent and the next
    // mediant limit; bracket conservatively by consecutive convergents.
    double a = p_prev.to_double() / q_prev.to_double();
    double left = std::min(lo, a), right = std::max(lo, a);
    (void)hi;
    return {{0.5 * (left + right), 0.5 * (right - left) + kDoubleSlack}, std::nullopt};
}

BoxInverseResult box_inverse(double y, double tol) {
    if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("box_inverse: input outside [0,1]");
    if (y == 0.0) return {{0.0, 0.0}, Rational{0}};
    if (y == 1.0) return {{1.0, 0.0}, Rational{1}};
    int e;
    double m = std::frexp(y, &e);
    std::int64_t mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    Rational yr{BigInt{mant}, BigInt::pow2(static_cast<std::size_t>(53 - e))};
    return box_inverse(yr, tol);
}

double question_mark_i64(std::int64_t p, std::int64_t q) {
    if (p < 0 || q <= 0 || p > q) throw std::domain_error("question_mark_i64: need 0 <= p/q <= 1");
    double value = 0.0;
    std::int64_t n = q, d = p;
    std::int64_t s = 0;
    int sign = +1;
    while (d != 0) {
        std::int64_t a = n / d, r = n % d;
        s += a;
        if (s > 1074) break;
        value += sign * std::ldexp(1.0, static_cast<int>(1 - s));
        sign = -sign;
        n = d;
        d = r;
    }
    return value;
}

double holder_alpha() {
    static const double alpha = std::log(2.0) / (2.0 * std::log((std::sqrt(5.0) + 1.0) / 2.0));
    return alpha;
}

double holder_bound(double x, double y, double C) {
    double d = std::fabs(x - y);
    if (d == 0.0) return 0.0;
    return C * std::pow(d, holder_alpha());
}

}  // namespace minq
