#include "minq/rational.hpp"

#include <cmath>

namespace minq {

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt{1};
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt{1}) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return {BigInt::from_string(s), BigInt{1}};
    return {BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1))};
}

double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    // Align both operands so the division happens on ~64-bit mantissas.
    std::size_t nb = num_.bit_length(), db = den_.bit_length();
    std::int64_t shift_n = static_cast<std::int64_t>(nb) - 63;
    std::int64_t shift_d = static_cast<std::int64_t>(db) - 63;
    BigInt n = shift_n > 0 ? (num_ >> static_cast<std::size_t>(shift_n)) : num_;
    BigInt d = shift_d > 0 ? (den_ >> static_cast<std::size_t>(shift_d)) : den_;
    double q = n.to_double() / d.to_double();
    std::int64_t e = (shift_n > 0 ? shift_n : 0) - (shift_d > 0 ? shift_d : 0);
    return std::ldexp(q, static_cast<int>(e));
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

void Dyadic::normalize() {
    if (num_.is_zero()) {
        exp_ = 0;
        return;
    }
    std::size_t tz = num_.trailing_zero_bits();
    std::size_t drop = tz < exp_ ? tz : exp_;
    if (drop) {
        num_ = num_ >> drop;
        exp_ -= drop;
    }
}

Dyadic Dyadic::operator+(const Dyadic& r) const {
    std::uint64_t e = exp_ > r.exp_ ? exp_ : r.exp_;
    BigInt a = num_ << static_cast<std::size_t>(e - exp_);
    BigInt b = r.num_ << static_cast<std::size_t>(e - r.exp_);
    return {a + b, e};
}

Dyadic Dyadic::operator-(const Dyadic& r) const { return *this + (-r); }

std::strong_ordering Dyadic::operator<=>(const Dyadic& r) const {
    std::uint64_t e = exp_ > r.exp_ ? exp_ : r.exp_;
    BigInt a = num_ << static_cast<std::size_t>(e - exp_);
    BigInt b = r.num_ << static_cast<std::size_t>(e - r.exp_);
    return a <=> b;
}

bool Dyadic::from_rational(const Rational& r, Dyadic& out) {
    // Reduced denominator must be a power of two.
    const BigInt& d = r.den();
    std::size_t tz = d.trailing_zero_bits();
    if ((d >> tz) != BigInt{1}) return false;
    out = Dyadic{r.num(), tz};
    return true;
}

double Dyadic::to_double() const {
    if (num_.is_zero()) return 0.0;
    std::size_t nb = num_.bit_length();
    if (nb > 64) {
        std::size_t shift = nb - 64;
        double m = (num_ >> shift).to_double();
        return std::ldexp(m, static_cast<int>(shift) - static_cast<int>(exp_));
    }
    return std::ldexp(num_.to_double(), -static_cast<int>(exp_));
}

std::string Dyadic::to_string() const { return to_rational().to_string(); }

}  // namespace minq
