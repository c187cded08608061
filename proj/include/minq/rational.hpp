#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals and dyadic rationals over BigInt.
 *
 * Rational is always reduced with a positive denominator. Dyadic stores
 * value = num / 2^exp with num odd (or zero) whenever exp > 0, so the
 * question mark function's exact values have one canonical encoding.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "minq/bigint.hpp"

namespace minq {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }
    Rational(std::int64_t n) : num_(n), den_(1) {}

    // Parses "p/q" or a bare integer.
    static Rational parse(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt{1}; }

    Rational operator+(const Rational& r) const { return {num_ * r.den_ + r.num_ * den_, den_ * r.den_}; }
    Rational operator-(const Rational& r) const { return {num_ * r.den_ - r.num_ * den_, den_ * r.den_}; }
    Rational operator*(const Rational& r) const { return {num_ * r.num_, den_ * r.den_}; }
    Rational operator/(const Rational& r) const {
        if (r.is_zero()) throw std::domain_error("Rational: division by zero");
        return {num_ * r.den_, den_ * r.num_};
    }
    Rational operator-() const { return with_raw(-num_, den_); }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return {den_, num_};
    }

    bool operator==(const Rational& r) const { return num_ == r.num_ && den_ == r.den_; }
    std::strong_ordering operator<=>(const Rational& r) const {
        return (num_ * r.den_) <=> (r.num_ * den_);
    }

    // Mediant (p+p')/(q+q'); the Stern-Brocot child splitter. Not reduced
    // by construction, but mediants of unimodular neighbours are coprime.
    static Rational mediant(const Rational& a, const Rational& b) {
        return with_raw(a.num_ + b.num_, a.den_ + b.den_);
    }

    double to_double() const;
    std::string to_string() const;

private:
    static Rational with_raw(BigInt n, BigInt d) {
        Rational r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }
    void normalize();

    BigInt num_, den_;
};

class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(BigInt num, std::uint64_t exp) : num_(std::move(num)), exp_(exp) { normalize(); }
    Dyadic(std::int64_t v) : num_(v), exp_(0) {}

    const BigInt& num() const { return num_; }
    std::uint64_t exp() const { return exp_; }
    bool is_zero() const { return num_.is_zero(); }

    Dyadic operator+(const Dyadic& r) const;
    Dyadic operator-(const Dyadic& r) const;
    Dyadic operator*(const Dyadic& r) const { return {num_ * r.num_, exp_ + r.exp_}; }
    Dyadic operator-() const { return {-num_, exp_}; }

    bool operator==(const Dyadic& r) const { return num_ == r.num_ && exp_ == r.exp_; }
    std::strong_ordering operator<=>(const Dyadic& r) const;

    Rational to_rational() const { return {num_, BigInt::pow2(exp_)}; }
    // Exact when the rational's denominator is a power of two.
    static bool from_rational(const Rational& r, Dyadic& out);

    double to_double() const;
    std::string to_string() const;  // "p/2^k" rendered as a plain fraction

private:
    void normalize();

    BigInt num_;
    std::uint64_t exp_;
};

}  // namespace minq
