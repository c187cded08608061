#pragma once

/**
 * @file bigint.hpp
 * @brief Arbitrary-precision signed integers.
 *
 * Minimal growable integer used for exact continued-fraction encoding,
 * dyadic values of the question mark function, and Stern-Brocot cylinder
 * endpoints. Magnitudes are little-endian vectors of 32-bit limbs with
 * 64-bit intermediates; no trailing zero limbs are stored, and zero has
 * an empty limb vector and positive sign.
 */

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace minq {

class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);
    static BigInt from_string(std::string_view dec);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    // Number of significant bits of the magnitude (0 for zero).
    std::size_t bit_length() const;
    bool bit(std::size_t i) const;
    // Largest k with 2^k dividing the magnitude (0 for zero).
    std::size_t trailing_zero_bits() const;
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    // Truncated division (quotient rounds toward zero, remainder has the
    // sign of the dividend). Throws std::domain_error on zero divisor.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& rhs) const;
    BigInt operator%(const BigInt& rhs) const;

    BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
    BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
    BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

    BigInt operator<<(std::size_t bits) const;
    BigInt operator>>(std::size_t bits) const;

    bool operator==(const BigInt& rhs) const;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow2(std::size_t k);  // 2^k

    // Nearest double; overflows to +/-inf for huge magnitudes.
    double to_double() const;
    // Fits in int64 (including sign)?
    bool fits_int64() const;
    std::int64_t to_int64() const;  // valid only when fits_int64()

    std::string to_string() const;

private:
    // magnitude comparison / arithmetic helpers
    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void trim();

    std::vector<std::uint32_t> limbs_;  // little endian, no trailing zeros
    bool negative_ = false;
};

}  // namespace minq
