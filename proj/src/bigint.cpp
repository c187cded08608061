#include "minq/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minq {

BigInt::BigInt(std::int64_t v) {
    negative_ = v < 0;
    std::uint64_t m = negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (m) {
        limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt BigInt::from_string(std::string_view dec) {
    BigInt out;
    bool neg = false;
    std::size_t i = 0;
    if (i < dec.size() && (dec[i] == '+' || dec[i] == '-')) {
        neg = dec[i] == '-';
        ++i;
    }
    if (i == dec.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < dec.size(); ++i) {
        char c = dec[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in numeral");
        // out = out*10 + digit, in place over the limb vector
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (auto& limb : out.limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10 + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (carry) {
            out.limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
    }
    out.negative_ = neg && !out.limbs_.empty();
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigInt::bit(std::size_t i) const {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

std::size_t BigInt::trailing_zero_bits() const {
    if (limbs_.empty()) return 0;
    std::size_t i = 0;
    while (limbs_[i] == 0) ++i;
    std::uint32_t v = limbs_[i];
    std::size_t bits = i * 32;
    while (!(v & 1u)) {
        ++bits;
        v >>= 1;
    }
    return bits;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.limbs_.empty()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out;
    out.reserve(big.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
        out.push_back(static_cast<std::uint32_t>(cur & 0xffffffffu));
        carry = cur >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                           (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (cur < 0) {
            cur += (std::int64_t{1} << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(cur));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    BigInt out;
    if (negative_ == rhs.negative_) {
        out.limbs_ = add_mag(limbs_, rhs.limbs_);
        out.negative_ = negative_;
    } else {
        int c = cmp_mag(limbs_, rhs.limbs_);
        if (c == 0) return BigInt{};
        if (c > 0) {
            out.limbs_ = sub_mag(limbs_, rhs.limbs_);
            out.negative_ = negative_;
        } else {
            out.limbs_ = sub_mag(rhs.limbs_, limbs_);
            out.negative_ = rhs.negative_;
        }
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    BigInt out;
    out.limbs_ = mul_mag(limbs_, rhs.limbs_);
    out.negative_ = !out.limbs_.empty() && (negative_ != rhs.negative_);
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (c < 0) {
        q = BigInt{};
        r = a;
        return;
    }
    // Knuth-style schoolbook long division on the magnitudes, one bit at a
    // time over the dividend when the divisor is long, one limb at a time
    // when it is short. The short-divisor path covers the hot uses
    // (Euclidean digit extraction, decimal printing).
    BigInt quot, rem;
    if (b.limbs_.size() == 1) {
        std::uint64_t d = b.limbs_[0];
        quot.limbs_.assign(a.limbs_.size(), 0);
        std::uint64_t cur = 0;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            cur = (cur << 32) | a.limbs_[i];
            quot.limbs_[i] = static_cast<std::uint32_t>(cur / d);
            cur %= d;
        }
        if (cur) rem.limbs_.push_back(static_cast<std::uint32_t>(cur));
    } else {
        rem = BigInt{};
        std::size_t nbits = a.bit_length();
        quot.limbs_.assign((nbits + 31) / 32, 0);
        for (std::size_t i = nbits; i-- > 0;) {
            rem = rem << 1;
            if (a.bit(i)) {
                if (rem.limbs_.empty())
                    rem.limbs_.push_back(1);
                else
                    rem.limbs_[0] |= 1u;
            }
            if (cmp_mag(rem.limbs_, b.limbs_) >= 0) {
                rem.limbs_ = sub_mag(rem.limbs_, b.limbs_);
                quot.limbs_[i / 32] |= (1u << (i % 32));
            }
        }
    }
    quot.trim();
    rem.trim();
    quot.negative_ = !quot.limbs_.empty() && (a.negative_ != b.negative_);
    rem.negative_ = !rem.limbs_.empty() && a.negative_;
    q = std::move(quot);
    r = std::move(rem);
}

BigInt BigInt::operator/(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return r;
}

BigInt BigInt::operator<<(std::size_t bits) const {
    if (limbs_.empty() || bits == 0) return *this;
    std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
    BigInt out;
    out.negative_ = negative_;
    out.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
        out.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(v & 0xffffffffu);
        out.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    out.trim();
    return out;
}

BigInt BigInt::operator>>(std::size_t bits) const {
    if (limbs_.empty()) return *this;
    std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) return BigInt{};
    BigInt out;
    out.negative_ = negative_;
    out.limbs_.assign(limbs_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
        std::uint64_t hi = (i + limb_shift + 1 < limbs_.size())
                               ? static_cast<std::uint64_t>(limbs_[i + limb_shift + 1])
                               : 0;
        std::uint64_t v = (hi << 32) | limbs_[i + limb_shift];
        out.limbs_[i] = static_cast<std::uint32_t>((v >> bit_shift) & 0xffffffffu);
    }
    out.trim();
    return out;
}

bool BigInt::operator==(const BigInt& rhs) const {
    return negative_ == rhs.negative_ && limbs_ == rhs.limbs_;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (negative_ != rhs.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp_mag(limbs_, rhs.limbs_);
    if (negative_) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::pow2(std::size_t k) {
    BigInt out{1};
    return out << k;
}

double BigInt::to_double() const {
    if (limbs_.empty()) return 0.0;
    // Take the top 64 bits of the magnitude and scale.
    std::size_t nbits = bit_length();
    double m;
    int exp2;
    if (nbits <= 64) {
        std::uint64_t v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
        m = static_cast<double>(v);
        exp2 = 0;
    } else {
        std::size_t shift = nbits - 64;
        BigInt top = *this >> shift;
        std::uint64_t v = 0;
        for (std::size_t i = top.limbs_.size(); i-- > 0;) v = (v << 32) | top.limbs_[i];
        m = static_cast<double>(v);
        exp2 = static_cast<int>(shift);
    }
    double out = std::ldexp(m, exp2);
    return negative_ ? -out : out;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return negative_ ? mag <= (std::uint64_t{1} << 63) : mag < (std::uint64_t{1} << 63);
}

std::int64_t BigInt::to_int64() const {
    std::uint64_t mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    return negative_ ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    std::string digits;
    std::vector<std::uint32_t> work = limbs_;
    while (!work.empty()) {
        // divide the magnitude by 10^9 in place, collecting the remainder
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace minq
