#pragma once

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>

namespace skipqn {

// A real number stored as mantissa * 2^exponent with |mantissa| in [1, 2),
// or (0, 0) for zero. Normalization constants of closed networks grow like
// products of Y_i^k and leave the double range long before the algorithms
// stop being meaningful; this type keeps the exponent in an int64 instead.
class ScaledValue {
public:
    constexpr ScaledValue() noexcept = default;

    static ScaledValue from_double(double x) noexcept { return normalized(x, 0); }

    static constexpr ScaledValue one() noexcept { return ScaledValue(1.0, 0); }
    static constexpr ScaledValue zero() noexcept { return ScaledValue(); }

    constexpr double mantissa() const noexcept { return mantissa_; }
    constexpr std::int64_t exponent() const noexcept { return exponent_; }

    constexpr bool is_zero() const noexcept { return mantissa_ == 0.0; }
    constexpr bool is_negative() const noexcept { return mantissa_ < 0.0; }

    // Saturates to +-inf / 0 outside the double range.
    double to_double() const noexcept {
        if (is_zero()) return 0.0;
        if (exponent_ > std::numeric_limits<double>::max_exponent)
            return mantissa_ > 0 ? std::numeric_limits<double>::infinity()
                                 : -std::numeric_limits<double>::infinity();
        if (exponent_ < std::numeric_limits<double>::min_exponent - 60) return 0.0;
        return std::ldexp(mantissa_, static_cast<int>(exponent_));
    }

    // log2 of the magnitude; -inf for zero.
    double log2() const noexcept {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return std::log2(std::fabs(mantissa_)) + static_cast<double>(exponent_);
    }

    friend ScaledValue operator*(ScaledValue a, ScaledValue b) noexcept {
        if (a.is_zero() || b.is_zero()) return {};
        return normalized(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
    }

    friend ScaledValue operator/(ScaledValue a, ScaledValue b) noexcept {
        if (a.is_zero()) return {};
        if (b.is_zero())
            return normalized(a.mantissa_ > 0 ? std::numeric_limits<double>::infinity()
                                              : -std::numeric_limits<double>::infinity(),
                              0);
        return normalized(a.mantissa_ / b.mantissa_, a.exponent_ - b.exponent_);
    }

    friend ScaledValue operator+(ScaledValue a, ScaledValue b) noexcept {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.exponent_ < b.exponent_) std::swap(a, b);
        const std::int64_t shift = a.exponent_ - b.exponent_;
        if (shift > kMaxShift) return a;
        return normalized(a.mantissa_ + b.mantissa_ * pow2_neg(shift), a.exponent_);
    }

    friend ScaledValue operator-(ScaledValue a) noexcept {
        a.mantissa_ = -a.mantissa_;
        return a;
    }

    friend ScaledValue operator-(ScaledValue a, ScaledValue b) noexcept { return a + (-b); }

    ScaledValue& operator+=(ScaledValue other) noexcept { return *this = *this + other; }
    ScaledValue& operator*=(ScaledValue other) noexcept { return *this = *this * other; }

    friend bool operator==(ScaledValue a, ScaledValue b) noexcept {
        return a.mantissa_ == b.mantissa_ && a.exponent_ == b.exponent_;
    }

    friend std::partial_ordering operator<=>(ScaledValue a, ScaledValue b) noexcept {
        if (a.is_zero() || b.is_zero() || (a.mantissa_ > 0) != (b.mantissa_ > 0))
            return a.mantissa_ <=> b.mantissa_;
        const bool positive = a.mantissa_ > 0;
        if (a.exponent_ != b.exponent_)
            return positive ? a.exponent_ <=> b.exponent_ : b.exponent_ <=> a.exponent_;
        return a.mantissa_ <=> b.mantissa_;
    }

    // a / b as a plain double; the exponents are subtracted first so the
    // result is exact whenever it is representable.
    friend double ratio(ScaledValue a, ScaledValue b) noexcept { return (a / b).to_double(); }

    // base^k by repeated squaring.
    static ScaledValue pow(ScaledValue base, std::int64_t k) noexcept {
        ScaledValue result = one();
        while (k > 0) {
            if (k & 1) result = result * base;
            base = base * base;
            k >>= 1;
        }
        return result;
    }

private:
    static constexpr std::int64_t kMaxShift = 64;

    constexpr ScaledValue(double m, std::int64_t e) noexcept : mantissa_(m), exponent_(e) {}

    // 2^-shift for 0 <= shift <= kMaxShift, built directly from the bit pattern.
    static double pow2_neg(std::int64_t shift) noexcept {
        return std::bit_cast<double>(static_cast<std::uint64_t>(1023 - shift) << 52);
    }

    static ScaledValue normalized(double m, std::int64_t e) noexcept {
        if (m == 0.0) return {};
        constexpr std::uint64_t kExpMask = 0x7ffULL << 52;
        std::uint64_t bits = std::bit_cast<std::uint64_t>(m);
        const auto biased = static_cast<std::int64_t>((bits & kExpMask) >> 52);
        if (biased == 0 || biased == 0x7ff) {
            // subnormal, inf or nan
            if (!std::isfinite(m)) return ScaledValue(m, e);
            int fe = 0;
            const double f = std::frexp(m, &fe);
            return ScaledValue(2.0 * f, e + fe - 1);
        }
        bits = (bits & ~kExpMask) | (1023ULL << 52);
        return ScaledValue(std::bit_cast<double>(bits), e + biased - 1023);
    }

    double mantissa_ = 0.0;
    std::int64_t exponent_ = 0;
};

}  // namespace skipqn
