#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "scalar.hpp"

namespace hepta {

/*
 * Double-precision mantissa with a 64-bit binary exponent.
 *
 * value = mantissa * 2^exponent, mantissa == 0 or 1 <= |mantissa| < 2.
 *
 * Rounding happens on the mantissa exactly as in IEEE double arithmetic; the
 * exponent never overflows for any realistic sequence length, which is what
 * the geometrically growing recurrence terms need.
 */
class ExtendedFloat {
public:
    constexpr ExtendedFloat() = default;

    ExtendedFloat(double v) {  // NOLINT(implicit)
        if (!std::isfinite(v)) throw std::domain_error("ExtendedFloat requires a finite value");
        *this = make(v, 0);
    }

    /// Build from an explicit (mantissa, exponent) pair; the pair is renormalized.
    static ExtendedFloat from_parts(double mantissa, std::int64_t exponent) { return make(mantissa, exponent); }

    double mantissa() const noexcept { return m_; }
    std::int64_t exponent() const noexcept { return e_; }
    bool is_zero() const noexcept { return m_ == 0.0; }

    /// Nearest double; saturates to +-inf / 0 outside the double range.
    double to_double() const noexcept {
        if (m_ == 0.0) return 0.0;
        if (e_ > 2048) return std::copysign(std::numeric_limits<double>::infinity(), m_);
        if (e_ < -2200) return std::copysign(0.0, m_);
        return std::ldexp(m_, static_cast<int>(e_));
    }

    /// Decimal scientific notation with 17 significant digits, valid far
    /// outside the double range.
    std::string to_string() const {
        if (m_ == 0.0) return "0";
        if (e_ > -1000 && e_ < 1000) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", to_double());
            return buf;
        }
        // |v| = |m| * 2^e = 10^(log10|m| + e*log10(2))
        const long double l10 = std::log10(static_cast<long double>(std::fabs(m_))) +
                                static_cast<long double>(e_) * 0.30102999566398119521373889472449302676818988L;
        long double ip = std::floor(l10);
        long double frac = std::pow(10.0L, l10 - ip);
        if (frac >= 10.0L) { frac /= 10.0L; ip += 1.0L; }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%.16Lfe%+lld", m_ < 0 ? "-" : "", frac, static_cast<long long>(ip));
        return buf;
    }

    friend ExtendedFloat operator*(const ExtendedFloat& a, const ExtendedFloat& b) {
        return make(a.m_ * b.m_, a.e_ + b.e_);
    }
    friend ExtendedFloat operator/(const ExtendedFloat& a, const ExtendedFloat& b) {
        if (b.m_ == 0.0) throw DivisionByZero();
        return make(a.m_ / b.m_, a.e_ - b.e_);
    }
    friend ExtendedFloat operator+(const ExtendedFloat& a, const ExtendedFloat& b) {
        if (a.m_ == 0.0) return b;
        if (b.m_ == 0.0) return a;
        const ExtendedFloat& hi = a.e_ >= b.e_ ? a : b;
        const ExtendedFloat& lo = a.e_ >= b.e_ ? b : a;
        const std::int64_t shift = hi.e_ - lo.e_;
        // Beyond 60 bits the smaller operand is below half an ulp of the larger.
        if (shift > 60) return hi;
        return make(hi.m_ + std::ldexp(lo.m_, -static_cast<int>(shift)), hi.e_);
    }
    friend ExtendedFloat operator-(const ExtendedFloat& a) {
        ExtendedFloat r = a;
        r.m_ = -r.m_;
        return r;
    }
    friend ExtendedFloat operator-(const ExtendedFloat& a, const ExtendedFloat& b) { return a + (-b); }

    ExtendedFloat& operator+=(const ExtendedFloat& o) { return *this = *this + o; }
    ExtendedFloat& operator-=(const ExtendedFloat& o) { return *this = *this - o; }
    ExtendedFloat& operator*=(const ExtendedFloat& o) { return *this = *this * o; }
    ExtendedFloat& operator/=(const ExtendedFloat& o) { return *this = *this / o; }

    friend bool operator==(const ExtendedFloat& a, const ExtendedFloat& b) noexcept {
        return a.m_ == b.m_ && a.e_ == b.e_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExtendedFloat& v) { return os << v.to_string(); }

private:
    static ExtendedFloat make(double m, std::int64_t e) {
        ExtendedFloat r;
        if (m == 0.0) return r;
        int k = 0;
        const double fm = std::frexp(m, &k);  // 0.5 <= |fm| < 1
        r.m_ = fm * 2.0;
        r.e_ = e + k - 1;
        return r;
    }

    double m_ = 0.0;
    std::int64_t e_ = 0;
};

inline ExtendedFloat abs(const ExtendedFloat& v) { return v.mantissa() < 0 ? -v : v; }

template <>
struct scalar_traits<ExtendedFloat> {
    static ExtendedFloat zero() { return {}; }
    static ExtendedFloat one() { return ExtendedFloat(1.0); }
    static ExtendedFloat from_integer(long long k) { return ExtendedFloat(static_cast<double>(k)); }
    static bool is_zero(const ExtendedFloat& v) { return v.is_zero(); }
    static constexpr Mode mode = Mode::floating;
};

}  // namespace hepta
