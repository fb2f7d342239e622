#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"
#include "scalar.hpp"

namespace hepta {

/// Exact rational number, always in lowest terms with a positive denominator.
/// Text form is "p/q" or "p"; the sign lives on the numerator.
class Rational {
public:
    Rational() = default;
    Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
    Rational(long long num, long long den) {
        if (den == 0) throw DivisionByZero();
        v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    static Rational parse(std::string_view text) {
        auto digits_ok = [](std::string_view s, bool allow_sign) {
            if (s.empty()) return false;
            std::size_t i = 0;
            if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        auto bad = [&] { return ParseError("malformed rational \"" + std::string(text) + "\""); };

        const auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
        if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
        if (num[0] == '+') num.remove_prefix(1);

        mpz_class p(std::string(num), 10);
        mpz_class q(std::string(den), 10);
        if (q == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
        return Rational(p, q);
    }

    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpz_class& numerator() const noexcept { return v_.get_num(); }
    const mpz_class& denominator() const noexcept { return v_.get_den(); }
    const mpq_class& get_mpq() const noexcept { return v_; }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    int sign() const noexcept { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

template <>
struct scalar_traits<Rational> {
    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_integer(long long k) { return Rational(k); }
    static bool is_zero(const Rational& r) { return r.is_zero(); }
    static constexpr Mode mode = Mode::numeric_exact;
};

}  // namespace hepta
