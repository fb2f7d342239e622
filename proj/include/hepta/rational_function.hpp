#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "scalar.hpp"

namespace hepta {

/*
 * Ratio num(t)/den(t) of polynomials over Q, kept normalized:
 *   - den != 0 and monic,
 *   - gcd(num, den) == 1,
 *   - zero is 0/1.
 * With this form equality is structural equality.
 */
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT(implicit)
    RationalFunction(long long c) : RationalFunction(Rational(c)) {}         // NOLINT(implicit)
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT(implicit)
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RationalFunction t() { return RationalFunction(Polynomial::t()); }

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    int max_degree() const noexcept { return std::max(num_.degree(), den_.degree()); }

    /// num(x)/den(x); throws DivisionByZero when den(x) = 0.
    Rational eval(const Rational& x) const { return num_.eval(x) / den_.eval(x); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_one() && b.den_.is_one()) return from_normalized(a.num_ + b.num_, a.den_);
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        const Polynomial g = gcd(a.den_, b.den_);
        const Polynomial ad = exact_div(a.den_, g);
        const Polynomial bd = exact_div(b.den_, g);
        return RationalFunction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
    }
    friend RationalFunction operator-(const RationalFunction& a) { return from_normalized(-a.num_, a.den_); }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.is_one() && b.den_.is_one()) return from_normalized(a.num_ * b.num_, a.den_);
        // Cross-cancel so the product is already coprime.
        const Polynomial g1 = gcd(a.num_, b.den_);
        const Polynomial g2 = gcd(b.num_, a.den_);
        return from_normalized(exact_div(a.num_, g1) * exact_div(b.num_, g2),
                               exact_div(a.den_, g2) * exact_div(b.den_, g1));
    }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero();
        const Rational lc = num_.leading();
        return from_normalized(den_ / lc, num_ / lc);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(char var = 't') const {
        if (den_.is_one()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

private:
    static RationalFunction from_normalized(Polynomial num, Polynomial den) {
        RationalFunction r;
        if (num.is_zero()) return r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        // Denominators reaching here are products of monic factors, except
        // after inverse() where den was divided by its own leading coefficient.
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        if (!den_.is_constant()) {
            const Polynomial g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        const Rational lc = den_.leading();
        if (lc != Rational(1)) {
            num_ = num_ / lc;
            den_ = den_ / lc;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

/// Value at t = 0 of a normalized rational function. After normalization a
/// vanishing den(0) means a genuine pole.
inline Rational eval_at_zero(const RationalFunction& r) {
    const Rational d = r.den().coeff(0);
    if (d.is_zero()) throw PoleAtZero();
    return r.num().coeff(0) / d;
}

template <>
struct scalar_traits<RationalFunction> {
    static RationalFunction zero() { return {}; }
    static RationalFunction one() { return RationalFunction(Rational(1)); }
    static RationalFunction from_integer(long long k) { return RationalFunction(Rational(k)); }
    static bool is_zero(const RationalFunction& r) { return r.is_zero(); }
    static constexpr Mode mode = Mode::symbolic;
};

}  // namespace hepta
