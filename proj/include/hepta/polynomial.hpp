#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hepta {

/// Univariate polynomial in t over the rationals. Coefficients are stored in
/// ascending degree; the highest stored coefficient is never zero, so the zero
/// polynomial is the empty list.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational constant) {  // NOLINT(implicit)
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    /// The indeterminate t.
    static Polynomial t() { return Polynomial({Rational(0), Rational(1)}); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }

    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial monic() const {
        if (is_zero() || leading() == Rational(1)) return *this;
        return *this / leading();
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(Polynomial a, const Rational& s) {
        if (s.is_zero()) return {};
        for (auto& x : a.c_) x *= s;
        return a;
    }
    friend Polynomial operator/(Polynomial a, const Rational& s) {
        if (s.is_zero()) throw DivisionByZero();
        for (auto& x : a.c_) x /= s;
        return a;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string to_string(char var = 't') const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Rational& x = c_[k];
            if (x.is_zero()) continue;
            Rational mag = abs(x);
            if (!first) os << (x.sign() < 0 ? " - " : " + ");
            else if (x.sign() < 0) os << "-";
            first = false;
            const bool unit = mag == Rational(1);
            if (k == 0 || !unit) os << (mag.denominator() == 1 ? mag.to_string() : "(" + mag.to_string() + ")");
            if (k >= 1) os << (unit ? "" : "*") << var;
            if (k >= 2) os << "^" << k;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Quotient and remainder of Euclidean division, a = q*b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    std::vector<Rational> quo(rem.size() - db);
    const Rational inv_lead = Rational(1) / b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        const Rational f = rem[k] * inv_lead;
        quo[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * bc[j];
    }
    rem.resize(db);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

inline Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

/// Exact quotient; the caller guarantees b divides a.
inline Polynomial exact_div(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

/// Monic greatest common divisor by the Euclidean algorithm over Q.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    if (a.is_zero() && b.is_zero()) throw Error("gcd(0, 0) is undefined");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));
    if (a.degree() < b.degree()) std::swap(a, b);
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Polynomial r = (a % b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace hepta
