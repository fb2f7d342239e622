#pragma once

#include <cstdint>
#include <utility>

#include "scalar.hpp"

namespace hepta {

/// Per-thread tally of arithmetic operations performed through Counted<S>.
inline std::uint64_t& op_counter() noexcept {
    thread_local std::uint64_t count = 0;
    return count;
}

/// Resets the tally on construction and reads it back on demand.
class OpCountScope {
public:
    OpCountScope() noexcept : start_(op_counter()) {}
    std::uint64_t count() const noexcept { return op_counter() - start_; }

private:
    std::uint64_t start_;
};

/// Scalar adaptor that counts every +, -, *, / and negation it performs.
template <Scalar S>
class Counted {
public:
    Counted() = default;
    Counted(S v) : v_(std::move(v)) {}  // NOLINT(implicit)

    const S& value() const noexcept { return v_; }

    friend Counted operator+(const Counted& a, const Counted& b) { ++op_counter(); return Counted(a.v_ + b.v_); }
    friend Counted operator-(const Counted& a, const Counted& b) { ++op_counter(); return Counted(a.v_ - b.v_); }
    friend Counted operator*(const Counted& a, const Counted& b) { ++op_counter(); return Counted(a.v_ * b.v_); }
    friend Counted operator/(const Counted& a, const Counted& b) { ++op_counter(); return Counted(a.v_ / b.v_); }
    friend Counted operator-(const Counted& a) { ++op_counter(); return Counted(-a.v_); }

    friend bool operator==(const Counted& a, const Counted& b) { return a.v_ == b.v_; }

private:
    S v_{};
};

template <Scalar S>
struct scalar_traits<Counted<S>> {
    static Counted<S> zero() { return scalar_traits<S>::zero(); }
    static Counted<S> one() { return scalar_traits<S>::one(); }
    static Counted<S> from_integer(long long k) { return scalar_traits<S>::from_integer(k); }
    static bool is_zero(const Counted<S>& v) { return scalar_traits<S>::is_zero(v.value()); }
    static constexpr Mode mode = scalar_traits<S>::mode;
};

template <class S>
const S& unwrap(const S& s) noexcept {
    return s;
}
template <class S>
const S& unwrap(const Counted<S>& s) noexcept {
    return s.value();
}

}  // namespace hepta
