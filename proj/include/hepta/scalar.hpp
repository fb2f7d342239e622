#pragma once

#include <concepts>
#include <string_view>

namespace hepta {

/// Which engine produced a result.
enum class Mode { numeric_exact, floating, symbolic, dense_oracle };

constexpr std::string_view to_string(Mode m) noexcept {
    switch (m) {
        case Mode::numeric_exact: return "numeric-exact";
        case Mode::floating: return "float";
        case Mode::symbolic: return "symbolic";
        case Mode::dense_oracle: return "dense-oracle";
    }
    return "unknown";
}

/*
 * Scalar kernels plug into the inversion code through scalar_traits<S>:
 *
 *   static S    zero();
 *   static S    one();
 *   static S    from_integer(long long);
 *   static bool is_zero(const S&);
 *   static constexpr Mode mode;
 *
 * plus the usual +, -, *, / and unary minus. Division by a zero scalar throws
 * DivisionByZero in every kernel.
 */
template <class S>
struct scalar_traits;

template <class S>
concept Scalar = requires(const S& a, const S& b, long long k) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { scalar_traits<S>::zero() } -> std::convertible_to<S>;
    { scalar_traits<S>::one() } -> std::convertible_to<S>;
    { scalar_traits<S>::from_integer(k) } -> std::convertible_to<S>;
    { scalar_traits<S>::is_zero(a) } -> std::convertible_to<bool>;
    { scalar_traits<S>::mode } -> std::convertible_to<Mode>;
};

template <Scalar S>
bool is_zero(const S& s) {
    return scalar_traits<S>::is_zero(s);
}

}  // namespace hepta
