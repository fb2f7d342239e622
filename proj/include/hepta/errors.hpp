#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hepta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix order outside the range the band layout supports (n > 4).
class InvalidOrder : public Error {
public:
    explicit InvalidOrder(std::size_t n)
        : Error("invalid matrix order n=" + std::to_string(n) + " (heptadiagonal layout requires n >= 5)"),
          n_(n) {}
    std::size_t order() const noexcept { return n_; }

private:
    std::size_t n_;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Division by a vanishing g_i in a numeric kernel. `index()` is the 1-based
/// subscript, i.e. the i of g_i.
class ZeroSuperDiagonal : public Error {
public:
    explicit ZeroSuperDiagonal(std::size_t index)
        : Error("numeric breakdown: g_" + std::to_string(index) +
                " = 0 (use the symbolic algorithm)"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Rational function evaluated at t = 0 has a non-removable pole there.
class PoleAtZero : public Error {
public:
    PoleAtZero() : Error("rational function has a pole at t = 0") {}
};

/// An inverse entry kept a pole at t = 0 although the determinant did not
/// vanish. Cannot happen for a correct pipeline.
class InternalPole : public Error {
public:
    explicit InternalPole(std::size_t row, std::size_t col)
        : Error("internal error: inverse entry (" + std::to_string(row) + "," +
                std::to_string(col) + ") has a pole at t = 0 while det(H) != 0") {}
};

class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hepta
