#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace hepta {

/// Row-major dense matrix, 0-based.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const S& fill = S{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, scalar_traits<S>::zero());
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<S> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const S> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<S> column(std::size_t c) const {
        std::vector<S> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
    Matrix<S> r(a.rows(), b.cols(), scalar_traits<S>::zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (scalar_traits<S>::is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
        }
    return r;
}

template <class S>
std::vector<S> operator*(const Matrix<S>& a, std::span<const S> v) {
    if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector product: length mismatch");
    std::vector<S> r(a.rows(), scalar_traits<S>::zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) r[i] = r[i] + a(i, k) * v[k];
    return r;
}

template <class S>
std::vector<S> operator*(const Matrix<S>& a, const std::vector<S>& v) {
    return a * std::span<const S>(v);
}

}  // namespace hepta
