#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dense.hpp"
#include "errors.hpp"
#include "scalar.hpp"

// Dense O(n^3) reference routines. They only use the scalar kernel and the
// Matrix container, nothing from the banded inversion code.

namespace hepta::oracle {

/// Gauss-Jordan elimination with row swaps to the first nonzero pivot.
template <Scalar S>
Matrix<S> dense_inverse_exact(const Matrix<S>& m) {
    if (!m.square()) throw DimensionMismatch("dense inverse needs a square matrix");
    const std::size_t n = m.rows();
    Matrix<S> a = m;
    Matrix<S> inv = Matrix<S>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && scalar_traits<S>::is_zero(a(piv, col))) ++piv;
        if (piv == n) throw SingularMatrix("matrix is singular (no pivot in column " + std::to_string(col + 1) + ")");
        a.swap_rows(piv, col);
        inv.swap_rows(piv, col);

        const S scale = scalar_traits<S>::one() / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = a(col, j) * scale;
            inv(col, j) = inv(col, j) * scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || scalar_traits<S>::is_zero(a(r, col))) continue;
            const S factor = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) = a(r, j) - factor * a(col, j);
                inv(r, j) = inv(r, j) - factor * inv(col, j);
            }
        }
    }
    return inv;
}

/// Bareiss fraction-free elimination. Every division is exact in the sense
/// that it would stay integral for integer input; over a field it is plain
/// field division.
template <Scalar S>
S dense_det_exact(const Matrix<S>& m) {
    if (!m.square()) throw DimensionMismatch("determinant needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return scalar_traits<S>::one();
    Matrix<S> a = m;
    S prev = scalar_traits<S>::one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (scalar_traits<S>::is_zero(a(k, k))) {
            std::size_t piv = k + 1;
            while (piv < n && scalar_traits<S>::is_zero(a(piv, k))) ++piv;
            if (piv == n) return scalar_traits<S>::zero();
            a.swap_rows(piv, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = scalar_traits<S>::zero();
        }
        prev = a(k, k);
    }
    S det = a(n - 1, n - 1);
    return negate ? -det : det;
}

/// Gaussian elimination on the augmented system.
template <Scalar S>
std::vector<S> dense_solve_exact(const Matrix<S>& m, std::span<const S> rhs) {
    if (!m.square() || rhs.size() != m.rows()) throw DimensionMismatch("dense solve: shape mismatch");
    const std::size_t n = m.rows();
    Matrix<S> a = m;
    std::vector<S> b(rhs.begin(), rhs.end());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && scalar_traits<S>::is_zero(a(piv, col))) ++piv;
        if (piv == n) throw SingularMatrix();
        a.swap_rows(piv, col);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (scalar_traits<S>::is_zero(a(r, col))) continue;
            const S factor = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) = a(r, j) - factor * a(col, j);
            b[r] = b[r] - factor * b[col];
        }
    }
    std::vector<S> x(n, scalar_traits<S>::zero());
    for (std::size_t r = n; r-- > 0;) {
        S acc = b[r];
        for (std::size_t j = r + 1; j < n; ++j) acc = acc - a(r, j) * x[j];
        x[r] = acc / a(r, r);
    }
    return x;
}

}  // namespace hepta::oracle
