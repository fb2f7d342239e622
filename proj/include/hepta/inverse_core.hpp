#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "band_matrix.hpp"
#include "dense.hpp"
#include "errors.hpp"
#include "scalar.hpp"

namespace hepta {

/*
 * O(n) inversion of a heptadiagonal matrix.
 *
 * Three seed sequences A, B, C solve the homogeneous seven-term recurrence
 *
 *     a_i s_{i-3} + b_i s_{i-2} + c_i s_{i-1} + d_i s_i + e_i s_{i+1} + f_i s_{i+2} + g_i s_{i+3} = 0
 *
 * for i = 1..n (padded bands), started from the unit triples (0,0,1), (0,1,0),
 * (1,0,0). Their first n terms satisfy H s = -s_{n+1} E_{n-2} - s_{n+2} E_{n-1}
 * - s_{n+3} E_n. Suitable 3x3 determinants X, Y, Z of seed values cancel two of
 * the three right-hand terms, which yields the last three inverse columns. The
 * remaining columns follow from H^{-1} H = I read one column of H at a time.
 *
 * All vectors below are 0-based; element k holds the term with subscript k+1.
 */

template <class S>
struct SeedSequences {
    std::vector<S> A;
    std::vector<S> B;
    std::vector<S> C_seq;

    std::size_t n() const noexcept { return A.size() - 3; }
};

template <class S>
struct DetSequences {
    std::vector<S> X;  // X_1..X_{n+1}
    std::vector<S> Y;  // Y_1..Y_{n+2}
    std::vector<S> Z;  // Z_1..Z_{n+3}

    std::size_t n() const noexcept { return X.size() - 1; }
    const S& x_end() const { return X.back(); }  // X_{n+1}
    const S& y_end() const { return Y.back(); }  // Y_{n+2}
    const S& z_end() const { return Z.back(); }  // Z_{n+3}
};

/// Inverse columns C_{n-2}, C_{n-1}, C_n.
template <class S>
struct LastColumns {
    std::vector<S> col_n_minus_2;
    std::vector<S> col_n_minus_1;
    std::vector<S> col_n;
};

template <class S>
struct InverseResult {
    Matrix<S> entries;  // entries(i-1, j-1) = S_ij; column k-1 is C_k
    S determinant;
    Mode mode = scalar_traits<S>::mode;
    std::vector<std::size_t> substituted;  // g subscripts replaced by t (symbolic path)
};

template <Scalar S>
SeedSequences<S> seed_sequences(const PaddedBands<S>& p) {
    const std::size_t n = p.n();
    const S zero = scalar_traits<S>::zero();
    const S one = scalar_traits<S>::one();
    SeedSequences<S> s;
    s.A.assign(n + 3, zero);
    s.B.assign(n + 3, zero);
    s.C_seq.assign(n + 3, zero);
    s.A[2] = one;
    s.B[1] = one;
    s.C_seq[0] = one;

    for (std::size_t i = 1; i <= n; ++i) {
        const S& gi = p.g(i);
        if (scalar_traits<S>::is_zero(gi)) throw ZeroSuperDiagonal(i);
        for (auto* seq : {&s.A, &s.B, &s.C_seq}) {
            auto& v = *seq;
            // v[k-1] is the term with subscript k.
            S acc = p.d(i) * v[i - 1] + p.e(i) * v[i] + p.f(i) * v[i + 1];
            if (i >= 2) acc = acc + p.c(i) * v[i - 2];
            if (i >= 3) acc = acc + p.b(i) * v[i - 3];
            if (i >= 4) acc = acc + p.a(i) * v[i - 4];
            v[i + 2] = -acc / gi;
        }
    }
    return s;
}

namespace detail {

// det [[A_P, A_Q, A_i], [B_P, B_Q, B_i], [C_P, C_Q, C_i]] for i = 1..count,
// expanded along the third column with the 2x2 minors computed once.
template <class S>
std::vector<S> bordered_dets(const SeedSequences<S>& s, std::size_t P, std::size_t Q, std::size_t count) {
    const auto& A = s.A;
    const auto& B = s.B;
    const auto& C = s.C_seq;
    const std::size_t p = P - 1, q = Q - 1;
    const S minor_a = B[p] * C[q] - B[q] * C[p];
    const S minor_b = A[p] * C[q] - A[q] * C[p];
    const S minor_c = A[p] * B[q] - A[q] * B[p];
    std::vector<S> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back(A[k] * minor_a - B[k] * minor_b + C[k] * minor_c);
    return out;
}

}  // namespace detail

/*
 * X_i, Y_i, Z_i as 3x3 determinants with rows (A, B, C) and columns
 *
 *     X_i: (n+3, n+2, i)    i = 1..n+1
 *     Y_i: (n+3, n+1, i)    i = 1..n+2
 *     Z_i: (n+2, n+1, i)    i = 1..n+3
 *
 * This column order reproduces the reference worked examples. It is the
 * negation of the order (i, n+2, n+3), ...; the inverse columns are ratios and
 * do not depend on the choice, the determinant sign does (see determinant()).
 */
template <Scalar S>
DetSequences<S> det_sequences(const SeedSequences<S>& s) {
    const std::size_t n = s.n();
    DetSequences<S> ds;
    ds.X = detail::bordered_dets(s, n + 3, n + 2, n + 1);
    ds.Y = detail::bordered_dets(s, n + 3, n + 1, n + 2);
    ds.Z = detail::bordered_dets(s, n + 2, n + 1, n + 3);
    return ds;
}

/// C_n = -Z/Z_{n+3}, C_{n-1} = -Y/Y_{n+2}, C_{n-2} = -X/X_{n+1}.
/// Throws SingularMatrix when X_{n+1} = 0 (for rational functions: the zero
/// function, not its value at a point).
template <Scalar S>
LastColumns<S> last_three_columns(const DetSequences<S>& ds) {
    const std::size_t n = ds.n();
    // Exactly, the three ends agree up to sign; in floating point one of them
    // can cancel to zero on its own.
    const std::pair<const S*, std::string> ends[] = {{&ds.x_end(), "X_" + std::to_string(n + 1)},
                                                     {&ds.y_end(), "Y_" + std::to_string(n + 2)},
                                                     {&ds.z_end(), "Z_" + std::to_string(n + 3)}};
    for (const auto& [value, name] : ends)
        if (scalar_traits<S>::is_zero(*value)) throw SingularMatrix("matrix is singular (" + name + " = 0)");
    auto column = [n](const std::vector<S>& seq, const S& last) {
        const S scale = -(scalar_traits<S>::one() / last);
        std::vector<S> col;
        col.reserve(n);
        for (std::size_t i = 0; i < n; ++i) col.push_back(seq[i] * scale);
        return col;
    };
    return {column(ds.X, ds.x_end()), column(ds.Y, ds.y_end()), column(ds.Z, ds.z_end())};
}

/*
 * Remaining columns, j = n-3 down to 1:
 *
 *     C_j = (E_{j+3} - f_{j+1} C_{j+1} - e_{j+2} C_{j+2} - d_{j+3} C_{j+3}
 *                    - c_{j+4} C_{j+4} - b_{j+5} C_{j+5} - a_{j+6} C_{j+6}) / g_j
 *
 * Terms whose column index exceeds n are dropped; a, b, c are zero past n.
 * That single form covers the truncated rows j = n-3, n-4, n-5.
 */
template <Scalar S>
Matrix<S> back_substitute(const PaddedBands<S>& p, const LastColumns<S>& last) {
    const std::size_t n = p.n();
    const S zero = scalar_traits<S>::zero();
    const S one = scalar_traits<S>::one();
    Matrix<S> inv(n, n, zero);
    for (std::size_t r = 0; r < n; ++r) {
        inv(r, n - 3) = last.col_n_minus_2[r];
        inv(r, n - 2) = last.col_n_minus_1[r];
        inv(r, n - 1) = last.col_n[r];
    }

    for (std::size_t j = n - 3; j >= 1; --j) {
        const S& gj = p.g(j);
        if (scalar_traits<S>::is_zero(gj)) throw ZeroSuperDiagonal(j);
        const std::array<const S*, 6> coef = {&p.f(j + 1), &p.e(j + 2), &p.d(j + 3),
                                              &p.c(j + 4), &p.b(j + 5), &p.a(j + 6)};
        const std::size_t terms = std::min<std::size_t>(6, n - j);
        for (std::size_t r = 1; r <= n; ++r) {
            S acc = r == j + 3 ? one : zero;
            for (std::size_t k = 0; k < terms; ++k) acc = acc - *coef[k] * inv(r - 1, j + k);
            inv(r - 1, j - 1) = acc / gj;
        }
    }
    return inv;
}

/// det(H) = (-1)^n (g_1 ... g_{n-3}) X_{n+1}, with X as defined above.
template <Scalar S>
S determinant(const PaddedBands<S>& p, const DetSequences<S>& ds) {
    const std::size_t n = p.n();
    if (scalar_traits<S>::is_zero(ds.x_end())) return scalar_traits<S>::zero();
    S prod = scalar_traits<S>::one();
    for (std::size_t i = 1; i + 3 <= n; ++i) prod = prod * p.g(i);
    S det = prod * ds.x_end();
    return n % 2 == 0 ? det : -det;
}

template <Scalar S>
InverseResult<S> invert(const HeptaBands<S>& h) {
    const PaddedBands<S> p = pad(h);
    const SeedSequences<S> seeds = seed_sequences(p);
    const DetSequences<S> dets = det_sequences(seeds);
    const LastColumns<S> last = last_three_columns(dets);
    InverseResult<S> out;
    out.entries = back_substitute(p, last);
    out.determinant = determinant(p, dets);
    return out;
}

template <Scalar S>
std::vector<S> solve(const HeptaBands<S>& h, std::span<const S> rhs) {
    if (rhs.size() != h.n())
        throw DimensionMismatch("solve: rhs length " + std::to_string(rhs.size()) + " != n=" +
                                std::to_string(h.n()));
    return invert(h).entries * rhs;
}

template <Scalar S>
std::vector<S> solve(const HeptaBands<S>& h, const std::vector<S>& rhs) {
    return solve(h, std::span<const S>(rhs));
}

}  // namespace hepta
