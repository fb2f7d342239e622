#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "band_matrix.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "inverse_core.hpp"
#include "rational.hpp"
#include "rational_function.hpp"

namespace hepta {

/// Bands lifted into rational functions of t, with every vanishing g_i
/// (i <= n-3) replaced by t itself.
template <class K = RationalFunction>
struct SymbolicLift {
    HeptaBands<K> matrix;  // lifted, unpadded
    PaddedBands<K> bands;
    std::set<std::size_t> substituted_indices;  // 1-based g subscripts
};

template <class K = RationalFunction>
SymbolicLift<K> lift_to_symbolic(const HeptaBands<Rational>& h) {
    auto lift = [](const Rational& r) { return K(RationalFunction(r)); };
    auto m = [&](const std::vector<Rational>& v) {
        std::vector<K> out;
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(lift(x));
        return out;
    };
    std::set<std::size_t> subs;
    std::vector<K> g;
    g.reserve(h.g().size());
    for (std::size_t i = 0; i < h.g().size(); ++i) {
        if (h.g()[i].is_zero()) {
            subs.insert(i + 1);
            g.push_back(K(RationalFunction::t()));
        } else {
            g.push_back(lift(h.g()[i]));
        }
    }
    HeptaBands<K> lifted(h.n(), m(h.a()), m(h.b()), m(h.c()), m(h.d()), m(h.e()), m(h.f()), std::move(g));
    PaddedBands<K> padded = pad(lifted);
    return {std::move(lifted), std::move(padded), std::move(subs)};
}

namespace detail {

template <class K>
void check_degree_bound(const std::vector<K>& v, std::size_t n, const char* what) {
    const int bound = static_cast<int>(n) + 3;
    for (const auto& x : v)
        if (unwrap(x).max_degree() > bound)
            throw InternalError(std::string("degree bound n+3 exceeded in ") + what + ": " + unwrap(x).to_string());
}

}  // namespace detail

/// Everything the symbolic pipeline computes before substituting t = 0.
template <class K = RationalFunction>
struct SymbolicTrace {
    SymbolicLift<K> lift;
    SeedSequences<K> seeds;
    DetSequences<K> dets;
    Matrix<K> entries;
    K determinant;
};

/// Runs the whole pipeline over rational functions of t. Throws
/// SingularMatrix if X_{n+1} is the zero function.
template <class K = RationalFunction>
SymbolicTrace<K> symbolic_trace(const HeptaBands<Rational>& h) {
    SymbolicLift<K> lift = lift_to_symbolic<K>(h);
    const std::size_t n = h.n();
    SeedSequences<K> seeds = seed_sequences(lift.bands);
    detail::check_degree_bound(seeds.A, n, "A");
    detail::check_degree_bound(seeds.B, n, "B");
    detail::check_degree_bound(seeds.C_seq, n, "C");
    DetSequences<K> dets = det_sequences(seeds);
    detail::check_degree_bound(dets.X, n, "X");
    detail::check_degree_bound(dets.Y, n, "Y");
    detail::check_degree_bound(dets.Z, n, "Z");
    const LastColumns<K> last = last_three_columns(dets);
    Matrix<K> entries = back_substitute(lift.bands, last);
    K det = determinant(lift.bands, dets);
    return {std::move(lift), std::move(seeds), std::move(dets), std::move(entries), std::move(det)};
}

/// Symbolic inversion: compute over rational functions of t, then set t = 0.
template <class K = RationalFunction>
InverseResult<Rational> invert_symbolic(const HeptaBands<Rational>& h) {
    const SymbolicTrace<K> tr = symbolic_trace<K>(h);
    const std::size_t n = h.n();

    InverseResult<Rational> out;
    out.mode = Mode::symbolic;
    out.substituted.assign(tr.lift.substituted_indices.begin(), tr.lift.substituted_indices.end());
    try {
        out.determinant = eval_at_zero(unwrap(tr.determinant));
    } catch (const PoleAtZero&) {
        throw InternalError("determinant has a pole at t = 0: " + unwrap(tr.determinant).to_string());
    }
    if (out.determinant.is_zero()) throw SingularMatrix("matrix is singular (det vanishes at t = 0)");

    out.entries = Matrix<Rational>(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            try {
                out.entries(i, j) = eval_at_zero(unwrap(tr.entries(i, j)));
            } catch (const PoleAtZero&) {
                throw InternalPole(i + 1, j + 1);
            }
        }
    return out;
}

/// det(H) through the seed and determinant sequences only (no inverse
/// columns), evaluated at t = 0. Returns 0 for singular input.
template <class K = RationalFunction>
Rational symbolic_determinant(const HeptaBands<Rational>& h) {
    const SymbolicLift<K> lift = lift_to_symbolic<K>(h);
    const DetSequences<K> dets = det_sequences(seed_sequences(lift.bands));
    return eval_at_zero(unwrap(determinant(lift.bands, dets)));
}

/// Numeric exact path when no g_i vanishes, symbolic path otherwise.
inline InverseResult<Rational> auto_invert(const HeptaBands<Rational>& h) {
    for (const auto& gi : h.g())
        if (gi.is_zero()) return invert_symbolic(h);
    return invert(h);
}

}  // namespace hepta
