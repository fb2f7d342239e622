#pragma once

#include <cstddef>
#include <vector>

#include "band_matrix.hpp"
#include "inverse_core.hpp"
#include "scalar.hpp"

namespace hepta {

/// X_{n+1} = -Y_{n+2} = Z_{n+3}, compared exactly.
template <Scalar S>
bool ends_agree(const DetSequences<S>& ds) {
    return ds.x_end() == -ds.y_end() && ds.x_end() == ds.z_end();
}

namespace detail {

// Right-hand side with the given values at rows n-2, n-1, n (1-based).
template <class S>
std::vector<S> tail_vector(std::size_t n, const S& at_n2, const S& at_n1, const S& at_n) {
    std::vector<S> v(n, scalar_traits<S>::zero());
    v[n - 3] = at_n2;
    v[n - 2] = at_n1;
    v[n - 1] = at_n;
    return v;
}

template <class S>
std::vector<S> head(const std::vector<S>& v, std::size_t n) {
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace detail

/// H s = -s_{n+1} E_{n-2} - s_{n+2} E_{n-1} - s_{n+3} E_n for each seed s.
template <Scalar S>
bool seed_identities_hold(const HeptaBands<S>& h, const SeedSequences<S>& s) {
    const std::size_t n = h.n();
    for (const auto* seq : {&s.A, &s.B, &s.C_seq}) {
        const auto& v = *seq;
        if (matvec(h, detail::head(v, n)) != detail::tail_vector(n, -v[n], -v[n + 1], -v[n + 2])) return false;
    }
    return true;
}

/// H X = -X_{n+1} E_{n-2},  H Y = -Y_{n+2} E_{n-1},  H Z = -Z_{n+3} E_n.
template <Scalar S>
bool det_identities_hold(const HeptaBands<S>& h, const DetSequences<S>& ds) {
    const std::size_t n = h.n();
    const S zero = scalar_traits<S>::zero();
    return matvec(h, detail::head(ds.X, n)) == detail::tail_vector(n, -ds.x_end(), zero, zero) &&
           matvec(h, detail::head(ds.Y, n)) == detail::tail_vector(n, zero, -ds.y_end(), zero) &&
           matvec(h, detail::head(ds.Z, n)) == detail::tail_vector(n, zero, zero, -ds.z_end());
}

}  // namespace hepta
