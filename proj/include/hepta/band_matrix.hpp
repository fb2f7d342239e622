#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dense.hpp"
#include "errors.hpp"
#include "scalar.hpp"

namespace hepta {

/*
 * Heptadiagonal matrix stored as its seven diagonals. Row i (1-based) reads
 *
 *     a_i  b_i  c_i  [d_i]  e_i  f_i  g_i
 *
 * centred on the main diagonal. Each band is kept at its true in-matrix
 * length, indexed from its first valid subscript:
 *
 *     a: a_4..a_n    b: b_3..b_n    c: c_2..c_n    d: d_1..d_n
 *     e: e_1..e_{n-1}  f: f_1..f_{n-2}  g: g_1..g_{n-3}
 */
template <class S>
class HeptaBands {
public:
    HeptaBands(std::size_t n, std::vector<S> a, std::vector<S> b, std::vector<S> c, std::vector<S> d,
               std::vector<S> e, std::vector<S> f, std::vector<S> g)
        : n_(n),
          a_(std::move(a)),
          b_(std::move(b)),
          c_(std::move(c)),
          d_(std::move(d)),
          e_(std::move(e)),
          f_(std::move(f)),
          g_(std::move(g)) {
        if (n_ < 5) throw InvalidOrder(n_);
        check("a", a_, 3, "a_4..a_n");
        check("b", b_, 2, "b_3..b_n");
        check("c", c_, 1, "c_2..c_n");
        check("d", d_, 0, "d_1..d_n");
        check("e", e_, 1, "e_1..e_{n-1}");
        check("f", f_, 2, "f_1..f_{n-2}");
        check("g", g_, 3, "g_1..g_{n-3}");
    }

    std::size_t n() const noexcept { return n_; }
    const std::vector<S>& a() const noexcept { return a_; }
    const std::vector<S>& b() const noexcept { return b_; }
    const std::vector<S>& c() const noexcept { return c_; }
    const std::vector<S>& d() const noexcept { return d_; }
    const std::vector<S>& e() const noexcept { return e_; }
    const std::vector<S>& f() const noexcept { return f_; }
    const std::vector<S>& g() const noexcept { return g_; }

    /// Entry H(i, j) with 1-based indices; zero off the band.
    S at(std::size_t i, std::size_t j) const {
        if (i == j) return d_[i - 1];
        if (j > i) {
            switch (j - i) {
                case 1: return e_[i - 1];
                case 2: return f_[i - 1];
                case 3: return g_[i - 1];
                default: return scalar_traits<S>::zero();
            }
        }
        switch (i - j) {
            case 1: return c_[i - 2];
            case 2: return b_[i - 3];
            case 3: return a_[i - 4];
            default: return scalar_traits<S>::zero();
        }
    }

    friend bool operator==(const HeptaBands&, const HeptaBands&) = default;

private:
    void check(const char* name, const std::vector<S>& v, std::size_t shortfall, const char* range) const {
        if (v.size() != n_ - shortfall)
            throw DimensionMismatch(std::string("band ") + name + " (" + range + "): expected length " +
                                    std::to_string(n_ - shortfall) + " for n=" + std::to_string(n_) +
                                    ", got " + std::to_string(v.size()));
    }

    std::size_t n_;
    std::vector<S> a_, b_, c_, d_, e_, f_, g_;
};

/// Apply `fn` entrywise, producing bands over another scalar kernel.
template <class T, class S, class F>
HeptaBands<T> map_bands(const HeptaBands<S>& h, F fn) {
    auto m = [&](const std::vector<S>& v) {
        std::vector<T> out;
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(fn(x));
        return out;
    };
    return HeptaBands<T>(h.n(), m(h.a()), m(h.b()), m(h.c()), m(h.d()), m(h.e()), m(h.f()), m(h.g()));
}

/*
 * Bands extended by the conventions that let the seven-term recurrences run
 * uniformly up to row n:
 *
 *     g_{n-2} = g_{n-1} = g_n = 1,   f_{n-1} = f_n = e_n = 0.
 *
 * Accessors take 1-based subscripts and return zero for any a, b, c subscript
 * outside its in-matrix range (also beyond n), which is what the unified
 * back-substitution relies on.
 */
template <class S>
class PaddedBands {
public:
    explicit PaddedBands(const HeptaBands<S>& h)
        : n_(h.n()),
          a_(h.a()),
          b_(h.b()),
          c_(h.c()),
          d_(h.d()),
          e_(h.e()),
          f_(h.f()),
          g_(h.g()),
          zero_(scalar_traits<S>::zero()) {
        e_.push_back(scalar_traits<S>::zero());
        f_.push_back(scalar_traits<S>::zero());
        f_.push_back(scalar_traits<S>::zero());
        for (int k = 0; k < 3; ++k) g_.push_back(scalar_traits<S>::one());
    }

    std::size_t n() const noexcept { return n_; }

    const S& a(std::size_t i) const { return i >= 4 && i <= n_ ? a_[i - 4] : zero_; }
    const S& b(std::size_t i) const { return i >= 3 && i <= n_ ? b_[i - 3] : zero_; }
    const S& c(std::size_t i) const { return i >= 2 && i <= n_ ? c_[i - 2] : zero_; }
    const S& d(std::size_t i) const { return i >= 1 && i <= n_ ? d_[i - 1] : zero_; }
    const S& e(std::size_t i) const { return i >= 1 && i <= n_ ? e_[i - 1] : zero_; }
    const S& f(std::size_t i) const { return i >= 1 && i <= n_ ? f_[i - 1] : zero_; }
    const S& g(std::size_t i) const { return i >= 1 && i <= n_ ? g_[i - 1] : zero_; }

    /// Padded e, f, g: length n each.
    std::span<const S> e_values() const noexcept { return e_; }
    std::span<const S> f_values() const noexcept { return f_; }
    std::span<const S> g_values() const noexcept { return g_; }

private:
    std::size_t n_;
    std::vector<S> a_, b_, c_, d_, e_, f_, g_;
    S zero_;
};

template <class S>
PaddedBands<S> pad(const HeptaBands<S>& h) {
    return PaddedBands<S>(h);
}

template <class S>
Matrix<S> to_dense(const HeptaBands<S>& h) {
    const std::size_t n = h.n();
    Matrix<S> m(n, n, scalar_traits<S>::zero());
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t lo = i > 3 ? i - 3 : 1;
        const std::size_t hi = i + 3 < n ? i + 3 : n;
        for (std::size_t j = lo; j <= hi; ++j) m(i - 1, j - 1) = h.at(i, j);
    }
    return m;
}

/// Reads the seven diagonals out of a dense matrix. Throws DimensionMismatch
/// if the matrix is not square or has entries outside the band.
template <class S>
HeptaBands<S> bands_from_dense(const Matrix<S>& m) {
    if (!m.square()) throw DimensionMismatch("band extraction needs a square matrix");
    const std::size_t n = m.rows();
    if (n < 5) throw InvalidOrder(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((i > j + 3 || j > i + 3) && !scalar_traits<S>::is_zero(m(i, j)))
                throw DimensionMismatch("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ") lies outside the seven bands");
    auto diag = [&](std::ptrdiff_t offset) {
        std::vector<S> v;
        for (std::size_t i = 0; i < n; ++i) {
            const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) + offset;
            if (j >= 0 && j < static_cast<std::ptrdiff_t>(n)) v.push_back(m(i, static_cast<std::size_t>(j)));
        }
        return v;
    };
    return HeptaBands<S>(n, diag(-3), diag(-2), diag(-1), diag(0), diag(1), diag(2), diag(3));
}

/// H * v touching only the seven bands.
template <class S>
std::vector<S> matvec(const HeptaBands<S>& h, std::span<const S> v) {
    const std::size_t n = h.n();
    if (v.size() != n)
        throw DimensionMismatch("matvec: vector length " + std::to_string(v.size()) + " != n=" + std::to_string(n));
    std::vector<S> r(n, scalar_traits<S>::zero());
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t lo = i > 3 ? i - 3 : 1;
        const std::size_t hi = i + 3 < n ? i + 3 : n;
        S acc = scalar_traits<S>::zero();
        for (std::size_t j = lo; j <= hi; ++j) acc = acc + h.at(i, j) * v[j - 1];
        r[i - 1] = acc;
    }
    return r;
}

template <class S>
std::vector<S> matvec(const HeptaBands<S>& h, const std::vector<S>& v) {
    return matvec(h, std::span<const S>(v));
}

/// Constant-band Toeplitz family a=2, b=1, c=3, d=-2, e=-1, f=2, g=1.
template <class S>
HeptaBands<S> gen_toeplitz_family(std::size_t n) {
    if (n < 5) throw InvalidOrder(n);
    auto k = [](long long v) { return scalar_traits<S>::from_integer(v); };
    return HeptaBands<S>(n, std::vector<S>(n - 3, k(2)), std::vector<S>(n - 2, k(1)), std::vector<S>(n - 1, k(3)),
                         std::vector<S>(n, k(-2)), std::vector<S>(n - 1, k(-1)), std::vector<S>(n - 2, k(2)),
                         std::vector<S>(n - 3, k(1)));
}

/// Bands with integer entries drawn uniformly from [lo, hi]. When `nonzero_g`
/// is set every g_i is redrawn until it is nonzero.
template <class S, class Rng>
HeptaBands<S> random_bands(std::size_t n, Rng& rng, long long lo = -9, long long hi = 9, bool nonzero_g = false) {
    if (n < 5) throw InvalidOrder(n);
    std::uniform_int_distribution<long long> dist(lo, hi);
    auto draw = [&](std::size_t len, bool avoid_zero) {
        std::vector<S> v;
        v.reserve(len);
        for (std::size_t k = 0; k < len; ++k) {
            long long x = dist(rng);
            while (avoid_zero && x == 0) x = dist(rng);
            v.push_back(scalar_traits<S>::from_integer(x));
        }
        return v;
    };
    auto a = draw(n - 3, false);
    auto b = draw(n - 2, false);
    auto c = draw(n - 1, false);
    auto d = draw(n, false);
    auto e = draw(n - 1, false);
    auto f = draw(n - 2, false);
    auto g = draw(n - 3, nonzero_g);
    return HeptaBands<S>(n, std::move(a), std::move(b), std::move(c), std::move(d), std::move(e), std::move(f),
                         std::move(g));
}

}  // namespace hepta
