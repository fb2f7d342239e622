#pragma once

// Reference worked examples, transcribed verbatim, plus helpers shared by the
// test binaries.

#include <array>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "hepta/hepta.hpp"

namespace hepta::test {

// 10x10 example with every g_i nonzero.
inline const std::array<std::array<long long, 10>, 10> h1_dense = {{
    {2, 1, 4, -1, 0, 0, 0, 0, 0, 0},
    {5, 1, 1, 2, 2, 0, 0, 0, 0, 0},
    {1, 2, -3, 2, 7, 2, 0, 0, 0, 0},
    {6, 1, 3, 2, 3, -1, 3, 0, 0, 0},
    {0, 1, -1, 2, 2, -3, 4, 1, 0, 0},
    {0, 0, 4, 4, 4, 1, 2, 1, 1, 0},
    {0, 0, 0, -1, 2, -1, 3, -3, 2, 1},
    {0, 0, 0, 0, 3, 1, 2, 1, 11, 3},
    {0, 0, 0, 0, 0, 4, -3, 2, 1, 1},
    {0, 0, 0, 0, 0, 0, -7, 1, 1, 2},
}};

// Inverse numerators over the common denominator 905413.
inline constexpr long long h1_inverse_den = 905413;
inline const std::array<std::array<long long, 10>, 10> h1_inverse_num = {{
    {-88555, -29328, -2619, 205297, -82176, -80594, -51473, 16924, -5949, 3325},
    {552363, 877900, -30890, -910556, 447486, -217, 214649, -43768, 188079, -135712},
    {125378, -53389, -25421, 6935, -28082, 83035, 6848, -8584, -23518, 21211},
    {-28648, 605688, -137812, -472222, 170806, 170735, 139095, -44256, 82109, -44218},
    {-88835, -491917, 172515, 410790, -175068, -10659, -121161, 28122, -149517, 93156},
    {19552, 172702, -19216, -147233, -6589, 31638, 106328, -31741, 220819, -115962},
    {-17938, -34896, -46090, 42741, 102273, -14393, 88422, -19873, 141107, -84955},
    {-61611, -501141, 62775, 427692, 9510, -84414, -278373, 51721, 21248, 50981},
    {46355, 156703, 11493, -147953, -78091, 14531, -103927, 118638, -160577, -45705},
    {-55155, 50083, -198449, 9724, 392246, -15434, 500627, -154735, 563539, 152726},
}};

inline const std::vector<std::string> h1_A = {"0",    "0",     "1",    "4",     "-9/2", "53/4", "21/4",
                                              "83/4", "-93/2", "663/4", "-67/4", "-198", "-269"};
inline const std::vector<std::string> h1_B = {"0",     "1",     "0",      "1",      "-3/2",  "13/4", "19/12",
                                              "41/12", "-47/6", "341/12", "-53/12", "-107/3", "-124/3"};
inline const std::vector<std::string> h1_C = {"1",      "0",     "0",       "2",       "-9/2",   "53/4", "67/12",
                                              "269/12", "-221/6", "1781/12", "-881/12", "-578/3", "-730/3"};
inline const std::vector<std::string> h1_X = {"4231/3",    "-10942/3",  "-2146/3", "-3688",      "4687/2",     "-31741/12",
                                              "-19873/12", "51721/12", "19773/2", "-154735/12", "-905413/12"};
inline const std::vector<std::string> h1_Y = {"1983/4",     "-62693/4",   "11759/6", "-82109/12",  "49839/4",
                                              "-220819/12", "-141107/12", "-5312/3", "160577/12",  "-563539/12",
                                              "0",          "905413/12"};
inline const std::vector<std::string> h1_Z = {"3325/12",   "-33928/3", "21211/12", "-22109/6", "7763",
                                              "-19327/2",  "-84955/12", "50981/12", "-15235/4", "76363/6",
                                              "0",         "0",         "-905413/12"};

// 5x5 example with g_2 = 0.
inline const std::array<std::array<long long, 5>, 5> h2_dense = {{
    {2, 3, 4, 1, 0},
    {-1, 1, -2, 3, 0},
    {3, 5, 1, -1, 2},
    {4, -1, 3, 2, 6},
    {0, 2, 1, 4, -3},
}};
inline constexpr long long h2_inverse_den = 901;
inline const std::array<std::array<long long, 5>, 5> h2_inverse_num = {{
    {-615, -545, 294, 176, 548},
    {190, 205, 63, -91, -140},
    {392, 91, -183, -36, -194},
    {-7, 111, -45, 65, 100},
    {248, 315, -79, 14, -325},
}};

template <std::size_t N>
Matrix<Rational> dense_of(const std::array<std::array<long long, N>, N>& rows) {
    Matrix<Rational> m(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m(i, j) = Rational(rows[i][j]);
    return m;
}

template <std::size_t N>
Matrix<Rational> over(const std::array<std::array<long long, N>, N>& num, long long den) {
    Matrix<Rational> m(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m(i, j) = Rational(num[i][j], den);
    return m;
}

inline HeptaBands<Rational> h1() { return bands_from_dense(dense_of(h1_dense)); }
inline HeptaBands<Rational> h2() { return bands_from_dense(dense_of(h2_dense)); }
inline Matrix<Rational> h1_inverse() { return over(h1_inverse_num, h1_inverse_den); }
inline Matrix<Rational> h2_inverse() { return over(h2_inverse_num, h2_inverse_den); }

inline std::vector<Rational> rationals(const std::vector<std::string>& v) {
    std::vector<Rational> out;
    for (const auto& s : v) out.push_back(Rational::parse(s));
    return out;
}

inline HeptaBands<Rational> identity_bands(std::size_t n) {
    std::vector<Rational> z1(n - 1), z2(n - 2), z3(n - 3);
    return HeptaBands<Rational>(n, z3, z2, z1, std::vector<Rational>(n, Rational(1)), z1, z2, z3);
}

inline std::size_t draw_order(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random integer bands in [-9, 9] with g_i != 0.
inline HeptaBands<Rational> random_numeric(std::mt19937_64& rng, std::size_t n) {
    return random_bands<Rational>(n, rng, -9, 9, true);
}

/// Random bands whose g has between 1 and 3 entries forced to zero.
inline HeptaBands<Rational> random_with_zero_g(std::mt19937_64& rng, std::size_t n) {
    const HeptaBands<Rational> h = random_bands<Rational>(n, rng, -9, 9, true);
    std::vector<Rational> g = h.g();
    const std::size_t zeros = std::min<std::size_t>(g.size(), draw_order(rng, 1, 3));
    for (std::size_t k = 0; k < zeros; ++k) g[draw_order(rng, 0, g.size() - 1)] = Rational(0);
    return HeptaBands<Rational>(n, h.a(), h.b(), h.c(), h.d(), h.e(), h.f(), std::move(g));
}

inline std::string fixture(const std::string& name) { return std::string(HEPTA_FIXTURE_DIR) + "/" + name; }

}  // namespace hepta::test

namespace hepta::test {

/// The four-case form of back-substitution, written out literally against
/// the unpadded bands (1-based helpers below). Independent of the unified
/// zero-extended loop in back_substitute().
template <class S>
Matrix<S> literal_back_substitute(const HeptaBands<S>& h, const LastColumns<S>& last) {
    const std::size_t n = h.n();
    const S zero = scalar_traits<S>::zero();
    const S one = scalar_traits<S>::one();
    auto a = [&](std::size_t i) { return h.a()[i - 4]; };
    auto b = [&](std::size_t i) { return h.b()[i - 3]; };
    auto c = [&](std::size_t i) { return h.c()[i - 2]; };
    auto d = [&](std::size_t i) { return h.d()[i - 1]; };
    auto e = [&](std::size_t i) { return h.e()[i - 1]; };
    auto f = [&](std::size_t i) { return h.f()[i - 1]; };
    auto g = [&](std::size_t i) { return h.g()[i - 1]; };

    Matrix<S> C(n, n, zero);
    auto col = [&](std::size_t k, std::size_t r) -> S& { return C(r - 1, k - 1); };
    for (std::size_t r = 1; r <= n; ++r) {
        col(n - 2, r) = last.col_n_minus_2[r - 1];
        col(n - 1, r) = last.col_n_minus_1[r - 1];
        col(n, r) = last.col_n[r - 1];
    }
    auto unit = [&](std::size_t k, std::size_t r) { return r == k ? one : zero; };

    for (std::size_t r = 1; r <= n; ++r)
        col(n - 3, r) = (unit(n, r) - d(n) * col(n, r) - e(n - 1) * col(n - 1, r) - f(n - 2) * col(n - 2, r)) /
                        g(n - 3);
    if (n - 4 >= 1)
        for (std::size_t r = 1; r <= n; ++r)
            col(n - 4, r) = (unit(n - 1, r) - c(n) * col(n, r) - d(n - 1) * col(n - 1, r) -
                             e(n - 2) * col(n - 2, r) - f(n - 3) * col(n - 3, r)) /
                            g(n - 4);
    if (n >= 6)
        for (std::size_t r = 1; r <= n; ++r)
            col(n - 5, r) = (unit(n - 2, r) - b(n) * col(n, r) - c(n - 1) * col(n - 1, r) -
                             d(n - 2) * col(n - 2, r) - e(n - 3) * col(n - 3, r) - f(n - 4) * col(n - 4, r)) /
                            g(n - 5);
    for (std::size_t j = n >= 7 ? n - 6 : 0; j >= 1; --j)
        for (std::size_t r = 1; r <= n; ++r)
            col(j, r) = (unit(j + 3, r) - a(j + 6) * col(j + 6, r) - b(j + 5) * col(j + 5, r) -
                         c(j + 4) * col(j + 4, r) - d(j + 3) * col(j + 3, r) - e(j + 2) * col(j + 2, r) -
                         f(j + 1) * col(j + 1, r)) /
                        g(j);
    return C;
}

}  // namespace hepta::test
