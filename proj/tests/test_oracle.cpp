#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace hepta;
using namespace hepta::test;

namespace {

// Laplace expansion along the first row.
Rational cofactor_det(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Rational acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        Matrix<Rational> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, k = 0; c < n; ++c)
                if (c != j) minor(r - 1, k++) = m(r, c);
        const Rational term = m(0, j) * cofactor_det(minor);
        acc = j % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

Matrix<Rational> random_dense(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long long> u(-5, 5);
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(u(rng));
    return m;
}

}  // namespace

TEST(Oracle, DeterminantMatchesCofactorExpansion) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto m = random_dense(rng, draw_order(rng, 1, 5));
        EXPECT_EQ(oracle::dense_det_exact(m), cofactor_det(m));
    }
}

TEST(Oracle, InverseTimesMatrixIsIdentity) {
    std::mt19937_64 rng(4);
    int checked = 0;
    while (checked < 30) {
        const auto m = random_dense(rng, draw_order(rng, 1, 9));
        if (oracle::dense_det_exact(m).is_zero()) {
            EXPECT_THROW(oracle::dense_inverse_exact(m), SingularMatrix);
            continue;
        }
        const auto inv = oracle::dense_inverse_exact(m);
        EXPECT_EQ(inv * m, Matrix<Rational>::identity(m.rows()));
        EXPECT_EQ(m * inv, Matrix<Rational>::identity(m.rows()));
        ++checked;
    }
}

TEST(Oracle, NeedsPivoting) {
    const auto m = dense_of<3>({{{0, 1, 0}, {1, 0, 0}, {0, 0, 2}}});
    EXPECT_EQ(oracle::dense_det_exact(m), Rational(-2));
    EXPECT_EQ(oracle::dense_inverse_exact(m) * m, Matrix<Rational>::identity(3));
}

TEST(Oracle, WorkedExamples) {
    EXPECT_EQ(oracle::dense_det_exact(to_dense(h1())), Rational(905413));
    EXPECT_EQ(oracle::dense_det_exact(to_dense(h2())), Rational(901));
    EXPECT_EQ(oracle::dense_inverse_exact(to_dense(h1())), h1_inverse());
    EXPECT_EQ(oracle::dense_inverse_exact(to_dense(h2())), h2_inverse());
}

TEST(Oracle, ZeroRowIsSingular) {
    auto m = to_dense(h1());
    for (std::size_t j = 0; j < 10; ++j) m(9, j) = Rational(0);
    EXPECT_TRUE(oracle::dense_det_exact(m).is_zero());
    EXPECT_THROW(oracle::dense_inverse_exact(m), SingularMatrix);
}

TEST(Oracle, Solve) {
    const auto m = dense_of<2>({{{2, 1}, {1, 3}}});
    const std::vector<Rational> rhs = {3, 5};
    EXPECT_EQ(oracle::dense_solve_exact(m, std::span<const Rational>(rhs)),
              (std::vector<Rational>{Rational(4, 5), Rational(7, 5)}));
}
