#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>

#include "hepta/hepta.hpp"

using namespace hepta;

namespace {

Polynomial poly(std::initializer_list<long long> c) {
    std::vector<Rational> v;
    for (long long x : c) v.emplace_back(x);
    return Polynomial(std::move(v));
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-50, 50), den(1, 20);
    return Rational(num(rng), den(rng));
}

Polynomial random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) c.push_back(random_rational(rng));
    return Polynomial(std::move(c));
}

RationalFunction random_rf(std::mt19937_64& rng) {
    Polynomial den;
    do den = random_poly(rng, 2);
    while (den.is_zero());
    return RationalFunction(random_poly(rng, 3), den);
}

void expect_normalized(const RationalFunction& r) {
    ASSERT_FALSE(r.den().is_zero());
    EXPECT_EQ(r.den().leading(), Rational(1));
    if (!r.num().is_zero()) EXPECT_TRUE(gcd(r.num(), r.den()).is_one()) << r;
    else EXPECT_TRUE(r.den().is_one());
}

}  // namespace

TEST(Rational, AddsFractions) { EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6)); }

TEST(Rational, CanonicalForm) {
    const Rational r(4, -6);
    EXPECT_EQ(r.to_string(), "-2/3");
    EXPECT_GT(r.denominator(), 0);
    EXPECT_EQ(Rational(0, 7).to_string(), "0");
    EXPECT_EQ(Rational(0, 7).denominator(), 1);
    EXPECT_EQ(Rational(-12, 4).to_string(), "-3");
}

TEST(Rational, ParsesCanonicalText) {
    EXPECT_EQ(Rational::parse("-88555/905413"), Rational(-88555, 905413));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational::parse("+7"), Rational(7));
    EXPECT_EQ(Rational::parse("10/4").to_string(), "5/2");
    const std::string big = "123456789012345678901234567890/11";
    EXPECT_EQ(Rational::parse(big).to_string(), big);
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "/", "1/", "/2", "1/-2", "1.5", "abc", "1/0", " 1", "--1", "1//2"})
        EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
}

TEST(Rational, DivisionByZeroThrows) {
    EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
    EXPECT_THROW(Rational(1, 0), DivisionByZero);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) EXPECT_EQ(a * (Rational(1) / a), Rational(1));
    }
}

TEST(Polynomial, GcdExamples) {
    EXPECT_EQ(gcd(poly({0, 1, 1}), poly({0, 1})), poly({0, 1}));         // gcd(t^2+t, t) = t
    EXPECT_EQ(gcd(poly({1, 1}), poly({2, 1})), poly({1}));               // coprime linears
    EXPECT_EQ(gcd(poly({-2, 0, 2}), poly({-4, 4})), poly({-1, 1}));      // gcd(2t^2-2, 4t-4) = t-1
    EXPECT_EQ(gcd(Polynomial(), poly({0, 3})), poly({0, 1}));
    EXPECT_THROW(gcd(Polynomial(), Polynomial()), Error);
}

TEST(Polynomial, DivmodReconstructs) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial a = random_poly(rng, 5);
        Polynomial b;
        do b = random_poly(rng, 3);
        while (b.is_zero());
        const auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(Polynomial, GcdDividesBothAndLeavesCoprimeCofactors) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial common = random_poly(rng, 2);
        if (common.is_zero()) continue;
        const Polynomial p = common * random_poly(rng, 2);
        const Polynomial q = common * random_poly(rng, 2);
        if (p.is_zero() && q.is_zero()) continue;
        const Polynomial g = gcd(p, q);
        EXPECT_EQ(g.leading(), Rational(1));
        EXPECT_TRUE((p % g).is_zero());
        EXPECT_TRUE((q % g).is_zero());
        if (!p.is_zero() && !q.is_zero()) EXPECT_TRUE(gcd(exact_div(p, g), exact_div(q, g)).is_one());
    }
}

TEST(Polynomial, PrintsReadably) {
    EXPECT_EQ(poly({901, 315}).to_string(), "315*t + 901");
    EXPECT_EQ(poly({0, -1, 0, 2}).to_string(), "2*t^3 - t");
    EXPECT_EQ(Polynomial().to_string(), "0");
}

TEST(RationalFunction, CancelsToCoprimeForm) {
    const RationalFunction t = RationalFunction::t();
    const RationalFunction a = t / (t + RationalFunction(1));
    const RationalFunction b = t + RationalFunction(1);
    EXPECT_EQ(a * b, t);
    EXPECT_TRUE((a * b).den().is_one());
}

TEST(RationalFunction, DenominatorIsMonic) {
    const RationalFunction r(poly({3}), poly({4, 2}));  // 3/(2t+4) = (3/2)/(t+2)
    EXPECT_EQ(r.num(), Polynomial(Rational(3, 2)));
    EXPECT_EQ(r.den(), poly({2, 1}));
}

TEST(RationalFunction, DivisionByZeroThrows) {
    EXPECT_THROW(RationalFunction(1) / RationalFunction(), DivisionByZero);
    EXPECT_THROW(RationalFunction(poly({1}), Polynomial()), DivisionByZero);
}

TEST(RationalFunction, EvalAtZero) {
    EXPECT_EQ(eval_at_zero(RationalFunction(poly({0, 1, 1}), poly({0, 1}))), Rational(1));  // (t^2+t)/t
    EXPECT_EQ(eval_at_zero(RationalFunction(poly({3, 2}), poly({1, 1}))), Rational(3));     // (2t+3)/(t+1)
    EXPECT_THROW(eval_at_zero(RationalFunction(poly({1}), poly({0, 1}))), PoleAtZero);       // 1/t
}

TEST(RationalFunction, FieldAxiomsAndInvariants) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const RationalFunction a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
        const RationalFunction sum = (a + b) + c;
        EXPECT_EQ(sum, a + (b + c));
        const RationalFunction lhs = a * (b + c);
        EXPECT_EQ(lhs, a * b + a * c);
        expect_normalized(sum);
        expect_normalized(lhs);
        expect_normalized(a - b);
        if (!a.is_zero()) {
            EXPECT_EQ(a * (RationalFunction(1) / a), RationalFunction(1));
            expect_normalized(b / a);
        }
    }
}

TEST(RationalFunction, EvaluationIsAHomomorphism) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 150; ++trial) {
        const RationalFunction a = random_rf(rng), b = random_rf(rng);
        const Rational p = random_rational(rng);
        auto defined = [&](const RationalFunction& r) { return !r.den().eval(p).is_zero(); };
        if (!defined(a) || !defined(b)) continue;
        EXPECT_EQ(a.eval(p), a.num().eval(p) / a.den().eval(p));
        const RationalFunction s = a + b, m = a * b;
        if (defined(s)) EXPECT_EQ(s.eval(p), a.eval(p) + b.eval(p));
        if (defined(m)) EXPECT_EQ(m.eval(p), a.eval(p) * b.eval(p));
    }
}

TEST(ExtendedFloat, RenormalizesMantissa) {
    const auto x = ExtendedFloat::from_parts(1.5, 100);
    const auto y = x * x;
    EXPECT_EQ(y.mantissa(), 1.125);
    EXPECT_EQ(y.exponent(), 201);
}

TEST(ExtendedFloat, RoundTripsEveryFiniteDouble) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::uint64_t> bits;
    int checked = 0;
    while (checked < 20000) {
        const std::uint64_t b = bits(rng);
        double v;
        std::memcpy(&v, &b, sizeof v);
        if (!std::isfinite(v)) continue;
        ++checked;
        const double back = ExtendedFloat(v).to_double();
        EXPECT_EQ(std::memcmp(&back, &v, sizeof v) == 0 || (v == 0.0 && back == 0.0), true) << v;
    }
    for (double v : {std::numeric_limits<double>::denorm_min(), std::numeric_limits<double>::min(),
                     std::numeric_limits<double>::max(), -std::numeric_limits<double>::max(), 1.0, -3.75})
        EXPECT_EQ(ExtendedFloat(v).to_double(), v);
}

TEST(ExtendedFloat, MantissaInvariant) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    ExtendedFloat acc(1.0);
    for (int k = 0; k < 2000; ++k) {
        acc = acc * ExtendedFloat(u(rng)) + ExtendedFloat(u(rng));
        if (acc.is_zero()) continue;
        EXPECT_GE(std::fabs(acc.mantissa()), 1.0);
        EXPECT_LT(std::fabs(acc.mantissa()), 2.0);
    }
    // far beyond double range without overflow
    EXPECT_GT(acc.exponent(), 2000);
}

TEST(ExtendedFloat, ArithmeticMatchesDoubleInRange) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-100, 100);
    for (int k = 0; k < 1000; ++k) {
        const double a = u(rng), b = u(rng);
        EXPECT_EQ((ExtendedFloat(a) + ExtendedFloat(b)).to_double(), a + b);
        EXPECT_EQ((ExtendedFloat(a) - ExtendedFloat(b)).to_double(), a - b);
        EXPECT_EQ((ExtendedFloat(a) * ExtendedFloat(b)).to_double(), a * b);
        EXPECT_EQ((ExtendedFloat(a) / ExtendedFloat(b)).to_double(), a / b);
    }
}

TEST(ExtendedFloat, DivisionByZeroThrows) { EXPECT_THROW(ExtendedFloat(1.0) / ExtendedFloat(0.0), DivisionByZero); }

TEST(ExtendedFloat, PrintsHugeValuesInDecimal) {
    const auto v = ExtendedFloat::from_parts(1.0, 10000);  // 2^10000 ~ 1.995063e3010
    EXPECT_EQ(v.to_string().substr(0, 6), "1.9950");
    EXPECT_NE(v.to_string().find("e+3010"), std::string::npos);
    EXPECT_EQ(ExtendedFloat(-0.5).to_string(), "-0.5");
}

TEST(Counted, TalliesOperations) {
    OpCountScope scope;
    const Counted<Rational> a(Rational(2)), b(Rational(3));
    const auto c = -(a * b + a / b - a);
    EXPECT_EQ(scope.count(), 5u);
    EXPECT_EQ(c.value(), Rational(-14, 3));
}
