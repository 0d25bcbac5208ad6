#include "support.hpp"

#include <gtest/gtest.h>

using namespace qgrkz;
using qgrkz::test::u;

TEST(Rational, NormalizesAndPrints) {
    Rational x(6, -4);
    EXPECT_EQ(x.str(), "-3/2");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("7").str(), "7/1");
    EXPECT_TRUE((Rational(1, 3) + Rational(2, 3)).is_integer());
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
}

TEST(Rational, BigValuesStayExact) {
    Rational a = Rational::parse("123456789012345678901234567890/7");
    Rational b = a * a - a * a + Rational(1, 7);
    EXPECT_EQ(b, Rational(1, 7));
}

TEST(EqPolynomial, ArithmeticAndPrinting) {
    auto a = EqPolynomial::variable(0), h = EqPolynomial::variable(1);
    auto p = (a + h) * (a - h);
    EXPECT_EQ(p, a * a - h * h);
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ((a * Rational(1, 2)).str(1), "1/2*a1");
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(*(a * Rational(-3)).ratio_to(a), Rational(-3));
    EXPECT_FALSE((a + h).ratio_to(a).has_value());
}

TEST(EqRationalFunction, EqualityByCrossMultiplication) {
    auto a = EqPolynomial::variable(0), b = EqPolynomial::variable(1);
    EqRationalFunction f(a, b), g(a * Rational(2), b * Rational(2));
    EXPECT_EQ(f, g);
    EXPECT_EQ(f * EqRationalFunction(b, a), EqRationalFunction(1));
    EXPECT_EQ(f - g, EqRationalFunction());
    EXPECT_THROW(EqRationalFunction(a, EqPolynomial()), std::domain_error);
    EXPECT_THROW(f / EqRationalFunction(), std::domain_error);
}

TEST(SeriesGeom, OneVariable) {
    auto s = series_geom(u({1}), 3);
    auto expected = TruncatedSeries<Rational>::monomial(u({1}), 1, 3) + TruncatedSeries<Rational>::monomial(u({2}), 1, 3) +
                    TruncatedSeries<Rational>::monomial(u({3}), 1, 3);
    EXPECT_EQ(s, expected);
    EXPECT_EQ(s.terms().size(), 3u);
}

TEST(SeriesGeom, DegreeTwoMonomial) {
    auto s = series_geom(u({1, 1}), 5);
    EXPECT_EQ(s.terms().size(), 2u);
    EXPECT_EQ(s.coeff(u({1, 1})), Rational(1));
    EXPECT_EQ(s.coeff(u({2, 2})), Rational(1));
}

TEST(SeriesGeom, OnlyFirstPowerFits) {
    auto s = series_geom(u({2}), 3);
    EXPECT_EQ(s.terms().size(), 1u);
    EXPECT_EQ(s.coeff(u({2})), Rational(1));
}

TEST(SeriesGeom, RejectsNonEffective) {
    EXPECT_THROW(series_geom(u({0, 0}), 3), std::invalid_argument);
    EXPECT_THROW(series_geom(Monomial{1, -1}, 3), std::invalid_argument);
}

TEST(SeriesGeom, TimesOneMinusXIsX) {
    for (int N = 0; N <= 7; ++N) {
        Monomial x = u({1, 2});
        auto X = TruncatedSeries<Rational>::monomial(x, 1, N);
        auto one = TruncatedSeries<Rational>::constant(1, N);
        EXPECT_EQ((one - X) * series_geom(x, N), X) << "N=" << N;
    }
}

TEST(SeriesLogDerivative, PairsWithDivisors) {
    EXPECT_EQ(series_log_derivative(1, u({1}), 2), 1);
    EXPECT_EQ(series_log_derivative(2, u({1}), 2), -1);
    EXPECT_EQ(series_log_derivative(2, u({1, 1}), 3), 0);
    EXPECT_THROW(series_log_derivative(0, u({1}), 2), std::out_of_range);
}

TEST(SeriesLogDerivative, SumOverDivisorsVanishes) {
    Monomial m = u({3, 1, 2});
    int s = 0;
    for (int i = 1; i <= 4; ++i) s += series_log_derivative(i, m, 4);
    EXPECT_EQ(s, 0);
}

TEST(TruncatedSeries, ProductTruncates) {
    auto x = TruncatedSeries<Rational>::monomial(u({1}), 1, 2);
    auto x2 = x * x;
    EXPECT_EQ(x2.coeff(u({2})), Rational(1));
    EXPECT_TRUE((x2 * x).is_zero());
    EXPECT_EQ(x.truncated(0), TruncatedSeries<Rational>::zero(0));
    EXPECT_THROW(TruncatedSeries<Rational>::zero(-1), std::invalid_argument);
}

TEST(UExponent, ClassOfDifference) {
    EXPECT_EQ(u_exponent(1, 2), u({1}));
    EXPECT_EQ(u_exponent(2, 4), u({0, 1, 1}));
    EXPECT_EQ(u_monomial_str(u({2, 0, 1})), "u1^2*u3");
    EXPECT_EQ(u_monomial_str(Monomial{}), "1");
}

TEST(OperatorMatrix, CompositionAndCommutator) {
    OperatorMatrix<Rational> a(2), b(2);
    a(0, 1) = 1;
    b(1, 0) = 1;
    auto c = commutator(a, b);
    EXPECT_EQ(c(0, 0), Rational(1));
    EXPECT_EQ(c(1, 1), Rational(-1));
    EXPECT_TRUE(c.is_diagonal());
    EXPECT_EQ(a * OperatorMatrix<Rational>::identity(2), a);
    EXPECT_THROW(a + OperatorMatrix<Rational>(3), std::invalid_argument);
}
