#include "support.hpp"

#include <gtest/gtest.h>

using namespace qgrkz;

namespace {

std::mt19937 rng(20261017);

Rational rand_q() {
    std::uniform_int_distribution<long> n(-9, 9), d(1, 6);
    return Rational(n(rng), d(rng));
}

EqPolynomial rand_poly(std::size_t vars = 3, int terms = 3, int deg = 2) {
    std::uniform_int_distribution<int> e(0, deg);
    EqPolynomial p;
    for (int t = 0; t < terms; ++t) {
        Monomial m(vars);
        for (auto& x : m) x = e(rng);
        p += EqPolynomial::monomial(m, rand_q());
    }
    return p;
}

EqRationalFunction rand_rf() {
    EqPolynomial d;
    while (d.is_zero()) d = rand_poly(3, 2, 1);
    return EqRationalFunction(rand_poly(), d);
}

TruncatedSeries<Rational> rand_series(int N) {
    std::uniform_int_distribution<int> e(0, 3);
    auto s = TruncatedSeries<Rational>::zero(N);
    for (int t = 0; t < 5; ++t) s += TruncatedSeries<Rational>::monomial({e(rng), e(rng)}, rand_q(), N);
    return s;
}

template <class T, class Gen>
void ring_axioms(Gen gen, const char* what) {
    for (int trial = 0; trial < 25; ++trial) {
        T a = gen(), b = gen(), c = gen();
        EXPECT_EQ((a + b) + c, a + (b + c)) << what;
        EXPECT_EQ(a + b, b + a) << what;
        EXPECT_EQ((a * b) * c, a * (b * c)) << what;
        EXPECT_EQ(a * b, b * a) << what;
        EXPECT_EQ(a * (b + c), a * b + a * c) << what;
        EXPECT_TRUE((a - a).is_zero()) << what;
        EXPECT_EQ(a * T(1), a) << what;
    }
}

}  // namespace

TEST(RingAxioms, Rational) { ring_axioms<Rational>(rand_q, "rational"); }
TEST(RingAxioms, Polynomial) { ring_axioms<EqPolynomial>([] { return rand_poly(); }, "polynomial"); }
TEST(RingAxioms, RationalFunction) { ring_axioms<EqRationalFunction>(rand_rf, "rational function"); }
TEST(RingAxioms, Series) { ring_axioms<TruncatedSeries<Rational>>([] { return rand_series(5); }, "series"); }

TEST(RationalFunction, EqualityIsAnEquivalence) {
    for (int trial = 0; trial < 25; ++trial) {
        auto f = rand_rf();
        EqPolynomial k;
        while (k.is_zero()) k = rand_poly(3, 2, 1);
        EqRationalFunction g(f.num() * k, f.den() * k);
        EqPolynomial k2;
        while (k2.is_zero()) k2 = rand_poly(3, 1, 1);
        EqRationalFunction h(f.num() * k2, f.den() * k2);
        EXPECT_EQ(f, f);
        EXPECT_EQ(f, g);
        EXPECT_EQ(g, f);
        EXPECT_EQ(g, h);
        auto x = rand_rf();
        EXPECT_EQ(f + x, g + x);
        EXPECT_EQ(f * x, h * x);
    }
}

TEST(SeriesGeom, TruncatedInverse) {
    std::uniform_int_distribution<int> e(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        Monomial x = {e(rng), e(rng), e(rng)};
        trim(x);
        if (x.empty()) continue;
        for (int N = 0; N <= 6; ++N) {
            auto X = TruncatedSeries<Rational>::monomial(x, 1, N);
            EXPECT_EQ((TruncatedSeries<Rational>::constant(1, N) - X) * series_geom(x, N), X);
        }
    }
}

TEST(RandomInstances, CombinatorialInvariants) {
    std::mt19937 r(99);
    for (int trial = 0; trial < 25; ++trial) {
        auto P = test::random_problem(r, {"A1", "A2", "A3", "D4", "C2", "B3"}, 4);
        SliceModel M(P);
        EXPECT_EQ(static_cast<long long>(M.size()), tensor_weight_multiplicity(P)) << P.str();
        EXPECT_TRUE(check_tangent(M).ok()) << P.str();
        EXPECT_TRUE(check_curves(M).ok()) << P.str();
        EXPECT_TRUE(check_betti(M, test::standard(P), 1234u + trial).ok()) << P.str();
    }
}

TEST(RandomInstances, OperatorIdentities) {
    std::mt19937 r(17);
    for (int trial = 0; trial < 10; ++trial) {
        auto P = test::random_problem(r, {"A1", "A2", "A3", "C2", "B2", "D4"}, 3);
        SliceModel M(P);
        if (M.size() > 40) continue;
        Chamber C = Chamber::random(P.datum, r);
        StableOps S(M, C);
        EXPECT_TRUE(check_signs(S).ok()) << P.str();
        EXPECT_TRUE(check_chamber_sum(S, 7u + trial).ok()) << P.str();
        EXPECT_TRUE(check_classical(S).ok()) << P.str();
        EXPECT_TRUE(check_lemma_and_unit(S).ok()) << P.str();
        EXPECT_TRUE(check_gauge(S, 3).ok()) << P.str();
        if (P.datum->simply_laced()) {
            EXPECT_TRUE(check_quantum_paths(S, 3).ok()) << P.str();
            EXPECT_EQ(check_kz_equals_quantum(M, C, 3).verdict, Verdict::pass) << P.str();
        }
    }
}
