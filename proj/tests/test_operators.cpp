#include <gtest/gtest.h>

#include "ajtorus/errors.hpp"
#include "ajtorus/jones.hpp"
#include "ajtorus/skew_operator.hpp"
#include "support.hpp"

namespace ajt {
namespace {

using test::random_rational;

SkewOperator random_operator(int max_l = 2) {
    SkewOperator::Coeffs c;
    for (int i = 0; i <= max_l; ++i) {
        if (test::uniform(0, 3) > 0) c[i] = RationalFunction(test::random_blaurent(2, 2, 3));
    }
    if (c.empty()) c[0] = RationalFunction(1);
    return SkewOperator::from_coeffs(c);
}

Sequence jones_of(const KnotExpr& k) {
    auto s = std::make_shared<JonesSequence>(k);
    return [s](long n) { return (*s)(n); };
}

TEST(SkewOperator, CommutationLaw) {
    const SkewOperator lm = SkewOperator::L() * SkewOperator(rf_m());
    const SkewOperator ml = SkewOperator(rf_monomial(1, 2, 1)) * SkewOperator::L();
    EXPECT_EQ(lm, ml);
    // L^j f = shift_m(f, j) L^j.
    for (int i = 0; i < 10; ++i) {
        const RationalFunction f = random_rational(2);
        const int j = test::uniform(1, 3);
        EXPECT_EQ(SkewOperator::L(j) * SkewOperator(f), SkewOperator::monomial(shift_m(f, j), j));
    }
}

TEST(SkewOperator, ProductIsAssociativeAndDistributive) {
    for (int i = 0; i < 15; ++i) {
        const SkewOperator a = random_operator(), b = random_operator(), c = random_operator();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) * c, a * c + b * c);
    }
}

TEST(SkewOperator, ApplicationIsComposition) {
    // (P Q) s = P (Q s): Q acts first.
    const Sequence s = jones_of(KnotExpr::torus({3, 2}));
    for (int i = 0; i < 8; ++i) {
        const SkewOperator p = random_operator(1), q = random_operator(1);
        const Sequence qs = [&](long n) {
            // Laurent-polynomial coefficients keep Q s a Laurent polynomial.
            const URational v = apply(q, s, n);
            EXPECT_TRUE(v.is_polynomial());
            return v.num();
        };
        for (long n = 1; n <= 4; ++n) EXPECT_EQ(apply(p * q, s, n), apply(p, qs, n));
    }
}

TEST(SkewOperator, NormalizeIsScaleInvariant) {
    for (int i = 0; i < 15; ++i) {
        const SkewOperator p = random_operator();
        const RationalFunction c = random_rational(2);
        EXPECT_EQ(normalize(p.left_scaled(c)), normalize(p));
        EXPECT_EQ(normalize(-p), normalize(p));
    }
    EXPECT_THROW(normalize(SkewOperator()), ZeroOperator);
}

TEST(SkewOperator, ParseRoundTrip) {
    for (int i = 0; i < 20; ++i) {
        const SkewOperator p = random_operator();
        EXPECT_EQ(SkewOperator::parse(p.to_string()), p) << p.to_string();
    }
}

TEST(SkewOperator, EvaluationAtMinusOne) {
    // (t^2 - t^-2)/(t + 1) * L + (t + 1) -> -4 L.
    const SkewOperator p = SkewOperator::monomial((rf_t(2) - rf_t(-2)) / (rf_t() + RationalFunction(1)), 1) +
                           SkewOperator(rf_t() + RationalFunction(1));
    const auto e = eval_operator_at_t_minus1(p);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e.at(1), URational(ULaurent(-4)));
    const SkewOperator pole = SkewOperator::monomial((rf_t() + RationalFunction(1)).inverse(), 2);
    EXPECT_THROW(eval_operator_at_t_minus1(pole), PoleAtMinusOne);
}

TEST(SkewOperator, UnknotRecurrence) {
    // From (t^2 - t^-2)[n] = M - M^-1: (t^2 M^2 - t^2)[n+1] = (t^4 M^2 - 1)[n].
    const SkewOperator p = SkewOperator::monomial(rf_monomial(1, 2, 2) - rf_t(2), 1) -
                           SkewOperator(rf_monomial(1, 4, 2) - RationalFunction(1));
    const Sequence u = jones_of(KnotExpr::unknot());
    for (long n = 1; n <= 10; ++n) EXPECT_TRUE(apply(p, u, n).is_zero()) << n;
}

}  // namespace
}  // namespace ajt
