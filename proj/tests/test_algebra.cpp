#include <gtest/gtest.h>

#include "ajtorus/errors.hpp"
#include "ajtorus/gcd.hpp"
#include "ajtorus/parse.hpp"
#include "support.hpp"

namespace ajt {
namespace {

using test::random_blaurent;
using test::random_rational;
using test::random_ulaurent;

TEST(ULaurent, RingLaws) {
    for (int i = 0; i < 200; ++i) {
        const ULaurent a = random_ulaurent(), b = random_ulaurent(), c = random_ulaurent();
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(ULaurent, ExactDivisionRecoversFactor) {
    for (int i = 0; i < 100; ++i) {
        const ULaurent a = random_ulaurent(), b = random_ulaurent();
        ULaurent q;
        ASSERT_TRUE(b.divides_into(a * b, q));
        EXPECT_EQ(q, a);
    }
    ULaurent q;
    EXPECT_TRUE(ULaurent::monomial(3, 2).divides_into(ULaurent(1) + ULaurent::monomial(1, 1), q));  // a unit
    EXPECT_FALSE((ULaurent(1) + ULaurent::monomial(1, 1)).divides_into(ULaurent(1) + ULaurent::monomial(1, 2), q));
}

TEST(ULaurent, Rendering) {
    const ULaurent u = ULaurent::monomial(1, -2) + ULaurent::monomial(1, -6) + ULaurent::monomial(1, -10) -
                       ULaurent::monomial(1, -18);
    EXPECT_EQ(u.to_string("t"), "t^-2 + t^-6 + t^-10 - t^-18");
}

TEST(Gcd, UnivariateDividesAndIsMaximal) {
    for (int i = 0; i < 60; ++i) {
        const ULaurent a = random_ulaurent(3, 4), b = random_ulaurent(3, 4), c = random_ulaurent(3, 4);
        const ULaurent g = gcd(a * c, b * c);
        ULaurent q;
        EXPECT_TRUE(g.divides_into(a * c, q));
        EXPECT_TRUE(g.divides_into(b * c, q));
        EXPECT_TRUE(c.divides_into(g, q)) << "gcd misses the common factor " << c.to_string("x");
    }
}

TEST(Gcd, BivariateDividesAndIsMaximal) {
    for (int i = 0; i < 40; ++i) {
        const BLaurent a = random_blaurent(3, 3), b = random_blaurent(3, 3), c = random_blaurent(3, 3);
        const BLaurent g = gcd(a * c, b * c);
        BLaurent q;
        EXPECT_TRUE(g.divides_into(a * c, q));
        EXPECT_TRUE(g.divides_into(b * c, q));
        EXPECT_TRUE(c.divides_into(g, q));
    }
}

TEST(RationalFunction, FieldLaws) {
    for (int i = 0; i < 40; ++i) {
        const RationalFunction x = random_rational(), y = random_rational(), z = random_rational();
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x / y) * y, x);
        EXPECT_EQ(x * x.inverse(), RationalFunction(1));
    }
    EXPECT_THROW(RationalFunction().inverse(), ZeroInversion);
}

TEST(RationalFunction, ShiftAndEvaluationCommute) {
    for (int i = 0; i < 30; ++i) {
        const RationalFunction x = RationalFunction(random_blaurent()) / RationalFunction(random_blaurent(2));
        const int j = test::uniform(-3, 3), k = test::uniform(-3, 3);
        EXPECT_EQ(shift_m(shift_m(x, j), k), shift_m(x, j + k));
        for (long n = 1; n <= 3; ++n) {
            try {
                EXPECT_EQ(eval_m(shift_m(x, j), n), eval_m(x, n + j));
            } catch (const DenominatorCollapse&) {
            }
        }
    }
}

TEST(RationalFunction, DenominatorCollapseIsReported) {
    // 1 / (M - t^4) has a pole exactly at n = 2.
    const RationalFunction x = RationalFunction(1) / (rf_m() - rf_t(4));
    EXPECT_NO_THROW(eval_m(x, 1));
    EXPECT_THROW(eval_m(x, 2), DenominatorCollapse);
}

TEST(Parse, PrintParseRoundTrip) {
    for (int i = 0; i < 50; ++i) {
        const RationalFunction x = random_rational();
        EXPECT_EQ(parse_rational_function(to_string(x)), x) << to_string(x);
    }
    EXPECT_EQ(parse_laurent("3*t^-2*M^4 - 1"), BLaurent::monomial(3, -2, 4) - BLaurent(1));
    EXPECT_THROW(parse_laurent("3*t^"), ParseError);
    EXPECT_THROW(parse_laurent("1/(t+1)"), ParseError);
}

TEST(Limit, TPlusOneCancellation) {
    // (t^2 - t^-2) / (t + 1) -> -4.
    const RationalFunction x = (rf_t(2) - rf_t(-2)) / (rf_t() + RationalFunction(1));
    const Limit l = limit_at_t_minus1(x);
    ASSERT_TRUE(l.finite());
    EXPECT_EQ(l.value, URational(ULaurent(-4)));
    // 1 / (t + 1)^2 diverges with order 2.
    const RationalFunction y = (rf_t() + RationalFunction(1)).pow(-2);
    const Limit ly = limit_at_t_minus1(y);
    EXPECT_FALSE(ly.finite());
    EXPECT_EQ(ly.pole_order, 2);
}

TEST(Limit, AgreesWithSubstitutionWhenRegular) {
    for (int i = 0; i < 30; ++i) {
        const BLaurent n = random_blaurent(), d = random_blaurent();
        if (d.at_t_minus1().is_zero()) continue;
        const Limit l = limit_at_t_minus1(RationalFunction(n) / RationalFunction(d));
        ASSERT_TRUE(l.finite());
        EXPECT_EQ(l.value, URational(n.at_t_minus1(), d.at_t_minus1()));
    }
}

}  // namespace
}  // namespace ajt
