#include <gtest/gtest.h>

#include <thread>

#include "ajtorus/errors.hpp"
#include "ajtorus/jones.hpp"

namespace ajt {
namespace {

ULaurent t(int e) { return ULaurent::monomial(1, e); }

// Independent closed form (Morton): with j running over -(n-1), -(n-3), ..., n-1,
// (t^2 - t^-2) J(n) = t^(-pq(n^2-1)) sum_j (t^(pq j^2 - 2(p+q) j + 2) - t^(pq j^2 - 2(p-q) j - 2)).
ULaurent morton(const TorusKnot& k, long n) {
    const long p = k.p, q = k.q;
    ULaurent sum;
    for (long j = -(n - 1); j <= n - 1; j += 2) {
        sum += t(static_cast<int>(p * q * j * j - 2 * (p + q) * j + 2)) -
               t(static_cast<int>(p * q * j * j - 2 * (p - q) * j - 2));
    }
    ULaurent out;
    EXPECT_TRUE((t(2) - t(-2)).divides_into(sum.shifted(static_cast<int>(-p * q * (n * n - 1))), out));
    return out;
}

const std::vector<TorusKnot>& knots() {
    static const std::vector<TorusKnot> v = {{3, 2}, {5, 2}, {-5, 2}, {5, 3}, {-5, 3}, {7, 4}, {-7, 4}, {12, 5}, {20, 3}};
    return v;
}

TEST(Jones, SmallValues) {
    EXPECT_EQ(jones_torus({3, 2}, 2), t(-2) + t(-6) + t(-10) - t(-18));
    JonesSequence u(KnotExpr::unknot());
    for (long n = 1; n <= 3; ++n) EXPECT_EQ(u(n), bracket(n));
    EXPECT_EQ(bracket(3), t(4) + ULaurent(1) + t(-4));
    JonesSequence k(KnotExpr::torus({5, 3}));
    EXPECT_TRUE(k(0).is_zero());
    EXPECT_EQ(k(1), ULaurent(1));
}

TEST(Jones, RecurrencesMatchClosedForm) {
    for (const auto& k : knots()) {
        for (long n = 1; n <= 8; ++n) EXPECT_EQ(jones_torus(k, n), morton(k, n)) << k.to_string() << " n=" << n;
    }
}

TEST(Jones, MirrorAndAntisymmetry) {
    for (const auto& k : knots()) {
        const TorusKnot m(-k.p, k.q);
        JonesSequence s(KnotExpr::torus(k));
        for (long n = 1; n <= 6; ++n) {
            EXPECT_EQ(jones_torus(m, n), jones_torus(k, n).substitute_monomial(1, -1));
            EXPECT_EQ(s(-n), -s(n));
        }
    }
}

TEST(Jones, DegreeFormulas) {
    for (const auto& k : knots()) {
        for (long n = 1; n <= 8; ++n) {
            const ULaurent j = jones_torus(k, n);
            EXPECT_EQ(degree_bounds(KnotExpr::torus(k), n), std::make_pair(long(j.lowest_degree()), long(j.highest_degree())))
                << k.to_string() << " n=" << n;
        }
    }
    EXPECT_THROW(degree_bounds(KnotExpr::unknot(), 2), UnsupportedSignPattern);
    EXPECT_THROW(degree_bounds(KnotExpr::torus({3, 2}), 0), InvalidParams);
}

TEST(Jones, ConnectedSumsDivideExactly) {
    const std::vector<std::pair<TorusKnot, TorusKnot>> pairs = {
        {{5, 3}, {4, 3}}, {{3, 2}, {5, 2}}, {{5, 3}, {7, 2}}, {{-5, 3}, {-4, 3}}, {{3, 2}, {-5, 2}}, {{7, 4}, {-5, 3}}};
    for (const auto& [a, b] : pairs) {
        const KnotExpr e = KnotExpr::sum(a, b);
        JonesSequence s(e);
        for (long n = 1; n <= 6; ++n) {
            ULaurent q;
            ASSERT_TRUE(bracket(n).divides_into(jones_torus(a, n) * jones_torus(b, n), q));
            EXPECT_EQ(s(n), q);
            EXPECT_EQ(s(n), jones_connected_sum(b, a, n));
            if ((a.p > 0) == (b.p > 0)) {
                const ULaurent m = bracket(n) * s(n);
                EXPECT_EQ(degree_bounds(e, n), std::make_pair(long(m.lowest_degree()), long(m.highest_degree())));
            }
        }
    }
}

TEST(Jones, SymbolicBracketsEvaluate) {
    for (int k : {1, 2}) {
        for (int j = -2; j <= 3; ++j) {
            for (long n = 1; n <= 5; ++n) EXPECT_EQ(eval_m(bracket_symbolic(k, j), n), URational(bracket(k * n + j)));
        }
    }
    for (const auto& k : {TorusKnot(5, 3), TorusKnot(-7, 4), TorusKnot(12, 5)}) {
        for (int j = 0; j <= 4; ++j) {
            const RationalFunction d = DeltaSpec{k.p, k.q, j}.to_rational();
            for (long n = 1; n <= 4; ++n) EXPECT_EQ(eval_m(d, n), URational(delta_value(k.p, k.q, n + j)));
        }
    }
}

TEST(Jones, ParseKnotExpressions) {
    EXPECT_EQ(KnotExpr::parse("U"), KnotExpr::unknot());
    EXPECT_EQ(KnotExpr::parse(" T(3, 2) # T(-5,2) "), KnotExpr::sum({3, 2}, {-5, 2}));
    EXPECT_EQ(KnotExpr::parse("T(12,5)#T(20,3)").to_string(), "T(12,5)#T(20,3)");
    EXPECT_THROW(KnotExpr::parse("T(2,3)"), ParseError);
    EXPECT_THROW(KnotExpr::parse("T(6,3)"), ParseError);
    EXPECT_THROW(KnotExpr::parse("T(3,2)#"), ParseError);
    EXPECT_THROW(KnotExpr::parse("K(3,2)"), ParseError);
    EXPECT_THROW(TorusKnot(4, 2), InvalidParams);
}

TEST(Jones, SharedSequenceIsConsistentAcrossThreads) {
    auto s = std::make_shared<JonesSequence>(KnotExpr::sum({5, 3}, {4, 3}));
    std::vector<std::thread> pool;
    std::vector<ULaurent> got(6);
    for (int i = 0; i < 6; ++i) pool.emplace_back([&, i] { got[i] = (*s)(i + 1); });
    for (auto& th : pool) th.join();
    for (int i = 0; i < 6; ++i) EXPECT_EQ(got[i], jones_connected_sum({5, 3}, {4, 3}, i + 1));
}

}  // namespace
}  // namespace ajt
