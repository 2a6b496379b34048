#include <gtest/gtest.h>

#include "ajtorus/apoly.hpp"
#include "ajtorus/cli.hpp"
#include "ajtorus/errors.hpp"
#include "support.hpp"

namespace ajt {
namespace {

MLPolynomial linear(int r, int delta) { return BinomialFactor{r, delta}.expansion(); }

TorusKnot random_knot() {
    for (;;) {
        const int q = test::uniform(2, 5), p = test::uniform(q + 1, 13) * (test::uniform(0, 1) ? 1 : -1);
        if (std::gcd(std::abs(p), q) == 1) return {p, q};
    }
}

bool same_up_to_signed_unit(const MLPolynomial& a, const MLPolynomial& b) {
    const auto u = ml_unit_ratio(a, b);
    return u && (u->first == 1 || u->first == -1);
}

TEST(APoly, TorusKnots) {
    // (L - 1)(L M^(2p) + 1) for q = 2, (L - 1)(L^2 M^(2pq) - 1) otherwise.
    EXPECT_EQ(apoly_torus({3, 2}).expansion(), ml_mul(linear(0, 1), linear(6, -1)));
    EXPECT_EQ(apoly_torus({5, 3}).expansion(), ml_mul(linear(0, 1), ml_mul(linear(15, 1), linear(15, -1))));
    EXPECT_EQ(apoly_torus({3, 2}).factored(), "(L - 1)*(M^6*L + 1)");
    EXPECT_EQ(apoly(KnotExpr::unknot()).expansion(), linear(0, 1));
}

TEST(APoly, CaseTable) {
    EXPECT_EQ(sum_case({5, 3}, {4, 3}), SumCase::I);
    EXPECT_EQ(sum_case({12, 5}, {20, 3}), SumCase::II);
    EXPECT_EQ(sum_case({5, 3}, {-5, 3}), SumCase::III);
    EXPECT_EQ(sum_case({5, 3}, {7, 2}), SumCase::IV);
    EXPECT_EQ(sum_case({15, 2}, {6, 5}), SumCase::V);
    EXPECT_EQ(sum_case({6, 5}, {-15, 2}), SumCase::VI);
    EXPECT_EQ(sum_case({3, 2}, {5, 2}), SumCase::VII);
    EXPECT_EQ(sum_case({3, 2}, {3, 2}), SumCase::VIII);
    EXPECT_EQ(sum_case({3, 2}, {-3, 2}), SumCase::IX);
}

TEST(APoly, CaseTableAgreesWithProductConstruction) {
    for (int i = 0; i < 300; ++i) {
        const TorusKnot a = random_knot(), b = random_knot();
        const MLPolynomial general = apoly_sum_general(apoly_torus(a), apoly_torus(b)).expansion();
        EXPECT_TRUE(same_up_to_signed_unit(general, apoly_sum_lemma(a, b).expansion()))
            << a.to_string() << "#" << b.to_string();
        EXPECT_EQ(apoly_sum_lemma(a, b).expansion(), apoly_sum_lemma(b, a).expansion());
    }
}

TEST(APoly, UnitNormalization) {
    for (int i = 0; i < 50; ++i) {
        const MLPolynomial a = apoly_sum_lemma(random_knot(), random_knot()).expansion();
        const int k = test::uniform(-20, 20);
        mpq_class c(test::uniform(1, 9) * (test::uniform(0, 1) ? 1 : -1), test::uniform(1, 5));
        c.canonicalize();
        MLPolynomial b;
        for (const auto& [e, x] : a) b.emplace(e, x.scaled(c).shifted(k));
        EXPECT_TRUE(ml_equal_up_to_unit(a, b));
        const auto u = ml_unit_ratio(b, a);
        ASSERT_TRUE(u);
        EXPECT_EQ(u->first, c);
        EXPECT_EQ(u->second, k);
    }
    EXPECT_FALSE(ml_equal_up_to_unit(linear(2, 1), linear(4, 1)));
}

TEST(APoly, NonBinomialInputIsRejected) {
    const APoly bad{{{3, 2}}};
    EXPECT_THROW(apoly_sum_general(bad, apoly_torus({3, 2})), NonBinomialInput);
}

TEST(APoly, Command) {
    CommandResult r = run_command([] { return cmd_apoly("T(5,3)#T(4,3)", Format::Text); });
    EXPECT_EQ(r.exit_code, kExitOk);
    EXPECT_NE(r.out.find("case (i)"), std::string::npos);
    EXPECT_NE(r.out.find("cross-check: PASS"), std::string::npos);
    r = run_command([] { return cmd_apoly("T(5,3)#T(-4,3)", Format::Json); });
    EXPECT_EQ(r.exit_code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("note"), "no annihilator construction in scope");
    EXPECT_TRUE(j.at("cross_check").get<bool>());
    r = run_command([] { return cmd_apoly("T(3,2)", Format::Json); });
    EXPECT_EQ(nlohmann::json::parse(r.out).at("factored"), "(L - 1)*(M^6*L + 1)");
    EXPECT_EQ(run_command([] { return cmd_apoly("T(3,2)#", Format::Text); }).exit_code, kExitUsage);
}

}  // namespace
}  // namespace ajt
