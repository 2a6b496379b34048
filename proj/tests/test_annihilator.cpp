#include <gtest/gtest.h>

#include "ajtorus/annihilator.hpp"
#include "ajtorus/errors.hpp"
#include "support.hpp"

namespace ajt {
namespace {

MLPolynomial linear(int k, int sign) { return {{1, ULaurent(1)}, {0, ULaurent::monomial(-sign, k)}}; }

MLPolynomial product(const std::vector<LinearFactor>& fs) {
    MLPolynomial r{{0, ULaurent(1)}};
    for (const auto& f : fs) {
        for (int i = 0; i < f.multiplicity; ++i) r = ml_mul(r, linear(f.k, f.sign));
    }
    return r;
}

TEST(Classify, Cases) {
    EXPECT_EQ(classify({5, 3}, {4, 3}).id, CaseId::C3);
    EXPECT_EQ(classify({5, 3}, {5, 3}).id, CaseId::C4);
    EXPECT_EQ(classify({12, 5}, {20, 3}).id, CaseId::C5);
    EXPECT_EQ(classify({5, 3}, {7, 2}).id, CaseId::C6);
    EXPECT_EQ(classify({6, 5}, {15, 2}).id, CaseId::C7);
    EXPECT_EQ(classify({3, 2}, {5, 2}).id, CaseId::C8);
    EXPECT_EQ(classify({3, 2}, {3, 2}).id, CaseId::C9);
    EXPECT_EQ(classify({-5, 3}, {-4, 3}).id, CaseId::C3);
    const Classification swapped = classify({15, 2}, {6, 5});
    EXPECT_EQ(swapped.id, CaseId::C7);
    EXPECT_EQ(swapped.k1, TorusKnot(6, 5));
    EXPECT_THROW(classify({3, 2}, {-5, 2}), OppositeSigns);
}

TEST(Classify, Names) {
    for (int i = 0; i < 7; ++i) {
        const auto id = static_cast<CaseId>(i);
        EXPECT_EQ(case_from_string(to_string(id)), id);
    }
    EXPECT_THROW(case_from_string("C10"), ParseError);
    EXPECT_THROW(build_candidate(CaseId::C8, {5, 3}, {4, 3}), CaseMismatch);
}

struct Sample {
    TorusKnot k1, k2;
    CaseId id;
};

class FastCandidates : public ::testing::TestWithParam<Sample> {};

TEST_P(FastCandidates, AnnihilateAndMatchTheAPolynomial) {
    const Sample s = GetParam();
    const CandidateAnnihilator c = build_candidate(s.k1, s.k2);
    EXPECT_EQ(c.id, s.id);
    EXPECT_EQ(c.op.l_degree(), std::make_pair(0, expected_l_degree(s.id)));
    EXPECT_EQ(normalize(c.op).l_degree().second, expected_l_degree(s.id));
    for (const auto& [name, f] : c.aux) EXPECT_FALSE(f.is_zero()) << name;
    const AnnihilationCheck chk = check_annihilation(c, 1, 8);
    EXPECT_TRUE(chk.ok) << "residual at n = " << chk.failing_n;
    const AJComparison cmp = evaluate_and_compare(c);
    EXPECT_TRUE(cmp.match);
    EXPECT_TRUE(cmp.split.complete());
    EXPECT_TRUE(cmp.repeated.empty());
    // alpha(-1) is the A-polynomial up to a unit, independently of the
    // factor bookkeeping.
    EXPECT_TRUE(ml_equal_up_to_unit(cmp.alpha_cleared, apoly_sum_lemma(s.k1, s.k2).expansion()));
}

INSTANTIATE_TEST_SUITE_P(Samples, FastCandidates,
                         ::testing::Values(Sample{{3, 2}, {3, 2}, CaseId::C9}, Sample{{-5, 2}, {-5, 2}, CaseId::C9},
                                           Sample{{3, 2}, {5, 2}, CaseId::C8}, Sample{{-3, 2}, {-7, 2}, CaseId::C8},
                                           Sample{{5, 3}, {5, 3}, CaseId::C4}, Sample{{-4, 3}, {-4, 3}, CaseId::C4},
                                           Sample{{5, 3}, {4, 3}, CaseId::C3}, Sample{{7, 2}, {5, 3}, CaseId::C6}));

TEST(Candidates, KnownFactorizations) {
    // C8: (L - 1)(L + M^-6)(L + M^-10)(L - M^-16).
    AJComparison c8 = evaluate_and_compare(build_candidate({3, 2}, {5, 2}));
    EXPECT_EQ(product(c8.split.factors),
              ml_mul(ml_mul(linear(0, 1), linear(-6, -1)), ml_mul(linear(-10, -1), linear(-16, 1))));
    // C4: (L - 1)(L^2 - M^-30)(L^2 - M^-60).
    AJComparison c4 = evaluate_and_compare(build_candidate({5, 3}, {5, 3}));
    const MLPolynomial b30{{2, ULaurent(1)}, {0, -ULaurent::monomial(1, -30)}};
    const MLPolynomial b60{{2, ULaurent(1)}, {0, -ULaurent::monomial(1, -60)}};
    EXPECT_EQ(product(c4.split.factors), ml_mul(linear(0, 1), ml_mul(b30, b60)));
    EXPECT_EQ(render_linear_factors(c4.split.factors).size(), 3u);
}

TEST(Candidates, NormalizationIsScaleInvariant) {
    const CandidateAnnihilator c = build_candidate({3, 2}, {5, 2});
    const SkewOperator n = normalize(c.op);
    for (int i = 0; i < 5; ++i) {
        const RationalFunction s = test::random_rational(2);
        EXPECT_EQ(normalize(c.op.left_scaled(s)), n);
    }
}

TEST(Candidates, CorruptedOperatorFailsWithWitness) {
    const CandidateAnnihilator c = build_candidate({3, 2}, {3, 2});
    SkewOperator::Coeffs coeffs = c.op.coeffs();
    coeffs[1] = coeffs[1] + RationalFunction(1);
    const SkewOperator bad = SkewOperator::from_coeffs(coeffs);
    JonesSequence seq(c.knot());
    const AnnihilationCheck chk = check_annihilation(bad, [&](long n) { return seq(n); }, 1, 8);
    EXPECT_FALSE(chk.ok);
    EXPECT_EQ(chk.failing_n, 1);
    EXPECT_FALSE(chk.residual.is_zero());
}

TEST(Candidates, DenominatorCollapse) {
    // c(1 - L) with c having a pole at M = t^4 (n = 2) and nowhere else
    // annihilates every constant sequence.
    const RationalFunction c = RationalFunction(1) / (rf_m() - rf_t(4));
    const SkewOperator op = SkewOperator::from_coeffs({{0, c}, {1, -c}});
    const Sequence one = [](long) { return ULaurent(1); };
    EXPECT_THROW(check_annihilation(op, one, 1, 4), DenominatorCollapse);
    const AnnihilationCheck chk = check_annihilation(op, one, 1, 4, true);
    EXPECT_TRUE(chk.ok);
    EXPECT_EQ(chk.skipped, std::vector<long>{2});
}

TEST(Candidates, LinearFactorRendering) {
    const std::vector<LinearFactor> fs = {{-60, 1, 2}, {-60, -1, 2}, {0, 1, 1}, {-30, -1, 1}};
    const auto r = render_linear_factors(fs);
    ASSERT_EQ(r.size(), 3u);
    EXPECT_EQ(r[0], "(L^2 - M^-120)^2");
    EXPECT_EQ(r[1], "L - 1");
    EXPECT_EQ(r[2], "L + M^-30");
    const LinearSplit s = split_linear_factors(product(fs));
    EXPECT_TRUE(s.complete());
    EXPECT_EQ(product(s.factors), product(fs));
}

}  // namespace
}  // namespace ajt
