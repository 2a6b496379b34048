#include <gtest/gtest.h>

#include "ajtorus/errors.hpp"
#include "ajtorus/minimality.hpp"
#include "support.hpp"

namespace ajt {
namespace {

ULaurent m(int e) { return ULaurent::monomial(1, e); }

// Cofactor expansion along the first row.
ULaurent expand(const LaurentMatrix& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    ULaurent sum;
    for (std::size_t j = 0; j < n; ++j) {
        LaurentMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<ULaurent> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) row.push_back(a[i][k]);
            }
            minor.push_back(row);
        }
        const ULaurent term = a[0][j] * expand(minor);
        sum += j % 2 == 0 ? term : -term;
    }
    return sum;
}

bool equal_up_to_sign(const ULaurent& a, const ULaurent& b) { return a == b || a == -b; }

TEST(Determinant, AgreesWithCofactorExpansion) {
    for (int n = 1; n <= 5; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            LaurentMatrix a(n, std::vector<ULaurent>(n));
            for (auto& row : a) {
                for (auto& x : row) x = test::uniform(0, 4) == 0 ? ULaurent() : test::random_ulaurent(2, 4, 3);
            }
            EXPECT_EQ(determinant(a), expand(a));
        }
    }
    // A singular matrix: two equal rows.
    LaurentMatrix s = {{m(1), m(-2) + 1}, {m(1), m(-2) + 1}};
    EXPECT_TRUE(determinant(s).is_zero());
}

TEST(Determinant, Submatrix) {
    LaurentMatrix a = {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
    const LaurentMatrix s = submatrix(a, {2, 0}, {1, 2});
    EXPECT_EQ(s, (LaurentMatrix{{8, 10}, {2, 3}}));
    EXPECT_EQ(determinant(a), ULaurent(-3));
}

TEST(Certificates, ClosedForms) {
    // C3 at (5,3,4,3): (M^-30 - M^-24)(M^-54 - 1).
    const MinimalityCertificate c3 = minimality_certificate(CaseId::C3, {5, 3}, {4, 3});
    EXPECT_TRUE(c3.verdict);
    bool found = false;
    for (const auto& d : c3.determinants) found = found || equal_up_to_sign(d, (m(-30) - m(-24)) * (m(-54) - 1));
    EXPECT_TRUE(found);
    // C9 at p = 3: -2 M^-12 + 3 M^-6 - 1.
    const MinimalityCertificate c9 = minimality_certificate(CaseId::C9, {3, 2}, {3, 2});
    ASSERT_EQ(c9.determinants.size(), 1u);
    EXPECT_TRUE(equal_up_to_sign(c9.determinants[0], -2 * m(-12) + 3 * m(-6) - 1));
}

TEST(Certificates, StatedFormsMatchAcrossParameters) {
    const std::vector<std::tuple<CaseId, TorusKnot, TorusKnot>> v = {
        {CaseId::C3, {7, 4}, {5, 3}}, {CaseId::C3, {-5, 3}, {-4, 3}}, {CaseId::C4, {7, 3}, {7, 3}},
        {CaseId::C5, {6, 5}, {10, 3}}, {CaseId::C6, {7, 4}, {5, 2}},  {CaseId::C7, {10, 3}, {15, 2}},
        {CaseId::C8, {5, 2}, {9, 2}}, {CaseId::C9, {7, 2}, {7, 2}},   {CaseId::C9, {-3, 2}, {-3, 2}},
    };
    for (const auto& [id, a, b] : v) {
        MinimalityCertificate c;
        ASSERT_NO_THROW(c = minimality_certificate(id, a, b)) << to_string(id) << " " << a.to_string() << b.to_string();
        EXPECT_TRUE(c.verdict);
        for (const auto& it : c.items) {
            EXPECT_TRUE(it.nonzero) << it.name;
            EXPECT_TRUE(it.matches_stated.value_or(true)) << to_string(id) << ": " << it.name;
        }
    }
}

TEST(Certificates, BoundarySubstitutionsVanish) {
    const MinimalityCertificate c3 = build_certificate(CaseId::C3, 12, 5, 20, 3);
    EXPECT_FALSE(c3.verdict);
    for (const auto& d : c3.determinants) EXPECT_TRUE(d.is_zero());
    const MinimalityCertificate c8 = build_certificate(CaseId::C8, 3, 2, 3, 2);
    EXPECT_FALSE(c8.verdict);
    for (const auto& d : c8.determinants) EXPECT_TRUE(d.is_zero());
    EXPECT_THROW(minimality_certificate(CaseId::C8, {3, 2}, {3, 2}), CertificateFailure);
}

TEST(Scan, UnknotHasAFirstOrderRecurrence) {
    ScanOptions opt;
    opt.d = 1;
    opt.m_window = {0, 2};
    const ScanReport r = minimality_scan(KnotExpr::unknot(), opt);
    EXPECT_EQ(r.kernel_dimension, 1);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(r.witness_exact);
    JonesSequence u(KnotExpr::unknot());
    for (long n = 1; n <= 30; ++n) EXPECT_TRUE(apply(*r.witness, [&](long k) { return u(k); }, n).is_zero());
    opt.d = 0;
    EXPECT_EQ(minimality_scan(KnotExpr::unknot(), opt).kernel_dimension, 0);
}

TEST(Scan, EmptyWindowHasTrivialKernel) {
    ScanOptions opt;
    opt.d = 2;
    opt.m_window = {3, 1};
    const ScanReport r = minimality_scan(KnotExpr::torus({3, 2}), opt);
    EXPECT_EQ(r.unknowns, 0);
    EXPECT_EQ(r.kernel_dimension, 0);
    EXPECT_FALSE(r.witness);
}

TEST(Scan, TorusKnotRecurrence) {
    // J_T(p,2) satisfies an inhomogeneous first-order recurrence, hence a
    // homogeneous one of order 2; nothing of order 1.
    ScanOptions opt;
    opt.m_window = {0, 12};
    opt.d = 1;
    EXPECT_EQ(minimality_scan(KnotExpr::torus({3, 2}), opt).kernel_dimension, 0);
    opt.d = 2;
    const ScanReport r = minimality_scan(KnotExpr::torus({3, 2}), opt);
    EXPECT_GE(r.kernel_dimension, 1);
    if (r.witness) EXPECT_TRUE(r.witness_exact);
}

TEST(Scan, CoherentWithCertificatesAndCandidates) {
    for (const auto& [k1, k2] : std::vector<std::pair<TorusKnot, TorusKnot>>{{{3, 2}, {3, 2}}, {{3, 2}, {5, 2}}}) {
        const CandidateAnnihilator c = build_candidate(k1, k2);
        ScanOptions opt;
        opt.m_window = support_m_window(c.op);
        opt.d = c.expected_l_degree - 1;
        const ScanReport below = minimality_scan(c.knot(), opt);
        if (below.kernel_dimension == 0) EXPECT_TRUE(minimality_certificate(c.id, c.k1, c.k2).verdict);
        EXPECT_EQ(below.kernel_dimension, 0);
    }
    const CandidateAnnihilator c9 = build_candidate({3, 2}, {3, 2});
    EXPECT_EQ(support_m_window(c9.op), std::make_pair(0, 34));
    ScanOptions opt;
    opt.m_window = {0, 34};
    opt.d = 3;
    const ScanReport at = minimality_scan(c9.knot(), opt);
    EXPECT_EQ(at.kernel_dimension, 1);
    ASSERT_TRUE(at.witness);
    EXPECT_EQ(*at.witness, normalize(c9.op));
}

}  // namespace
}  // namespace ajt
