#pragma once

/**
 * @file minimality.hpp
 * @brief Evidence that the candidate annihilators have minimal L-degree.
 *
 * Two independent sources:
 *  - certificates: the reduced linear systems for the unknown coefficients
 *    D_i of a hypothetical lower-degree annihilator, stored per case as
 *    matrices over Z[M^{+-1}] (plus a few symbolic quantities in (t, M)),
 *    whose determinants must not vanish;
 *  - a brute-force scan for annihilators of bounded L-degree whose
 *    coefficients are polynomials in M over a fixed exponent window with
 *    arbitrary coefficients in Q(t).
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ajtorus/annihilator.hpp"

namespace ajt {

using LaurentMatrix = std::vector<std::vector<ULaurent>>;

// Fraction-free (Bareiss) determinant of a square matrix over Q[M^{+-1}].
ULaurent determinant(const LaurentMatrix& m);
// Sub-matrix with the given rows and columns, in the given order.
LaurentMatrix submatrix(const LaurentMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

struct CertificateItem {
    std::string name;
    std::string value;                   // rendered computed quantity
    bool nonzero = false;
    std::optional<std::string> stated;   // closed form it is expected to equal
    std::optional<bool> matches_stated;  // equal, or equal up to sign
};

struct MinimalityCertificate {
    CaseId id;
    std::vector<std::pair<std::string, LaurentMatrix>> matrices;  // reduced systems at t = -1
    std::vector<ULaurent> determinants;
    std::vector<CertificateItem> items;
    bool verdict = false;
};

// Instantiates the case's systems at (p, q, a, b) without checking that the
// parameters belong to the case; the verdict records whether every
// determinant and coefficient that has to be nonzero is nonzero.
MinimalityCertificate build_certificate(CaseId id, int p, int q, int a, int b);
// As above for a classified pair; CertificateFailure when the verdict is false.
MinimalityCertificate minimality_certificate(CaseId id, const TorusKnot& k1, const TorusKnot& k2);

struct ScanOptions {
    int d = 1;                          // L-degree bound
    std::pair<int, int> m_window{0, 0}; // exponents of M allowed in each coefficient
    std::pair<long, long> n_range{0, -1};  // empty: chosen from the number of unknowns
    long exact_check_n = 8;             // witness checked exactly for n = 1..exact_check_n
    unsigned long long seed = 20240611;
};

struct ScanReport {
    KnotExpr knot;
    int l_degree_bound = 0;
    std::pair<int, int> m_window{0, 0};
    std::pair<long, long> n_range{0, 0};
    int unknowns = 0;
    int kernel_dimension = 0;             // over Q(t)
    std::optional<SkewOperator> witness;  // normalized, when the kernel is one-dimensional
    long verified_up_to = 0;              // witness vanishes modulo the scan prime up to here
    bool witness_exact = false;           // and exactly for n = 1..exact_check_n
    std::string note;
};

// Annihilators sum_{i=0..d} sum_{k in window} c_{i,k}(t) M^k L^i of J_knot on
// n_range, computed through evaluations t = theta in a prime field. A trivial
// kernel at one point proves that none exists over Q(t) (on that range).
// A one-dimensional kernel is interpolated back to Z[t, M], checked exactly
// on small n and modulo the prime on n_range extended by 50%.
ScanReport minimality_scan(const KnotExpr& knot, const ScanOptions& opt);

// Smallest M-window containing the support of every coefficient of
// normalize(op).
std::pair<int, int> support_m_window(const SkewOperator& op);

}  // namespace ajt
