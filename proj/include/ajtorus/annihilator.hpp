#pragma once

/**
 * @file annihilator.hpp
 * @brief Candidate recurrence polynomials for T(p,q)#T(a,b) with p, a of the
 * same sign, their verification, and their evaluation at t = -1.
 *
 * Seven constructions cover the same-sign connected sums:
 *     C3  q, b > 2, pq != ab             L-degree 7
 *     C4  (a, b) = (p, q), q > 2         L-degree 5
 *     C5  q, b > 2, pq = ab, p != a      L-degree 7
 *     C6  q > 2, b = 2, pq != 2a         L-degree 6
 *     C7  q > 2, b = 2, pq = 2a          L-degree 6
 *     C8  q = b = 2, p != a              L-degree 4
 *     C9  q = b = 2, p = a               L-degree 3
 * Each operator is assembled as a product of simple factors, written left
 * to right in the order they act last to first; the rational functions
 * inverted along the way are kept in CandidateAnnihilator::aux.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ajtorus/apoly.hpp"
#include "ajtorus/jones.hpp"
#include "ajtorus/skew_operator.hpp"

namespace ajt {

enum class CaseId { C3, C4, C5, C6, C7, C8, C9 };

std::string to_string(CaseId id);
// Inverse of to_string; ParseError on unknown names.
CaseId case_from_string(const std::string& s);
int expected_l_degree(CaseId id);

struct Classification {
    CaseId id;
    TorusKnot k1;  // for C6/C7 the component with q > 2
    TorusKnot k2;
};

// OppositeSigns when p and a differ in sign.
Classification classify(const TorusKnot& k1, const TorusKnot& k2);

struct CandidateAnnihilator {
    CaseId id;
    TorusKnot k1;
    TorusKnot k2;
    SkewOperator op;
    std::map<std::string, RationalFunction> aux;
    int expected_l_degree = 0;

    KnotExpr knot() const { return KnotExpr::sum(k1, k2); }
};

// Builds the candidate for an explicitly named case; CaseMismatch when the
// parameters belong to another case, AuxVanishes when a function that has
// to be inverted is zero.
CandidateAnnihilator build_candidate(CaseId id, const TorusKnot& k1, const TorusKnot& k2);
CandidateAnnihilator build_candidate(const TorusKnot& k1, const TorusKnot& k2);

struct AnnihilationCheck {
    bool ok = true;
    long failing_n = 0;           // first n with a nonzero residual
    URational residual;           // the residual at failing_n
    std::vector<long> skipped;    // n skipped after a denominator collapse
};

// Evaluates op applied to s at every n in [n_lo, n_hi]. A coefficient whose
// denominator vanishes at M = t^(2n) raises DenominatorCollapse unless
// skip_collapse is set, in which case that n is recorded and skipped.
AnnihilationCheck check_annihilation(const SkewOperator& op, const Sequence& s, long n_lo, long n_hi,
                                     bool skip_collapse = false);
AnnihilationCheck check_annihilation(const CandidateAnnihilator& c, long n_lo, long n_hi,
                                     bool skip_collapse = false);

// (L - sign * M^k)^multiplicity.
struct LinearFactor {
    int k = 0;
    int sign = 1;
    int multiplicity = 1;

    BinomialFactor binomial() const { return {-k, sign}; }
};

// Factorization of a polynomial in L over Q[M^{+-1}] into linear factors
// L -+ M^k times a cofactor. The cofactor has L-degree 0 when the split is
// complete.
struct LinearSplit {
    std::vector<LinearFactor> factors;
    MLPolynomial cofactor;
    bool complete() const { return cofactor.size() == 1 && cofactor.begin()->first == 0; }
};

LinearSplit split_linear_factors(const MLPolynomial& p);

// Renders L - sign*M^k; a pair L -+ M^k of equal multiplicity is rendered
// as the quadratic band L^2 - M^(2k).
std::vector<std::string> render_linear_factors(const std::vector<LinearFactor>& fs);

struct AJComparison {
    std::map<int, URational> alpha_at_minus1;  // coefficients in Q(M)
    MLPolynomial alpha_cleared;                // denominators and content cleared
    LinearSplit split;
    std::vector<LinearFactor> repeated;        // multiplicity > 1
    MLPolynomial squarefree_part;
    APoly a_polynomial;
    bool match = false;
    std::string unit;                          // squarefree_part = unit * A
};

// PoleAtMinusOne if a coefficient has no limit at t = -1, DegreeDrop if
// the L-span shrinks there.
AJComparison evaluate_and_compare(const CandidateAnnihilator& c);

std::string render_alpha_at_minus1(const std::map<int, URational>& alpha);

}  // namespace ajt
