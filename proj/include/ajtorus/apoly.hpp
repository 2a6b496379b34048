#pragma once

/**
 * @file apoly.hpp
 * @brief A-polynomials of torus knots and of connected sums of two torus knots.
 *
 * Every A-polynomial handled here is a product of binomials L*M^r - delta
 * with delta = +-1; quadratic factors M^(2k) L^2 - 1 are stored split as
 * (L*M^k - 1)(L*M^k + 1). Comparisons are made up to a unit +-M^k.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ajtorus/jones.hpp"
#include "ajtorus/laurent.hpp"

namespace ajt {

// Polynomial in L with Laurent-polynomial coefficients in M:
// L-exponent -> coefficient. No stored zero coefficients.
using MLPolynomial = std::map<int, ULaurent>;

MLPolynomial ml_mul(const MLPolynomial& a, const MLPolynomial& b);
// Integer-primitive representative: content 1, lowest M-exponent of the
// lowest L-band equal to 0, positive leading coefficient of the highest
// L-band.
MLPolynomial ml_unit_normalize(const MLPolynomial& a);
// a = +-M^k * b, up to a positive rational constant.
bool ml_equal_up_to_unit(const MLPolynomial& a, const MLPolynomial& b);
// (c, k) with a = c * M^k * b, if such a unit exists; both nonzero.
std::optional<std::pair<mpq_class, int>> ml_unit_ratio(const MLPolynomial& a, const MLPolynomial& b);
std::string ml_to_string(const MLPolynomial& a);

// L * M^r - delta.
struct BinomialFactor {
    int r = 0;
    int delta = 1;

    MLPolynomial expansion() const;
    friend bool operator==(const BinomialFactor& a, const BinomialFactor& b) {
        return a.r == b.r && a.delta == b.delta;
    }
};

// Deduplicated list, first occurrences kept in order.
std::vector<BinomialFactor> squarefree_binomials(const std::vector<BinomialFactor>& factors);

struct APoly {
    std::vector<BinomialFactor> factors;

    MLPolynomial expansion() const;
    // Product form with quadratic bands merged, e.g. "(L - 1)*(M^30*L^2 - 1)".
    std::string factored() const;
};

// Renders a factor list, merging L*M^r - 1 and L*M^r + 1 into M^(2r)*L^2 - 1.
std::string render_binomials(const std::vector<BinomialFactor>& factors);

APoly apoly_torus(const TorusKnot& k);
// Squarefree part of the product over all pairs of factors.
APoly apoly_sum_general(const APoly& a1, const APoly& a2);

enum class SumCase { I, II, III, IV, V, VI, VII, VIII, IX };
std::string to_string(SumCase c);
// The closed-form case for T(p,q)#T(a,b); components with q = 2 < b are
// swapped first. Opposite-sign cases are included.
SumCase sum_case(const TorusKnot& k1, const TorusKnot& k2);
APoly apoly_sum_lemma(const TorusKnot& k1, const TorusKnot& k2);

// A-polynomial of a knot expression (the unknot gives L - 1).
APoly apoly(const KnotExpr& k);

}  // namespace ajt
