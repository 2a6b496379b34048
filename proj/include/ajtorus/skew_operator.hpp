#pragma once

/**
 * @file skew_operator.hpp
 * @brief The extended quantum torus: Laurent polynomials in L over Q(t, M).
 *
 * Multiplication follows f(t,M) L^j * g(t,M) L^k = f(t,M) g(t, t^(2j) M) L^(j+k).
 * Operators act on sequences from the left:
 *     (M s)(n) = t^(2n) s(n),   (L s)(n) = s(n + 1),
 * so a product P * Q applies Q first.
 */

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "ajtorus/ratfunc.hpp"

namespace ajt {

// A sequence n -> Q[t^{+-1}], e.g. a colored Jones function.
using Sequence = std::function<ULaurent(long)>;

class SkewOperator {
public:
    using Coeffs = std::map<int, RationalFunction>;

    SkewOperator() = default;
    SkewOperator(RationalFunction c);  // NOLINT(google-explicit-constructor)
    SkewOperator(long c) : SkewOperator(RationalFunction(c)) {}  // NOLINT(google-explicit-constructor)
    static SkewOperator monomial(RationalFunction c, int l_exp);
    static SkewOperator L(int k = 1) { return monomial(RationalFunction(1), k); }
    static SkewOperator from_coeffs(Coeffs c);

    bool is_zero() const { return c_.empty(); }
    const Coeffs& coeffs() const { return c_; }
    RationalFunction coeff(int l_exp) const;
    // (lowest, highest) L-exponent; ZeroOperator on the zero operator.
    std::pair<int, int> l_degree() const;

    SkewOperator operator-() const;
    friend SkewOperator operator+(const SkewOperator& a, const SkewOperator& b);
    friend SkewOperator operator-(const SkewOperator& a, const SkewOperator& b) { return a + (-b); }
    friend SkewOperator operator*(const SkewOperator& a, const SkewOperator& b);
    friend bool operator==(const SkewOperator& a, const SkewOperator& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SkewOperator& a, const SkewOperator& b) { return !(a == b); }

    // c * P for a scalar c (no twisting: the scalar sits on the left).
    SkewOperator left_scaled(const RationalFunction& c) const;

    std::string to_string() const;
    static SkewOperator parse(std::string_view text);

private:
    Coeffs c_;
};

inline SkewOperator op_mul(const SkewOperator& a, const SkewOperator& b) { return a * b; }

// Sum_i eval_M(c_i, n) * s(n + i), reduced.
URational apply(const SkewOperator& p, const Sequence& s, long n);

// Left multiple of P with coprime, integer-primitive Laurent polynomial
// coefficients, lowest L-exponent 0, no common monomial factor (lowest t- and
// M-exponents over all coefficients are 0), and a positive coefficient on
// the lexicographically smallest monomial of the leading coefficient.
SkewOperator normalize(const SkewOperator& p);

// Coefficient-wise limit t -> -1: a polynomial in L over Q(M), zero
// coefficients dropped. PoleAtMinusOne names the first offending exponent.
std::map<int, URational> eval_operator_at_t_minus1(const SkewOperator& p);

}  // namespace ajt
