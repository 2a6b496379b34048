#pragma once

/**
 * @file laurent.hpp
 * @brief Exact Laurent polynomials over Q.
 *
 * ULaurent is a dense univariate Laurent polynomial; it is used both for
 * polynomials in t (colored Jones values) and for polynomials in M (values
 * at t = -1).  BLaurent is a sparse Laurent polynomial in (t, M).
 *
 * Both types store integer numerators over a single positive common
 * denominator.  The representation is canonical:
 * - no stored zero coefficients (dense storage has nonzero end points),
 * - gcd(content of the numerators, denominator) = 1,
 * - zero is the empty polynomial with denominator 1.
 * Hence two values are equal iff their representations are identical.
 */

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ajt {

class ULaurent {
public:
    ULaurent() = default;
    ULaurent(long c);  // NOLINT(google-explicit-constructor)
    ULaurent(const mpz_class& c);  // NOLINT(google-explicit-constructor)
    ULaurent(const mpq_class& c);  // NOLINT(google-explicit-constructor)

    static ULaurent monomial(const mpq_class& c, int e);
    // Builds sum_k coeffs[k] x^(lo + k) / den and canonicalizes.
    static ULaurent from_dense(int lo, std::vector<mpz_class> coeffs, mpz_class den = 1);
    static ULaurent from_terms(const std::map<int, mpq_class>& terms);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    bool is_monomial() const;
    // Lowest / highest stored exponent; ZeroPolynomial when zero.
    int lowest_degree() const;
    int highest_degree() const;
    std::size_t size() const { return c_.size(); }

    mpq_class coeff(int e) const;
    std::map<int, mpq_class> terms() const;
    std::size_t term_count() const;

    // Raw access to the canonical representation.
    int lo() const { return lo_; }
    const std::vector<mpz_class>& numerators() const { return c_; }
    const mpz_class& denominator() const { return den_; }

    ULaurent operator-() const;
    ULaurent& operator+=(const ULaurent& o);
    ULaurent& operator-=(const ULaurent& o);
    ULaurent& operator*=(const ULaurent& o);
    friend ULaurent operator+(ULaurent a, const ULaurent& b) { return a += b; }
    friend ULaurent operator-(ULaurent a, const ULaurent& b) { return a -= b; }
    friend ULaurent operator*(const ULaurent& a, const ULaurent& b);
    friend bool operator==(const ULaurent& a, const ULaurent& b) {
        return a.lo_ == b.lo_ && a.den_ == b.den_ && a.c_ == b.c_;
    }
    friend bool operator!=(const ULaurent& a, const ULaurent& b) { return !(a == b); }

    ULaurent scaled(const mpq_class& s) const;
    // Multiplies by x^k.
    ULaurent shifted(int k) const;
    // Substitutes x -> s * x^k (k may be negative, s rational nonzero).
    ULaurent substitute_monomial(const mpq_class& s, int k) const;
    mpq_class evaluate(const mpq_class& x) const;
    ULaurent pow(unsigned e) const;

    // Exact division; returns false when the quotient is not a Laurent polynomial.
    bool divides_into(const ULaurent& num, ULaurent& quotient) const;

    // The numerator polynomial with x^lo and the denominator stripped,
    // divided by its integer content, and with positive leading coefficient.
    ULaurent primitive_part() const;
    // Rational factor c with *this = c * x^lo * primitive_part().
    mpq_class content() const;

    std::string to_string(const std::string& var = "t") const;

private:
    int lo_ = 0;
    std::vector<mpz_class> c_;
    mpz_class den_ = 1;

    void canonicalize();
};

// Product of dense integer coefficient vectors; switches to Kronecker
// substitution through a single GMP multiplication for large inputs.
std::vector<mpz_class> mul_dense(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);

// Packs (M-exponent, t-exponent) so that key order is lexicographic in (M, t).
using MonoKey = std::int64_t;

inline MonoKey mono_key(int t_exp, int m_exp) {
    return (static_cast<std::int64_t>(m_exp) << 32) + (static_cast<std::int64_t>(t_exp) + 0x80000000LL);
}
inline int key_t(MonoKey k) {
    return static_cast<int>((k & 0xFFFFFFFFLL) - 0x80000000LL);
}
inline int key_m(MonoKey k) {
    return static_cast<int>((k - ((k & 0xFFFFFFFFLL))) >> 32);
}

class BLaurent {
public:
    struct Term {
        MonoKey key;
        mpz_class c;
        int t() const { return key_t(key); }
        int m() const { return key_m(key); }
    };

    BLaurent() = default;
    BLaurent(long c);  // NOLINT(google-explicit-constructor)
    BLaurent(const mpz_class& c);  // NOLINT(google-explicit-constructor)
    BLaurent(const mpq_class& c);  // NOLINT(google-explicit-constructor)
    static BLaurent monomial(const mpq_class& c, int t_exp, int m_exp);
    static BLaurent t_pow(int e) { return monomial(1, e, 0); }
    static BLaurent m_pow(int e) { return monomial(1, 0, e); }
    // Builds from unsorted integer terms over a common denominator; merges duplicates.
    static BLaurent from_terms(std::vector<Term> terms, mpz_class den = 1);
    // Embeds a univariate polynomial as a polynomial in t (var_is_t) or in M.
    static BLaurent from_univariate(const ULaurent& u, bool var_is_t);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const mpz_class& denominator() const { return den_; }
    mpq_class coeff(int t_exp, int m_exp) const;

    int min_t() const;
    int max_t() const;
    int min_m() const;
    int max_m() const;

    BLaurent operator-() const;
    BLaurent& operator+=(const BLaurent& o);
    BLaurent& operator-=(const BLaurent& o);
    friend BLaurent operator+(BLaurent a, const BLaurent& b) { return a += b; }
    friend BLaurent operator-(BLaurent a, const BLaurent& b) { return a -= b; }
    friend BLaurent operator*(const BLaurent& a, const BLaurent& b);
    BLaurent& operator*=(const BLaurent& o) { return *this = *this * o; }
    friend bool operator==(const BLaurent& a, const BLaurent& b);
    friend bool operator!=(const BLaurent& a, const BLaurent& b) { return !(a == b); }

    BLaurent scaled(const mpq_class& s) const;
    BLaurent mul_monomial(int t_exp, int m_exp) const;
    BLaurent pow(unsigned e) const;
    // The substitution M -> t^(2j) M.
    BLaurent shift_m(int j) const;
    // The substitution M -> t^(2n); result is a polynomial in t.
    ULaurent eval_m(long n) const;
    // The substitution t -> -1; result is a polynomial in M.
    ULaurent at_t_minus1() const;
    // Substitutes integer/rational values for both variables.
    mpq_class evaluate(const mpq_class& t, const mpq_class& m) const;
    // Coefficients grouped by power of t: t^e -> polynomial in M.
    std::map<int, ULaurent> by_t() const;
    // Coefficients grouped by power of M: M^e -> polynomial in t.
    std::map<int, ULaurent> by_m() const;

    // Exact division; false when the quotient is not a Laurent polynomial.
    bool divides_into(const BLaurent& num, BLaurent& quotient) const;

    // Integer content removal: *this = content() * primitive_part() where
    // primitive_part has integer coprime coefficients and a positive
    // coefficient on its lexicographically smallest monomial.
    mpq_class content() const;
    BLaurent primitive_part() const;
    // Same value with all integer numerators (multiplied by the denominator).
    BLaurent integer_scaled() const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;  // sorted by key, nonzero coefficients
    mpz_class den_ = 1;

    void canonicalize();
};

}  // namespace ajt
