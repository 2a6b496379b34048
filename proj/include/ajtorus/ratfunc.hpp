#pragma once

/**
 * @file ratfunc.hpp
 * @brief Reduced fractions of Laurent polynomials: Q(t, M) and Q(x).
 *
 * Canonical form of num/den:
 * - gcd(num, den) = 1 as polynomials,
 * - den is an integer polynomial with content 1, no monomial factor and a
 *   positive coefficient on its lexicographically smallest monomial
 *   (univariate: positive leading coefficient),
 * - zero is 0/1.
 * Equal values therefore have identical representations.
 */

#include <optional>
#include <string>
#include <utility>

#include "ajtorus/errors.hpp"
#include "ajtorus/gcd.hpp"
#include "ajtorus/laurent.hpp"

namespace ajt {

namespace detail {

inline void clear_den_monomial(ULaurent& num, ULaurent& den) {
    int k = den.lo();
    if (k != 0) {
        den = den.shifted(-k);
        num = num.shifted(-k);
    }
}

inline void clear_den_monomial(BLaurent& num, BLaurent& den) {
    int mt = den.min_t(), mm = den.min_m();
    if (mt != 0 || mm != 0) {
        den = den.mul_monomial(-mt, -mm);
        num = num.mul_monomial(-mt, -mm);
    }
}

template <class P>
P exact_quotient(const P& num, const P& d) {
    P q;
    if (!d.divides_into(num, q)) throw InexactDivision("exact division failed during fraction reduction");
    return q;
}

}  // namespace detail

template <class P>
class Frac {
public:
    Frac() : den_(1) {}
    Frac(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    Frac(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    Frac(P p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Frac(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ZeroInversion();
        reduce_full();
    }

    const P& num() const { return num_; }
    const P& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == P(1); }

    Frac operator-() const { return raw(-num_, den_); }

    friend Frac operator+(const Frac& a, const Frac& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) {
            if (a.is_polynomial()) return Frac(a.num_ + b.num_);
            return reduce_against(a.num_ + b.num_, a.den_);
        }
        if (a.is_polynomial()) return raw(a.num_ * b.den_ + b.num_, b.den_);
        if (b.is_polynomial()) return raw(b.num_ * a.den_ + a.num_, a.den_);
        P g = gcd(a.den_, b.den_);
        if (g == P(1)) {
            return raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        }
        P ad = detail::exact_quotient(a.den_, g), bd = detail::exact_quotient(b.den_, g);
        P num = a.num_ * bd + b.num_ * ad;
        // gcd(num, ad * bd) = 1; only the shared factor g can cancel.
        P h = gcd(num, g);
        if (!(h == P(1))) {
            num = detail::exact_quotient(num, h);
            g = detail::exact_quotient(g, h);
        }
        return raw(std::move(num), ad * bd * g);
    }
    friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
    friend Frac operator*(const Frac& a, const Frac& b) {
        if (a.is_zero() || b.is_zero()) return Frac();
        P an = a.num_, bn = b.num_, ad = a.den_, bd = b.den_;
        if (!b.is_polynomial()) cancel(an, bd);
        if (!a.is_polynomial()) cancel(bn, ad);
        return raw(an * bn, ad * bd);
    }
    friend Frac operator/(const Frac& a, const Frac& b) { return a * b.inverse(); }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

    Frac inverse() const {
        if (is_zero()) throw ZeroInversion();
        return raw(den_, num_);
    }
    Frac pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        return raw(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }
    Frac scaled(const mpq_class& s) const { return raw(num_.scaled(s), den_); }

    // Builds num/den when gcd(num, den) = 1 is already known; only the
    // unit normalization of the denominator is applied.
    static Frac raw(P num, P den) {
        if (den.is_zero()) throw ZeroInversion();
        Frac r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        r.normalize_units();
        return r;
    }

private:
    P num_;
    P den_;

    static void cancel(P& x, P& y) {
        P g = gcd(x, y);
        if (!(g == P(1))) {
            x = detail::exact_quotient(x, g);
            y = detail::exact_quotient(y, g);
        }
    }

    static Frac reduce_against(P num, P den) {
        cancel(num, den);
        return raw(std::move(num), std::move(den));
    }

    void reduce_full() {
        if (num_.is_zero()) {
            den_ = P(1);
            return;
        }
        cancel(num_, den_);
        normalize_units();
    }

    void normalize_units() {
        if (num_.is_zero()) {
            den_ = P(1);
            return;
        }
        detail::clear_den_monomial(num_, den_);
        mpq_class c = den_.content();
        if (c != 1) {
            den_ = den_.primitive_part();
            num_ = num_.scaled(1 / c);
        }
    }
};

using RationalFunction = Frac<BLaurent>;
// Univariate rational functions; the variable is t or M depending on context.
using URational = Frac<ULaurent>;

// The automorphism M -> t^(2j) M.
RationalFunction shift_m(const RationalFunction& x, int j);
// Substitution M = t^(2n); DenominatorCollapse when the denominator vanishes.
URational eval_m(const RationalFunction& x, long n);
// Numerator and denominator images under M = t^(2n), without reduction.
std::pair<ULaurent, ULaurent> eval_m_unreduced(const RationalFunction& x, long n);

struct Limit {
    enum class Kind { Finite, InfiniteLimit };
    Kind kind = Kind::Finite;
    URational value;  // a rational function of M when finite
    int pole_order = 0;  // vanishing order of den minus that of num when infinite
    bool finite() const { return kind == Kind::Finite; }
};

// Vanishing order at t = -1 (in the sense of divisibility by t + 1) and the
// quotient by (t + 1)^order.
int t_plus_one_order(const BLaurent& p, BLaurent* cofactor = nullptr);

Limit limit_at_t_minus1(const RationalFunction& x);

// Common constructors.
RationalFunction rf_t(int e = 1);
RationalFunction rf_m(int e = 1);
RationalFunction rf_monomial(const mpq_class& c, int t_exp, int m_exp);

std::string to_string(const RationalFunction& x);
std::string to_string(const URational& x, const std::string& var);

}  // namespace ajt
