#pragma once

/**
 * @file gcd.hpp
 * @brief Greatest common divisors of Laurent polynomials over Q.
 *
 * Both routines work modulo word-size primes and certify the lifted
 * candidate by exact division over Z, so the result is always exact:
 * - univariate: modular Euclid with Chinese remaindering;
 * - bivariate: a coprimality test by two specializations, then Brown's
 *   dense modular algorithm (evaluation of one variable, univariate gcds
 *   in the other, Newton interpolation) for the rare nontrivial cases.
 *
 * Results are normalized: integer coefficients with content 1, no monomial
 * factor (a gcd of Laurent polynomials is only defined up to units
 * c * t^i * M^j), and a positive coefficient on the lexicographically
 * smallest monomial (univariate: positive leading coefficient).
 */

#include "ajtorus/laurent.hpp"

namespace ajt {

ULaurent gcd(const ULaurent& a, const ULaurent& b);
BLaurent gcd(const BLaurent& a, const BLaurent& b);

// Number of times the univariate / bivariate routines fell back to the
// full modular lifting (i.e. found a nontrivial gcd); useful for profiling.
struct GcdStats {
    unsigned long univariate_calls = 0;
    unsigned long bivariate_calls = 0;
    unsigned long bivariate_nontrivial = 0;
};
GcdStats gcd_stats();

}  // namespace ajt
