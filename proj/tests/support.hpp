#pragma once

// Shared helpers for the unit tests: seeded random polynomials and a few
// shorthands.

#include <random>
#include <vector>

#include "ajtorus/laurent.hpp"
#include "ajtorus/ratfunc.hpp"

namespace ajt::test {

inline std::mt19937& rng() {
    static std::mt19937 g(12345);
    return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Sparse Laurent polynomial in one variable; never zero.
inline ULaurent random_ulaurent(int terms = 4, int span = 6, int coeff = 5) {
    for (;;) {
        std::map<int, mpq_class> m;
        for (int i = 0; i < terms; ++i) m[uniform(-span, span)] += uniform(-coeff, coeff);
        ULaurent u = ULaurent::from_terms(m);
        if (!u.is_zero()) return u;
    }
}

// Sparse Laurent polynomial in (t, M); never zero.
inline BLaurent random_blaurent(int terms = 4, int span = 4, int coeff = 5) {
    for (;;) {
        BLaurent b;
        for (int i = 0; i < terms; ++i) {
            b += BLaurent::monomial(uniform(-coeff, coeff), uniform(-span, span), uniform(-span, span));
        }
        if (!b.is_zero()) return b;
    }
}

inline RationalFunction random_rational(int terms = 3) {
    return RationalFunction(random_blaurent(terms)) / RationalFunction(random_blaurent(terms));
}

}  // namespace ajt::test
