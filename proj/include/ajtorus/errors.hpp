#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared by the algebra, knot and operator layers.
 *
 * Every failure that the CLI maps to a distinct exit code or report stage
 * derives from ajt::Error so callers can catch the whole family at once.
 */

#include <stdexcept>
#include <string>

namespace ajt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inversion of the zero rational function.
class ZeroInversion : public Error {
public:
    ZeroInversion() : Error("inversion of zero") {}
};

// Degree query on the zero polynomial.
class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("degree of the zero polynomial") {}
};

// A denominator became identically zero after the substitution M = t^(2n).
class DenominatorCollapse : public Error {
public:
    explicit DenominatorCollapse(long n)
        : Error("denominator vanishes identically at M = t^(2n), n = " + std::to_string(n)), n_(n) {}
    long n() const { return n_; }

private:
    long n_;
};

// A quotient that must be a Laurent polynomial was not.
class InexactDivision : public Error {
public:
    using Error::Error;
};

class ZeroOperator : public Error {
public:
    ZeroOperator() : Error("zero operator") {}
};

// A coefficient of an operator has no finite limit at t = -1.
class PoleAtMinusOne : public Error {
public:
    explicit PoleAtMinusOne(int l_exponent)
        : Error("coefficient of L^" + std::to_string(l_exponent) + " has a pole at t = -1"),
          l_exponent_(l_exponent) {}
    int l_exponent() const { return l_exponent_; }

private:
    int l_exponent_;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Parameters outside the torus-knot domain (coprimality, |p| > q >= 2).
class InvalidParams : public Error {
public:
    using Error::Error;
};

// Connected sums whose components wind in opposite directions.
class OppositeSigns : public Error {
public:
    OppositeSigns() : Error("components have opposite signs; no annihilator construction in scope") {}
};

class UnsupportedSignPattern : public Error {
public:
    using Error::Error;
};

class NonBinomialInput : public Error {
public:
    using Error::Error;
};

class CaseMismatch : public Error {
public:
    using Error::Error;
};

// An auxiliary function that must be invertible turned out to be zero.
class AuxVanishes : public Error {
public:
    using Error::Error;
};

class DegreeDrop : public Error {
public:
    using Error::Error;
};

class CertificateFailure : public Error {
public:
    using Error::Error;
};

}  // namespace ajt
