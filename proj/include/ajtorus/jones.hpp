#pragma once

/**
 * @file jones.hpp
 * @brief Colored Jones polynomials of torus knots and their connected sums.
 *
 * Conventions: [n] = (t^(2n) - t^(-2n)) / (t^2 - t^(-2)), J_K(0) = 0,
 * J_K(1) = 1 and J_K(-n) = -J_K(n). Torus knots are computed by the
 * recurrences
 *     q = 2:  J(n+1) = -t^(-4pn-2p) J(n) + t^(-2pn) [2n+1],
 *     q > 2:  J(n+2) = t^(-4pq(n+1)) J(n) + t^(-2pq(n+1)) delta(p, q, n),
 * and connected sums by J_{K1#K2}(n) = J_K1(n) J_K2(n) / [n].
 */

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ajtorus/ratfunc.hpp"

namespace ajt {

// T(p, q) with gcd(|p|, q) = 1 and |p| > q >= 2.
struct TorusKnot {
    int p = 0;
    int q = 0;

    // InvalidParams unless the invariants hold.
    TorusKnot(int p_, int q_);
    TorusKnot() = default;
    std::string to_string() const;
    friend bool operator==(const TorusKnot& a, const TorusKnot& b) { return a.p == b.p && a.q == b.q; }
};

struct KnotExpr {
    enum class Kind { Unknot, Torus, Sum };
    Kind kind = Kind::Unknot;
    TorusKnot k1;
    TorusKnot k2;

    static KnotExpr unknot() { return {}; }
    static KnotExpr torus(TorusKnot k) { return {Kind::Torus, k, {}}; }
    static KnotExpr sum(TorusKnot a, TorusKnot b) { return {Kind::Sum, a, b}; }
    // "U", "T(p,q)" or "T(p,q)#T(a,b)"; ParseError on malformed text and on
    // parameters outside the torus-knot domain.
    static KnotExpr parse(std::string_view text);
    std::string to_string() const;
    friend bool operator==(const KnotExpr& a, const KnotExpr& b) {
        return a.kind == b.kind && a.k1 == b.k1 && a.k2 == b.k2;
    }
};

// Quantum integer [n].
ULaurent bracket(long n);
// delta(p, q, n) as a Laurent polynomial in t.
ULaurent delta_value(int p, int q, long n);

// Symbolic forms in (t, M) with M standing for t^(2n).
// [k n + j] = (M^k t^(2j) - M^(-k) t^(-2j)) / (t^2 - t^(-2)).
RationalFunction bracket_symbolic(int k, int j);

// delta(p, q, n + j), obtained from the closed form at offset 0 by shift_M.
struct DeltaSpec {
    int p = 0;
    int q = 0;
    int j = 0;
    RationalFunction to_rational() const;
};

// Lazily filled, memoized J_K(n). Fills are serialized by an internal mutex,
// so one sequence may be shared between threads.
class JonesSequence {
public:
    explicit JonesSequence(KnotExpr knot);
    const KnotExpr& knot() const { return knot_; }
    ULaurent operator()(long n) const;
    // Seeds the cache (used when loading precomputed values).
    void preload(long n, ULaurent value);
    // Materialized values for n >= 0, in increasing n.
    std::vector<std::pair<long, ULaurent>> materialized() const;

private:
    KnotExpr knot_;
    std::shared_ptr<JonesSequence> c1_, c2_;  // components of a sum
    mutable std::mutex mu_;
    mutable std::map<long, ULaurent> cache_;

    ULaurent compute(long n) const;
    ULaurent torus_value(long n) const;
};

ULaurent jones_torus(const TorusKnot& k, long n);
ULaurent jones_connected_sum(const TorusKnot& k1, const TorusKnot& k2, long n);

// Predicted (lowest, highest) t-degree of J_K(n) for a torus knot, or of
// [n] J_K(n) for a connected sum. UnsupportedSignPattern for the unknot;
// InvalidParams for n < 1.
std::pair<long, long> degree_bounds(const KnotExpr& k, long n);

}  // namespace ajt
