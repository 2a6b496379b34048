#pragma once

/**
 * @file acceptance.hpp
 * @brief The pinned end-to-end checks, one verdict per numbered criterion.
 *
 *     1  quantum-torus commutation law on sequences
 *     2  degree formulas for torus knots and connected sums
 *     3  A-polynomial of a sum: product construction vs case table
 *     4  annihilation and L-degree of the seven candidates
 *     5  evaluation at t = -1 against the A-polynomial, repeated factors
 *     6  minimality certificates, and their vanishing off the case
 *     7  minimality scan below and at the expected degree
 *     8  [n] divides J_K1(n) J_K2(n)
 *     9  limits at t = -1 of the auxiliary functions
 *
 * All comparisons are exact.
 */

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace ajt {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;  // first failure, or a short summary
    double seconds = 0;
};

// Runs the selected criteria (all when `only` is empty) in increasing order;
// on_result is called as soon as each one finishes.
std::vector<CriterionResult> run_acceptance(const std::set<int>& only = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  3  A-polynomial ... (0.01 s)" style line.
std::string format_result(const CriterionResult& r);

}  // namespace ajt
