#pragma once

#include "conic/classify.hpp"
#include "conic/types.hpp"

namespace conic {

// Splitting of a degenerate conic into real lines:
//
//     f(x, y) = multiplier * L1(x, y) * L2(x, y)
//
// with L1, L2 unit-normalized (L1 = L2 for a double line) and ordered
// lexicographically by (l, m, n). The split happens in the canonical
// frame, where the quadratic form factors trivially, and the lines are
// carried back through the reduction chain; the multiplier is the least
// squares fit of the expanded product against the six input coefficients.
struct LineFactorization {
    Classification tag = Classification::DoubleLine;
    double multiplier = 1.0;
    Line first, second;

    friend bool operator==(const LineFactorization&, const LineFactorization&) = default;
};

// Throws DomainError unless classify() yields TwoConcurrentLines,
// TwoParallelLines or DoubleLine.
LineFactorization factor_lines(const GeneralConic& c, double tol = kDefaultTol);

// The conic with coefficients of multiplier * L1 * L2 (half convention);
// exposed because tests and reports reuse it.
GeneralConic expand_line_product(const Line& a, const Line& b, double multiplier);

} // namespace conic
