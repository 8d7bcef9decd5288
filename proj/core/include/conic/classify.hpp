#pragma once

#include "conic/types.hpp"

namespace conic {

// The affine type of the locus f = 0. Circle is the |B| ~ 0, A ~ C
// special case of Ellipse; DegenerateLinear means the quadratic part
// vanishes and the equation is at most linear.
enum class Classification {
    Ellipse,
    Circle,
    Hyperbola,
    Parabola,
    Point,
    TwoConcurrentLines,
    TwoParallelLines,
    DoubleLine,
    EmptySet,
    DegenerateLinear,
};

const char* to_string(Classification tag);

// Decision tree on the invariants alone. With delta != 0 and
// big_delta != 0 the sign of delta separates hyperbolas from the
// ellipse family, where matching signs of big_delta and omega leave an
// empty locus; big_delta = 0 gives a point (delta > 0) or two concurrent
// lines (delta < 0). With delta = 0, big_delta != 0 is a parabola, and
// the doubly degenerate case is settled by the sign of the minor
// m22 = AF - D^2 (or m11 = CF - E^2 when A ~ 0): negative means two
// parallel lines, zero a double line, positive an empty locus.
//
// Every comparison is made on the unit-scaled copy of the conic against
// tol, so the result is invariant under rescaling f -> s f.
Classification classify(const GeneralConic& c, double tol = kDefaultTol);

} // namespace conic
