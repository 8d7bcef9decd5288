#pragma once

#include "conic/types.hpp"

namespace conic {

// Tangent and normal of f = 0 at an on-curve point (x0, y0):
//
//     tangent: (x - x0) fx + (y - y0) fy = 0
//     normal:  (x - x0) fy - (y - y0) fx = 0
//
// with (fx, fy) the gradient at the point. Throws DomainError if the
// point is off the curve (|f| > on_tol * scale) or the gradient vanishes
// there (singular point of a degenerate conic).
struct TangentNormal {
    Line tangent, normal;
    Point2 at{};
};

TangentNormal tangent_at(const GeneralConic& c, Point2 p,
                         double tol = kDefaultTol, double on_tol = 1e-7);

// Polar line of a pole (x0, y0): A x0 x + B(y0 x + x0 y) + C y0 y
// + D(x + x0) + E(y + y0) + F = 0, i.e. the equation polarized in the
// pole. Coincides with the tangent when the pole lies on the conic.
// Throws DomainError when the direction coefficients both vanish (e.g.
// the pole is the center of a central conic).
Line polar_line(const GeneralConic& c, Point2 pole, double tol = kDefaultTol);

// The two asymptotes of a hyperbola and their intersection point (which
// is the center). Slopes m solve A + 2Bm + Cm^2 = 0 and intercepts are
// b = -(D + Em)/(B + Cm); when C ~ 0 one asymptote comes from the
// degenerated linear equation and the other is vertical, via the same
// formulas with x and y swapped. Throws DomainError for non-hyperbolas.
struct AsymptotePair {
    Line first, second;       // lexicographic (l, m, n) order
    Point2 intersection{};
};

AsymptotePair asymptotes(const GeneralConic& c, double tol = kDefaultTol);

} // namespace conic
