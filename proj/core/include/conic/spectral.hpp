#pragma once

#include "conic/types.hpp"

namespace conic {

// Eigen decomposition of the symmetric 2x2 matrix ((a, b), (b, c)) with a
// deterministic ordering:
//
//   - both unit eigenvectors are sign-flipped into the upper half plane
//     (y >= 0, and x >= 0 when y = 0);
//   - p1 is the one with the larger x component (the quadrant-I vector)
//     and lambda1 its eigenvalue;
//   - p2 is p1 rotated by +90 degrees, so P = [p1 p2] is a proper rotation
//     by angle = atan2(p1.y, p1.x) in [0, pi/2).
//
// A repeated eigenvalue (b = 0, a = c) yields the identity frame, and
// b = 0 generally assigns lambda1 to the x axis, giving angle 0.
struct SpectralData {
    double lambda1 = 0, lambda2 = 0;
    Point2 p1{1, 0}, p2{0, 1};
    double angle = 0;
};

// Roots of lambda^2 - (a+c) lambda + (ac - b^2): the discriminant is
// computed as (a-c)^2 + 4b^2, which is nonnegative by construction, the
// larger-magnitude root comes from the quadratic formula and the other
// from the product, so nearly-cancelling cases stay accurate.
SpectralData eigen2x2(double a, double b, double c);

} // namespace conic
