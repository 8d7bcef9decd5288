#include "conic/spectral.hpp"

#include <cmath>

namespace conic {

namespace {

Point2 flip_upper(Point2 v) {
    if (v.y < 0.0 || (v.y == 0.0 && v.x < 0.0))
        return {-v.x, -v.y};
    return v;
}

} // namespace

SpectralData eigen2x2(double a, double b, double c) {
    SpectralData s;
    double tr = a + c;
    double disc = std::sqrt((a - c) * (a - c) + 4.0 * b * b);
    double big = (tr >= 0.0) ? 0.5 * (tr + disc) : 0.5 * (tr - disc);
    double small = (big != 0.0) ? (a * c - b * b) / big : 0.0;

    // Eigenvector of the larger-magnitude eigenvalue: perpendicular to the
    // larger row of M - big*I (the rank-one factor).
    double r1x = a - big, r1y = b;
    double r2x = b, r2y = c - big;
    double n1 = r1x * r1x + r1y * r1y;
    double n2 = r2x * r2x + r2y * r2y;
    if (n1 == 0.0 && n2 == 0.0) {
        // repeated eigenvalue: every direction works, keep the identity
        s.lambda1 = s.lambda2 = big;
        return s;
    }
    double vx, vy;
    if (n1 >= n2) {
        vx = -r1y;
        vy = r1x;
    } else {
        vx = -r2y;
        vy = r2x;
    }
    double norm = std::hypot(vx, vy);
    Point2 vbig = flip_upper({vx / norm, vy / norm});
    Point2 vsmall = flip_upper({-vbig.y, vbig.x});

    if (vbig.x >= vsmall.x) {
        s.lambda1 = big;
        s.lambda2 = small;
        s.p1 = vbig;
    } else {
        s.lambda1 = small;
        s.lambda2 = big;
        s.p1 = vsmall;
    }
    s.p2 = {-s.p1.y, s.p1.x};
    s.angle = std::atan2(s.p1.y, s.p1.x);
    return s;
}

} // namespace conic
