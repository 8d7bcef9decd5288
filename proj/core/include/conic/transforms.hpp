#pragma once

#include "conic/types.hpp"

#include <array>
#include <vector>

namespace conic {

// Proper rigid motion of the plane, p -> R(angle) p + t. Only rotations
// and translations are representable (the matrix is derived from the
// angle, so det R = +1 always; reflections cannot be constructed). The
// angle is normalized into (-pi, pi].
struct RigidMotion {
    double angle = 0.0;
    Point2 t{};

    static RigidMotion rotation(double angle);
    static RigidMotion translation(double h, double k);
    static RigidMotion make(double angle, double h, double k);

    Point2 operator()(Point2 p) const;

    // Row-major {cos, -sin, sin, cos}.
    std::array<double, 4> matrix() const;

    friend bool operator==(const RigidMotion&, const RigidMotion&) = default;
};

double normalize_angle(double a);

// Coefficients after the substitution x = X + h, y = Y + k: the quadratic
// part is untouched, D' = Ah + Bk + D, E' = Bh + Ck + E, F' = f(h, k).
GeneralConic translate_conic(const GeneralConic& c, double h, double k);

// Coefficients after x = P x' with P the rotation by theta: the quadratic
// block becomes P^T M P, the linear row (2D, 2E) becomes (2D, 2E) P, and F
// is untouched.
GeneralConic rotate_conic(const GeneralConic& c, double theta);

// Substitute the motion's action into f: the result g satisfies
// g(p) = f(R p + t) for every point p.
GeneralConic apply_motion(const GeneralConic& c, const RigidMotion& m);

// A reduction chain maps canonical coordinates back to original ones:
//
//     x_original = chain[0](chain[1](... chain[n-1](x_canonical)))
//
// apply_chain pushes the conic the other way (original -> canonical);
// the map_*_from_canonical helpers carry geometry back to the original
// frame.
GeneralConic apply_chain(const GeneralConic& c, const std::vector<RigidMotion>& chain);
Point2 map_point_from_canonical(const std::vector<RigidMotion>& chain, Point2 p);
Line map_line_from_canonical(const std::vector<RigidMotion>& chain, const Line& line);

// Increment form of f at (h, k):
//
//     f(X + h, Y + k) = q(X, Y) + gx X + gy Y + f0
//
// where (gx, gy) is the gradient at (h, k) and f0 = f(h, k). `shifted`
// holds the same data as a conic (it equals translate_conic(c, h, k)).
struct IncrementExpansion {
    GeneralConic shifted;
    double gx, gy, f0;
};

IncrementExpansion increment_expand(const GeneralConic& c, double h, double k);

// Evaluates the right side of the increment form, q(X,Y) + gx X + gy Y + f0,
// which equals f(X + h, Y + k).
double increment_value(const GeneralConic& c, double X, double Y, double h, double k);

} // namespace conic
