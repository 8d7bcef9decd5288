#include "conic/center.hpp"

#include <algorithm>
#include <cmath>

namespace conic {

CenterStructure center_structure(const GeneralConic& c, double tol) {
    GeneralConic u = unit_scaled(c);
    if (std::max({std::fabs(u.A), std::fabs(u.B), std::fabs(u.C)}) <= tol)
        throw DomainError("all quadratic coefficients are zero: the center system is empty");

    CenterStructure r;
    double delta = u.A * u.C - u.B * u.B;
    if (std::fabs(delta) > tol) {
        r.kind = CenterKind::UniqueCenter;
        double d = c.A * c.C - c.B * c.B;
        r.center = {(-c.C * c.D + c.B * c.E) / d,
                    (c.B * c.D - c.A * c.E) / d};
        return r;
    }

    // Singular system: a line of centers iff the augmented matrix also has
    // rank 1, i.e. both cross products with the right-hand side vanish.
    if (std::fabs(u.B * u.D - u.A * u.E) <= tol &&
        std::fabs(u.C * u.D - u.B * u.E) <= tol) {
        r.kind = CenterKind::CenterLine;
        if (std::max(std::fabs(u.A), std::fabs(u.B)) > tol)
            r.line = normalize_line(c.A, c.B, c.D);
        else
            r.line = normalize_line(c.B, c.C, c.E);
        return r;
    }

    r.kind = CenterKind::NoCenter;
    return r;
}

double value_at_center(const GeneralConic& c, Point2 center, double tol) {
    double s = coefficient_scale(c) * std::max({1.0, std::fabs(center.x), std::fabs(center.y)});
    double r1 = c.A * center.x + c.B * center.y + c.D;
    double r2 = c.B * center.x + c.C * center.y + c.E;
    if (std::fabs(r1) > tol * s || std::fabs(r2) > tol * s)
        throw DomainError("point is not a center: the gradient does not vanish there");
    return c.D * center.x + c.E * center.y + c.F;
}

} // namespace conic
