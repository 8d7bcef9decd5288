#include "conic/reduce.hpp"

#include "conic/center.hpp"
#include "conic/features.hpp"
#include "conic/invariants.hpp"
#include "conic/parser.hpp"
#include "conic/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace conic {

namespace {

bool line_less(const Line& a, const Line& b) {
    if (a.l != b.l) return a.l < b.l;
    if (a.m != b.m) return a.m < b.m;
    return a.n < b.n;
}

// lambda1 x'^2 + lambda2 y'^2 = 0 with opposite signs splits into the
// line pair sqrt|lambda1| x' = +- sqrt|lambda2| y'.
void split_concurrent(ReductionResult& r, double l1, double l2) {
    double s1 = std::sqrt(std::fabs(l1));
    double s2 = std::sqrt(std::fabs(l2));
    Line a = map_line_from_canonical(r.chain, normalize_line(s1, s2, 0.0));
    Line b = map_line_from_canonical(r.chain, normalize_line(s1, -s2, 0.0));
    if (line_less(b, a))
        std::swap(a, b);
    r.elements.lines = {a, b};
}

// omega u^2 + f0 = 0 (u the squared canonical axis, index sq) splits into
// u = +-sqrt(-f0/omega), or the double line u = 0.
void split_axis_lines(ReductionResult& r, int sq, double omega, double f0) {
    auto axis_line = [&](double offset) {
        Line canon = (sq == 0) ? Line{1.0, 0.0, -offset} : Line{0.0, 1.0, -offset};
        return map_line_from_canonical(r.chain, canon);
    };
    if (r.tag == Classification::DoubleLine) {
        r.elements.lines = {axis_line(0.0)};
        return;
    }
    if (r.tag == Classification::TwoParallelLines) {
        double g = std::sqrt(std::max(0.0, -f0 / omega));
        Line a = axis_line(g), b = axis_line(-g);
        if (line_less(b, a))
            std::swap(a, b);
        r.elements.lines = {a, b};
    }
}

} // namespace

ReductionResult reduce(const GeneralConic& c, double tol) {
    Classification tag = classify(c, tol);
    if (tag == Classification::DegenerateLinear)
        throw DomainError("equation has no quadratic part: nothing to reduce");

    GeneralConic u = unit_scaled(c);
    Invariants vu = invariants(u);
    Invariants v = invariants(c);
    SpectralData sp = eigen2x2(c.A, c.B, c.C);

    ReductionResult r;
    r.tag = tag;

    if (std::fabs(vu.delta) > tol) {
        // Unique center: translate there (killing the linear part), then
        // rotate into the eigenframe.
        double h = (-c.C * c.D + c.B * c.E) / v.delta;
        double k = (c.B * c.D - c.A * c.E) / v.delta;
        double f0 = v.big_delta / v.delta;
        if (tag == Classification::Point || tag == Classification::TwoConcurrentLines)
            f0 = 0.0;  // classification already pinned big_delta ~ 0
        r.chain = {RigidMotion::translation(h, k), RigidMotion::rotation(sp.angle)};
        r.canonical = {sp.lambda1, 0.0, sp.lambda2, 0.0, 0.0, f0};
        r.elements.center = Point2{h, k};

        double t1 = -f0 / sp.lambda1;  // squared semiaxis along x', when positive
        double t2 = -f0 / sp.lambda2;
        switch (tag) {
        case Classification::Ellipse:
        case Classification::Circle: {
            double a = std::sqrt(t1), b = std::sqrt(t2);
            r.elements.semi_a = a;
            r.elements.semi_b = b;
            if (tag == Classification::Circle) {
                r.elements.linear_c = 0.0;
                r.elements.eccentricity = 0.0;
                r.elements.foci = {Point2{h, k}};
            } else {
                int fa = (b >= a) ? 1 : 0;
                double cc = std::sqrt(std::fabs(b * b - a * a));
                r.elements.focal_axis = fa;
                r.elements.linear_c = cc;
                r.elements.eccentricity = cc / std::max(a, b);
                Point2 fplus = (fa == 1) ? Point2{0.0, cc} : Point2{cc, 0.0};
                r.elements.foci = {map_point_from_canonical(r.chain, fplus),
                                   map_point_from_canonical(r.chain, {-fplus.x, -fplus.y})};
            }
            break;
        }
        case Classification::Hyperbola: {
            int fa = (t1 > 0.0) ? 0 : 1;  // transverse axis has the positive square
            double at = std::sqrt(fa == 0 ? t1 : t2);
            double bc = std::sqrt(fa == 0 ? -t2 : -t1);
            r.elements.semi_a = (fa == 0) ? at : bc;
            r.elements.semi_b = (fa == 0) ? bc : at;
            double cc = std::sqrt(at * at + bc * bc);
            r.elements.focal_axis = fa;
            r.elements.linear_c = cc;
            r.elements.eccentricity = cc / at;
            Point2 fplus = (fa == 0) ? Point2{cc, 0.0} : Point2{0.0, cc};
            r.elements.foci = {map_point_from_canonical(r.chain, fplus),
                               map_point_from_canonical(r.chain, {-fplus.x, -fplus.y})};
            AsymptotePair ap = asymptotes(c, tol);
            r.elements.asymptotes = {ap.first, ap.second};
            break;
        }
        case Classification::TwoConcurrentLines:
            split_concurrent(r, sp.lambda1, sp.lambda2);
            break;
        case Classification::Point:
        case Classification::EmptySet:
        default:
            break;
        }
    } else if (std::fabs(vu.big_delta) > tol) {
        // Parabola: rotate into the eigenframe first; the nonzero
        // eigenvalue keeps the squared variable, the other axis keeps a
        // linear term, and the translation moves the vertex to the origin.
        double omega = v.omega;
        GeneralConic rot = rotate_conic(c, sp.angle);
        int sq = (std::fabs(sp.lambda1) >= std::fabs(sp.lambda2)) ? 0 : 1;
        double vx, vy, lin;
        if (sq == 0) {
            lin = rot.E;  // omega x'^2 + 2 lin y' = 0
            vx = -rot.D / omega;
            vy = -(rot.F - rot.D * rot.D / omega) / (2.0 * rot.E);
            r.canonical = {omega, 0.0, 0.0, 0.0, lin, 0.0};
        } else {
            lin = rot.D;  // omega y'^2 + 2 lin x' = 0
            vx = -(rot.F - rot.E * rot.E / omega) / (2.0 * rot.D);
            vy = -rot.E / omega;
            r.canonical = {0.0, 0.0, omega, lin, 0.0, 0.0};
        }
        r.chain = {RigidMotion::rotation(sp.angle), RigidMotion::translation(vx, vy)};
        r.elements.vertex = map_point_from_canonical(r.chain, {0.0, 0.0});
        r.elements.focus_directrix = std::fabs(lin / omega);
        r.elements.eccentricity = 1.0;
        // focus at signed p/2 along the linear axis
        double off = -lin / (2.0 * omega);
        Point2 fc = (sq == 0) ? Point2{0.0, off} : Point2{off, 0.0};
        r.elements.foci = {map_point_from_canonical(r.chain, fc)};
    } else {
        // Line of centers: translate to its intersection with an axis,
        // then rotate; only omega u^2 + f0 survives.
        double omega = v.omega;
        double h, k, f0;
        if (std::fabs(u.A) > tol) {
            h = -c.D / c.A;
            k = 0.0;
            f0 = v.m22 / c.A;
        } else {
            h = 0.0;
            k = -c.E / c.C;
            f0 = v.m11 / c.C;
        }
        if (tag == Classification::DoubleLine)
            f0 = 0.0;
        int sq = (std::fabs(sp.lambda1) >= std::fabs(sp.lambda2)) ? 0 : 1;
        r.chain = {RigidMotion::translation(h, k), RigidMotion::rotation(sp.angle)};
        r.canonical = (sq == 0) ? GeneralConic{omega, 0.0, 0.0, 0.0, 0.0, f0}
                                : GeneralConic{0.0, 0.0, omega, 0.0, 0.0, f0};
        r.elements.center_line = center_structure(c, tol).line;
        split_axis_lines(r, sq, omega, f0);
    }

    r.canonical_text = format_conic_primed(r.canonical);
    return r;
}

} // namespace conic
