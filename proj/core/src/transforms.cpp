#include "conic/transforms.hpp"

#include "conic/invariants.hpp"

#include <cmath>
#include <numbers>

namespace conic {

double normalize_angle(double a) {
    double r = std::remainder(a, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi)
        r = std::numbers::pi;
    return r;
}

RigidMotion RigidMotion::rotation(double angle) {
    return {normalize_angle(angle), {0.0, 0.0}};
}

RigidMotion RigidMotion::translation(double h, double k) {
    return {0.0, {h, k}};
}

RigidMotion RigidMotion::make(double angle, double h, double k) {
    return {normalize_angle(angle), {h, k}};
}

Point2 RigidMotion::operator()(Point2 p) const {
    double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y + t.x,
            s * p.x + c * p.y + t.y};
}

std::array<double, 4> RigidMotion::matrix() const {
    double c = std::cos(angle), s = std::sin(angle);
    return {c, -s, s, c};
}

GeneralConic translate_conic(const GeneralConic& c, double h, double k) {
    GeneralConic r = c;
    r.D = c.A * h + c.B * k + c.D;
    r.E = c.B * h + c.C * k + c.E;
    r.F = evaluate_f(c, h, k);
    return r;
}

GeneralConic rotate_conic(const GeneralConic& c, double theta) {
    double ct = std::cos(theta), st = std::sin(theta);
    GeneralConic r;
    r.A = c.A * ct * ct + 2.0 * c.B * st * ct + c.C * st * st;
    r.B = (c.C - c.A) * st * ct + c.B * (ct * ct - st * st);
    r.C = c.A * st * st - 2.0 * c.B * st * ct + c.C * ct * ct;
    r.D = c.D * ct + c.E * st;
    r.E = -c.D * st + c.E * ct;
    r.F = c.F;
    return r;
}

GeneralConic apply_motion(const GeneralConic& c, const RigidMotion& m) {
    // g(p) = f(R p + t): substitute the translation first, then the
    // rotation.
    return rotate_conic(translate_conic(c, m.t.x, m.t.y), m.angle);
}

GeneralConic apply_chain(const GeneralConic& c, const std::vector<RigidMotion>& chain) {
    GeneralConic r = c;
    for (const RigidMotion& m : chain)
        r = apply_motion(r, m);
    return r;
}

Point2 map_point_from_canonical(const std::vector<RigidMotion>& chain, Point2 p) {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        p = (*it)(p);
    return p;
}

Line map_line_from_canonical(const std::vector<RigidMotion>& chain, const Line& line) {
    // The normal vector rotates with the frame and the offset follows the
    // translation: substituting p = R^T (q - t) into l p_x + m p_y + n = 0
    // gives (l', m') = R (l, m) and n' = n - (l', m') . t.
    double l = line.l, m = line.m, n = line.n;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        double c = std::cos(it->angle), s = std::sin(it->angle);
        double lr = c * l - s * m;
        double mr = s * l + c * m;
        l = lr;
        m = mr;
        n -= l * it->t.x + m * it->t.y;
    }
    return normalize_line(l, m, n);
}

IncrementExpansion increment_expand(const GeneralConic& c, double h, double k) {
    IncrementExpansion e;
    e.shifted = translate_conic(c, h, k);
    Point2 g = gradient(c, h, k);
    e.gx = g.x;
    e.gy = g.y;
    e.f0 = e.shifted.F;
    return e;
}

double increment_value(const GeneralConic& c, double X, double Y, double h, double k) {
    IncrementExpansion e = increment_expand(c, h, k);
    return evaluate_q(c, X, Y) + e.gx * X + e.gy * Y + e.f0;
}

} // namespace conic
