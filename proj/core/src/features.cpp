#include "conic/features.hpp"

#include "conic/classify.hpp"
#include "conic/invariants.hpp"

#include <cmath>
#include <tuple>
#include <utility>

namespace conic {

TangentNormal tangent_at(const GeneralConic& c, Point2 p, double tol, double on_tol) {
    double scale = coefficient_scale(c);
    double f = evaluate_f(c, p.x, p.y);
    if (std::fabs(f) > on_tol * scale)
        throw DomainError("point is not on the conic (f = " + std::to_string(f) + ")");
    Point2 g = gradient(c, p.x, p.y);
    if (std::hypot(g.x, g.y) <= tol * scale)
        throw DomainError("gradient vanishes: singular point, no unique tangent");
    TangentNormal t;
    t.at = p;
    t.tangent = normalize_line(g.x, g.y, -g.x * p.x - g.y * p.y);
    t.normal = normalize_line(g.y, -g.x, -g.y * p.x + g.x * p.y);
    return t;
}

Line polar_line(const GeneralConic& c, Point2 pole, double tol) {
    double l = c.A * pole.x + c.B * pole.y + c.D;
    double m = c.B * pole.x + c.C * pole.y + c.E;
    double s = coefficient_scale(c) * std::max({1.0, std::fabs(pole.x), std::fabs(pole.y)});
    if (std::hypot(l, m) <= tol * s)
        throw DomainError("degenerate polar: pole is a center of the conic");
    double n = c.D * pole.x + c.E * pole.y + c.F;
    return normalize_line(l, m, n);
}

AsymptotePair asymptotes(const GeneralConic& c, double tol) {
    Classification tag = classify(c, tol);
    if (tag != Classification::Hyperbola)
        throw DomainError(std::string("asymptotes require a hyperbola, got ") + to_string(tag));

    GeneralConic u = unit_scaled(c);
    double mdelta = u.B * u.B - u.A * u.C;  // -delta > 0 for hyperbolas
    double root = std::sqrt(mdelta);
    // stable quadratic: the +-sqrt branch matching B's sign first, the
    // companion from the product
    double qb = u.B + std::copysign(root, u.B);

    Line la, lb;
    if (std::fabs(u.C) > tol) {
        // slopes of y = m x + b from C m^2 + 2B m + A = 0
        double m1 = -qb / u.C;
        double m2 = (m1 != 0.0) ? u.A / (u.C * m1) : -u.A / qb;
        auto oblique = [&](double m) {
            double b = -(u.D + u.E * m) / (u.B + u.C * m);
            return normalize_line(m, -1.0, b);
        };
        la = oblique(m1);
        lb = oblique(m2);
    } else {
        // one finite slope from the degenerated equation A + 2Bm = 0,
        // plus a vertical asymptote x = mt y + bt with the roles of x and
        // y swapped (mt is the small root, written product-over-big so it
        // stays finite when A ~ 0 too)
        double m = -u.A / (2.0 * u.B);
        double b = -(u.D + u.E * m) / (u.B + u.C * m);
        la = normalize_line(m, -1.0, b);
        double mt = -u.C / qb;
        double bt = -(u.E + u.D * mt) / (u.B + u.A * mt);
        lb = normalize_line(1.0, -mt, -bt);
    }

    AsymptotePair r;
    r.first = la;
    r.second = lb;
    if (std::make_tuple(r.second.l, r.second.m, r.second.n) <
        std::make_tuple(r.first.l, r.first.m, r.first.n))
        std::swap(r.first, r.second);

    // intersection of the pair (equals the center)
    double det = r.first.l * r.second.m - r.second.l * r.first.m;
    r.intersection = {(-r.first.n * r.second.m + r.second.n * r.first.m) / det,
                      (-r.first.l * r.second.n + r.second.l * r.first.n) / det};
    return r;
}

} // namespace conic
