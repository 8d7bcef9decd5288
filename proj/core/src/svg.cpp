#include "conic/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

namespace conic {

namespace {

struct Mapper {
    Viewport vp;
    double scale;
    double height;

    explicit Mapper(const Viewport& v)
        : vp(v),
          scale(kSvgWidth / (v.xmax - v.xmin)),
          height((v.ymax - v.ymin) * scale) {}

    void map(Point2 w, double& px, double& py) const {
        px = (w.x - vp.xmin) * scale;
        py = (vp.ymax - w.y) * scale;
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string path_of(const Mapper& mp, const std::vector<Point2>& pts, bool close) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double px, py;
        mp.map(pts[i], px, py);
        d += (i == 0 ? "M" : " L");
        d += fmt(px) + "," + fmt(py);
    }
    if (close)
        d += " Z";
    return d;
}

// Liang-Barsky style clip of the infinite line l x + m y + n = 0 to the
// viewport; returns false when the line misses the box.
bool clip_line(const Viewport& vp, const Line& ln, Point2& a, Point2& b) {
    double qx = 0.5 * (vp.xmin + vp.xmax), qy = 0.5 * (vp.ymin + vp.ymax);
    double dist = ln.l * qx + ln.m * qy + ln.n;
    Point2 p0{qx - dist * ln.l, qy - dist * ln.m};  // foot of the center
    double dx = -ln.m, dy = ln.l;                   // unit direction
    double t0 = -1e300, t1 = 1e300;
    auto cut = [&](double d, double w0, double w1, double p) {
        if (d == 0.0)
            return p >= w0 && p <= w1;
        double ta = (w0 - p) / d, tb = (w1 - p) / d;
        if (ta > tb)
            std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        return true;
    };
    if (!cut(dx, vp.xmin, vp.xmax, p0.x) || !cut(dy, vp.ymin, vp.ymax, p0.y))
        return false;
    if (t0 > t1)
        return false;
    a = {p0.x + t0 * dx, p0.y + t0 * dy};
    b = {p0.x + t1 * dx, p0.y + t1 * dy};
    return true;
}

void add_segment(std::string& out, const Mapper& mp, const Line& ln, const char* cls) {
    Point2 a, b;
    if (!clip_line(mp.vp, ln, a, b))
        return;
    out += "  <path class=\"" + std::string(cls) + "\" d=\"" +
           path_of(mp, {a, b}, false) + "\"/>\n";
}

// Canonical-frame sampling helpers; sq says which axis carries the
// squared variable (see ReductionResult).
Point2 axis_point(int sq, double u, double v) {
    return (sq == 0) ? Point2{u, v} : Point2{v, u};
}

double viewport_reach(const ReductionResult& r, const Viewport& vp) {
    Point2 c{0, 0};
    if (r.elements.center)
        c = *r.elements.center;
    else if (r.elements.vertex)
        c = *r.elements.vertex;
    double dx = std::max(std::fabs(vp.xmin - c.x), std::fabs(vp.xmax - c.x));
    double dy = std::max(std::fabs(vp.ymin - c.y), std::fabs(vp.ymax - c.y));
    return std::hypot(dx, dy) + 1.0;
}

std::vector<Point2> sample_ellipse(const ReductionResult& r) {
    double a = *r.elements.semi_a, b = *r.elements.semi_b;
    std::vector<Point2> pts;
    constexpr int n = 256;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        double t = 2.0 * std::numbers::pi * i / n;
        pts.push_back(map_point_from_canonical(
            r.chain, {a * std::cos(t), b * std::sin(t)}));
    }
    return pts;
}

std::vector<Point2> sample_hyperbola_branch(const ReductionResult& r, double reach, int side) {
    int fa = *r.elements.focal_axis;
    double at = (fa == 0) ? *r.elements.semi_a : *r.elements.semi_b;
    double bc = (fa == 0) ? *r.elements.semi_b : *r.elements.semi_a;
    double smax = std::acosh(std::max(2.0, reach / at));
    std::vector<Point2> pts;
    constexpr int n = 128;
    pts.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        double s = -smax + 2.0 * smax * i / n;
        double u = side * at * std::cosh(s);
        double v = bc * std::sinh(s);
        pts.push_back(map_point_from_canonical(r.chain, axis_point(fa, u, v)));
    }
    return pts;
}

std::vector<Point2> sample_parabola(const ReductionResult& r, double reach) {
    int sq = (r.canonical.A != 0.0) ? 0 : 1;
    double omega = (sq == 0) ? r.canonical.A : r.canonical.C;
    double lin = (sq == 0) ? r.canonical.E : r.canonical.D;
    double cc = -omega / (2.0 * lin);  // v = cc u^2
    double span = 1.05 * std::min(reach, std::sqrt(reach / std::fabs(cc)));
    std::vector<Point2> pts;
    constexpr int n = 256;
    pts.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        double u = -span + 2.0 * span * i / n;
        pts.push_back(map_point_from_canonical(r.chain, axis_point(sq, u, cc * u * u)));
    }
    return pts;
}

} // namespace

Point2 svg_to_world(const Viewport& vp, double px, double py) {
    double s = kSvgWidth / (vp.xmax - vp.xmin);
    return {vp.xmin + px / s, vp.ymax - py / s};
}

Viewport default_viewport(const ReductionResult& r) {
    Point2 c{0, 0};
    if (r.elements.center)
        c = *r.elements.center;
    else if (r.elements.vertex)
        c = *r.elements.vertex;
    else if (!r.elements.lines.empty()) {
        // foot of the origin on the first line
        const Line& ln = r.elements.lines.front();
        c = {-ln.n * ln.l, -ln.n * ln.m};
    }
    double half = 5.0;
    if (r.elements.semi_a)
        half = std::max(half, 2.5 * *r.elements.semi_a);
    if (r.elements.semi_b)
        half = std::max(half, 2.5 * *r.elements.semi_b);
    if (r.elements.focus_directrix)
        half = std::max(half, 4.0 * *r.elements.focus_directrix);
    return {c.x - half, c.x + half, c.y - half, c.y + half};
}

std::string emit_svg(const ReductionResult& r, const Viewport& vp) {
    Mapper mp(vp);
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kSvgWidth) +
           "\" height=\"" + fmt(mp.height) + "\" viewBox=\"0 0 " + fmt(kSvgWidth) +
           " " + fmt(mp.height) + "\">\n";
    out += "  <style>\n"
           "    .axis { stroke: #999999; stroke-width: 1; }\n"
           "    .asymptote { stroke: #b06060; stroke-width: 1; stroke-dasharray: 6 4; fill: none; }\n"
           "    .locus { stroke: #1f5fbf; stroke-width: 2; fill: none; }\n"
           "    .annotation { font: 16px sans-serif; fill: #333333; }\n"
           "  </style>\n";

    add_segment(out, mp, normalize_line(0.0, 1.0, 0.0), "axis");  // x axis: y = 0
    add_segment(out, mp, normalize_line(1.0, 0.0, 0.0), "axis");  // y axis: x = 0

    for (const Line& a : r.elements.asymptotes)
        add_segment(out, mp, a, "asymptote");

    double reach = viewport_reach(r, vp);
    switch (r.tag) {
    case Classification::Ellipse:
    case Classification::Circle:
        out += "  <path class=\"locus\" d=\"" + path_of(mp, sample_ellipse(r), true) + "\"/>\n";
        break;
    case Classification::Hyperbola:
        for (int side : {-1, 1})
            out += "  <path class=\"locus\" d=\"" +
                   path_of(mp, sample_hyperbola_branch(r, reach, side), false) + "\"/>\n";
        break;
    case Classification::Parabola:
        out += "  <path class=\"locus\" d=\"" + path_of(mp, sample_parabola(r, reach), false) + "\"/>\n";
        break;
    case Classification::TwoConcurrentLines:
    case Classification::TwoParallelLines:
    case Classification::DoubleLine:
        for (const Line& ln : r.elements.lines)
            add_segment(out, mp, ln, "locus");
        break;
    case Classification::Point: {
        double px, py;
        mp.map(*r.elements.center, px, py);
        out += "  <circle class=\"locus\" cx=\"" + fmt(px) + "\" cy=\"" + fmt(py) +
               "\" r=\"4\" fill=\"#1f5fbf\"/>\n";
        break;
    }
    case Classification::EmptySet:
        out += "  <text class=\"annotation\" x=\"20\" y=\"40\">empty locus</text>\n";
        break;
    default:
        break;
    }

    out += "</svg>\n";
    return out;
}

} // namespace conic
