#include "conic/cone.hpp"

#include <cmath>
#include <numbers>

namespace conic {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require(bool ok, const char* what) {
    if (!ok)
        throw DomainError(what);
}

} // namespace

const char* to_string(SectionKind kind) {
    switch (kind) {
    case SectionKind::Circle:    return "Circle";
    case SectionKind::Ellipse:   return "Ellipse";
    case SectionKind::Parabola:  return "Parabola";
    case SectionKind::Hyperbola: return "Hyperbola";
    }
    return "?";
}

SectionReport cone_plane_section(double alpha, double beta, double h, double tol) {
    require(std::isfinite(alpha) && alpha > 0.0 && alpha < kHalfPi,
            "cone half-angle alpha must lie strictly between 0 and pi/2");
    require(std::isfinite(beta) && beta > 0.0 && beta <= kHalfPi + 1e-12,
            "plane tilt beta must lie in (0, pi/2]");
    require(std::isfinite(h) && h > 0.0, "axis distance h must be positive");

    double ta = std::tan(alpha);
    double e = std::cos(beta) / std::cos(alpha);
    SectionReport r;
    r.section = {1.0, 0.0, 1.0 - e * e, 0.0,
                 h * ta * ta * std::cos(beta), -h * h * ta * ta};

    if (std::fabs(beta - kHalfPi) <= tol) {
        r.kind = SectionKind::Circle;
        r.eccentricity = 0.0;
        r.radius = h * ta;
        r.semi_a = r.semi_b = r.radius;
        r.linear_c = 0.0;
        return r;
    }
    if (std::fabs(beta - alpha) <= tol) {
        r.kind = SectionKind::Parabola;
        r.eccentricity = 1.0;
        r.focus_directrix = h * ta * ta * std::cos(alpha);
        r.vertex_offset = h / (2.0 * std::cos(alpha));
        return r;
    }

    double s = h * ta * std::sin(beta);
    if (beta > alpha) {
        // e < 1: ellipse, major axis along Y (up the slope)
        double om = 1.0 - e * e;
        r.kind = SectionKind::Ellipse;
        r.eccentricity = e;
        r.semi_a = s / std::sqrt(om);
        r.semi_b = s / om;
        r.linear_c = e * s / om;  // = sqrt(semi_b^2 - semi_a^2)
    } else {
        // e > 1: hyperbola, transverse axis along Y
        double g = e * e - 1.0;
        r.kind = SectionKind::Hyperbola;
        r.eccentricity = e;
        r.semi_a = s / std::sqrt(g);
        r.semi_b = s / g;
        r.linear_c = e * s / g;  // = sqrt(semi_a^2 + semi_b^2)
    }
    return r;
}

SectionReport cone_axis_parallel_section(double alpha, double eta) {
    require(std::isfinite(alpha) && alpha > 0.0 && alpha < kHalfPi,
            "cone half-angle alpha must lie strictly between 0 and pi/2");
    require(std::isfinite(eta) && eta > 0.0, "plane offset eta must be positive");

    double ta = std::tan(alpha);
    SectionReport r;
    r.kind = SectionKind::Hyperbola;
    r.semi_a = eta / ta;               // transverse, along the axis direction
    r.semi_b = eta;
    r.linear_c = eta / std::sin(alpha);
    r.eccentricity = 1.0 / std::cos(alpha);
    r.section = {-1.0, 0.0, ta * ta, 0.0, 0.0, -eta * eta};
    return r;
}

SectionReport cylinder_section(double radius, double beta, double tol) {
    require(std::isfinite(radius) && radius > 0.0, "cylinder radius must be positive");
    require(std::isfinite(beta) && beta > 0.0 && beta <= kHalfPi + 1e-12,
            "plane tilt beta must lie in (0, pi/2]");

    double sb = std::sin(beta);
    SectionReport r;
    r.section = {1.0, 0.0, sb * sb, 0.0, 0.0, -radius * radius};
    if (std::fabs(beta - kHalfPi) <= tol) {
        r.kind = SectionKind::Circle;
        r.eccentricity = 0.0;
        r.radius = radius;
        r.semi_a = r.semi_b = radius;
        r.linear_c = 0.0;
        return r;
    }
    r.kind = SectionKind::Ellipse;
    r.semi_a = radius;
    r.semi_b = radius / sb;
    r.linear_c = radius / std::tan(beta);
    r.eccentricity = std::cos(beta);
    return r;
}

} // namespace conic
