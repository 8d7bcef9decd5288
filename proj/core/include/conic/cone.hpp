#pragma once

#include "conic/types.hpp"

#include <optional>

namespace conic {

// Plane sections of the right circular cone x^2 + y^2 = tan(alpha)^2 z^2
// (half-opening angle alpha) and of the cylinder x^2 + y^2 = R^2,
// reported in plane coordinates (X along the line where the cutting plane
// meets the horizontal, Y up the plane's slope).
enum class SectionKind { Circle, Ellipse, Parabola, Hyperbola };

const char* to_string(SectionKind kind);

struct SectionReport {
    SectionKind kind = SectionKind::Circle;
    double eccentricity = 0.0;
    std::optional<double> semi_a;           // see the per-function notes
    std::optional<double> semi_b;
    std::optional<double> linear_c;         // focal distance, c^2 = |a^2 -+ b^2|
    std::optional<double> radius;           // Circle
    std::optional<double> focus_directrix;  // Parabola p
    std::optional<double> vertex_offset;    // Parabola: distance apex-vertex
    GeneralConic section{};                 // the section's equation in plane coords
};

// Plane through a point of the axis at distance h from the apex, tilted
// by beta against the axis (beta = pi/2 cuts perpendicular). With
// e = cos(beta)/cos(alpha) the section is
//
//     X^2 + (1 - e^2) Y^2 + 2 h tan^2(alpha) cos(beta) Y - h^2 tan^2(alpha) = 0
//
// a circle of radius h tan(alpha) for beta = pi/2, a parabola with
// p = h tan^2(alpha) cos(alpha) for beta = alpha (within tol, absolute on
// the angle), an ellipse with eccentricity e for beta > alpha (semi_a
// along X, semi_b the major one along Y) and a hyperbola with
// eccentricity e for beta < alpha (transverse semiaxis is semi_b).
// Angles in radians; requires 0 < alpha < pi/2, 0 < beta <= pi/2, h > 0.
SectionReport cone_plane_section(double alpha, double beta, double h,
                                 double tol = kDefaultTol);

// Plane parallel to the axis at distance eta: always a hyperbola with
// transverse semiaxis semi_a = eta/tan(alpha) (along the axis direction),
// semi_b = eta, linear_c = eta/sin(alpha), eccentricity sec(alpha).
SectionReport cone_axis_parallel_section(double alpha, double eta);

// Cylinder of radius R cut by a plane tilted beta against the axis:
// an ellipse with semi_a = R, semi_b = R/sin(beta), linear_c = R/tan(beta)
// and eccentricity cos(beta); a circle of radius R at beta = pi/2.
SectionReport cylinder_section(double radius, double beta, double tol = kDefaultTol);

} // namespace conic
