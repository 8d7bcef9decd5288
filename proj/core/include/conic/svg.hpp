#pragma once

#include "conic/reduce.hpp"
#include "conic/types.hpp"

#include <optional>
#include <string>

namespace conic {

struct Viewport {
    double xmin = -10, xmax = 10, ymin = -10, ymax = 10;
};

// Fixed raster width of the emitted drawing; the height follows the
// viewport's aspect ratio. Coordinates are written in this pixel space
// (y pointing down) with 6 fixed decimals, which keeps the golden files
// byte-stable and every locus sample within ~1e-8 world units of the
// exact curve after rounding.
inline constexpr double kSvgWidth = 800.0;

// Deterministic drawing of the reduced conic: grey coordinate axes,
// dashed asymptotes (class "asymptote"), the locus itself (class
// "locus": sampled paths for the nondegenerate types, clipped segments
// for line pairs, a small circle marker for a point), and a text
// annotation for an empty locus. Everything tagged "locus" lies on
// f = 0; axes, asymptotes and annotations do not.
std::string emit_svg(const ReductionResult& r, const Viewport& vp);

// Square box around the interesting features (center, vertex or a point
// of the degenerate lines), sized from the semiaxes when present.
Viewport default_viewport(const ReductionResult& r);

// Inverse of the world->pixel map; lets tests re-evaluate f on emitted
// coordinates.
Point2 svg_to_world(const Viewport& vp, double px, double py);

} // namespace conic
