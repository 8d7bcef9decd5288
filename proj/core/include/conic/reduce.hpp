#pragma once

#include "conic/classify.hpp"
#include "conic/transforms.hpp"
#include "conic/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conic {

// Everything the reduction can say about the locus, in original
// coordinates unless stated otherwise. Only the fields that make sense
// for the tag are set. semi_a/semi_b are the semiaxis lengths along the
// canonical x'/y' axes in that order, exactly as the quadrant-I
// eigenvector ordering produces them (no re-sorting); focal_axis tells
// which of the two carries the foci.
struct GeometricElements {
    std::optional<Point2> center;
    std::optional<Point2> vertex;             // parabola
    std::optional<double> semi_a;             // along x'
    std::optional<double> semi_b;             // along y'
    std::optional<double> linear_c;           // center-to-focus distance
    std::optional<double> eccentricity;
    std::optional<int> focal_axis;            // 0 = x', 1 = y'
    std::vector<Point2> foci;
    std::optional<double> focus_directrix;    // parabola p
    std::vector<Line> asymptotes;             // hyperbola
    std::vector<Line> lines;                  // degenerate loci
    std::optional<Line> center_line;          // infinite-center cases

    friend bool operator==(const GeometricElements&, const GeometricElements&) = default;
};

// Canonical form of f and the rigid motions that produced it. The chain
// maps canonical coordinates back to the original frame:
//
//     x_original = chain[0](chain[1](... x_canonical))
//
// so apply_chain(c, chain) reproduces `canonical` up to floating error.
// Central conics translate to the center first and then rotate into the
// eigenframe, giving lambda1 x'^2 + lambda2 y'^2 + big_delta/delta = 0.
// Parabolas rotate first and then translate to the vertex, giving
// omega u^2 + 2 L v = 0 with u the axis of the nonzero eigenvalue.
// Infinite-center conics translate to a point of the center line and
// rotate, giving omega u^2 + f0 = 0.
struct ReductionResult {
    Classification tag = Classification::EmptySet;
    GeneralConic canonical{};
    std::vector<RigidMotion> chain;
    GeometricElements elements;
    std::string canonical_text;

    friend bool operator==(const ReductionResult&, const ReductionResult&) = default;
};

// Throws DomainError for DegenerateLinear input (nothing quadratic to
// reduce).
ReductionResult reduce(const GeneralConic& c, double tol = kDefaultTol);

} // namespace conic
