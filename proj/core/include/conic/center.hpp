#pragma once

#include "conic/types.hpp"

namespace conic {

// Solutions of the center system grad f = 0:
//
//     A h + B k + D = 0
//     B h + C k + E = 0
//
// delta = AC - B^2 nonzero gives the unique center
// ((-CD + BE)/delta, (BD - AE)/delta). With delta ~ 0 the system has
// either a whole line of centers (when BD - AE ~ 0 ~ CD - BE) or none.
enum class CenterKind { UniqueCenter, CenterLine, NoCenter };

struct CenterStructure {
    CenterKind kind = CenterKind::NoCenter;
    Point2 center{};  // UniqueCenter
    Line line{};      // CenterLine

    friend bool operator==(const CenterStructure&, const CenterStructure&) = default;
};

// Throws DomainError when A = B = C = 0 (no quadratic part, so no center
// system). Tolerances are relative to the coefficient scale.
CenterStructure center_structure(const GeneralConic& c, double tol = kDefaultTol);

// f at a center collapses to D h + E k + F (the quadratic and half the
// linear part cancel against each other); equals big_delta/delta when the
// center is unique. Throws DomainError when (h, k) does not satisfy the
// center system to tolerance.
double value_at_center(const GeneralConic& c, Point2 center, double tol = kDefaultTol);

} // namespace conic
