#include "conic/classify.hpp"

#include "conic/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace conic {

const char* to_string(Classification tag) {
    switch (tag) {
    case Classification::Ellipse:            return "Ellipse";
    case Classification::Circle:             return "Circle";
    case Classification::Hyperbola:          return "Hyperbola";
    case Classification::Parabola:           return "Parabola";
    case Classification::Point:              return "Point";
    case Classification::TwoConcurrentLines: return "TwoConcurrentLines";
    case Classification::TwoParallelLines:   return "TwoParallelLines";
    case Classification::DoubleLine:         return "DoubleLine";
    case Classification::EmptySet:           return "EmptySet";
    case Classification::DegenerateLinear:   return "DegenerateLinear";
    }
    return "?";
}

Classification classify(const GeneralConic& c, double tol) {
    GeneralConic u = unit_scaled(c);
    if (std::max({std::fabs(u.A), std::fabs(u.B), std::fabs(u.C)}) <= tol)
        return Classification::DegenerateLinear;

    Invariants v = invariants(u);
    if (std::fabs(v.delta) > tol) {
        if (std::fabs(v.big_delta) > tol) {
            if (v.delta < 0.0)
                return Classification::Hyperbola;
            if ((v.big_delta > 0.0) == (v.omega > 0.0))
                return Classification::EmptySet;
            if (std::fabs(u.B) <= tol && std::fabs(u.A - u.C) <= tol)
                return Classification::Circle;
            return Classification::Ellipse;
        }
        return v.delta > 0.0 ? Classification::Point
                             : Classification::TwoConcurrentLines;
    }

    if (std::fabs(v.big_delta) > tol)
        return Classification::Parabola;

    // delta ~ 0 ~ big_delta: a pair of parallel lines, a double line or
    // nothing, told apart by the minor belonging to the nonzero diagonal
    // entry.
    double minor = (std::fabs(u.A) > tol) ? v.m22 : v.m11;
    if (minor < -tol)
        return Classification::TwoParallelLines;
    if (minor > tol)
        return Classification::EmptySet;
    return Classification::DoubleLine;
}

} // namespace conic
