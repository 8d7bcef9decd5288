#pragma once

#include "conic/types.hpp"

namespace conic {

// Scalars attached to the symmetric coefficient matrix
//
//         | A B D |
//     M = | B C E |
//         | D E F |
//
// big_delta (det M), delta (det of the quadratic block) and omega (its
// trace) are invariant under every rigid motion of the plane; they drive
// the classification. m11/m22/m33 are the principal minors of M;
// lin_norm_sq = D^2 + E^2 and minor_sum = m11 + m22 + m33 are preserved by
// rotations about the origin but not by translations.
struct Invariants {
    double big_delta;     // ACF - AE^2 - B^2 F + 2BDE - CD^2
    double delta;         // AC - B^2
    double omega;         // A + C
    double m11;           // CF - E^2
    double m22;           // AF - D^2
    double m33;           // AC - B^2
    double lin_norm_sq;   // D^2 + E^2
    double minor_sum;     // m11 + m22 + m33

    friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants(const GeneralConic& c);

// f(x, y) with the doubled cross/linear terms spelled out.
double evaluate_f(const GeneralConic& c, double x, double y);

// Quadratic part q(x, y) = A x^2 + 2B xy + C y^2.
double evaluate_q(const GeneralConic& c, double x, double y);

// (df/dx, df/dy) = (2(Ax + By + D), 2(Bx + Cy + E)).
Point2 gradient(const GeneralConic& c, double x, double y);

} // namespace conic
