#include "conic/invariants.hpp"

namespace conic {

Invariants invariants(const GeneralConic& c) {
    Invariants v{};
    v.delta = c.A * c.C - c.B * c.B;
    v.omega = c.A + c.C;
    v.m11 = c.C * c.F - c.E * c.E;
    v.m22 = c.A * c.F - c.D * c.D;
    v.m33 = v.delta;
    // Cofactor expansion of det M along the first row; expanding the
    // products gives the five-term closed form quoted in the header.
    v.big_delta = c.A * (c.C * c.F - c.E * c.E)
                - c.B * (c.B * c.F - c.E * c.D)
                + c.D * (c.B * c.E - c.C * c.D);
    v.lin_norm_sq = c.D * c.D + c.E * c.E;
    v.minor_sum = v.m11 + v.m22 + v.m33;
    return v;
}

double evaluate_f(const GeneralConic& c, double x, double y) {
    return c.A * x * x + 2.0 * c.B * x * y + c.C * y * y
         + 2.0 * c.D * x + 2.0 * c.E * y + c.F;
}

double evaluate_q(const GeneralConic& c, double x, double y) {
    return c.A * x * x + 2.0 * c.B * x * y + c.C * y * y;
}

Point2 gradient(const GeneralConic& c, double x, double y) {
    return {2.0 * (c.A * x + c.B * y + c.D),
            2.0 * (c.B * x + c.C * y + c.E)};
}

} // namespace conic
