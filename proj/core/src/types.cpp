#include "conic/types.hpp"

#include <algorithm>
#include <cmath>

namespace conic {

double coefficient_scale(const GeneralConic& c) {
    double m = std::max({std::fabs(c.A), std::fabs(c.B), std::fabs(c.C),
                         std::fabs(c.D), std::fabs(c.E), std::fabs(c.F)});
    return std::max(m, 1.0);
}

GeneralConic unit_scaled(const GeneralConic& c) {
    double m = std::max({std::fabs(c.A), std::fabs(c.B), std::fabs(c.C),
                         std::fabs(c.D), std::fabs(c.E), std::fabs(c.F)});
    if (m == 0.0)
        return c;
    return {c.A / m, c.B / m, c.C / m, c.D / m, c.E / m, c.F / m};
}

Line normalize_line(double l, double m, double n) {
    double norm = std::hypot(l, m);
    if (norm == 0.0)
        throw DomainError("cannot normalize a line with zero direction coefficients");
    l /= norm;
    m /= norm;
    n /= norm;
    // Orient so the first nonzero of (l, m) is positive. After unit
    // normalization a |component| below 1e-12 is treated as zero.
    constexpr double zero = 1e-12;
    bool flip = (l < -zero) || (std::fabs(l) <= zero && m < 0.0);
    if (flip) {
        l = -l;
        m = -m;
        n = -n;
    }
    if (std::fabs(l) <= zero)
        l = 0.0;
    if (std::fabs(m) <= zero)
        m = 0.0;
    return {l, m, n};
}

} // namespace conic
