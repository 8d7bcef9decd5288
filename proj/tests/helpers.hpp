#pragma once

#include "conic/transforms.hpp"
#include "conic/types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace testutil {

// Relative closeness, floored at absolute tol for values near zero.
inline bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline conic::GeneralConic random_conic(std::mt19937_64& rng, double range = 5.0) {
    return {uniform(rng, -range, range), uniform(rng, -range, range),
            uniform(rng, -range, range), uniform(rng, -range, range),
            uniform(rng, -range, range), uniform(rng, -range, range)};
}

inline conic::RigidMotion random_motion(std::mt19937_64& rng, double range = 5.0) {
    return conic::RigidMotion::make(uniform(rng, -std::numbers::pi, std::numbers::pi),
                                    uniform(rng, -range, range), uniform(rng, -range, range));
}

inline bool same_line(const conic::Line& a, const conic::Line& b, double tol) {
    return close(a.l, b.l, tol) && close(a.m, b.m, tol) && close(a.n, b.n, tol);
}

}  // namespace testutil
