#include "conic/invariants.hpp"
#include "conic/parser.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace conic;

TEST_CASE("invariants of the golden central conics") {
    Invariants i = invariants(parse_conic("5x^2 + 6xy + 5y^2 - 4x + 4y - 4 = 0"));
    CHECK(i.big_delta == doctest::Approx(-128).epsilon(1e-12));
    CHECK(i.delta == doctest::Approx(16).epsilon(1e-12));
    CHECK(i.omega == doctest::Approx(10).epsilon(1e-12));
    CHECK(i.m33 == i.delta);

    i = invariants(parse_conic("x^2 - 10xy + y^2 + x + y + 1 = 0"));
    CHECK(i.big_delta == doctest::Approx(-27).epsilon(1e-12));
    CHECK(i.delta == doctest::Approx(-24).epsilon(1e-12));
    CHECK(i.omega == doctest::Approx(2).epsilon(1e-12));
}

TEST_CASE("minors of the degenerate parallel pair") {
    // (3x-2y+2)(3x-2y+1): delta and big_delta vanish, m22 = AF - D^2 < 0.
    Invariants i = invariants(parse_conic("9x^2 - 12xy + 4y^2 + 9x - 6y + 2 = 0"));
    CHECK(i.big_delta == doctest::Approx(0).epsilon(1e-12));
    CHECK(i.delta == doctest::Approx(0).epsilon(1e-12));
    CHECK(i.m22 == doctest::Approx(-2.25).epsilon(1e-12));
    CHECK(i.minor_sum == i.m11 + i.m22 + i.m33);
    CHECK(i.lin_norm_sq == doctest::Approx(4.5 * 4.5 + 3.0 * 3.0).epsilon(1e-12));
}

TEST_CASE("point evaluation and gradient") {
    GeneralConic par = parse_conic("9x^2 - 12xy + 4y^2 + 9x - 6y + 2 = 0");
    CHECK(evaluate_f(par, -0.5, 0) == doctest::Approx(-0.25).epsilon(1e-12));

    GeneralConic ell = parse_conic("5x^2 + 6xy + 5y^2 - 4x + 4y - 4 = 0");
    CHECK(evaluate_q(ell, 1, -1) == doctest::Approx(4).epsilon(1e-12));
    CHECK(evaluate_f(ell, 1, -1) == doctest::Approx(-8).epsilon(1e-12));

    // grad f = (2(Ax + By + D), 2(Bx + Cy + E)).
    GeneralConic g = parse_conic("3x^2 + 4xy + 2y^2 + 3x + y - 11 = 0");
    Point2 grad = gradient(g, 2, -1);
    CHECK(grad.x == doctest::Approx(11).epsilon(1e-12));
    CHECK(grad.y == doctest::Approx(5).epsilon(1e-12));

    GeneralConic pt = parse_conic("2x^2 + 2xy + 3y^2 + 6x + 8y + 7 = 0");
    CHECK(evaluate_f(pt, -1, -1) == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("empty set example keeps its invariant signs") {
    Invariants i = invariants(parse_conic("-2x^2 + 2xy - y^2 + 2y - 3 = 0"));
    CHECK(i.big_delta == doctest::Approx(-1).epsilon(1e-12));
    CHECK(i.delta == doctest::Approx(1).epsilon(1e-12));
    CHECK(i.omega == doctest::Approx(-3).epsilon(1e-12));
}
