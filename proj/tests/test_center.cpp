#include "conic/center.hpp"
#include "conic/parser.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace conic;

TEST_CASE("unique center solves the linear system") {
    CenterStructure s = center_structure(parse_conic("2x^2 + 2xy + 3y^2 + 6x + 8y + 7 = 0"));
    CHECK(s.kind == CenterKind::UniqueCenter);
    CHECK(s.center.x == doctest::Approx(-1).epsilon(1e-12));
    CHECK(s.center.y == doctest::Approx(-1).epsilon(1e-12));

    s = center_structure(parse_conic("5x^2 + 6xy + 5y^2 - 4x + 4y - 4 = 0"));
    CHECK(s.center.x == doctest::Approx(1).epsilon(1e-12));
    CHECK(s.center.y == doctest::Approx(-1).epsilon(1e-12));

    s = center_structure(parse_conic("x^2 - 10xy + y^2 + x + y + 1 = 0"));
    CHECK(s.center.x == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(s.center.y == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("parabolas have no center, parallel pairs a center line") {
    CenterStructure s = center_structure(parse_conic("4x^2 - 4xy + y^2 - 2x - 14y + 7 = 0"));
    CHECK(s.kind == CenterKind::NoCenter);

    s = center_structure(parse_conic("9x^2 - 12xy + 4y^2 + 9x - 6y + 2 = 0"));
    CHECK(s.kind == CenterKind::CenterLine);
    // Ah + Bk + D = 0 row: 9h - 6k + 4.5 = 0.
    CHECK(testutil::same_line(s.line, normalize_line(9, -6, 4.5), 1e-12));
}

TEST_CASE("center analysis needs a quadratic part") {
    CHECK_THROWS_AS(center_structure(parse_conic("2x + 3y - 1 = 0")), DomainError);
}

TEST_CASE("value at the center equals Dh + Ek + F") {
    GeneralConic ell = parse_conic("5x^2 + 6xy + 5y^2 - 4x + 4y - 4 = 0");
    CHECK(value_at_center(ell, {1, -1}) == doctest::Approx(-8).epsilon(1e-12));

    GeneralConic hyp = parse_conic("12xy - 5y^2 + 48y - 36 = 0");
    CHECK(value_at_center(hyp, {-4, 0}) == doctest::Approx(-36).epsilon(1e-12));

    CHECK_THROWS_AS(value_at_center(ell, {0, 0}), DomainError);
}
