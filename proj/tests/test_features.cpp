#include "conic/features.hpp"
#include "conic/parser.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace conic;
using testutil::same_line;

TEST_CASE("tangent and normal at a point of the conic") {
    GeneralConic c = parse_conic("3x^2 + 4xy + 2y^2 + 3x + y - 11 = 0");
    TangentNormal tn = tangent_at(c, {2, -1});
    CHECK(same_line(tn.tangent, normalize_line(11, 5, -17), 1e-12));
    CHECK(same_line(tn.normal, normalize_line(5, -11, -21), 1e-12));
    CHECK(tn.at.x == 2.0);
    CHECK(tn.at.y == -1.0);
}

TEST_CASE("tangent rejects off-curve and singular points") {
    GeneralConic c = parse_conic("3x^2 + 4xy + 2y^2 + 3x + y - 11 = 0");
    CHECK_THROWS_AS(tangent_at(c, {0, 0}), DomainError);

    // (3,7) is the node of (3x - y - 2)(x - y + 4): gradient vanishes.
    GeneralConic deg = parse_conic("3x^2 - 4xy + y^2 + 10x - 2y - 8 = 0");
    CHECK_THROWS_AS(tangent_at(deg, {3, 7}), DomainError);
}

TEST_CASE("polar line of an on-curve pole is the tangent") {
    GeneralConic c = parse_conic("3x^2 + 4xy + 2y^2 + 3x + y - 11 = 0");
    Line polar = polar_line(c, {2, -1});
    CHECK(same_line(polar, normalize_line(11, 5, -17), 1e-12));
}

TEST_CASE("polar line of an external pole") {
    // Pole at the origin: Dx + Ey + F = 0.
    GeneralConic c = parse_conic("5x^2 + 6xy + 5y^2 - 4x + 4y - 4 = 0");
    Line polar = polar_line(c, {0, 0});
    CHECK(same_line(polar, normalize_line(-2, 2, -4), 1e-12));

    // The center is conjugate to the line at infinity: no polar.
    CHECK_THROWS_AS(polar_line(c, {1, -1}), DomainError);
}

TEST_CASE("asymptotes of the golden hyperbola") {
    AsymptotePair ap = asymptotes(parse_conic("x^2 - 3xy + 2y^2 - 4x = 0"));
    CHECK(same_line(ap.first, normalize_line(1, -2, -8), 1e-12));
    CHECK(same_line(ap.second, normalize_line(1, -1, 4), 1e-12));
    CHECK(ap.intersection.x == doctest::Approx(-16).epsilon(1e-12));
    CHECK(ap.intersection.y == doctest::Approx(-12).epsilon(1e-12));
}

TEST_CASE("asymptotes when y^2 is missing use the swapped form") {
    // xy - x - 1 = 0, i.e. y = 1 + 1/x: asymptotes y = 1 and x = 0.
    AsymptotePair ap = asymptotes(parse_conic("xy - x - 1 = 0"));
    CHECK(same_line(ap.first, normalize_line(0, 1, -1), 1e-12));
    CHECK(same_line(ap.second, normalize_line(1, 0, 0), 1e-12));
    CHECK(ap.intersection.x == doctest::Approx(0).epsilon(1e-12));
    CHECK(ap.intersection.y == doctest::Approx(1).epsilon(1e-12));
}

TEST_CASE("asymptotes exist only for hyperbolas") {
    CHECK_THROWS_AS(asymptotes(parse_conic("x^2 + y^2 - 1 = 0")), DomainError);
    CHECK_THROWS_AS(asymptotes(parse_conic("4x^2 - 4xy + y^2 - 2x - 14y + 7 = 0")), DomainError);
}
