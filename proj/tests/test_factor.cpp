#include "conic/classify.hpp"
#include "conic/factor.hpp"
#include "conic/parser.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace conic;
using testutil::close;
using testutil::same_line;

namespace {

// Reconstruction oracle: the returned multiplier times the product of
// the two normalized lines must reproduce the input coefficients.
void check_reconstruction(const GeneralConic& c) {
    LineFactorization f = factor_lines(c);
    GeneralConic back = expand_line_product(f.first, f.second, f.multiplier);
    double scale = coefficient_scale(c);
    CHECK(close(back.A, c.A, 1e-9 * scale));
    CHECK(close(back.B, c.B, 1e-9 * scale));
    CHECK(close(back.C, c.C, 1e-9 * scale));
    CHECK(close(back.D, c.D, 1e-9 * scale));
    CHECK(close(back.E, c.E, 1e-9 * scale));
    CHECK(close(back.F, c.F, 1e-9 * scale));
}

}  // namespace

TEST_CASE("concurrent pair with known factors") {
    GeneralConic c = parse_conic("3x^2 - 4xy + y^2 + 10x - 2y - 8 = 0");
    LineFactorization f = factor_lines(c);
    CHECK(f.tag == Classification::TwoConcurrentLines);
    CHECK(same_line(f.first, normalize_line(1, -1, 4), 1e-9));
    CHECK(same_line(f.second, normalize_line(3, -1, -2), 1e-9));
    // Both lines are unit-normal, so the multiplier restores sqrt(2)*sqrt(10).
    CHECK(f.multiplier == doctest::Approx(std::sqrt(20.0)).epsilon(1e-9));
    check_reconstruction(c);
}

TEST_CASE("parallel pair and double line") {
    GeneralConic c = parse_conic("9x^2 - 12xy + 4y^2 + 9x - 6y + 2 = 0");
    LineFactorization f = factor_lines(c);
    CHECK(f.tag == Classification::TwoParallelLines);
    CHECK(same_line(f.first, normalize_line(3, -2, 1), 1e-9));
    CHECK(same_line(f.second, normalize_line(3, -2, 2), 1e-9));
    CHECK(f.multiplier == doctest::Approx(13.0).epsilon(1e-9));
    check_reconstruction(c);

    c = parse_conic("x^2 - 2xy + y^2 + 2x - 2y + 1 = 0");
    f = factor_lines(c);
    CHECK(f.tag == Classification::DoubleLine);
    CHECK(same_line(f.first, f.second, 1e-12));
    CHECK(same_line(f.first, normalize_line(1, -1, 1), 1e-9));
    CHECK(f.multiplier == doctest::Approx(2.0).epsilon(1e-9));
    check_reconstruction(c);
}

TEST_CASE("factorization corpus reconstructs") {
    // Mostly line pairs; two point conics and one hyperbola hide in the
    // list and must be refused.
    const std::vector<std::string> problems = {
        "6x^2 + xy - 2y^2 + 7x - 14y - 24 = 0",   // (2x - y - 3)(3x + 2y + 8)
        "4x^2 + 4xy + y^2 - 2x - y - 20 = 0",     // (2x + y - 5)(2x + y + 4)
        "x^2 + 2xy + 2y^2 - 8x - 12y + 20 = 0",   // point (2,2): no real lines
        "xy + 5x - 2x - 10 = 0",                  // xy + 3x - 10: a hyperbola
        "6x^2 + 11xy + 3y^2 + 11x - y - 10 = 0",  // (2x + 3y + 5)(3x + y - 2)
        "4x^2 + 3xy + y^2 - 10x - 2y + 8 = 0",    // point (2,-2)
        "10xy + 4x - 15y - 6 = 0",                // (2x - 3)(5y + 2)
        "4x^2 + 4xy + y^2 - 12x - 6y + 9 = 0",    // (2x + y - 3)^2
        "x^2 - 4xy + 4y^2 + 2x - 4y - 3 = 0",     // (x - 2y + 3)(x - 2y - 1)
        "9x^2 - 6xy + y^2 - 3x + y - 2 = 0",      // (3x - y - 2)(3x - y + 1)
    };
    for (const std::string& eq : problems) {
        GeneralConic c = parse_conic(eq);
        Classification tag = classify(c);
        if (tag == Classification::TwoConcurrentLines || tag == Classification::TwoParallelLines ||
            tag == Classification::DoubleLine) {
            check_reconstruction(c);
        } else {
            CHECK_THROWS_AS(factor_lines(c), DomainError);
        }
    }
    CHECK(classify(parse_conic("xy + 5x - 2x - 10 = 0")) == Classification::Hyperbola);
    CHECK(classify(parse_conic("x^2 + 2xy + 2y^2 - 8x - 12y + 20 = 0")) == Classification::Point);
    CHECK(classify(parse_conic("4x^2 + 3xy + y^2 - 10x - 2y + 8 = 0")) == Classification::Point);

    // Exercise set, all factorable.
    const std::vector<std::string> exercises = {
        "2x^2 + xy - y^2 + 3y - 2 = 0",           // (2x - y + 2)(x + y - 1)
        "x^2 - y^2 + x + y = 0",                  // (x + y)(x - y + 1)
        "2x^2 + xy - 2x - y = 0",                 // (x - 1)(2x + y)
        "x^2 - 2xy + y^2 + 2x - 2y + 1 = 0",      // (x - y + 1)^2
        "4x^2 - 4xy + y^2 + 4x - 2y + 1 = 0",     // (2x - y + 1)^2
    };
    for (const std::string& eq : exercises) check_reconstruction(parse_conic(eq));
}

TEST_CASE("named factors from the exercise set") {
    LineFactorization f = factor_lines(parse_conic("10xy + 4x - 15y - 6 = 0"));
    CHECK(f.tag == Classification::TwoConcurrentLines);
    CHECK(same_line(f.first, normalize_line(0, 5, 2), 1e-9));
    CHECK(same_line(f.second, normalize_line(2, 0, -3), 1e-9));

    f = factor_lines(parse_conic("x^2 - y^2 + x + y = 0"));
    CHECK(same_line(f.first, normalize_line(1, -1, 1), 1e-9));
    CHECK(same_line(f.second, normalize_line(1, 1, 0), 1e-9));

    // The corrected mixed-product exercise (x - 2)(y + 5).
    f = factor_lines(parse_conic("xy + 5x - 2y - 10 = 0"));
    CHECK(f.tag == Classification::TwoConcurrentLines);
    CHECK(same_line(f.first, normalize_line(0, 1, 5), 1e-9));
    CHECK(same_line(f.second, normalize_line(1, 0, -2), 1e-9));
}

TEST_CASE("non-degenerate conics refuse to factor") {
    CHECK_THROWS_AS(factor_lines(parse_conic("x^2 + y^2 - 1 = 0")), DomainError);
    CHECK_THROWS_AS(factor_lines(parse_conic("xy = 2")), DomainError);
    CHECK_THROWS_AS(factor_lines(parse_conic("4x^2 - 4xy + y^2 - 2x - 14y + 7 = 0")), DomainError);
    CHECK_THROWS_AS(factor_lines(parse_conic("x^2 + y^2 - 4x - 6y + 13 = 0")), DomainError);
    CHECK_THROWS_AS(factor_lines(parse_conic("x^2 + y^2 - 4x - 6y + 24 = 0")), DomainError);
}

TEST_CASE("expand_line_product multiplies two lines into a conic") {
    // (x - 2y + 3)(x - 2y - 1) = x^2 - 4xy + 4y^2 + 2x - 4y - 3.
    GeneralConic c = expand_line_product({1, -2, 3}, {1, -2, -1}, 1.0);
    CHECK(c.A == 1.0);
    CHECK(c.B == -2.0);
    CHECK(c.C == 4.0);
    CHECK(c.D == 1.0);
    CHECK(c.E == -2.0);
    CHECK(c.F == -3.0);
}
