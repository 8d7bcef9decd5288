#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conic {

// Default relative tolerance for every geometric decision (degeneracy
// tests, rank tests, classification branches). Callers can override it
// per operation.
inline constexpr double kDefaultTol = 1e-9;

// General second-degree curve
//
//     f(x,y) = A x^2 + 2B xy + C y^2 + 2D x + 2E y + F
//
// B, D and E are stored in the half convention: the printed equation
// carries 2B, 2D, 2E. parse_conic()/format_conic() convert, and the
// command line --coeffs flag takes the printed (doubled) values.
struct GeneralConic {
    double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;

    friend bool operator==(const GeneralConic&, const GeneralConic&) = default;
};

struct Point2 {
    double x = 0, y = 0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

// Line l x + m y + n = 0, normalized so that (l, m) is a unit vector whose
// first nonzero component is positive. Build through normalize_line().
struct Line {
    double l = 0, m = 0, n = 0;

    friend bool operator==(const Line&, const Line&) = default;
};

// Malformed equation text. position is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position(position) {}
    std::size_t position;
};

// A geometric precondition does not hold (no unique center, not a
// hyperbola, point not on the conic, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// max(|A|,...,|F|, 1): the magnitude tolerances are taken relative to.
double coefficient_scale(const GeneralConic& c);

// The conic divided by its largest absolute coefficient (no-op on an
// all-zero conic). Decision routines run on this copy, which makes them
// exactly invariant under rescaling of the input equation.
GeneralConic unit_scaled(const GeneralConic& c);

Line normalize_line(double l, double m, double n);

} // namespace conic
