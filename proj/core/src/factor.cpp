#include "conic/factor.hpp"

#include "conic/reduce.hpp"

namespace conic {

GeneralConic expand_line_product(const Line& a, const Line& b, double multiplier) {
    GeneralConic p{
        a.l * b.l,
        0.5 * (a.l * b.m + b.l * a.m),
        a.m * b.m,
        0.5 * (a.l * b.n + b.l * a.n),
        0.5 * (a.m * b.n + b.m * a.n),
        a.n * b.n,
    };
    p.A *= multiplier; p.B *= multiplier; p.C *= multiplier;
    p.D *= multiplier; p.E *= multiplier; p.F *= multiplier;
    return p;
}

LineFactorization factor_lines(const GeneralConic& c, double tol) {
    Classification tag = classify(c, tol);
    if (tag != Classification::TwoConcurrentLines &&
        tag != Classification::TwoParallelLines &&
        tag != Classification::DoubleLine)
        throw DomainError(std::string("conic does not factor into real lines (") +
                          to_string(tag) + ")");

    ReductionResult red = reduce(c, tol);
    LineFactorization r;
    r.tag = tag;
    r.first = red.elements.lines.at(0);
    r.second = red.elements.lines.size() > 1 ? red.elements.lines.at(1) : r.first;

    GeneralConic p = expand_line_product(r.first, r.second, 1.0);
    double num = p.A * c.A + p.B * c.B + p.C * c.C + p.D * c.D + p.E * c.E + p.F * c.F;
    double den = p.A * p.A + p.B * p.B + p.C * p.C + p.D * p.D + p.E * p.E + p.F * p.F;
    r.multiplier = num / den;
    return r;
}

} // namespace conic
