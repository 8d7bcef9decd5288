#include "conic/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

namespace conic {

namespace {

enum class Tok { Number, Var, Plus, Minus, Star, Slash, Caret, Equals, End };

struct Token {
    Tok kind = Tok::End;
    double value = 0.0;   // Number
    bool integral = false; // Number had no '.' or exponent
    char var = 0;         // Var
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
            ++i_;
        Token t;
        t.pos = i_;
        if (i_ >= text_.size())
            return t;
        char c = text_[i_];
        switch (c) {
        case '+': ++i_; t.kind = Tok::Plus; return t;
        case '-': ++i_; t.kind = Tok::Minus; return t;
        case '*': ++i_; t.kind = Tok::Star; return t;
        case '/': ++i_; t.kind = Tok::Slash; return t;
        case '^': ++i_; t.kind = Tok::Caret; return t;
        case '=': ++i_; t.kind = Tok::Equals; return t;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = text_.data() + i_;
            const char* end = text_.data() + text_.size();
            double v = 0.0;
            auto res = std::from_chars(begin, end, v, std::chars_format::general);
            if (res.ec != std::errc() || res.ptr == begin)
                throw ParseError("malformed number", i_);
            t.kind = Tok::Number;
            t.value = v;
            std::string_view lexeme(begin, static_cast<std::size_t>(res.ptr - begin));
            t.integral = lexeme.find_first_of(".eE") == std::string_view::npos;
            i_ += lexeme.size();
            return t;
        }
        if (c == 'x' || c == 'y') {
            ++i_;
            t.kind = Tok::Var;
            t.var = c;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError(std::string("unknown variable '") + c + "' (only x and y are allowed)", i_);
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }

private:
    std::string_view text_;
    std::size_t i_ = 0;
};

struct Coeffs {
    double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { advance(); }

    GeneralConic parse() {
        Coeffs lhs = parse_polynomial();
        if (cur_.kind == Tok::Equals) {
            advance();
            Coeffs rhs = parse_polynomial();
            lhs.A -= rhs.A; lhs.B -= rhs.B; lhs.C -= rhs.C;
            lhs.D -= rhs.D; lhs.E -= rhs.E; lhs.F -= rhs.F;
        }
        if (cur_.kind != Tok::End)
            throw ParseError("unexpected trailing input", cur_.pos);
        if (lhs.A == 0 && lhs.B == 0 && lhs.C == 0 && lhs.D == 0 && lhs.E == 0 && lhs.F == 0)
            throw ParseError("empty polynomial: every coefficient cancels", 0);
        return {lhs.A, lhs.B, lhs.C, lhs.D, lhs.E, lhs.F};
    }

private:
    void advance() { cur_ = lex_.next(); }

    bool consume_signs() {
        bool negative = false;
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            if (cur_.kind == Tok::Minus)
                negative = !negative;
            advance();
        }
        return negative;
    }

    Coeffs parse_polynomial() {
        Coeffs p;
        bool neg = consume_signs();
        parse_term(p, neg);
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            neg = consume_signs();
            parse_term(p, neg);
        }
        return p;
    }

    int parse_exponent() {
        // after '^'
        advance();
        if (cur_.kind != Tok::Number || !cur_.integral ||
            cur_.value != std::floor(cur_.value) || cur_.value < 0 || cur_.value > 16)
            throw ParseError("expected a small nonnegative integer exponent after '^'", cur_.pos);
        int p = static_cast<int>(cur_.value);
        advance();
        return p;
    }

    void parse_term(Coeffs& out, bool negative) {
        std::size_t start = cur_.pos;
        double coeff = 1.0;
        int xdeg = 0, ydeg = 0;
        bool have_any = false;

        if (cur_.kind == Tok::Number) {
            coeff = cur_.value;
            have_any = true;
            advance();
            if (cur_.kind == Tok::Slash) {
                advance();
                if (cur_.kind != Tok::Number)
                    throw ParseError("expected a number after '/'", cur_.pos);
                if (cur_.value == 0.0)
                    throw ParseError("division by zero in coefficient", cur_.pos);
                coeff /= cur_.value;
                advance();
            }
            if (cur_.kind == Tok::Star) {
                advance();
                if (cur_.kind != Tok::Var)
                    throw ParseError("expected x or y after '*'", cur_.pos);
            }
        }

        while (cur_.kind == Tok::Var) {
            char v = cur_.var;
            have_any = true;
            advance();
            int p = 1;
            if (cur_.kind == Tok::Caret)
                p = parse_exponent();
            if (v == 'x')
                xdeg += p;
            else
                ydeg += p;
            if (cur_.kind == Tok::Star) {
                advance();
                if (cur_.kind != Tok::Var)
                    throw ParseError("expected x or y after '*'", cur_.pos);
            }
        }

        if (!have_any)
            throw ParseError("expected a term", cur_.pos);
        if (xdeg + ydeg > 2)
            throw ParseError("term of degree " + std::to_string(xdeg + ydeg) +
                             " (only degree <= 2 is allowed)", start);

        double v = negative ? -coeff : coeff;
        if (xdeg == 2)      out.A += v;
        else if (ydeg == 2) out.C += v;
        else if (xdeg == 1 && ydeg == 1) out.B += v / 2.0;
        else if (xdeg == 1) out.D += v / 2.0;
        else if (ydeg == 1) out.E += v / 2.0;
        else                out.F += v;
    }

    Lexer lex_;
    Token cur_;
};

// Continued-fraction rational reconstruction: p/q with q <= max_den and
// |x - p/q| <= 1e-9 * max(1, |x|). Returns false when no such fraction
// exists.
bool rationalize(double x, long max_den, long& p, long& q) {
    if (!std::isfinite(x))
        return false;
    double tol = 1e-9 * std::max(1.0, std::fabs(x));
    long p0 = 1, q0 = 0;  // p(-1)/q(-1)
    long p1 = static_cast<long>(std::llround(std::floor(x)));
    long q1 = 1;
    double frac = x - std::floor(x);
    for (int iter = 0; iter < 64; ++iter) {
        if (std::fabs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol) {
            p = p1;
            q = q1;
            return true;
        }
        if (frac == 0.0)
            break;
        double inv = 1.0 / frac;
        double a = std::floor(inv);
        if (a > 1e15)
            break;
        long ai = static_cast<long>(a);
        long p2 = ai * p1 + p0;
        long q2 = ai * q1 + q0;
        if (q2 > max_den || q2 <= 0)
            break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        frac = inv - a;
    }
    if (std::fabs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol && q1 <= max_den) {
        p = p1;
        q = q1;
        return true;
    }
    return false;
}

// One polynomial term: sep is " + "/" - " (or ""/"-" at the front),
// magnitude |v| printed, coefficient 1 dropped before a variable part.
void append_term(std::string& out, double v, const char* monomial) {
    if (v == 0.0)
        return;
    bool neg = std::signbit(v);
    if (out.empty())
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    double mag = std::fabs(v);
    if (mag != 1.0 || monomial[0] == '\0')
        out += format_number(mag);
    out += monomial;
}

std::string format_with(const GeneralConic& c, const char* x2, const char* xy,
                        const char* y2, const char* x, const char* y) {
    std::string out;
    append_term(out, c.A, x2);
    append_term(out, 2.0 * c.B, xy);
    append_term(out, c.C, y2);
    append_term(out, 2.0 * c.D, x);
    append_term(out, 2.0 * c.E, y);
    append_term(out, c.F, "");
    if (out.empty())
        out = "0";
    out += " = 0";
    return out;
}

} // namespace

GeneralConic parse_conic(std::string_view text) {
    return Parser(text).parse();
}

std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_conic(const GeneralConic& c) {
    return format_with(c, "x^2", "xy", "y^2", "x", "y");
}

std::string format_conic_primed(const GeneralConic& c) {
    return format_with(c, "x'^2", "x'y'", "y'^2", "x'", "y'");
}

std::string format_line(const Line& line) {
    // The stored form is unit-normalized; try to recover a small integer
    // representative for display.
    double g = (line.l != 0.0) ? line.l : line.m;
    double rl = line.l / g, rm = line.m / g, rn = line.n / g;
    long pl, ql, pm, qm, pn, qn;
    std::string out;
    bool nice = rationalize(rl, 4096, pl, ql) && rationalize(rm, 4096, pm, qm) &&
                rationalize(rn, 4096, pn, qn);
    if (nice) {
        long lcm = std::lcm(ql, std::lcm(qm, qn));
        if (lcm > 0 && lcm <= 1000000) {
            long il = pl * (lcm / ql), im = pm * (lcm / qm), in = pn * (lcm / qn);
            long gg = std::gcd(std::gcd(std::labs(il), std::labs(im)), std::labs(in));
            if (gg > 1) { il /= gg; im /= gg; in /= gg; }
            if (il < 0 || (il == 0 && im < 0)) { il = -il; im = -im; in = -in; }
            if (std::labs(il) <= 1000000 && std::labs(im) <= 1000000 && std::labs(in) <= 1000000) {
                append_term(out, static_cast<double>(il), "x");
                append_term(out, static_cast<double>(im), "y");
                append_term(out, static_cast<double>(in), "");
                if (out.empty())
                    out = "0";
                return out + " = 0";
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.6gx%s%.6gy%s%.6g = 0",
                  line.l, line.m < 0 ? " - " : " + ", std::fabs(line.m),
                  line.n < 0 ? " - " : " + ", std::fabs(line.n));
    return buf;
}

} // namespace conic
