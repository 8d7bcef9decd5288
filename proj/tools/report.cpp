#include "report.hpp"

#include "conic/parser.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conic::cli {

namespace {

using nlohmann::ordered_json;

ordered_json point_to_json(const Point2& p) { return ordered_json::array({p.x, p.y}); }

Point2 point_from_json(const ordered_json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

ordered_json coeffs_to_json(const GeneralConic& c) {
    return {{"A", c.A}, {"B", c.B}, {"C", c.C}, {"D", c.D}, {"E", c.E}, {"F", c.F}};
}

GeneralConic coeffs_from_json(const ordered_json& j) {
    return {j.at("A").get<double>(), j.at("B").get<double>(), j.at("C").get<double>(),
            j.at("D").get<double>(), j.at("E").get<double>(), j.at("F").get<double>()};
}

Classification tag_from_string(const std::string& s) {
    for (Classification t : {Classification::Ellipse, Classification::Circle, Classification::Hyperbola,
                             Classification::Parabola, Classification::Point,
                             Classification::TwoConcurrentLines, Classification::TwoParallelLines,
                             Classification::DoubleLine, Classification::EmptySet,
                             Classification::DegenerateLinear}) {
        if (s == to_string(t)) return t;
    }
    throw std::runtime_error("unknown classification tag: " + s);
}

std::string point_text(const Point2& p) {
    return "(" + format_number(p.x) + ", " + format_number(p.y) + ")";
}

}  // namespace

Report basic_report(const GeneralConic& c, double tol) {
    Report r;
    r.equation = format_conic(c);
    r.coefficients = c;
    r.inv = invariants(c);
    r.tag = classify(c, tol);
    if (r.tag != Classification::DegenerateLinear) {
        r.center = center_structure(c, tol);
    }
    return r;
}

ordered_json line_to_json(const Line& line) {
    return {{"l", line.l}, {"m", line.m}, {"n", line.n}, {"text", format_line(line)}};
}

Line line_from_json(const ordered_json& j) {
    return {j.at("l").get<double>(), j.at("m").get<double>(), j.at("n").get<double>()};
}

ordered_json to_json(const Report& r) {
    ordered_json j;
    j["equation"] = r.equation;
    j["coefficients"] = coeffs_to_json(r.coefficients);
    j["invariants"] = {{"big_delta", r.inv.big_delta}, {"delta", r.inv.delta},
                       {"omega", r.inv.omega},         {"m11", r.inv.m11},
                       {"m22", r.inv.m22},             {"m33", r.inv.m33}};
    j["classification"] = to_string(r.tag);

    if (r.center) {
        ordered_json jc;
        switch (r.center->kind) {
            case CenterKind::UniqueCenter:
                jc["kind"] = "unique";
                jc["point"] = point_to_json(r.center->center);
                break;
            case CenterKind::CenterLine:
                jc["kind"] = "line";
                jc["line"] = line_to_json(r.center->line);
                break;
            case CenterKind::NoCenter:
                jc["kind"] = "none";
                break;
        }
        j["center"] = jc;
    } else {
        j["center"] = nullptr;
    }

    if (r.reduction) {
        const ReductionResult& red = *r.reduction;
        ordered_json jr;
        jr["canonical"] = {{"coefficients", coeffs_to_json(red.canonical)},
                           {"equation", red.canonical_text}};
        ordered_json chain = ordered_json::array();
        for (const RigidMotion& m : red.chain) {
            chain.push_back({{"angle_rad", m.angle},
                             {"angle_deg", m.angle * 180.0 / std::numbers::pi},
                             {"translation", point_to_json(m.t)}});
        }
        jr["chain"] = chain;

        ordered_json je = ordered_json::object();
        const GeometricElements& e = red.elements;
        if (e.center) je["center"] = point_to_json(*e.center);
        if (e.vertex) je["vertex"] = point_to_json(*e.vertex);
        if (e.semi_a) je["semi_a"] = *e.semi_a;
        if (e.semi_b) je["semi_b"] = *e.semi_b;
        if (e.linear_c) je["linear_c"] = *e.linear_c;
        if (e.eccentricity) je["eccentricity"] = *e.eccentricity;
        if (e.focal_axis) je["focal_axis"] = *e.focal_axis;
        if (!e.foci.empty()) {
            ordered_json jf = ordered_json::array();
            for (const Point2& p : e.foci) jf.push_back(point_to_json(p));
            je["foci"] = jf;
        }
        if (e.focus_directrix) je["focus_directrix"] = *e.focus_directrix;
        if (!e.asymptotes.empty()) {
            ordered_json ja = ordered_json::array();
            for (const Line& line : e.asymptotes) ja.push_back(line_to_json(line));
            je["asymptotes"] = ja;
        }
        if (!e.lines.empty()) {
            ordered_json jl = ordered_json::array();
            for (const Line& line : e.lines) jl.push_back(line_to_json(line));
            je["lines"] = jl;
        }
        if (e.center_line) je["center_line"] = line_to_json(*e.center_line);
        jr["elements"] = je;
        j["reduction"] = jr;
    } else {
        j["reduction"] = nullptr;
    }

    if (r.factorization) {
        j["factorization"] = {{"tag", to_string(r.factorization->tag)},
                              {"multiplier", r.factorization->multiplier},
                              {"lines", ordered_json::array({line_to_json(r.factorization->first),
                                                             line_to_json(r.factorization->second)})}};
    } else {
        j["factorization"] = nullptr;
    }
    return j;
}

Report report_from_json(const ordered_json& j) {
    Report r;
    r.equation = j.at("equation").get<std::string>();
    r.coefficients = coeffs_from_json(j.at("coefficients"));
    const ordered_json& ji = j.at("invariants");
    r.inv = invariants(r.coefficients);
    r.inv.big_delta = ji.at("big_delta").get<double>();
    r.inv.delta = ji.at("delta").get<double>();
    r.inv.omega = ji.at("omega").get<double>();
    r.inv.m11 = ji.at("m11").get<double>();
    r.inv.m22 = ji.at("m22").get<double>();
    r.inv.m33 = ji.at("m33").get<double>();
    r.tag = tag_from_string(j.at("classification").get<std::string>());

    if (!j.at("center").is_null()) {
        const ordered_json& jc = j.at("center");
        CenterStructure cs;
        std::string kind = jc.at("kind").get<std::string>();
        if (kind == "unique") {
            cs.kind = CenterKind::UniqueCenter;
            cs.center = point_from_json(jc.at("point"));
        } else if (kind == "line") {
            cs.kind = CenterKind::CenterLine;
            cs.line = line_from_json(jc.at("line"));
        } else {
            cs.kind = CenterKind::NoCenter;
        }
        r.center = cs;
    }

    if (!j.at("reduction").is_null()) {
        const ordered_json& jr = j.at("reduction");
        ReductionResult red;
        red.tag = r.tag;
        red.canonical = coeffs_from_json(jr.at("canonical").at("coefficients"));
        red.canonical_text = jr.at("canonical").at("equation").get<std::string>();
        for (const ordered_json& jm : jr.at("chain")) {
            RigidMotion m;
            m.angle = jm.at("angle_rad").get<double>();
            m.t = point_from_json(jm.at("translation"));
            red.chain.push_back(m);
        }
        const ordered_json& je = jr.at("elements");
        GeometricElements& e = red.elements;
        if (je.contains("center")) e.center = point_from_json(je.at("center"));
        if (je.contains("vertex")) e.vertex = point_from_json(je.at("vertex"));
        if (je.contains("semi_a")) e.semi_a = je.at("semi_a").get<double>();
        if (je.contains("semi_b")) e.semi_b = je.at("semi_b").get<double>();
        if (je.contains("linear_c")) e.linear_c = je.at("linear_c").get<double>();
        if (je.contains("eccentricity")) e.eccentricity = je.at("eccentricity").get<double>();
        if (je.contains("focal_axis")) e.focal_axis = je.at("focal_axis").get<int>();
        if (je.contains("foci"))
            for (const ordered_json& jp : je.at("foci")) e.foci.push_back(point_from_json(jp));
        if (je.contains("focus_directrix")) e.focus_directrix = je.at("focus_directrix").get<double>();
        if (je.contains("asymptotes"))
            for (const ordered_json& jl : je.at("asymptotes")) e.asymptotes.push_back(line_from_json(jl));
        if (je.contains("lines"))
            for (const ordered_json& jl : je.at("lines")) e.lines.push_back(line_from_json(jl));
        if (je.contains("center_line")) e.center_line = line_from_json(je.at("center_line"));
        r.reduction = red;
    }

    if (!j.at("factorization").is_null()) {
        const ordered_json& jf = j.at("factorization");
        LineFactorization f;
        f.tag = tag_from_string(jf.at("tag").get<std::string>());
        f.multiplier = jf.at("multiplier").get<double>();
        f.first = line_from_json(jf.at("lines").at(0));
        f.second = line_from_json(jf.at("lines").at(1));
        r.factorization = f;
    }
    return r;
}

void render_text(const Report& r, std::ostream& out) {
    out << "equation:        " << r.equation << "\n";
    out << "invariants:      big_delta=" << format_number(r.inv.big_delta)
        << " delta=" << format_number(r.inv.delta) << " omega=" << format_number(r.inv.omega) << "\n";
    out << "minors:          m11=" << format_number(r.inv.m11) << " m22=" << format_number(r.inv.m22)
        << " m33=" << format_number(r.inv.m33) << "\n";
    out << "classification:  " << to_string(r.tag) << "\n";
    if (r.center) {
        switch (r.center->kind) {
            case CenterKind::UniqueCenter:
                out << "center:          " << point_text(r.center->center) << "\n";
                break;
            case CenterKind::CenterLine:
                out << "center line:     " << format_line(r.center->line) << "\n";
                break;
            case CenterKind::NoCenter:
                out << "center:          none\n";
                break;
        }
    }
    if (r.reduction) {
        const ReductionResult& red = *r.reduction;
        for (const RigidMotion& m : red.chain) {
            if (m.angle != 0.0)
                out << "rotation:        " << format_number(m.angle) << " rad ("
                    << format_number(m.angle * 180.0 / std::numbers::pi) << " deg)\n";
            if (m.t.x != 0.0 || m.t.y != 0.0)
                out << "translation:     " << point_text(m.t) << "\n";
        }
        out << "canonical:       " << red.canonical_text << "\n";
        const GeometricElements& e = red.elements;
        if (e.vertex) out << "vertex:          " << point_text(*e.vertex) << "\n";
        if (e.semi_a && e.semi_b)
            out << "semiaxes:        a=" << format_number(*e.semi_a) << " b=" << format_number(*e.semi_b)
                << "\n";
        if (e.linear_c) out << "focal distance:  c=" << format_number(*e.linear_c) << "\n";
        if (e.focus_directrix) out << "parameter:       p=" << format_number(*e.focus_directrix) << "\n";
        if (e.eccentricity) out << "eccentricity:    " << format_number(*e.eccentricity) << "\n";
        if (!e.foci.empty()) {
            out << "foci:           ";
            for (const Point2& p : e.foci) out << " " << point_text(p);
            out << "\n";
        }
        if (!e.asymptotes.empty()) {
            out << "asymptotes:      " << format_line(e.asymptotes[0]) << "  |  "
                << format_line(e.asymptotes[1]) << "\n";
        }
        if (!e.lines.empty()) {
            out << "lines:           " << format_line(e.lines[0]);
            if (e.lines.size() > 1) out << "  |  " << format_line(e.lines[1]);
            out << "\n";
        }
    }
    if (r.factorization) {
        out << "factorization:   " << format_number(r.factorization->multiplier) << " * ["
            << format_line(r.factorization->first) << "] * [" << format_line(r.factorization->second)
            << "]\n";
    }
}

}  // namespace conic::cli
