#include "cli.hpp"

#include "report.hpp"

#include "conic/classify.hpp"
#include "conic/cone.hpp"
#include "conic/factor.hpp"
#include "conic/features.hpp"
#include "conic/parser.hpp"
#include "conic/reduce.hpp"
#include "conic/svg.hpp"
#include "conic/types.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

namespace conic::cli {

namespace {

using nlohmann::ordered_json;

double parse_number(std::string_view s, const std::string& what) {
    double v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::general);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("expected a number in " + what, static_cast<std::size_t>(ptr - first));
    return v;
}

std::vector<double> parse_csv(const std::string& s, std::size_t n, const std::string& what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? comma : comma - start);
        out.push_back(parse_number(item, what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != n)
        throw ParseError(what + ": expected " + std::to_string(n) + " comma separated values", 0);
    return out;
}

Point2 parse_point(const std::string& s, const std::string& what) {
    std::vector<double> v = parse_csv(s, 2, what);
    return {v[0], v[1]};
}

// Angles are radians by default; a "deg" suffix switches to degrees and
// an explicit "rad" suffix is accepted too.
double parse_angle(const std::string& s, const std::string& what) {
    std::string body = s;
    double unit = 1.0;
    if (body.size() > 3 && body.compare(body.size() - 3, 3, "deg") == 0) {
        unit = std::numbers::pi / 180.0;
        body.resize(body.size() - 3);
    } else if (body.size() > 3 && body.compare(body.size() - 3, 3, "rad") == 0) {
        body.resize(body.size() - 3);
    }
    while (!body.empty() && body.back() == ' ') body.pop_back();
    return parse_number(body, what) * unit;
}

// --coeffs takes the printed coefficients a,b,c,d,e,f of
// ax^2 + bxy + cy^2 + dx + ey + f, so the mixed and linear ones are
// halved going into the symmetric-matrix form.
GeneralConic conic_from_coeffs(const std::string& s) {
    std::vector<double> v = parse_csv(s, 6, "--coeffs");
    return {v[0], v[1] / 2.0, v[2], v[3] / 2.0, v[4] / 2.0, v[5]};
}

struct ConicArgs {
    std::string equation;
    std::string coeffs;
    double tol = kDefaultTol;
    bool json = false;
};

void add_conic_options(CLI::App* sub, ConicArgs& a, bool with_json = true) {
    auto* eq = sub->add_option("equation", a.equation, "conic equation, e.g. \"x^2 - xy + 3 = 0\"");
    sub->add_option("--coeffs", a.coeffs, "printed coefficients a,b,c,d,e,f of ax^2+bxy+cy^2+dx+ey+f")
        ->excludes(eq);
    sub->add_option("--tol", a.tol, "classification tolerance, relative to the largest coefficient");
    if (with_json) sub->add_flag("--json", a.json, "emit a JSON report instead of text");
}

GeneralConic resolve_conic(const ConicArgs& a) {
    if (!a.coeffs.empty()) return conic_from_coeffs(a.coeffs);
    if (!a.equation.empty()) return parse_conic(a.equation);
    throw ParseError("no conic given: pass an equation or --coeffs", 0);
}

void emit(const Report& r, bool json, std::ostream& out) {
    if (json)
        out << to_json(r).dump(2) << "\n";
    else
        render_text(r, out);
}

int run_classify(const ConicArgs& a, std::ostream& out) {
    GeneralConic c = resolve_conic(a);
    emit(basic_report(c, a.tol), a.json, out);
    return 0;
}

int run_reduce(const ConicArgs& a, std::ostream& out) {
    GeneralConic c = resolve_conic(a);
    Report r = basic_report(c, a.tol);
    r.reduction = reduce(c, a.tol);
    emit(r, a.json, out);
    return 0;
}

int run_factor(const ConicArgs& a, std::ostream& out) {
    GeneralConic c = resolve_conic(a);
    Report r = basic_report(c, a.tol);
    r.reduction = reduce(c, a.tol);
    r.factorization = factor_lines(c, a.tol);
    emit(r, a.json, out);
    return 0;
}

int run_tangent(const ConicArgs& a, const std::string& at, std::ostream& out) {
    GeneralConic c = resolve_conic(a);
    Point2 p = parse_point(at, "--at");
    TangentNormal tn = tangent_at(c, p, a.tol);
    if (a.json) {
        ordered_json j = {{"point", {tn.at.x, tn.at.y}},
                          {"tangent", line_to_json(tn.tangent)},
                          {"normal", line_to_json(tn.normal)}};
        out << j.dump(2) << "\n";
    } else {
        out << "point:    (" << format_number(p.x) << ", " << format_number(p.y) << ")\n";
        out << "tangent:  " << format_line(tn.tangent) << "\n";
        out << "normal:   " << format_line(tn.normal) << "\n";
    }
    return 0;
}

int run_polar(const ConicArgs& a, const std::string& at, std::ostream& out) {
    GeneralConic c = resolve_conic(a);
    Point2 pole = parse_point(at, "--pole");
    Line l = polar_line(c, pole, a.tol);
    if (a.json) {
        ordered_json j = {{"pole", {pole.x, pole.y}}, {"polar", line_to_json(l)}};
        out << j.dump(2) << "\n";
    } else {
        out << "pole:     (" << format_number(pole.x) << ", " << format_number(pole.y) << ")\n";
        out << "polar:    " << format_line(l) << "\n";
    }
    return 0;
}

int run_asymptotes(const ConicArgs& a, std::ostream& out) {
    GeneralConic c = resolve_conic(a);
    AsymptotePair ap = asymptotes(c, a.tol);
    if (a.json) {
        ordered_json j = {
            {"asymptotes", ordered_json::array({line_to_json(ap.first), line_to_json(ap.second)})},
            {"intersection", {ap.intersection.x, ap.intersection.y}}};
        out << j.dump(2) << "\n";
    } else {
        out << "asymptotes:    " << format_line(ap.first) << "  |  " << format_line(ap.second) << "\n";
        out << "intersection:  (" << format_number(ap.intersection.x) << ", "
            << format_number(ap.intersection.y) << ")\n";
    }
    return 0;
}

void emit_section(const SectionReport& s, bool json, std::ostream& out) {
    Classification check = classify(s.section);
    if (json) {
        ordered_json j;
        j["kind"] = to_string(s.kind);
        j["eccentricity"] = s.eccentricity;
        if (s.semi_a) j["semi_a"] = *s.semi_a;
        if (s.semi_b) j["semi_b"] = *s.semi_b;
        if (s.linear_c) j["linear_c"] = *s.linear_c;
        if (s.radius) j["radius"] = *s.radius;
        if (s.focus_directrix) j["focus_directrix"] = *s.focus_directrix;
        if (s.vertex_offset) j["vertex_offset"] = *s.vertex_offset;
        j["section"] = {{"equation", format_conic(s.section)},
                        {"coefficients",
                         {{"A", s.section.A},
                          {"B", s.section.B},
                          {"C", s.section.C},
                          {"D", s.section.D},
                          {"E", s.section.E},
                          {"F", s.section.F}}}};
        j["section_classification"] = to_string(check);
        out << j.dump(2) << "\n";
    } else {
        out << "kind:            " << to_string(s.kind) << "\n";
        out << "eccentricity:    " << format_number(s.eccentricity) << "\n";
        if (s.semi_a) out << "semi_a:          " << format_number(*s.semi_a) << "\n";
        if (s.semi_b) out << "semi_b:          " << format_number(*s.semi_b) << "\n";
        if (s.linear_c) out << "focal distance:  " << format_number(*s.linear_c) << "\n";
        if (s.radius) out << "radius:          " << format_number(*s.radius) << "\n";
        if (s.focus_directrix) out << "parameter:       p=" << format_number(*s.focus_directrix) << "\n";
        if (s.vertex_offset) out << "vertex offset:   " << format_number(*s.vertex_offset) << "\n";
        out << "plane equation:  " << format_conic(s.section) << "\n";
        out << "plane tag:       " << to_string(check) << "\n";
    }
}

int run_svg(const ConicArgs& a, const std::string& viewport, const std::string& out_path,
            std::ostream& out, std::ostream& err) {
    GeneralConic c = resolve_conic(a);
    ReductionResult r = reduce(c, a.tol);
    Viewport vp = default_viewport(r);
    if (!viewport.empty()) {
        std::vector<double> v = parse_csv(viewport, 4, "--viewport");
        if (v[0] >= v[1] || v[2] >= v[3])
            throw ParseError("--viewport: expected xmin,xmax,ymin,ymax with min < max", 0);
        vp = {v[0], v[1], v[2], v[3]};
    }
    std::string svg = emit_svg(r, vp);
    if (out_path.empty()) {
        out << svg;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << out_path << " for writing\n";
        return 1;
    }
    f << svg;
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"classification and metric reduction of plane conics"};
    app.require_subcommand(1);

    ConicArgs classify_args, reduce_args, factor_args, tangent_args, polar_args, asym_args, svg_args;
    std::string tangent_at_s, pole_s, svg_viewport, svg_out;

    CLI::App* sub_classify = app.add_subcommand("classify", "affine type from the invariants");
    add_conic_options(sub_classify, classify_args);

    CLI::App* sub_reduce = app.add_subcommand("reduce", "canonical equation, axes and elements");
    add_conic_options(sub_reduce, reduce_args);

    CLI::App* sub_factor = app.add_subcommand("factor", "split a degenerate conic into its lines");
    add_conic_options(sub_factor, factor_args);

    CLI::App* sub_tangent = app.add_subcommand("tangent", "tangent and normal at an on-curve point");
    add_conic_options(sub_tangent, tangent_args);
    sub_tangent->add_option("--at", tangent_at_s, "point on the conic, as x,y")->required();

    CLI::App* sub_polar = app.add_subcommand("polar", "polar line of a pole");
    add_conic_options(sub_polar, polar_args);
    sub_polar->add_option("--pole", pole_s, "pole, as x,y")->required();

    CLI::App* sub_asym = app.add_subcommand("asymptotes", "asymptotes of a hyperbola");
    add_conic_options(sub_asym, asym_args);

    std::string alpha_s, beta_s;
    double cone_h = 1.0;
    double parallel_offset = 0.0;
    bool cone_json = false;
    CLI::App* sub_cone = app.add_subcommand("cone-section", "plane section of a right circular cone");
    sub_cone->add_option("--alpha", alpha_s, "half-opening angle, radians or e.g. 30deg")->required();
    auto* beta_opt = sub_cone->add_option("--beta", beta_s, "plane tilt against the axis, pi/2 = perpendicular");
    sub_cone->add_option("--height", cone_h, "apex distance h of the plane's axis point (default 1)");
    sub_cone->add_option("--parallel-offset", parallel_offset, "axis-parallel plane at this distance instead")
        ->excludes(beta_opt);
    sub_cone->add_flag("--json", cone_json, "emit a JSON report instead of text");

    std::string cyl_beta_s;
    double cyl_radius = 0.0;
    bool cyl_json = false;
    CLI::App* sub_cyl = app.add_subcommand("cylinder-section", "plane section of a right circular cylinder");
    sub_cyl->add_option("--radius", cyl_radius, "cylinder radius")->required();
    sub_cyl->add_option("--beta", cyl_beta_s, "plane tilt against the axis")->required();
    sub_cyl->add_flag("--json", cyl_json, "emit a JSON report instead of text");

    CLI::App* sub_svg = app.add_subcommand("svg", "draw the conic as an SVG document");
    add_conic_options(sub_svg, svg_args, false);
    sub_svg->add_option("--viewport", svg_viewport, "world window xmin,xmax,ymin,ymax (default: auto)");
    sub_svg->add_option("--out", svg_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
        out << target->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sub_classify->parsed()) return run_classify(classify_args, out);
        if (sub_reduce->parsed()) return run_reduce(reduce_args, out);
        if (sub_factor->parsed()) return run_factor(factor_args, out);
        if (sub_tangent->parsed()) return run_tangent(tangent_args, tangent_at_s, out);
        if (sub_polar->parsed()) return run_polar(polar_args, pole_s, out);
        if (sub_asym->parsed()) return run_asymptotes(asym_args, out);
        if (sub_cone->parsed()) {
            double alpha = parse_angle(alpha_s, "--alpha");
            bool parallel = sub_cone->count("--parallel-offset") != 0u;
            if (!parallel && beta_s.empty())
                throw ParseError("cone-section needs --beta or --parallel-offset", 0);
            SectionReport s = parallel
                                  ? cone_axis_parallel_section(alpha, parallel_offset)
                                  : cone_plane_section(alpha, parse_angle(beta_s, "--beta"), cone_h);
            emit_section(s, cone_json, out);
            return 0;
        }
        if (sub_cyl->parsed()) {
            emit_section(cylinder_section(cyl_radius, parse_angle(cyl_beta_s, "--beta")), cyl_json, out);
            return 0;
        }
        if (sub_svg->parsed()) return run_svg(svg_args, svg_viewport, svg_out, out, err);
    } catch (const ParseError& e) {
        err << "parse error at position " << e.position << ": " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace conic::cli
