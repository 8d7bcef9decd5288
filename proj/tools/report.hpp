#pragma once

#include "conic/center.hpp"
#include "conic/classify.hpp"
#include "conic/factor.hpp"
#include "conic/invariants.hpp"
#include "conic/reduce.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>

namespace conic::cli {

// Everything the tool can say about one input conic. Sections that a given
// subcommand did not compute stay disengaged and serialize as null.
struct Report {
    std::string equation;
    GeneralConic coefficients;
    Invariants inv{};
    Classification tag = Classification::EmptySet;
    std::optional<CenterStructure> center;
    std::optional<ReductionResult> reduction;
    std::optional<LineFactorization> factorization;

    friend bool operator==(const Report&, const Report&) = default;
};

// Fills equation, coefficients, invariants, tag and (when the conic has
// quadratic part) the center structure.
Report basic_report(const GeneralConic& c, double tol);

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json line_to_json(const Line& line);
Line line_from_json(const nlohmann::ordered_json& j);

void render_text(const Report& r, std::ostream& out);

}  // namespace conic::cli
