#pragma once

#include "sumgrow/analysis.hpp"
#include "sumgrow/engine.hpp"
#include "sumgrow/hilbert.hpp"
#include "sumgrow/integer_structure.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sumgrow {

using nlohmann::json;

/// Per-invocation parameters. Unset values (negative / empty) are replaced by
/// deterministic command-specific defaults before a run starts.
struct RunConfig {
    std::vector<int> box;        // empty: command default
    int max_threshold = -1;      // <0: 50 for r = 1, 12 per coordinate for r >= 2
    int window = 2;
    std::string mode = "memoized";
    std::int64_t cap = 10'000'000;
    std::string format;          // empty: command default
    std::string output;          // empty: stdout

    GrowthMode growth_mode() const;
    int default_threshold(std::size_t r) const {
        return max_threshold >= 0 ? max_threshold : (r == 1 ? 50 : 12);
    }
    json to_json() const;
};

/// Parsed problem file: semigroup declaration, base set, summand list,
/// optional metadata. `load_problem` validates everything and reports
/// violations with their JSON location.
struct ProblemFile {
    Problem problem;
    std::string name;
    std::string notes;
    bool nonnegative = false;
};

ProblemFile parse_problem(const json& doc);
ProblemFile load_problem(const std::string& path);

/// True when the problem lives in the 1-dimensional free-integer semigroup,
/// the shape the integer structure analysis applies to.
bool is_integer_line_problem(const Problem& p);
NormalizedIntegerProblem normalized_from_problem(const Problem& p);

json polynomial_to_json(const MultiPoly& poly);
json fitted_to_json(const FittedPolynomial& fitted);
json stabilization_to_json(const StabilizationReport& report, const RunConfig& config);
json structure_to_json(const NormalizedIntegerProblem& p, const StructureReport& report,
                       const StabilizationReport& fit, const MultilinearCheck& check,
                       const RunConfig& config);
json numerator_to_json(const RationalFormSummary& summary, const RunConfig& config);
json growth_to_json(const GrowthTable& table, const RunConfig& config);

}  // namespace sumgrow
