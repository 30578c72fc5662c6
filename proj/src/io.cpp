#include "sumgrow/io.hpp"

#include <fstream>
#include <sstream>

namespace sumgrow {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(Errc::parse_error, where + ": " + what);
}

const json& need(const json& doc, const char* key, const std::string& where) {
    auto it = doc.find(key);
    if (it == doc.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

SemigroupSpec parse_spec(const json& doc) {
    const std::string where = "/semigroup";
    if (!doc.is_object()) fail(where, "must be an object");
    const std::string kind = need(doc, "kind", where).get<std::string>();

    if (kind == "product") {
        const json& comps = need(doc, "components", where);
        if (!comps.is_array() || comps.empty()) fail(where + "/components", "must be a nonempty array");
        std::vector<SemigroupSpec::Component> components;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const json& c = comps[i];
            const std::string cwhere = where + "/components/" + std::to_string(i);
            if (!c.is_object()) fail(cwhere, "must be an object");
            const std::string type = need(c, "type", cwhere).get<std::string>();
            SemigroupSpec::Component comp;
            if (type == "free") {
                comp.is_free = true;
            } else if (type == "mod") {
                comp.is_free = false;
                comp.modulus = need(c, "m", cwhere).get<std::int64_t>();
            } else {
                fail(cwhere, "type must be 'free' or 'mod'");
            }
            components.push_back(comp);
        }
        return SemigroupSpec::make_product(std::move(components));
    }

    if (kind == "table") {
        const json& t = need(doc, "table", where);
        if (!t.is_array()) fail(where + "/table", "must be an array of rows");
        std::vector<std::vector<int>> table;
        for (const auto& row : t) {
            if (!row.is_array()) fail(where + "/table", "rows must be arrays");
            table.push_back(row.get<std::vector<int>>());
        }
        const int order = need(doc, "order", where).get<int>();
        if (order != static_cast<int>(table.size()))
            fail(where, "declared order " + std::to_string(order) + " does not match table size " +
                            std::to_string(table.size()));
        const int identity = need(doc, "identity", where).get<int>();
        SemigroupSpec spec = SemigroupSpec::make_table(std::move(table), identity);
        if (doc.value("adjoin_identity", false)) spec = adjoin_identity(spec);
        return spec;
    }

    fail(where, "kind must be 'product' or 'table'");
}

Element parse_element(const SemigroupSpec& spec, const json& e, const std::string& where) {
    if (spec.kind == SemigroupSpec::Kind::table) {
        if (!e.is_number_integer()) fail(where, "table elements are integer indices");
        return Element({e.get<std::int64_t>()});
    }
    if (!e.is_array()) fail(where, "product elements are integer arrays");
    auto coords = e.get<std::vector<std::int64_t>>();
    if (coords.size() != spec.arity())
        fail(where, "element has " + std::to_string(coords.size()) + " coordinates, expected " +
                        std::to_string(spec.arity()));
    return Element(std::move(coords));
}

ElementSet parse_set(SpecPtr spec, const json& arr, const std::string& where, bool nonneg) {
    if (!arr.is_array() || arr.empty()) fail(where, "must be a nonempty array of elements");
    std::vector<Element> elems;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        Element e = parse_element(*spec, arr[i], where + "/" + std::to_string(i));
        if (nonneg && spec->kind == SemigroupSpec::Kind::product) {
            for (std::size_t c = 0; c < spec->components.size(); ++c)
                if (spec->components[c].is_free && e.coords[c] < 0)
                    fail(where + "/" + std::to_string(i),
                         "negative coordinate in a problem declared nonnegative");
        }
        elems.push_back(std::move(e));
    }
    return ElementSet::from_raw(std::move(spec), std::move(elems));
}

json bigint_json(const BigInt& v) { return v.str(); }

json rational_json(const Rational& q) {
    return json{{"num", rational_num(q).str()}, {"den", rational_den(q).str()}};
}

}  // namespace

GrowthMode RunConfig::growth_mode() const {
    if (mode == "memoized") return GrowthMode::memoized;
    if (mode == "brute") return GrowthMode::brute;
    throw Error(Errc::bad_value, "mode must be 'memoized' or 'brute'");
}

json RunConfig::to_json() const {
    return json{{"box", box},     {"max_threshold", max_threshold}, {"window", window},
                {"mode", mode},   {"cap", cap},                     {"format", format},
                {"output", output}};
}

ProblemFile parse_problem(const json& doc) {
    if (!doc.is_object()) fail("/", "problem file must be a JSON object");
    SemigroupSpec raw = parse_spec(need(doc, "semigroup", "/"));
    auto spec = std::make_shared<const SemigroupSpec>(validate_spec(raw));

    ProblemFile pf;
    pf.nonnegative = doc.value("nonnegative", false);
    pf.name = doc.value("name", std::string{});
    pf.notes = doc.value("notes", std::string{});

    ElementSet base = parse_set(spec, need(doc, "B", "/"), "/B", pf.nonnegative);
    const json& a = need(doc, "A", "/");
    if (!a.is_array() || a.empty()) fail("/A", "must be a nonempty array of summand sets");
    std::vector<ElementSet> summands;
    for (std::size_t i = 0; i < a.size(); ++i)
        summands.push_back(parse_set(spec, a[i], "/A/" + std::to_string(i), pf.nonnegative));

    pf.problem = Problem::make(spec, std::move(base), std::move(summands));
    pf.problem.name = pf.name;
    return pf;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse_error, "cannot open problem file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(Errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    return parse_problem(doc);
}

bool is_integer_line_problem(const Problem& p) {
    const SemigroupSpec& spec = *p.spec();
    return spec.kind == SemigroupSpec::Kind::product && spec.components.size() == 1 &&
           spec.components[0].is_free;
}

NormalizedIntegerProblem normalized_from_problem(const Problem& p) {
    if (!is_integer_line_problem(p))
        throw Error(Errc::bad_value,
                    "structure analysis needs a problem over the 1-dimensional integer semigroup");
    auto values = [](const ElementSet& s) {
        std::vector<std::int64_t> out;
        out.reserve(s.size());
        for (const auto& e : s.elements()) out.push_back(e.coords[0]);
        return out;
    };
    std::vector<std::vector<std::int64_t>> summands;
    for (const auto& a : p.summands()) summands.push_back(values(a));
    return normalize(values(p.base()), std::move(summands));
}

json polynomial_to_json(const MultiPoly& poly) {
    json terms = json::array();
    for (const auto& [expo, coef] : poly.terms()) {
        json t = rational_json(coef);
        t["exponents"] = expo;
        terms.push_back(std::move(t));
    }
    return json{{"arity", poly.arity()}, {"terms", std::move(terms)}};
}

json fitted_to_json(const FittedPolynomial& fitted) {
    return json{{"polynomial", polynomial_to_json(fitted.poly)},
                {"thresholds", fitted.thresholds},
                {"window", fitted.window},
                {"degree_bounds", fitted.degree_bounds}};
}

json stabilization_to_json(const StabilizationReport& report, const RunConfig& config) {
    json j{{"config", config.to_json()},
           {"status", report.stabilized() ? "stabilized" : "not_stabilized"},
           {"search_limit", report.search_limit},
           {"examined_box", report.examined_box.hi}};
    if (report.fitted) {
        j["fit"] = fitted_to_json(*report.fitted);
        j["relaxed_thresholds"] = report.relaxed_thresholds;
    }
    if (!report.witnesses.empty()) {
        json ws = json::array();
        for (const auto& w : report.witnesses)
            ws.push_back(json{{"threshold", w.threshold},
                              {"point", w.point},
                              {"gamma", w.table_value},
                              {"predicted", w.predicted}});
        j["witnesses"] = std::move(ws);
    }
    return j;
}

json structure_to_json(const NormalizedIntegerProblem& p, const StructureReport& report,
                       const StabilizationReport& fit, const MultilinearCheck& check,
                       const RunConfig& config) {
    json j{{"config", config.to_json()},
           {"b_star", report.b_star},
           {"a_star", report.a_star},
           {"base_shift", p.base_shift},
           {"summand_shifts", p.summand_shifts},
           {"c", report.c},
           {"C", report.C},
           {"d", report.d},
           {"D", report.D},
           {"delta", report.delta},
           {"gap_low", report.g_low},
           {"gap_top", report.g_top},
           {"h_star", report.h_star},
           {"checked_h", report.checked_h},
           {"gamma_checked", report.gamma_checked},
           {"multilinear_ok", check.ok},
           {"discrepancies", check.discrepancies}};
    if (fit.fitted) j["fit"] = fitted_to_json(*fit.fitted);
    return j;
}

json numerator_to_json(const RationalFormSummary& summary, const RunConfig& config) {
    json terms = json::array();
    for (const auto& [expo, coef] : summary.num.sparse())
        terms.push_back(json{{"exponents", expo}, {"coef", bigint_json(coef)}});
    json j{{"config", config.to_json()},
           {"box", summary.box.hi},
           {"k", summary.k},
           {"terminated", summary.num.terminated},
           {"beta", summary.num.beta},
           {"support_hi", summary.num.support_hi},
           {"margin", summary.num.margin},
           {"beta_anomaly", summary.num.beta_anomaly},
           {"numerator", std::move(terms)},
           {"fit_consistent", summary.fit_consistent},
           {"stabilization",
            summary.stabilization.stabilized() ? "stabilized" : "not_stabilized"}};
    if (summary.stabilization.fitted)
        j["fit"] = fitted_to_json(*summary.stabilization.fitted);
    if (summary.first_tail_mismatch) j["first_tail_mismatch"] = *summary.first_tail_mismatch;
    return j;
}

json growth_to_json(const GrowthTable& table, const RunConfig& config) {
    json rows = json::array();
    std::vector<int> h(table.box().dim(), 0);
    do {
        rows.push_back(json{{"h", h}, {"gamma", table.gamma.at(h)}});
    } while (table.box().next(h));
    return json{{"config", config.to_json()}, {"box", table.box().hi}, {"rows", std::move(rows)}};
}

}  // namespace sumgrow
