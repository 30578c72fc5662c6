// Command-line front end: loads problem files, runs the library pipelines,
// emits deterministic CSV/JSON reports.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input, 3 budget/cap
// exceeded, 4 not stabilized, 5 gcd != 1, 6 box too small.

#include "sumgrow/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace sumgrow;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::budget_exceeded:
        case Errc::enumeration_cap_exceeded:
            return 3;
        case Errc::not_stabilized:
            return 4;
        case Errc::gcd_not_one:
            return 5;
        case Errc::box_too_small:
            return 6;
        default:
            return 2;
    }
}

void check_config(const RunConfig& config) {
    if (config.cap < 1) throw Error(Errc::bad_value, "--cap must be positive");
    if (config.window < 1) throw Error(Errc::bad_value, "--window must be at least 1");
    for (int b : config.box)
        if (b < 0) throw Error(Errc::bad_value, "--box bounds must be nonnegative");
}

std::vector<int> parse_box_arg(const std::string& text, std::size_t r) {
    std::vector<int> box;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ','))
            box.push_back(std::stoi(part));
        if (box.size() == 1 && r > 1) box.assign(r, box[0]);
        if (box.size() != r)
            throw Error(Errc::dimension_mismatch,
                        "--box needs " + std::to_string(r) + " comma-separated bounds");
    }
    return box;
}

void emit(const RunConfig& config, const std::string& text) {
    if (config.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(config.output, std::ios::binary);
    if (!out) throw Error(Errc::bad_value, "cannot open output file: " + config.output);
    out << text;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

struct CommonArgs {
    std::string file;
    std::string box_text;
    RunConfig config;

    void attach(CLI::App* cmd, bool with_file = true) {
        if (with_file) cmd->add_option("file", file, "problem file (JSON)")->required();
        cmd->add_option("--box", box_text, "box bounds, comma-separated (one value is broadcast)");
        cmd->add_option("--max-threshold", config.max_threshold, "stabilization search limit");
        cmd->add_option("--window", config.window, "validation margin beyond the search limit");
        cmd->add_option("--mode", config.mode, "growth table mode: memoized | brute");
        cmd->add_option("--cap", config.cap, "enumeration cap for the brute-force oracle");
        cmd->add_option("--format", config.format, "output format: csv | json");
        cmd->add_option("--output", config.output, "write output to this file instead of stdout");
    }
};

int cmd_validate(const std::string& file) {
    json diag;
    try {
        ProblemFile pf = load_problem(file);
        diag = json{{"valid", true},
                    {"name", pf.name},
                    {"r", pf.problem.r()},
                    {"k", pf.problem.k_all()},
                    {"base_size", pf.problem.base().size()}};
        std::cout << json_text(diag);
        return 0;
    } catch (const Error& e) {
        diag = json{{"valid", false},
                    {"errors", json::array({json{{"code", Error::name(e.code())},
                                                 {"message", e.what()},
                                                 {"witness", e.witness()}}})}};
        std::cout << json_text(diag);
        std::cerr << "invalid: " << e.what() << "\n";
        return 2;
    }
}

int cmd_grow(CommonArgs& args) {
    ProblemFile pf = load_problem(args.file);
    const std::size_t r = pf.problem.r();
    std::vector<int> box = parse_box_arg(args.box_text, r);
    if (box.empty()) box.assign(r, 6);
    args.config.box = box;
    if (args.config.format.empty()) args.config.format = "csv";
    check_config(args.config);

    GrowthOptions opts;
    opts.mode = args.config.growth_mode();
    GrowthTable table = growth_table(pf.problem, Box(box), opts);

    if (args.config.format == "csv")
        emit(args.config, growth_table_csv(table));
    else if (args.config.format == "json")
        emit(args.config, json_text(growth_to_json(table, args.config)));
    else
        throw Error(Errc::bad_value, "grow supports --format csv or json");
    return 0;
}

int cmd_fit(CommonArgs& args) {
    ProblemFile pf = load_problem(args.file);
    if (args.config.format.empty()) args.config.format = "json";
    if (args.config.format != "json") throw Error(Errc::bad_value, "fit emits JSON");
    args.config.max_threshold = args.config.default_threshold(pf.problem.r());
    check_config(args.config);

    GrowthOptions opts;
    opts.mode = args.config.growth_mode();
    StabilizationReport report =
        detect_stabilization(pf.problem, args.config.max_threshold, args.config.window, opts);
    emit(args.config, json_text(stabilization_to_json(report, args.config)));
    if (!report.stabilized()) {
        std::cerr << "no threshold up to " << args.config.max_threshold << " certified\n";
        return 4;
    }
    return 0;
}

int cmd_structure(CommonArgs& args) {
    ProblemFile pf = load_problem(args.file);
    if (args.config.format.empty()) args.config.format = "json";
    if (args.config.format != "json") throw Error(Errc::bad_value, "structure emits JSON");
    args.config.max_threshold = args.config.default_threshold(pf.problem.r());
    check_config(args.config);

    NormalizedIntegerProblem np = normalized_from_problem(pf.problem);
    StructureReport report =
        structure_sets(np, args.config.max_threshold, args.config.window);

    GrowthOptions opts;
    opts.mode = args.config.growth_mode();
    Problem shifted = to_problem(np);
    StabilizationReport fit =
        detect_stabilization(shifted, args.config.max_threshold, args.config.window, opts);
    MultilinearCheck check;
    if (fit.fitted) {
        check = verify_multilinear(np, report, *fit.fitted);
    } else {
        check.ok = false;
        check.discrepancies.push_back("stabilization search did not certify a polynomial");
    }
    emit(args.config, json_text(structure_to_json(np, report, fit, check, args.config)));
    return 0;
}

int cmd_series(CommonArgs& args) {
    ProblemFile pf = load_problem(args.file);
    if (args.config.format.empty()) args.config.format = "json";
    if (args.config.format != "json") throw Error(Errc::bad_value, "series emits JSON");
    check_config(args.config);
    const std::size_t r = pf.problem.r();

    GrowthOptions opts;
    opts.mode = args.config.growth_mode();

    std::vector<int> box = parse_box_arg(args.box_text, r);
    if (box.empty()) {
        // Size the box from a stabilization pass: enough room past the
        // certified threshold for the numerator support plus a zero margin.
        args.config.max_threshold = args.config.default_threshold(r);
        StabilizationReport probe =
            detect_stabilization(pf.problem, args.config.max_threshold, args.config.window, opts);
        const int tau = probe.stabilized() ? probe.fitted->thresholds[0] : args.config.max_threshold;
        box.resize(r);
        for (std::size_t i = 0; i < r; ++i)
            box[i] = tau + (static_cast<int>(pf.problem.k(i)) - 1) + args.config.window +
                     static_cast<int>(pf.problem.k(i)) + 2;
    }
    args.config.box = box;

    RationalFormSummary summary =
        rational_form_check(pf.problem, Box(box), args.config.window, opts);
    emit(args.config, json_text(numerator_to_json(summary, args.config)));
    return 0;
}

int cmd_frobenius(const std::vector<std::int64_t>& gens, const RunConfig& config) {
    FrobeniusInfo info = frobenius_info(gens);
    if (config.format == "json") {
        json j{{"generators", gens},
               {"frobenius", info.frobenius},
               {"gap_count", info.gap_count},
               {"gaps", info.gaps}};
        emit(config, json_text(j));
    } else {
        emit(config, std::to_string(info.frobenius) + "\n");
    }
    return 0;
}

int cmd_oracle_check(CommonArgs& args, int corrupt_at) {
    ProblemFile pf = load_problem(args.file);
    const std::size_t r = pf.problem.r();
    std::vector<int> box = parse_box_arg(args.box_text, r);
    if (box.empty()) box.assign(r, 4);
    args.config.box = box;
    check_config(args.config);

    GrowthOptions memo_opts;
    GrowthTable memo = growth_table(pf.problem, Box(box), memo_opts);
    if (corrupt_at >= 0 && static_cast<std::size_t>(corrupt_at) < memo.gamma.values.size())
        memo.gamma.values[static_cast<std::size_t>(corrupt_at)] += 1;

    GrowthOptions brute_opts;
    brute_opts.mode = GrowthMode::brute;
    GrowthTable brute = growth_table(pf.problem, Box(box), brute_opts);

    const Box sweep_box(box);
    std::uint64_t points = 0, oracle_points = 0;
    std::vector<int> h(r, 0);
    do {
        ++points;
        if (memo.gamma.at(h) != brute.gamma.at(h)) {
            std::cout << "FAIL: tables diverge at h=" << json(h).dump()
                      << " memoized=" << memo.gamma.at(h) << " brute=" << brute.gamma.at(h) << "\n";
            return 1;
        }
        if (pf.problem.formal_symbol_count(h) <= BigInt(args.config.cap)) {
            ++oracle_points;
            ElementSet direct = brute_force_sumset(pf.problem, h, BigInt(args.config.cap));
            if (static_cast<std::int64_t>(direct.size()) != memo.gamma.at(h)) {
                std::cout << "FAIL: multiset oracle diverges at h=" << json(h).dump() << "\n";
                return 1;
            }
        }
    } while (sweep_box.next(h));
    std::cout << "PASS: " << points << " lattice points, memoized == brute; multiset oracle at "
              << oracle_points << " points\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"iterated sumset growth tables, stabilization fits, and structure reports"};
    app.require_subcommand(1);

    CommonArgs validate_args, grow_args, fit_args, structure_args, series_args, oracle_args;
    std::vector<std::int64_t> gens;
    RunConfig frob_config;
    int corrupt_at = -1;

    auto* validate = app.add_subcommand("validate", "check a problem file");
    validate->add_option("file", validate_args.file, "problem file (JSON)")->required();

    auto* grow = app.add_subcommand("grow", "growth table over a box");
    grow_args.attach(grow);

    auto* fit = app.add_subcommand("fit", "detect eventual polynomiality and fit it");
    fit_args.attach(fit);

    auto* structure = app.add_subcommand("structure", "integer structure sets and gap count");
    structure_args.attach(structure);

    auto* series = app.add_subcommand("series", "generating-function numerator evidence");
    series_args.attach(series);

    auto* frobenius = app.add_subcommand("frobenius", "largest non-representable integer");
    frobenius->add_option("generators", gens, "positive integers with gcd 1")->required();
    frobenius->add_option("--format", frob_config.format, "output format: text | json");
    frobenius->add_option("--output", frob_config.output, "write output to this file");

    auto* oracle = app.add_subcommand("oracle-check", "memoized vs independent enumeration");
    oracle_args.attach(oracle);
    oracle->add_option("--inject-corruption", corrupt_at, "test hook: corrupt one table entry")
        ->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(validate_args.file);
        if (grow->parsed()) return cmd_grow(grow_args);
        if (fit->parsed()) return cmd_fit(fit_args);
        if (structure->parsed()) return cmd_structure(structure_args);
        if (series->parsed()) return cmd_series(series_args);
        if (frobenius->parsed()) return cmd_frobenius(gens, frob_config);
        if (oracle->parsed()) return cmd_oracle_check(oracle_args, corrupt_at);
    } catch (const Error& e) {
        std::cerr << Error::name(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
