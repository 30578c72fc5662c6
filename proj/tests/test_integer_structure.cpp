#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumgrow/integer_structure.hpp"
#include "sumgrow/io.hpp"

#include "oracles.hpp"
#include "testutil.hpp"

#include <numeric>
#include <random>

using namespace sumgrow;

namespace {

/// Gap data derived straight from an enumerated sumset, for golden checks.
struct GapOracle {
    std::vector<std::int64_t> low, top;
};

GapOracle gaps_at(const std::vector<std::int64_t>& base,
                  const std::vector<std::vector<std::int64_t>>& summands, int h) {
    std::vector<int> hv(summands.size(), h);
    auto sumset = oracles::int_sumset_oracle(base, summands, hv);
    std::int64_t f = *std::max_element(base.begin(), base.end());
    for (const auto& a : summands) f += *std::max_element(a.begin(), a.end()) * h;
    GapOracle g;
    for (std::int64_t x = 0; x <= f; ++x) {
        if (std::binary_search(sumset.begin(), sumset.end(), x)) continue;
        if (x <= f / 2)
            g.low.push_back(x);
        else
            g.top.push_back(f - x);
    }
    std::sort(g.top.begin(), g.top.end());
    return g;
}

}  // namespace

TEST_CASE("normalization translates minima to zero and records shifts") {
    auto p = normalize({10}, {{2, 5, 7}});
    CHECK(p.base == std::vector<std::int64_t>{0});
    CHECK(p.summands[0] == std::vector<std::int64_t>{0, 3, 5});
    CHECK(p.base_shift == 10);
    CHECK(p.summand_shifts == std::vector<std::int64_t>{2});
    CHECK(p.gcd_witness == 1);
    CHECK(p.b_star == 0);
    CHECK(p.a_star == std::vector<std::int64_t>{5});
}

TEST_CASE("normalization rejects summands with gcd above one") {
    try {
        normalize({0}, {{0, 2, 4}});
        FAIL("expected GcdNotOne");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::gcd_not_one);
        CHECK(e.witness() == std::vector<long long>{2});
    }
    // all-zero summands leave gcd 0, which is also not 1
    CHECK_THROWS_AS(normalize({0, 7}, {{0}}), Error);
}

TEST_CASE("already normalized problems pass through unchanged") {
    auto p = normalize({0}, {{0, 1}, {0, 2, 3}});
    CHECK(p.base == std::vector<std::int64_t>{0});
    CHECK(p.summands[0] == std::vector<std::int64_t>{0, 1});
    CHECK(p.summands[1] == std::vector<std::int64_t>{0, 2, 3});
    CHECK(p.base_shift == 0);
    CHECK(p.a_star == std::vector<std::int64_t>{1, 3});
}

TEST_CASE("negative inputs are translated into range") {
    auto p = normalize({-3, 1}, {{-2, 0, 3}});
    CHECK(p.base == std::vector<std::int64_t>{0, 4});
    CHECK(p.summands[0] == std::vector<std::int64_t>{0, 2, 5});
    CHECK(p.base_shift == -3);
}

TEST_CASE("structure data for {0,3,5}") {
    auto np = normalize({0}, {{0, 3, 5}});
    auto report = structure_sets(np, 20, 2);

    // goldens recomputed from the enumerated sumsets
    auto oracle = gaps_at({0}, {{0, 3, 5}}, 4);
    CHECK(report.g_low == oracle.low);
    CHECK(report.g_top == oracle.top);

    CHECK(report.g_low == std::vector<std::int64_t>{1, 2, 4, 7});
    CHECK(report.g_top == std::vector<std::int64_t>{1, 3});
    CHECK(report.c == 8);
    CHECK(report.C == std::vector<std::int64_t>{0, 3, 5, 6});
    CHECK(report.d == 4);
    CHECK(report.D == std::vector<std::int64_t>{0, 2});
    CHECK(report.delta == 6);
    CHECK(report.h_star == std::vector<int>{3});

    // decomposition identity at a certified h, element for element
    const int h = 5;
    const std::int64_t f = 5 * h;
    std::vector<std::int64_t> rebuilt(report.C.begin(), report.C.end());
    for (std::int64_t x = report.c; x <= f - report.d; ++x) rebuilt.push_back(x);
    for (auto off : report.D) rebuilt.push_back(f - off);
    std::sort(rebuilt.begin(), rebuilt.end());
    CHECK(rebuilt == oracles::int_sumset_oracle({0}, {{0, 3, 5}}, {h}));
    // the three parts are disjoint: sizes add up
    CHECK(static_cast<std::int64_t>(rebuilt.size()) ==
          static_cast<std::int64_t>(report.C.size() + report.D.size()) + (f - report.d - report.c + 1));
    // gap identity: gamma = 5h + 0 + 1 - delta
    CHECK(static_cast<std::int64_t>(rebuilt.size()) == 5 * h + 1 - report.delta);
}

TEST_CASE("structure data for {0,2,3}") {
    auto np = normalize({0}, {{0, 2, 3}});
    auto report = structure_sets(np, 20, 2);
    CHECK(report.g_low == std::vector<std::int64_t>{1});
    CHECK(report.g_top.empty());
    CHECK(report.c == 2);
    CHECK(report.C == std::vector<std::int64_t>{0});
    CHECK(report.d == 0);
    CHECK(report.D.empty());
    CHECK(report.delta == 1);
    // gamma(h) = 3h for certified h
    for (std::size_t i = 0; i < report.checked_h.size(); ++i)
        CHECK(report.gamma_checked[i] == 3 * report.checked_h[i]);
}

TEST_CASE("structure data for the full interval case {0,1}") {
    auto np = normalize({0}, {{0, 1}});
    auto report = structure_sets(np, 10, 2);
    CHECK(report.g_low.empty());
    CHECK(report.g_top.empty());
    CHECK(report.c == 0);
    CHECK(report.C.empty());
    CHECK(report.d == 0);
    CHECK(report.D.empty());
    CHECK(report.delta == 0);
}

TEST_CASE("structure analysis reports failure to stabilize within the limit") {
    auto np = normalize({0}, {{0, 9, 10}});
    try {
        structure_sets(np, 2, 2);
        FAIL("expected NotStabilized");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_stabilized);
    }
}

TEST_CASE("frobenius numbers") {
    CHECK(frobenius_number({3, 5}) == 7);
    CHECK(frobenius_number({1}) == -1);
    CHECK(frobenius_number({6, 10, 15}) == 29);
    CHECK(frobenius_number({2, 3}) == 1);

    auto info = frobenius_info({3, 5});
    CHECK(info.gap_count == 4);
    CHECK(info.gaps == std::vector<std::int64_t>{1, 2, 4, 7});
}

TEST_CASE("frobenius input validation") {
    CHECK_THROWS_AS(frobenius_number({}), Error);
    try {
        frobenius_number({});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::empty_generators);
    }
    try {
        frobenius_number({4, 6});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::gcd_not_one);
        CHECK(e.witness() == std::vector<long long>{2});
    }
    CHECK_THROWS_AS(frobenius_number({0, 3}), Error);
}

TEST_CASE("two coprime generators match the closed form") {
    std::mt19937_64 rng(95);
    std::uniform_int_distribution<std::int64_t> vd(2, 50);
    int done = 0;
    while (done < 30) {
        std::int64_t a = vd(rng), b = vd(rng);
        if (a == b || std::gcd(a, b) != 1) continue;
        ++done;
        auto info = frobenius_info({a, b});
        CHECK(info.frobenius == a * b - a - b);
        CHECK(info.gap_count == (a - 1) * (b - 1) / 2);
    }
}

TEST_CASE("gap set of a single-summand problem matches the representability table") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> vd(2, 12);
    int done = 0;
    while (done < 12) {
        std::vector<std::int64_t> gens{vd(rng), vd(rng)};
        std::int64_t g = std::gcd(gens[0], gens[1]);
        if (g != 1 || gens[0] == gens[1]) continue;
        ++done;
        auto info = frobenius_info(gens);
        std::vector<std::int64_t> a{0};
        a.insert(a.end(), gens.begin(), gens.end());
        auto report = structure_sets(normalize({0}, {a}), 60, 2);
        CHECK(report.g_low == info.gaps);
        CHECK((report.g_low.empty() ? -1 : report.g_low.back()) == info.frobenius);
        CHECK(static_cast<std::int64_t>(report.g_low.size()) == info.gap_count);
    }
}

TEST_CASE("reflection duality swaps the gap sets") {
    std::mt19937_64 rng(77);
    auto suite = testutil::build_suite(77, 1);
    int done = 0;
    for (const auto& inst : suite) {
        if (done >= 10) break;
        if (inst.kind != testutil::InstanceKind::naturals || !inst.normalized_integer) continue;
        std::vector<std::int64_t> base;
        for (const auto& e : inst.problem.base().elements()) base.push_back(e.coords[0]);
        std::vector<std::vector<std::int64_t>> summands;
        for (const auto& a : inst.problem.summands()) {
            std::vector<std::int64_t> s;
            for (const auto& e : a.elements()) s.push_back(e.coords[0]);
            summands.push_back(s);
        }
        NormalizedIntegerProblem np;
        try {
            np = normalize(base, summands);
        } catch (const Error&) {
            continue;
        }
        // reflect: b* - B and a*_i - A_i
        std::vector<std::int64_t> rbase;
        for (auto x : np.base) rbase.push_back(np.b_star - x);
        std::vector<std::vector<std::int64_t>> rsummands;
        for (std::size_t i = 0; i < np.summands.size(); ++i) {
            std::vector<std::int64_t> s;
            for (auto x : np.summands[i]) s.push_back(np.a_star[i] - x);
            rsummands.push_back(s);
        }
        StructureReport fwd, rev;
        try {
            fwd = structure_sets(np, 60, 2);
            rev = structure_sets(normalize(rbase, rsummands), 60, 2);
        } catch (const Error& e) {
            if (e.code() == Errc::not_stabilized) continue;
            throw;
        }
        ++done;
        CHECK(fwd.g_top == rev.g_low);
        CHECK(fwd.g_low == rev.g_top);
    }
    CHECK(done >= 5);
}

TEST_CASE("multilinear identity on the worked examples") {
    auto np = normalize({0}, {{0, 3, 5}});
    auto report = structure_sets(np, 20, 2);
    auto fit = detect_stabilization(to_problem(np), 20, 2);
    REQUIRE(fit.stabilized());
    auto check = verify_multilinear(np, report, *fit.fitted);
    CHECK(check.ok);
    CHECK(check.discrepancies.empty());

    auto np2 = normalize({0}, {{0, 1}, {0, 2, 3}});
    auto report2 = structure_sets(np2, 20, 2);
    auto fit2 = detect_stabilization(to_problem(np2), 8, 2);
    REQUIRE(fit2.stabilized());
    CHECK(report2.delta == 0);
    auto check2 = verify_multilinear(np2, report2, *fit2.fitted);
    CHECK(check2.ok);

    auto np3 = normalize({0}, {{0, 1}});
    auto check3 = verify_multilinear(np3, structure_sets(np3, 10, 2),
                                     *detect_stabilization(to_problem(np3), 10, 2).fitted);
    CHECK(check3.ok);
}

TEST_CASE("multilinear verification flags a wrong polynomial") {
    auto np = normalize({0}, {{0, 3, 5}});
    auto report = structure_sets(np, 20, 2);
    FittedPolynomial wrong;
    wrong.poly = MultiPoly::constant(1, Rational(41));
    wrong.thresholds = {3};
    wrong.window = 2;
    wrong.degree_bounds = {2};
    auto check = verify_multilinear(np, report, wrong);
    CHECK_FALSE(check.ok);
    CHECK_FALSE(check.discrepancies.empty());
}

TEST_CASE("cross-module gap identity on random normalized instances") {
    auto suite = testutil::build_suite(909, 1);
    int done = 0;
    for (const auto& inst : suite) {
        if (done >= 10) break;
        if (inst.kind != testutil::InstanceKind::naturals) continue;
        NormalizedIntegerProblem np;
        try {
            np = normalized_from_problem(inst.problem);
        } catch (const Error&) {
            continue;
        }
        StructureReport report;
        try {
            report = structure_sets(np, 40, 2);
        } catch (const Error& e) {
            if (e.code() == Errc::budget_exceeded) continue;
            throw;
        }
        ++done;
        Problem shifted = to_problem(np);
        for (std::size_t i = 0; i < report.checked_h.size(); ++i) {
            std::vector<int> h(np.r(), report.checked_h[i]);
            const std::int64_t gamma = oracles::gamma_oracle(shifted, h);
            std::int64_t f = np.max_element(h);
            CHECK(report.delta == f + 1 - gamma);
        }
    }
    CHECK(done >= 5);
}
