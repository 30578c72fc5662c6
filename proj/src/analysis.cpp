#include "sumgrow/analysis.hpp"

#include <algorithm>
#include <string>

namespace sumgrow {

namespace {

std::string rational_str(const Rational& q) {
    std::string s = rational_num(q).str();
    if (rational_den(q) != 1) s += "/" + rational_den(q).str();
    return s;
}

/// Coefficients of the univariate binomial C(x - base, j), expanded in x.
std::vector<Rational> binomial_basis_poly(int base, int j) {
    // product of (x - base - l) for l = 0..j-1, divided by j!
    std::vector<Rational> coef{Rational(1)};
    for (int l = 0; l < j; ++l) {
        std::vector<Rational> next(coef.size() + 1, Rational(0));
        const Rational shift(-static_cast<std::int64_t>(base) - l);
        for (std::size_t d = 0; d < coef.size(); ++d) {
            next[d + 1] += coef[d];
            next[d] += coef[d] * shift;
        }
        coef = std::move(next);
    }
    const Rational fact(factorial(j));
    for (auto& c : coef) c /= fact;
    return coef;
}

}  // namespace

LatticeTable<std::int64_t> finite_difference(const LatticeTable<std::int64_t>& table, std::size_t i) {
    if (i >= table.box.dim())
        throw Error(Errc::dimension_mismatch, "difference direction out of range",
                    {static_cast<long long>(i)});
    if (table.box.hi[i] < 1)
        throw Error(Errc::box_too_small,
                    "box extent in direction " + std::to_string(i) + " must be >= 1",
                    {static_cast<long long>(i)});
    Box shrunk = table.box;
    shrunk.hi[i] -= 1;
    LatticeTable<std::int64_t> out(shrunk);
    std::vector<int> h(shrunk.dim(), 0);
    do {
        std::vector<int> up = h;
        ++up[i];
        out.at(h) = table.at(up) - table.at(h);
    } while (shrunk.next(h));
    return out;
}

MultiPoly fit_polynomial(const LatticeTable<std::int64_t>& table, const std::vector<int>& base,
                         const std::vector<int>& bounds) {
    const std::size_t r = table.box.dim();
    if (base.size() != r || bounds.size() != r)
        throw Error(Errc::dimension_mismatch, "base/bounds arity mismatch");
    for (std::size_t i = 0; i < r; ++i) {
        if (base[i] < 0 || bounds[i] < 0 || base[i] + bounds[i] > table.box.hi[i])
            throw Error(Errc::grid_outside_box,
                        "interpolation grid leaves the box in direction " + std::to_string(i),
                        {static_cast<long long>(i), base[i], bounds[i]});
    }

    // Mixed forward differences of the grid values at the base point.
    Box grid(bounds);
    LatticeTable<Rational> diff(grid);
    {
        std::vector<int> j(r, 0);
        do {
            std::vector<int> h(r);
            for (std::size_t i = 0; i < r; ++i) h[i] = base[i] + j[i];
            diff.at(j) = Rational(table.at(h));
        } while (grid.next(j));
    }
    for (std::size_t dir = 0; dir < r; ++dir) {
        for (int order = 1; order <= bounds[dir]; ++order) {
            // descending pass keeps lower-order entries untouched
            Box rest = grid;
            rest.hi[dir] = 0;
            std::vector<int> base_j(r, 0);
            do {
                for (int jd = bounds[dir]; jd >= order; --jd) {
                    std::vector<int> a = base_j;
                    a[dir] = jd;
                    std::vector<int> b = base_j;
                    b[dir] = jd - 1;
                    diff.at(a) -= diff.at(b);
                }
            } while (rest.next(base_j));
        }
    }

    // Newton form to monomial basis: sum_j diff[j] * prod_i C(h_i - base_i, j_i).
    std::vector<std::vector<std::vector<Rational>>> basis(r);
    for (std::size_t i = 0; i < r; ++i) {
        basis[i].resize(static_cast<std::size_t>(bounds[i]) + 1);
        for (int j = 0; j <= bounds[i]; ++j) basis[i][static_cast<std::size_t>(j)] = binomial_basis_poly(base[i], j);
    }

    MultiPoly poly(r, bounds);
    std::vector<int> j(r, 0);
    do {
        const Rational& d = diff.at(j);
        if (d == 0) continue;
        // accumulate d * outer product of the univariate expansions
        Box expo(bounds);
        std::vector<int> e(r, 0);
        do {
            bool in_range = true;
            Rational term = d;
            for (std::size_t i = 0; i < r && in_range; ++i) {
                const auto& up = basis[i][static_cast<std::size_t>(j[i])];
                if (e[i] >= static_cast<int>(up.size())) {
                    in_range = false;
                    break;
                }
                term *= up[static_cast<std::size_t>(e[i])];
            }
            if (in_range && term != 0) poly.add_coeff(e, term);
        } while (expo.next(e));
    } while (grid.next(j));
    return poly;
}

namespace {

/// First lattice point h >= lo (componentwise) in `box` where the polynomial
/// disagrees with the table, if any.
std::optional<std::pair<std::vector<int>, Rational>> first_mismatch(
    const LatticeTable<std::int64_t>& table, const ScaledIntPoly& p, const MultiPoly& poly,
    const std::vector<int>& lo) {
    std::vector<int> h = lo;
    const Box& box = table.box;
    const std::size_t r = box.dim();
    // iterate the sub-box lo..hi in lex order
    while (true) {
        if (!p.matches(h, table.at(h)))
            return std::make_pair(h, poly.eval(h));
        std::size_t i = r;
        bool advanced = false;
        while (i-- > 0) {
            if (h[i] < box.hi[i]) {
                ++h[i];
                for (std::size_t j = i + 1; j < r; ++j) h[j] = lo[j];
                advanced = true;
                break;
            }
            h[i] = lo[i];
        }
        if (!advanced) return std::nullopt;
    }
}

}  // namespace

StabilizationReport detect_stabilization_on_table(const GrowthTable& table, int max_threshold,
                                                  int window) {
    const Problem& p = table.problem;
    const std::size_t r = p.r();
    const std::vector<int> bounds = p.degree_bounds();
    const int max_bound = *std::max_element(bounds.begin(), bounds.end());

    if (max_threshold < 0 || window < 1)
        throw Error(Errc::bad_value, "need max_threshold >= 0 and window >= 1");
    for (std::size_t i = 0; i < r; ++i)
        if (table.box().hi[i] < max_threshold + max_bound + window)
            throw Error(Errc::box_too_small,
                        "table box does not cover the search in direction " + std::to_string(i),
                        {static_cast<long long>(i)});

    StabilizationReport report;
    report.search_limit = max_threshold;
    report.examined_box = table.box();

    for (int tau = 0; tau <= max_threshold; ++tau) {
        const std::vector<int> base(r, tau);
        MultiPoly poly = fit_polynomial(table.gamma, base, bounds);
        ScaledIntPoly fast(poly);
        auto mismatch = first_mismatch(table.gamma, fast, poly, base);
        if (!mismatch) {
            FittedPolynomial fitted;
            fitted.poly = std::move(poly);
            fitted.thresholds = base;
            fitted.window = window;
            fitted.degree_bounds = bounds;
            report.status = StabilizationReport::Status::stabilized;

            // Best-effort componentwise relaxation of the certified threshold.
            std::vector<int> relaxed = base;
            for (std::size_t i = 0; i < r; ++i) {
                while (relaxed[i] > 0) {
                    std::vector<int> trial = relaxed;
                    --trial[i];
                    if (first_mismatch(table.gamma, fast, fitted.poly, trial)) break;
                    relaxed = trial;
                }
            }
            report.relaxed_thresholds = std::move(relaxed);
            report.fitted = std::move(fitted);
            return report;
        }
        if (report.witnesses.size() < 32) {
            StabilizationWitness w;
            w.threshold = tau;
            w.point = mismatch->first;
            w.table_value = table.gamma.at(mismatch->first);
            w.predicted = rational_str(mismatch->second);
            report.witnesses.push_back(std::move(w));
        }
    }
    return report;
}

StabilizationReport detect_stabilization(const Problem& p, int max_threshold, int window,
                                         const GrowthOptions& opts) {
    const std::vector<int> bounds = p.degree_bounds();
    const int max_bound = *std::max_element(bounds.begin(), bounds.end());
    Box box(std::vector<int>(p.r(), max_threshold + max_bound + window));
    GrowthTable table = growth_table(p, box, opts);
    return detect_stabilization_on_table(table, max_threshold, window);
}

}  // namespace sumgrow
