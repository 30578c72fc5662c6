#include "sumgrow/hilbert.hpp"

#include <algorithm>
#include <string>

namespace sumgrow {

TruncatedSeries to_series(const GrowthTable& table) {
    TruncatedSeries s;
    s.box = table.box();
    s.coef.reserve(table.gamma.values.size());
    for (auto v : table.gamma.values) {
        if (v < 0) throw Error(Errc::bad_value, "growth series coefficients must be nonnegative");
        s.coef.emplace_back(v);
    }
    return s;
}

std::vector<std::pair<std::vector<int>, BigInt>> NumeratorReport::sparse() const {
    std::vector<std::pair<std::vector<int>, BigInt>> out;
    std::vector<int> h(box.dim(), 0);
    std::uint64_t idx = 0;
    do {
        if (coef[idx] != 0) out.emplace_back(h, coef[idx]);
        ++idx;
    } while (box.next(h));
    return out;
}

NumeratorReport numerator(const TruncatedSeries& series, const std::vector<int>& k) {
    const std::size_t r = series.box.dim();
    if (k.size() != r)
        throw Error(Errc::dimension_mismatch, "order vector arity mismatch");
    if (r == 0 || series.coef.empty())
        throw Error(Errc::box_too_small, "series box is empty");
    for (std::size_t i = 0; i < r; ++i) {
        if (k[i] < 0) throw Error(Errc::bad_value, "convolution orders must be nonnegative");
        if (series.box.hi[i] < k[i])
            throw Error(Errc::box_too_small,
                        "box extent " + std::to_string(series.box.hi[i]) + " in direction " +
                            std::to_string(i) + " is below the order " + std::to_string(k[i]),
                        {static_cast<long long>(i), k[i]});
    }

    NumeratorReport rep;
    rep.box = series.box;
    rep.coef = series.coef;

    // One difference-with-shift pass per order unit: coef[h] -= coef[h - e_i],
    // swept descending so the right-hand side is still the previous pass.
    for (std::size_t dir = 0; dir < r; ++dir) {
        std::uint64_t stride = 1;
        for (std::size_t j = dir + 1; j < r; ++j)
            stride *= static_cast<std::uint64_t>(rep.box.hi[j]) + 1;
        const std::uint64_t extent = static_cast<std::uint64_t>(rep.box.hi[dir]) + 1;
        const std::uint64_t block = stride * extent;
        for (int pass = 0; pass < k[dir]; ++pass) {
            for (std::uint64_t outer = 0; outer < rep.coef.size(); outer += block) {
                for (std::uint64_t pos = extent - 1; pos >= 1; --pos) {
                    const std::uint64_t row = outer + pos * stride;
                    for (std::uint64_t inner = 0; inner < stride; ++inner)
                        rep.coef[row + inner] -= rep.coef[row - stride + inner];
                }
            }
        }
    }

    // Support bounding box.
    rep.beta.assign(r, -1);
    rep.support_hi.assign(r, -1);
    std::vector<int> h(r, 0);
    std::uint64_t idx = 0;
    bool any = false;
    do {
        if (rep.coef[idx] != 0) {
            for (std::size_t i = 0; i < r; ++i) {
                rep.beta[i] = any ? std::min(rep.beta[i], h[i]) : h[i];
                rep.support_hi[i] = std::max(rep.support_hi[i], h[i]);
            }
            any = true;
        }
        ++idx;
    } while (rep.box.next(h));

    if (!any) {
        rep.beta.assign(r, 0);
        rep.margin.assign(r, 0);
        for (std::size_t i = 0; i < r; ++i) rep.margin[i] = rep.box.hi[i] + 1;
        rep.terminated = true;
        rep.beta_anomaly = true;  // no nonzero constant term
        return rep;
    }

    rep.margin.assign(r, 0);
    rep.terminated = true;
    for (std::size_t i = 0; i < r; ++i) {
        rep.margin[i] = rep.box.hi[i] - rep.support_hi[i];
        if (rep.margin[i] < 2) rep.terminated = false;
    }
    rep.beta_anomaly = std::any_of(rep.beta.begin(), rep.beta.end(), [](int b) { return b != 0; }) ||
                       rep.at(rep.beta) == 0;
    return rep;
}

RationalFormSummary rational_form_check(const Problem& p, const Box& box, int window,
                                        const GrowthOptions& opts) {
    require_dim(box, p.r(), "rational_form_check");
    RationalFormSummary summary;
    summary.box = box;
    summary.k = p.k_all();

    GrowthTable table = growth_table(p, box, opts);
    TruncatedSeries series = to_series(table);
    summary.num = numerator(series, summary.k);

    const std::vector<int> bounds = p.degree_bounds();
    const int max_bound = *std::max_element(bounds.begin(), bounds.end());
    int t_max = box.hi[0];
    for (int b : box.hi) t_max = std::min(t_max, b);
    t_max -= max_bound + window;
    if (t_max < 0)
        throw Error(Errc::box_too_small,
                    "box too small to search for stabilization (need extent >= " +
                        std::to_string(max_bound + window) + ")");
    summary.stabilization = detect_stabilization_on_table(table, t_max, window);

    summary.fit_consistent = false;
    if (summary.num.terminated && summary.stabilization.stabilized()) {
        const MultiPoly& poly = summary.stabilization.fitted->poly;
        ScaledIntPoly fast(poly);
        std::vector<int> lo(p.r(), 0);
        for (std::size_t i = 0; i < p.r(); ++i) lo[i] = std::max(0, summary.num.support_hi[i] + 1);
        summary.fit_consistent = true;
        std::vector<int> h = lo;
        while (true) {
            if (!fast.matches(h, table.gamma.at(h))) {
                summary.fit_consistent = false;
                summary.first_tail_mismatch = h;
                break;
            }
            std::size_t i = p.r();
            bool advanced = false;
            while (i-- > 0) {
                if (h[i] < box.hi[i]) {
                    ++h[i];
                    for (std::size_t j = i + 1; j < p.r(); ++j) h[j] = lo[j];
                    advanced = true;
                    break;
                }
                h[i] = lo[i];
            }
            if (!advanced) break;
        }
    }
    return summary;
}

}  // namespace sumgrow
