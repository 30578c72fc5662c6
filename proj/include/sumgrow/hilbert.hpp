#pragma once

#include "sumgrow/analysis.hpp"
#include "sumgrow/engine.hpp"
#include "sumgrow/numbers.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sumgrow {

/// Truncation of the generating function whose coefficient at z^h is the
/// growth value gamma(h), complete over a box.
struct TruncatedSeries {
    Box box;
    std::vector<BigInt> coef;  // row-major, lexicographic

    const BigInt& at(const std::vector<int>& h) const { return coef[box.index(h)]; }
};

TruncatedSeries to_series(const GrowthTable& table);

/// Result of multiplying the truncated series by prod_i (1 - z_i)^{k_i}.
/// Coefficients are exact over the whole box (the convolution at h only
/// reads positions <= h).
struct NumeratorReport {
    Box box;
    std::vector<BigInt> coef;
    /// Componentwise minimal exponent with nonzero coefficient.
    std::vector<int> beta;
    /// Componentwise maximal exponent with nonzero coefficient (-1 entries:
    /// zero numerator).
    std::vector<int> support_hi;
    /// Verified all-zero margin beyond the support, per direction.
    std::vector<int> margin;
    /// True iff every margin is at least 2.
    bool terminated = false;
    /// Set when the coefficient at beta is zero or beta != 0; growth series
    /// are expected to start with a nonzero constant term.
    bool beta_anomaly = false;

    const BigInt& at(const std::vector<int>& h) const { return coef[box.index(h)]; }

    /// Nonzero (exponent, coefficient) pairs in lexicographic exponent order.
    std::vector<std::pair<std::vector<int>, BigInt>> sparse() const;
};

/// Applies, in each direction i, the signed binomial convolution of order
/// k[i] (k_i successive difference-with-shift passes). Requires box extent
/// >= k_i in every direction.
NumeratorReport numerator(const TruncatedSeries& series, const std::vector<int>& k);

struct RationalFormSummary {
    Box box;
    std::vector<int> k;
    NumeratorReport num;
    StabilizationReport stabilization;
    /// True iff the fit certifies and gamma equals the fitted polynomial at
    /// every h >= support_hi + 1 inside the box.
    bool fit_consistent = false;
    std::optional<std::vector<int>> first_tail_mismatch;
};

/// Full pipeline: growth table over the box, series, numerator with
/// k_i = |A_i|, then a cross-check of the post-support tail against the
/// stabilization fit computed from the same table.
RationalFormSummary rational_form_check(const Problem& p, const Box& box, int window = 2,
                                        const GrowthOptions& opts = {});

}  // namespace sumgrow
