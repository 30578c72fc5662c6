#pragma once

#include "sumgrow/engine.hpp"
#include "sumgrow/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sumgrow {

/// Forward difference along direction i: out(h) = in(h + e_i) - in(h), on the
/// box shrunk by one in that direction.
LatticeTable<std::int64_t> finite_difference(const LatticeTable<std::int64_t>& table, std::size_t i);

/// Interpolating polynomial of per-variable degree <= bounds[i] through the
/// table values on the grid base + prod [0, bounds_i], via tensor-product
/// Newton forward differences in exact rational arithmetic. The grid must lie
/// inside the table's box.
MultiPoly fit_polynomial(const LatticeTable<std::int64_t>& table, const std::vector<int>& base,
                         const std::vector<int>& bounds);

struct FittedPolynomial {
    MultiPoly poly;
    /// Componentwise threshold from which agreement with the table was
    /// verified (the certified region is thresholds <= h <= examined box).
    std::vector<int> thresholds;
    int window = 0;
    std::vector<int> degree_bounds;
};

struct StabilizationWitness {
    int threshold;                // diagonal threshold whose fit broke
    std::vector<int> point;       // lattice point of the first disagreement
    std::int64_t table_value;
    std::string predicted;        // exact rational, as a string
};

struct StabilizationReport {
    enum class Status { stabilized, not_stabilized };
    Status status = Status::not_stabilized;
    std::optional<FittedPolynomial> fitted;
    int search_limit = 0;
    Box examined_box;
    std::vector<StabilizationWitness> witnesses;
    /// Best-effort componentwise relaxation of the certified threshold,
    /// valid on the examined box only.
    std::vector<int> relaxed_thresholds;

    bool stabilized() const { return status == Status::stabilized; }
};

/// Searches diagonal thresholds t = (tau,...,tau), tau = 0..max_threshold,
/// for a polynomial of per-variable degree <= k_i - 1 that interpolates the
/// table at base t and agrees with it at every lattice point h >= t inside
/// the examined box (extent max_threshold + max degree bound + window per
/// coordinate). Returns the first tau that certifies, with the fit.
StabilizationReport detect_stabilization(const Problem& p, int max_threshold, int window,
                                         const GrowthOptions& opts = {});

/// Same search over an already-computed growth table. The table's box must
/// cover max_threshold + (k_i - 1) + window in every direction.
StabilizationReport detect_stabilization_on_table(const GrowthTable& table, int max_threshold,
                                                  int window);

}  // namespace sumgrow
