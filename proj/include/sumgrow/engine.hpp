#pragma once

#include "sumgrow/lattice.hpp"
#include "sumgrow/problem.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace sumgrow {

/// Pairwise sumset { x + y : x in X, y in Y }, canonical and deduplicated.
ElementSet set_sum(const ElementSet& x, const ElementSet& y);

/// h-fold sumset of A: the identity singleton for h = 0, otherwise the set of
/// all sums of h elements of A (repetition allowed).
ElementSet h_fold(const ElementSet& a, int h);

/// B + h_1 A_1 + ... + h_r A_r, assembled from h_fold per summand.
ElementSet combined_sumset(const Problem& p, const std::vector<int>& h);

enum class GrowthMode { memoized, brute };

struct GrowthOptions {
    GrowthMode mode = GrowthMode::memoized;
    /// Coordinate nesting order for the memoized sweep (a permutation of
    /// 0..r-1; empty = identity). Any order must produce the same table.
    std::vector<int> order;
    /// Upper bound on simultaneously retained coordinates across live sets.
    std::uint64_t budget_coords = 1ull << 27;
    /// Lattice points whose full sumsets should be kept in the result.
    std::vector<std::vector<int>> retain;
    bool retain_all = false;
};

struct GrowthTable {
    Problem problem;
    LatticeTable<std::int64_t> gamma;
    std::map<std::vector<int>, ElementSet> retained;

    std::int64_t at(const std::vector<int>& h) const { return gamma.at(h); }
    const Box& box() const { return gamma.box; }
};

/// Cardinality table of the combined sumset over every lattice point of the
/// box. Memoized mode sweeps the box lexicographically (in the configured
/// coordinate order), deriving each set from its predecessor along the last
/// nonzero coordinate and keeping only one live set per nesting level. Brute
/// mode evaluates every point independently through combined_sumset.
GrowthTable growth_table(const Problem& p, const Box& box, const GrowthOptions& opts = {});

/// Independent enumeration oracle: walks every b in B and every multiset of
/// size h_i from each A_i, summing the choices directly. Refuses to run when
/// the formal choice count exceeds `cap`.
ElementSet brute_force_sumset(const Problem& p, const std::vector<int>& h,
                              const BigInt& cap = BigInt(10'000'000));

/// CSV serialization: header h_1,...,h_r,gamma; one row per lattice point in
/// lexicographic order; LF line endings.
std::string growth_table_csv(const GrowthTable& table);

}  // namespace sumgrow
