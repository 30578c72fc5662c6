#pragma once

#include "sumgrow/analysis.hpp"
#include "sumgrow/numbers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sumgrow {

/// Integer problem translated so every set has minimum 0, with the original
/// shifts recorded. Construction fails unless the shifted summands jointly
/// have gcd 1.
struct NormalizedIntegerProblem {
    std::vector<std::int64_t> base;                       // sorted, min = 0
    std::vector<std::vector<std::int64_t>> summands;      // sorted, min = 0 each
    std::int64_t base_shift = 0;
    std::vector<std::int64_t> summand_shifts;
    std::int64_t b_star = 0;                              // max(base)
    std::vector<std::int64_t> a_star;                     // max of each summand
    std::int64_t gcd_witness = 1;

    std::size_t r() const { return summands.size(); }

    /// Maximum element of the sumset at exponent vector h.
    std::int64_t max_element(const std::vector<int>& h) const {
        std::int64_t f = b_star;
        for (std::size_t i = 0; i < summands.size(); ++i) f += a_star[i] * h[i];
        return f;
    }
};

NormalizedIntegerProblem normalize(std::vector<std::int64_t> base,
                                   std::vector<std::vector<std::int64_t>> summands);

/// Asymptotic decomposition data of an integer sumset: the sumset at every
/// certified h equals C ∪ [c, F(h)-d] ∪ (F(h) - D) with F(h) the maximum
/// element, plus the total gap count delta with
/// gamma(h) = sum_i a*_i h_i + b* + 1 - delta.
struct StructureReport {
    std::int64_t c = 0;
    std::vector<std::int64_t> C;
    std::int64_t d = 0;
    std::vector<std::int64_t> D;
    std::int64_t delta = 0;
    std::vector<std::int64_t> g_low;   // missing elements in the lower region
    std::vector<std::int64_t> g_top;   // missing offsets from the maximum
    std::vector<int> h_star;           // first diagonal point of the certified run
    std::vector<int> checked_h;        // diagonal values where the data was verified
    std::vector<std::int64_t> gamma_checked;  // sumset cardinalities at checked_h
    std::int64_t b_star = 0;
    std::vector<std::int64_t> a_star;
};

/// Walks the diagonal h = (t,...,t), t = 1..max_threshold, recomputing the
/// gap sets until they are unchanged for `window` consecutive steps and the
/// middle interval is gap-free; derives (c, C, d, D, delta).
StructureReport structure_sets(const NormalizedIntegerProblem& p, int max_threshold, int window);

/// Largest integer not representable as a nonnegative combination of the
/// generators (-1 if every nonnegative integer is representable). Dynamic
/// programming over [0, min(g) * max(g)].
std::int64_t frobenius_number(const std::vector<std::int64_t>& generators);

struct FrobeniusInfo {
    std::int64_t frobenius = -1;
    std::int64_t gap_count = 0;
    std::vector<std::int64_t> gaps;
};

FrobeniusInfo frobenius_info(const std::vector<std::int64_t>& generators);

struct MultilinearCheck {
    bool ok = true;
    std::vector<std::string> discrepancies;
};

/// Checks that the fitted polynomial equals sum_i a*_i h_i + b* + 1 - delta
/// as an exact polynomial and that the decomposition reproduces the sumset
/// at every checked h (recomputed through the generic engine).
MultilinearCheck verify_multilinear(const NormalizedIntegerProblem& p, const StructureReport& report,
                                    const FittedPolynomial& fit);

/// The normalized problem rebuilt over the generic integer semigroup, for
/// cross-module pipelines.
Problem to_problem(const NormalizedIntegerProblem& p);

}  // namespace sumgrow
