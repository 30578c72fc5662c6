#pragma once

#include "sumgrow/element_set.hpp"
#include "sumgrow/numbers.hpp"

#include <string>
#include <vector>

namespace sumgrow {

/// A base set together with an ordered list of summand sets over one
/// semigroup. Construction enforces: validated spec, nonempty canonical
/// sets, at least one summand.
class Problem {
public:
    static Problem make(SpecPtr spec, ElementSet base, std::vector<ElementSet> summands);

    const SpecPtr& spec() const { return spec_; }
    const ElementSet& base() const { return base_; }
    const std::vector<ElementSet>& summands() const { return summands_; }
    const ElementSet& summand(std::size_t i) const { return summands_[i]; }

    std::size_t r() const { return summands_.size(); }
    std::size_t k(std::size_t i) const { return summands_[i].size(); }
    std::vector<int> k_all() const {
        std::vector<int> ks;
        ks.reserve(summands_.size());
        for (const auto& a : summands_) ks.push_back(static_cast<int>(a.size()));
        return ks;
    }
    /// Total number of summand elements across all sets.
    std::size_t s() const {
        std::size_t total = 0;
        for (const auto& a : summands_) total += a.size();
        return total;
    }

    /// Per-variable fit degree bounds: one less than each summand cardinality.
    std::vector<int> degree_bounds() const {
        std::vector<int> d;
        d.reserve(summands_.size());
        for (const auto& a : summands_) d.push_back(static_cast<int>(a.size()) - 1);
        return d;
    }

    /// Number of formal summand choices at h before identification:
    /// |B| * prod_i C(h_i + k_i - 1, k_i - 1).
    BigInt formal_symbol_count(const std::vector<int>& h) const;

    std::string name;

private:
    SpecPtr spec_;
    ElementSet base_;
    std::vector<ElementSet> summands_;
};

}  // namespace sumgrow
