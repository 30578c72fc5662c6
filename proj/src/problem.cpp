#include "sumgrow/problem.hpp"

namespace sumgrow {

Problem Problem::make(SpecPtr spec, ElementSet base, std::vector<ElementSet> summands) {
    if (!spec) throw Error(Errc::bad_value, "problem needs a semigroup spec");
    validate_spec(*spec);
    if (base.empty()) throw Error(Errc::empty_set, "base set B must be nonempty");
    if (summands.empty()) throw Error(Errc::bad_value, "at least one summand set is required");
    if (!same_spec(base.spec(), spec))
        throw Error(Errc::spec_mismatch, "base set built over a different semigroup");
    for (std::size_t i = 0; i < summands.size(); ++i) {
        if (summands[i].empty())
            throw Error(Errc::empty_set, "summand set A" + std::to_string(i + 1) + " must be nonempty",
                        {static_cast<long long>(i)});
        if (!same_spec(summands[i].spec(), spec))
            throw Error(Errc::spec_mismatch,
                        "summand set A" + std::to_string(i + 1) + " built over a different semigroup");
    }
    Problem p;
    p.spec_ = std::move(spec);
    p.base_ = std::move(base);
    p.summands_ = std::move(summands);
    return p;
}

BigInt Problem::formal_symbol_count(const std::vector<int>& h) const {
    if (h.size() != summands_.size())
        throw Error(Errc::dimension_mismatch, "exponent vector arity mismatch");
    BigInt count = static_cast<std::int64_t>(base_.size());
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        auto ki = static_cast<std::int64_t>(summands_[i].size());
        count *= binomial(h[i] + ki - 1, ki - 1);
    }
    return count;
}

}  // namespace sumgrow
