#pragma once

#include "sumgrow/semigroup.hpp"

#include <algorithm>
#include <memory>
#include <vector>

namespace sumgrow {

bool same_spec(const SpecPtr& a, const SpecPtr& b);

/// A finite set of canonical elements of one semigroup, stored as a sorted,
/// deduplicated vector so iteration order and serialization are deterministic.
class ElementSet {
public:
    ElementSet() = default;

    /// Builds the set from arbitrary element candidates: canonicalizes,
    /// sorts, deduplicates.
    static ElementSet from_raw(SpecPtr spec, std::vector<Element> raw) {
        for (auto& e : raw) e = canonicalize(*spec, std::move(e));
        return from_canonical(std::move(spec), std::move(raw));
    }

    /// Same, for elements already known canonical (still sorts and dedupes).
    static ElementSet from_canonical(SpecPtr spec, std::vector<Element> elems) {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        ElementSet s;
        s.spec_ = std::move(spec);
        s.elements_ = std::move(elems);
        return s;
    }

    const SpecPtr& spec() const { return spec_; }
    const std::vector<Element>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    bool contains(const Element& e) const {
        return std::binary_search(elements_.begin(), elements_.end(), e);
    }

    bool operator==(const ElementSet& other) const {
        return same_spec(spec_, other.spec_) && elements_ == other.elements_;
    }

private:
    SpecPtr spec_;
    std::vector<Element> elements_;
};

inline bool same_spec(const SpecPtr& a, const SpecPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

inline void require_same_spec(const ElementSet& x, const ElementSet& y, const char* what) {
    if (!same_spec(x.spec(), y.spec()))
        throw Error(Errc::spec_mismatch, std::string(what) + ": operands built over different semigroups");
}

}  // namespace sumgrow
