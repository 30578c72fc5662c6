#pragma once

#include "sumgrow/errors.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace sumgrow {

/**
 * Description of an ambient abelian semigroup with identity.
 *
 * Two kinds are supported:
 *  - product: a finite product of coordinates, each either a free integer
 *    (all of Z) or the residues mod m for some m >= 1;
 *  - table: an explicit Cayley table on {0, ..., n-1} with a designated
 *    identity index.
 *
 * A table spec is only considered valid once `validate_spec` has checked
 * closure, commutativity, associativity (exhaustive O(n^3) scan) and the
 * identity row.
 */
struct SemigroupSpec {
    enum class Kind { product, table };

    struct Component {
        bool is_free = true;
        std::int64_t modulus = 0;  // only meaningful when !is_free; must be >= 1

        bool operator==(const Component&) const = default;
    };

    Kind kind = Kind::product;
    std::vector<Component> components;      // product kind
    std::vector<std::vector<int>> table;    // table kind, n x n
    int identity_index = 0;                 // table kind

    static SemigroupSpec make_product(std::vector<Component> comps) {
        SemigroupSpec s;
        s.kind = Kind::product;
        s.components = std::move(comps);
        return s;
    }

    static SemigroupSpec make_table(std::vector<std::vector<int>> t, int identity) {
        SemigroupSpec s;
        s.kind = Kind::table;
        s.table = std::move(t);
        s.identity_index = identity;
        return s;
    }

    /// Convenience builders for common cases.
    static SemigroupSpec integers(std::size_t dim = 1);
    static SemigroupSpec modular(std::int64_t m);

    std::size_t order() const { return table.size(); }

    /// Length of an element's coordinate vector (1 for table kind).
    std::size_t arity() const { return kind == Kind::product ? components.size() : 1; }

    bool operator==(const SemigroupSpec&) const = default;
};

using SpecPtr = std::shared_ptr<const SemigroupSpec>;

/// Semigroup elements are coordinate vectors; table elements use a single
/// coordinate holding the index. The derived ordering (lexicographic on
/// coordinates) is the total order used for all deterministic serialization.
struct Element {
    std::vector<std::int64_t> coords;

    Element() = default;
    explicit Element(std::vector<std::int64_t> c) : coords(std::move(c)) {}

    auto operator<=>(const Element&) const = default;
};

struct ElementHash {
    std::size_t operator()(const Element& e) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::int64_t c : e.coords) {
            std::uint64_t x = static_cast<std::uint64_t>(c);
            x *= 0xbf58476d1ce4e5b9ull;
            x ^= x >> 31;
            h = (h ^ x) * 0x94d049bb133111ebull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Checks every spec invariant; throws Error naming a violating witness.
/// Returns the validated spec unchanged.
SemigroupSpec validate_spec(const SemigroupSpec& raw);

/// Reduces an element candidate to canonical form under the semigroup spec:
/// modular coordinates into [0, m-1], table indices range-checked. Idempotent.
Element canonicalize(const SemigroupSpec& spec, Element raw);

bool is_canonical(const SemigroupSpec& spec, const Element& e);

/// The identity element (all zeros for products, the identity index for tables).
Element identity_element(const SemigroupSpec& spec);

/// The semigroup operation. Inputs must be canonical; the result is canonical.
Element add(const SemigroupSpec& spec, const Element& x, const Element& y);

/// Extends a table spec by one fresh element acting as identity. Explicitly
/// opt-in; never applied silently (adjoining changes sumset cardinalities).
SemigroupSpec adjoin_identity(const SemigroupSpec& table_spec);

}  // namespace sumgrow
