#include "sumgrow/semigroup.hpp"

#include <string>

namespace sumgrow {

namespace {

std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

void require_arity(const SemigroupSpec& spec, const Element& e) {
    if (e.coords.size() != spec.arity())
        throw Error(Errc::arity_mismatch,
                    "element has " + std::to_string(e.coords.size()) + " coordinates, spec expects " +
                        std::to_string(spec.arity()),
                    {static_cast<long long>(e.coords.size()), static_cast<long long>(spec.arity())});
}

}  // namespace

SemigroupSpec SemigroupSpec::integers(std::size_t dim) {
    std::vector<Component> comps(dim);
    return make_product(std::move(comps));
}

SemigroupSpec SemigroupSpec::modular(std::int64_t m) {
    Component c;
    c.is_free = false;
    c.modulus = m;
    return make_product({c});
}

SemigroupSpec validate_spec(const SemigroupSpec& raw) {
    if (raw.kind == SemigroupSpec::Kind::product) {
        for (std::size_t i = 0; i < raw.components.size(); ++i) {
            const auto& c = raw.components[i];
            if (!c.is_free && c.modulus < 1)
                throw Error(Errc::bad_modulus,
                            "component " + std::to_string(i) + " has modulus " +
                                std::to_string(c.modulus) + " < 1",
                            {static_cast<long long>(i), c.modulus});
        }
        return raw;
    }

    const auto n = static_cast<int>(raw.table.size());
    if (n < 1) throw Error(Errc::bad_value, "table order must be >= 1");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(raw.table[i].size()) != n)
            throw Error(Errc::bad_value, "table row " + std::to_string(i) + " has wrong length",
                        {i});
        for (int j = 0; j < n; ++j) {
            int v = raw.table[i][j];
            if (v < 0 || v >= n)
                throw Error(Errc::index_out_of_range,
                            "table[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                                std::to_string(v) + " out of range",
                            {i, j, v});
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (raw.table[i][j] != raw.table[j][i])
                throw Error(Errc::not_commutative,
                            "table[" + std::to_string(i) + "][" + std::to_string(j) +
                                "] != table[" + std::to_string(j) + "][" + std::to_string(i) + "]",
                            {i, j});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (raw.table[raw.table[i][j]][k] != raw.table[i][raw.table[j][k]])
                    throw Error(Errc::not_associative,
                                "(" + std::to_string(i) + "+" + std::to_string(j) + ")+" +
                                    std::to_string(k) + " != " + std::to_string(i) + "+(" +
                                    std::to_string(j) + "+" + std::to_string(k) + ")",
                                {i, j, k});
    const int e = raw.identity_index;
    if (e < 0 || e >= n)
        throw Error(Errc::no_identity, "identity index " + std::to_string(e) + " out of range",
                    {e});
    for (int i = 0; i < n; ++i)
        if (raw.table[e][i] != i)
            throw Error(Errc::no_identity,
                        "table[" + std::to_string(e) + "][" + std::to_string(i) +
                            "] = " + std::to_string(raw.table[e][i]) + ", expected " +
                            std::to_string(i),
                        {e, i});
    return raw;
}

Element canonicalize(const SemigroupSpec& spec, Element raw) {
    require_arity(spec, raw);
    if (spec.kind == SemigroupSpec::Kind::product) {
        for (std::size_t i = 0; i < spec.components.size(); ++i) {
            const auto& c = spec.components[i];
            if (!c.is_free) raw.coords[i] = mod_reduce(raw.coords[i], c.modulus);
        }
        return raw;
    }
    std::int64_t idx = raw.coords[0];
    if (idx < 0 || idx >= static_cast<std::int64_t>(spec.order()))
        throw Error(Errc::index_out_of_range,
                    "table element index " + std::to_string(idx) + " out of [0, " +
                        std::to_string(spec.order() - 1) + "]",
                    {idx});
    return raw;
}

bool is_canonical(const SemigroupSpec& spec, const Element& e) {
    if (e.coords.size() != spec.arity()) return false;
    if (spec.kind == SemigroupSpec::Kind::product) {
        for (std::size_t i = 0; i < spec.components.size(); ++i) {
            const auto& c = spec.components[i];
            if (!c.is_free && (e.coords[i] < 0 || e.coords[i] >= c.modulus)) return false;
        }
        return true;
    }
    return e.coords[0] >= 0 && e.coords[0] < static_cast<std::int64_t>(spec.order());
}

Element identity_element(const SemigroupSpec& spec) {
    if (spec.kind == SemigroupSpec::Kind::product)
        return Element(std::vector<std::int64_t>(spec.components.size(), 0));
    return Element({spec.identity_index});
}

Element add(const SemigroupSpec& spec, const Element& x, const Element& y) {
    require_arity(spec, x);
    require_arity(spec, y);
    if (spec.kind == SemigroupSpec::Kind::product) {
        Element out = x;
        for (std::size_t i = 0; i < spec.components.size(); ++i) {
            out.coords[i] += y.coords[i];
            const auto& c = spec.components[i];
            if (!c.is_free) out.coords[i] = mod_reduce(out.coords[i], c.modulus);
        }
        return out;
    }
    return Element({spec.table[static_cast<std::size_t>(x.coords[0])]
                             [static_cast<std::size_t>(y.coords[0])]});
}

SemigroupSpec adjoin_identity(const SemigroupSpec& table_spec) {
    if (table_spec.kind != SemigroupSpec::Kind::table)
        throw Error(Errc::bad_value, "adjoin_identity only applies to table specs");
    const int n = static_cast<int>(table_spec.order());
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n) + 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = table_spec.table[i][j];
    for (int i = 0; i <= n; ++i) {
        t[n][i] = i;
        t[i][n] = i;
    }
    return SemigroupSpec::make_table(std::move(t), n);
}

}  // namespace sumgrow
