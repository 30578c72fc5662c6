#include "sumgrow/engine.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace sumgrow {

namespace {

using HashSet = std::unordered_set<Element, ElementHash>;

ElementSet set_from_hash(SpecPtr spec, HashSet&& acc) {
    std::vector<Element> elems;
    elems.reserve(acc.size());
    for (auto it = acc.begin(); it != acc.end();) elems.push_back(std::move(acc.extract(it++).value()));
    return ElementSet::from_canonical(std::move(spec), std::move(elems));
}

std::string point_str(const std::vector<int>& h) {
    std::string s = "(";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(h[i]);
    }
    return s + ")";
}

}  // namespace

ElementSet set_sum(const ElementSet& x, const ElementSet& y) {
    require_same_spec(x, y, "set_sum");
    if (x.empty() || y.empty()) throw Error(Errc::empty_set, "set_sum operands must be nonempty");
    const SemigroupSpec& spec = *x.spec();
    HashSet acc;
    acc.reserve(x.size() * std::min<std::size_t>(y.size(), 4));
    for (const auto& a : x.elements())
        for (const auto& b : y.elements()) acc.insert(add(spec, a, b));
    return set_from_hash(x.spec(), std::move(acc));
}

ElementSet h_fold(const ElementSet& a, int h) {
    if (a.empty()) throw Error(Errc::empty_set, "h_fold needs a nonempty set");
    if (h < 0) throw Error(Errc::bad_value, "h must be nonnegative", {h});
    if (h == 0)
        return ElementSet::from_canonical(a.spec(), {identity_element(*a.spec())});
    ElementSet acc = a;
    for (int i = 1; i < h; ++i) acc = set_sum(acc, a);
    return acc;
}

ElementSet combined_sumset(const Problem& p, const std::vector<int>& h) {
    if (h.size() != p.r())
        throw Error(Errc::dimension_mismatch,
                    "exponent vector has arity " + std::to_string(h.size()) + ", problem has r = " +
                        std::to_string(p.r()));
    for (int c : h)
        if (c < 0) throw Error(Errc::bad_value, "exponents must be nonnegative", {c});
    ElementSet acc = p.base();
    for (std::size_t i = 0; i < p.r(); ++i)
        if (h[i] > 0) acc = set_sum(acc, h_fold(p.summand(i), h[i]));
    return acc;
}

namespace {

class MemoizedSweep {
public:
    MemoizedSweep(const Problem& p, const Box& box, const GrowthOptions& opts, GrowthTable& out)
        : p_(p), box_(box), opts_(opts), out_(out) {
        retain_wanted_.insert(retain_wanted_.end(), opts.retain.begin(), opts.retain.end());
        std::sort(retain_wanted_.begin(), retain_wanted_.end());
    }

    void run(const std::vector<int>& order) {
        std::vector<int> h(p_.r(), 0);
        live_coords_ = 0;
        descend(0, p_.base(), h, order);
    }

private:
    void record(const std::vector<int>& h, const ElementSet& s) {
        out_.gamma.at(h) = static_cast<std::int64_t>(s.size());
        if (opts_.retain_all ||
            std::binary_search(retain_wanted_.begin(), retain_wanted_.end(), h))
            out_.retained.emplace(h, s);
    }

    void descend(std::size_t level, const ElementSet& s, std::vector<int>& h,
                 const std::vector<int>& order) {
        if (level == order.size()) {
            record(h, s);
            return;
        }
        const int coord = order[level];
        ElementSet cur = s;
        charge(cur);
        for (int v = 0;; ++v) {
            h[coord] = v;
            if (v > 0) {
                release(cur);
                cur = set_sum(cur, p_.summand(static_cast<std::size_t>(coord)));
                charge(cur);
                if (live_coords_ > opts_.budget_coords) {
                    throw Error(Errc::budget_exceeded,
                                "memory budget exceeded at lattice point " + point_str(h),
                                {h.begin(), h.end()});
                }
            }
            descend(level + 1, cur, h, order);
            if (v == box_.hi[static_cast<std::size_t>(coord)]) break;
        }
        release(cur);
        h[coord] = 0;
    }

    void charge(const ElementSet& s) { live_coords_ += s.size() * std::max<std::size_t>(1, s.spec()->arity()); }
    void release(const ElementSet& s) { live_coords_ -= s.size() * std::max<std::size_t>(1, s.spec()->arity()); }

    const Problem& p_;
    const Box& box_;
    const GrowthOptions& opts_;
    GrowthTable& out_;
    std::vector<std::vector<int>> retain_wanted_;
    std::uint64_t live_coords_ = 0;
};

}  // namespace

GrowthTable growth_table(const Problem& p, const Box& box, const GrowthOptions& opts) {
    require_dim(box, p.r(), "growth_table");
    for (int b : box.hi)
        if (b < 0) throw Error(Errc::bad_value, "box bounds must be nonnegative", {b});

    GrowthTable table{p, LatticeTable<std::int64_t>(box), {}};

    if (opts.mode == GrowthMode::brute) {
        std::vector<int> h(p.r(), 0);
        std::vector<std::vector<int>> retain_wanted = opts.retain;
        std::sort(retain_wanted.begin(), retain_wanted.end());
        do {
            ElementSet s = combined_sumset(p, h);
            table.gamma.at(h) = static_cast<std::int64_t>(s.size());
            if (opts.retain_all ||
                std::binary_search(retain_wanted.begin(), retain_wanted.end(), h))
                table.retained.emplace(h, std::move(s));
        } while (box.next(h));
        return table;
    }

    std::vector<int> order = opts.order;
    if (order.empty()) {
        order.resize(p.r());
        std::iota(order.begin(), order.end(), 0);
    }
    if (order.size() != p.r())
        throw Error(Errc::dimension_mismatch, "traversal order must be a permutation of coordinates");
    {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i))
                throw Error(Errc::bad_value, "traversal order must be a permutation of coordinates");
    }
    MemoizedSweep sweep(p, box, opts, table);
    sweep.run(order);
    return table;
}

namespace {

/// Enumerates all multisets of size h from `elems`, folding each choice into
/// `partial` and handing complete sums of the remaining summands on.
void enumerate_multisets(const Problem& p, const std::vector<int>& h, std::size_t summand,
                         std::size_t min_elem, int remaining, const Element& partial, HashSet& out) {
    const SemigroupSpec& spec = *p.spec();
    if (remaining == 0) {
        if (summand + 1 == p.r()) {
            out.insert(partial);
            return;
        }
        enumerate_multisets(p, h, summand + 1, 0, h[summand + 1], partial, out);
        return;
    }
    const auto& elems = p.summand(summand).elements();
    for (std::size_t i = min_elem; i < elems.size(); ++i)
        enumerate_multisets(p, h, summand, i, remaining - 1, add(spec, partial, elems[i]), out);
}

}  // namespace

ElementSet brute_force_sumset(const Problem& p, const std::vector<int>& h, const BigInt& cap) {
    if (h.size() != p.r())
        throw Error(Errc::dimension_mismatch, "exponent vector arity mismatch");
    const BigInt count = p.formal_symbol_count(h);
    if (count > cap)
        throw Error(Errc::enumeration_cap_exceeded,
                    "formal choice count " + count.str() + " exceeds cap " + cap.str());
    HashSet acc;
    for (const auto& b : p.base().elements())
        enumerate_multisets(p, h, 0, 0, h[0], b, acc);
    return set_from_hash(p.spec(), std::move(acc));
}

std::string growth_table_csv(const GrowthTable& table) {
    std::string out;
    const std::size_t r = table.box().dim();
    for (std::size_t i = 1; i <= r; ++i) {
        out += "h_" + std::to_string(i) + ",";
    }
    out += "gamma\n";
    std::vector<int> h(r, 0);
    do {
        for (int c : h) out += std::to_string(c) + ",";
        out += std::to_string(table.gamma.at(h)) + "\n";
    } while (table.box().next(h));
    return out;
}

}  // namespace sumgrow
