#pragma once

#include "sumgrow/errors.hpp"

#include <cstdint>
#include <vector>

namespace sumgrow {

/// Axis-aligned box of lattice points: all h with 0 <= h[i] <= hi[i].
/// Points are ranked in lexicographic order with the first coordinate most
/// significant, so rank order equals row-major storage order.
struct Box {
    std::vector<int> hi;

    Box() = default;
    explicit Box(std::vector<int> upper) : hi(std::move(upper)) {}

    std::size_t dim() const { return hi.size(); }

    std::uint64_t num_points() const {
        std::uint64_t n = 1;
        for (int b : hi) n *= static_cast<std::uint64_t>(b) + 1;
        return n;
    }

    bool contains(const std::vector<int>& h) const {
        if (h.size() != hi.size()) return false;
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h[i] < 0 || h[i] > hi[i]) return false;
        return true;
    }

    std::uint64_t index(const std::vector<int>& h) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < hi.size(); ++i)
            idx = idx * (static_cast<std::uint64_t>(hi[i]) + 1) + static_cast<std::uint64_t>(h[i]);
        return idx;
    }

    std::vector<int> point(std::uint64_t idx) const {
        std::vector<int> h(hi.size(), 0);
        for (std::size_t i = hi.size(); i-- > 0;) {
            std::uint64_t extent = static_cast<std::uint64_t>(hi[i]) + 1;
            h[i] = static_cast<int>(idx % extent);
            idx /= extent;
        }
        return h;
    }

    /// Advance h to the lexicographically next point; false once exhausted.
    bool next(std::vector<int>& h) const {
        for (std::size_t i = hi.size(); i-- > 0;) {
            if (h[i] < hi[i]) {
                ++h[i];
                return true;
            }
            h[i] = 0;
        }
        return false;
    }

    bool operator==(const Box&) const = default;
};

/// Dense array of values indexed by the lattice points of a box.
template <typename T>
struct LatticeTable {
    Box box;
    std::vector<T> values;

    LatticeTable() = default;
    explicit LatticeTable(Box b) : box(std::move(b)), values(box.num_points()) {}
    LatticeTable(Box b, T fill) : box(std::move(b)), values(box.num_points(), fill) {}

    T& at(const std::vector<int>& h) { return values[box.index(h)]; }
    const T& at(const std::vector<int>& h) const { return values[box.index(h)]; }

    bool operator==(const LatticeTable&) const = default;
};

inline void require_dim(const Box& box, std::size_t r, const char* what) {
    if (box.dim() != r)
        throw Error(Errc::dimension_mismatch,
                    std::string(what) + ": box dimension " + std::to_string(box.dim()) +
                        " does not match arity " + std::to_string(r));
}

}  // namespace sumgrow
