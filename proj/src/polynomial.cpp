#include "sumgrow/polynomial.hpp"

#include <algorithm>
#include <functional>

namespace sumgrow {

namespace {

/// Horner evaluation over coordinate `dim` of the slice starting at `offset`.
Rational horner(const LatticeTable<Rational>& coef, const std::vector<BigInt>& h,
                std::size_t dim, std::uint64_t offset) {
    const int cap = coef.box.hi[dim];
    const bool last = dim + 1 == coef.box.dim();
    std::uint64_t stride = 1;
    for (std::size_t j = dim + 1; j < coef.box.dim(); ++j)
        stride *= static_cast<std::uint64_t>(coef.box.hi[j]) + 1;
    Rational acc(0);
    for (int e = cap; e >= 0; --e) {
        const std::uint64_t at = offset + static_cast<std::uint64_t>(e) * stride;
        Rational slice = last ? coef.values[at] : horner(coef, h, dim + 1, at);
        acc = acc * Rational(h[dim]) + slice;
    }
    return acc;
}

}  // namespace

Rational MultiPoly::eval(const std::vector<std::int64_t>& h) const {
    if (h.size() != arity_)
        throw Error(Errc::arity_mismatch,
                    "evaluation point arity " + std::to_string(h.size()) + " != " + std::to_string(arity_));
    if (arity_ == 0) return coef_.values.empty() ? Rational(0) : coef_.values[0];
    std::vector<BigInt> hb(h.begin(), h.end());
    return horner(coef_, hb, 0, 0);
}

std::vector<int> MultiPoly::actual_degrees() const {
    std::vector<int> deg(arity_, -1);
    std::vector<int> e(arity_, 0);
    std::uint64_t idx = 0;
    do {
        if (coef_.values[idx] != 0)
            for (std::size_t i = 0; i < arity_; ++i) deg[i] = std::max(deg[i], e[i]);
        ++idx;
    } while (coef_.box.next(e));
    return deg;
}

bool MultiPoly::equals(const MultiPoly& other) const {
    if (arity_ != other.arity_) return false;
    std::vector<int> caps(arity_);
    for (std::size_t i = 0; i < arity_; ++i)
        caps[i] = std::max(coef_.box.hi[i], other.coef_.box.hi[i]);
    Box unioned(caps);
    std::vector<int> e(arity_, 0);
    do {
        if (coeff(e) != other.coeff(e)) return false;
    } while (unioned.next(e));
    return true;
}

bool MultiPoly::is_zero() const {
    return std::all_of(coef_.values.begin(), coef_.values.end(),
                       [](const Rational& c) { return c == 0; });
}

std::vector<std::pair<std::vector<int>, Rational>> MultiPoly::terms() const {
    std::vector<std::pair<std::vector<int>, Rational>> out;
    std::vector<int> e(arity_, 0);
    do {
        const Rational& c = coeff(e);
        if (c != 0) out.emplace_back(e, c);
    } while (coef_.box.next(e));
    return out;
}

ScaledIntPoly::ScaledIntPoly(const MultiPoly& p) : degree_caps(p.degree_caps()) {
    std::vector<int> e(p.arity(), 0);
    // lcm of all coefficient denominators
    do {
        const Rational& c = p.coeff(e);
        BigInt d = rational_den(c);
        denom = denom / boost::multiprecision::gcd(denom, d) * d;
    } while (degree_caps.next(e));
    std::fill(e.begin(), e.end(), 0);
    coef.resize(degree_caps.num_points());
    std::uint64_t idx = 0;
    do {
        const Rational& c = p.coeff(e);
        coef[idx++] = rational_num(c) * (denom / rational_den(c));
    } while (degree_caps.next(e));
}

BigInt ScaledIntPoly::eval_numerator(const std::vector<int>& h) const {
    if (h.size() != degree_caps.dim())
        throw Error(Errc::arity_mismatch, "evaluation point arity mismatch");
    // Horner over the flattened tensor, innermost coordinate fastest.
    const std::size_t r = degree_caps.dim();
    std::function<BigInt(std::size_t, std::uint64_t)> go = [&](std::size_t dim,
                                                               std::uint64_t offset) -> BigInt {
        std::uint64_t stride = 1;
        for (std::size_t j = dim + 1; j < r; ++j)
            stride *= static_cast<std::uint64_t>(degree_caps.hi[j]) + 1;
        BigInt result = 0;
        for (int e = degree_caps.hi[dim]; e >= 0; --e) {
            const std::uint64_t at = offset + static_cast<std::uint64_t>(e) * stride;
            BigInt slice = (dim + 1 == r) ? coef[at] : go(dim + 1, at);
            result = result * h[dim] + slice;
        }
        return result;
    };
    if (r == 0) return coef.empty() ? BigInt(0) : coef[0];
    return go(0, 0);
}

Rational evaluate(const MultiPoly& p, const std::vector<std::int64_t>& h) { return p.eval(h); }

}  // namespace sumgrow
