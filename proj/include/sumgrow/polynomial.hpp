#pragma once

#include "sumgrow/errors.hpp"
#include "sumgrow/lattice.hpp"
#include "sumgrow/numbers.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace sumgrow {

/// Multivariate polynomial with exact rational coefficients, stored densely
/// in the monomial basis over a per-variable degree box.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(std::size_t arity, std::vector<int> degree_caps)
        : arity_(arity), coef_(Box(std::move(degree_caps)), Rational(0)) {
        if (coef_.box.dim() != arity_) throw Error(Errc::arity_mismatch, "degree caps arity mismatch");
    }

    static MultiPoly constant(std::size_t arity, Rational c) {
        MultiPoly p(arity, std::vector<int>(arity, 0));
        p.coef_.values[0] = std::move(c);
        return p;
    }

    std::size_t arity() const { return arity_; }
    const Box& degree_caps() const { return coef_.box; }

    const Rational& coeff(const std::vector<int>& exponents) const {
        static const Rational zero(0);
        if (!coef_.box.contains(exponents)) return zero;
        return coef_.at(exponents);
    }
    void set_coeff(const std::vector<int>& exponents, Rational v) { coef_.at(exponents) = std::move(v); }
    void add_coeff(const std::vector<int>& exponents, const Rational& v) { coef_.at(exponents) += v; }

    /// Exact evaluation at an integer lattice point (multivariate Horner).
    Rational eval(const std::vector<std::int64_t>& h) const;
    Rational eval(const std::vector<int>& h) const {
        return eval(std::vector<std::int64_t>(h.begin(), h.end()));
    }
    Rational eval(std::initializer_list<std::int64_t> h) const {
        return eval(std::vector<std::int64_t>(h));
    }

    /// Actual degree per variable with zero coefficients trimmed; -1 entries
    /// denote the zero polynomial.
    std::vector<int> actual_degrees() const;

    /// Structural equality as polynomials (compares over the union of the
    /// two coefficient boxes, so differing storage sizes do not matter).
    bool equals(const MultiPoly& other) const;

    bool is_zero() const;

    /// Sparse view: (exponent vector, coefficient) for nonzero terms,
    /// lexicographic exponent order.
    std::vector<std::pair<std::vector<int>, Rational>> terms() const;

private:
    std::size_t arity_ = 0;
    LatticeTable<Rational> coef_;
};

/// p scaled to integer coefficients: p(h) = eval_numerator(h) / denom.
/// Used for fast exact agreement checks against integer tables.
struct ScaledIntPoly {
    explicit ScaledIntPoly(const MultiPoly& p);

    BigInt eval_numerator(const std::vector<int>& h) const;
    bool matches(const std::vector<int>& h, std::int64_t value) const {
        return eval_numerator(h) == BigInt(value) * denom;
    }

    Box degree_caps;
    std::vector<BigInt> coef;
    BigInt denom = 1;
};

/// Free-function alias for polynomial evaluation at a lattice point.
Rational evaluate(const MultiPoly& p, const std::vector<std::int64_t>& h);

}  // namespace sumgrow
