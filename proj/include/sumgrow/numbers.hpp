#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>

namespace sumgrow {

// All report-level arithmetic is exact: big integers for counts and series
// coefficients, rationals for polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

inline BigInt factorial(std::int64_t n) {
    BigInt result = 1;
    for (std::int64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rational_den(q) == 1; }

}  // namespace sumgrow
