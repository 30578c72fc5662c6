#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumgrow {

enum class Errc {
    not_commutative,
    not_associative,
    no_identity,
    bad_modulus,
    spec_mismatch,
    arity_mismatch,
    index_out_of_range,
    dimension_mismatch,
    budget_exceeded,
    enumeration_cap_exceeded,
    box_too_small,
    grid_outside_box,
    gcd_not_one,
    not_stabilized,
    empty_generators,
    empty_set,
    parse_error,
    bad_value,
};

/// Library-wide error type. `witness()` carries the integers identifying the
/// violating object (table indices, lattice point, gcd value, ...).
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, std::vector<long long> witness = {})
        : std::runtime_error(std::move(message)), code_(code), witness_(std::move(witness)) {}

    Errc code() const noexcept { return code_; }
    const std::vector<long long>& witness() const noexcept { return witness_; }

    static const char* name(Errc c) {
        switch (c) {
            case Errc::not_commutative: return "NotCommutative";
            case Errc::not_associative: return "NotAssociative";
            case Errc::no_identity: return "NoIdentity";
            case Errc::bad_modulus: return "BadModulus";
            case Errc::spec_mismatch: return "SpecMismatch";
            case Errc::arity_mismatch: return "ArityMismatch";
            case Errc::index_out_of_range: return "IndexOutOfRange";
            case Errc::dimension_mismatch: return "DimensionMismatch";
            case Errc::budget_exceeded: return "BudgetExceeded";
            case Errc::enumeration_cap_exceeded: return "EnumerationCapExceeded";
            case Errc::box_too_small: return "BoxTooSmall";
            case Errc::grid_outside_box: return "GridOutsideBox";
            case Errc::gcd_not_one: return "GcdNotOne";
            case Errc::not_stabilized: return "NotStabilized";
            case Errc::empty_generators: return "EmptyGenerators";
            case Errc::empty_set: return "EmptySet";
            case Errc::parse_error: return "ParseError";
            case Errc::bad_value: return "BadValue";
        }
        return "UnknownError";
    }

private:
    Errc code_;
    std::vector<long long> witness_;
};

}  // namespace sumgrow
