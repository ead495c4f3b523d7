#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

struct NotInvertible : std::domain_error {
    NotInvertible() : std::domain_error("series has zero constant term, no multiplicative inverse") {}
};

struct NotDeltaSeries : std::domain_error {
    NotDeltaSeries() : std::domain_error("series is not of order 1, no compositional inverse") {}
};

struct CompositionOrderError : std::domain_error {
    CompositionOrderError() : std::domain_error("inner series of a composition must have zero constant term") {}
};

struct TruncationExhausted : std::domain_error {
    explicit TruncationExhausted(const std::string& what) : std::domain_error(what) {}
};

struct InvalidPrime : std::domain_error {
    explicit InvalidPrime(const std::string& what) : std::domain_error(what) {}
};

struct PrimeMismatch : std::domain_error {
    PrimeMismatch() : std::domain_error("operands live over different primes") {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A dual-route computation disagreed with itself. Signals an arithmetic
// bug in this library, never a bad input.
struct InternalCrossCheckFailure : std::logic_error {
    explicit InternalCrossCheckFailure(const std::string& what) : std::logic_error(what) {}
};

}  // namespace umbral
