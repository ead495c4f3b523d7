#pragma once

#include <optional>
#include <string>

#include "umbral/errors.hpp"
#include "umbral/rational.hpp"

namespace umbral {

// Throws InvalidPrime unless p is an odd prime (deterministic trial division).
void require_odd_prime(unsigned long p);

// A p-adic number known to finite precision: u * p^v + O(p^{v+M}) with
// 0 < u < p^M and gcd(u, p) = 1. Zero-through-precision is represented as
// O(p^A), the "indistinguishable from zero" state; its valuation is
// reported as indeterminate rather than a number.
class PadicNum {
public:
    static PadicNum from_rational(const BigRat& r, unsigned long p, unsigned precision);
    // Zero at absolute precision abs_prec.
    static PadicNum zero(unsigned long p, long abs_prec);

    unsigned long prime() const { return p_; }
    // Exponent A in the O(p^A) error term.
    long abs_precision() const { return abs_prec_; }
    bool is_zero() const { return !v_.has_value(); }

    // nullopt for values indistinguishable from zero at this precision
    // (the infinity marker).
    std::optional<long> valuation() const { return v_; }
    // Relative precision M; meaningful only for nonzero values.
    long rel_precision() const { return abs_prec_ - v_.value(); }
    const BigInt& unit() const { return u_; }

    PadicNum operator+(const PadicNum& o) const;
    PadicNum operator-(const PadicNum& o) const;
    PadicNum operator*(const PadicNum& o) const;

    // Drops precision to new_abs; digits below new_abs are unchanged.
    PadicNum reduce_precision(long new_abs) const;

    // "u * p^v + O(p^(v+M))", e.g. "5 * 3^0 + O(3^2)"; zero prints "O(p^A)".
    std::string to_string() const;

private:
    PadicNum(unsigned long p, std::optional<long> v, BigInt u, long abs_prec)
        : p_(p), v_(v), u_(std::move(u)), abs_prec_(abs_prec) {}
    static PadicNum normalize(unsigned long p, const BigInt& value, long scale, long abs_prec);

    unsigned long p_;
    std::optional<long> v_;
    BigInt u_;
    long abs_prec_;
};

// v_p of a rational; nullopt for zero.
std::optional<long> rational_valuation(const BigRat& r, unsigned long p);

}  // namespace umbral
