#pragma once

#include <mutex>
#include <vector>

#include "umbral/pairing.hpp"
#include "umbral/poly.hpp"
#include "umbral/series.hpp"

namespace umbral {

// The series (e^t+1)/2 through truncation T: coefficients 1, 1/2, 1/2, ...
EgfSeries euler_denominator(unsigned trunc);
// 2/(e^t+1) through truncation T; its EGF coefficients are the Euler numbers.
EgfSeries euler_functional(unsigned trunc);

// E_0..E_nmax by the recurrence E_n = -(1/2) sum_{k<n} binom(n,k) E_k, E_0 = 1.
std::vector<BigRat> euler_numbers(unsigned nmax);

// E_n(x), computed by both the binomial sum over Euler numbers and the
// operator action of 2/(e^t+1) on x^n. Route disagreement throws
// InternalCrossCheckFailure. Memoized.
Poly euler_poly(unsigned n);

// Value of an order-r Euler number together with how it was computed.
struct OrderRValue {
    BigRat value;
    // True when both the multinomial enumeration and the series-power
    // route ran and agreed; false when only the series route was used
    // (enumeration is skipped above n = 12 or r = 4).
    bool dual_route;
};

// E_n^{(r)}: multinomial convolution over compositions of n into r parts,
// cross-checked against the n-th coefficient of (2/(e^t+1))^r.
OrderRValue euler_order_r_checked(unsigned n, unsigned r);
BigRat euler_order_r(unsigned n, unsigned r);

// E_n^{(r)}(x): binomial sum over order-r numbers, cross-checked against
// the operator action of (2/(e^t+1))^r on x^n.
Poly euler_poly_order_r(unsigned n, unsigned r);

// Memoized table of order-r Euler numbers and polynomials.
class EulerTable {
public:
    explicit EulerTable(unsigned order);

    unsigned order() const { return order_; }
    BigRat number(unsigned n) const;
    Poly poly(unsigned n) const;

private:
    void grow(unsigned n) const;

    unsigned order_;
    mutable std::mutex mu_;
    mutable std::vector<BigRat> values_;
    mutable std::vector<Poly> polys_;
};

}  // namespace umbral
