#include "umbral/euler.hpp"

#include <functional>

#include "umbral/errors.hpp"

namespace umbral {

EgfSeries euler_denominator(unsigned trunc) {
    std::vector<BigRat> c(trunc + 1, BigRat(1, 2));
    c[0] = 1;
    return EgfSeries(std::move(c));
}

EgfSeries euler_functional(unsigned trunc) { return euler_denominator(trunc).inverse(); }

std::vector<BigRat> euler_numbers(unsigned nmax) {
    std::vector<BigRat> e(nmax + 1);
    e[0] = 1;
    for (unsigned n = 1; n <= nmax; ++n) {
        BigRat acc(0);
        for (unsigned k = 0; k < n; ++k) acc += BigRat(binomial(n, k)) * e[k];
        e[n] = acc * BigRat(-1, 2);
    }
    return e;
}

namespace {

Poly binomial_route(unsigned n, const std::vector<BigRat>& numbers) {
    // E_n(x) = sum_k binom(n,k) E_k x^{n-k}
    std::vector<BigRat> c(n + 1, BigRat(0));
    for (unsigned k = 0; k <= n; ++k) c[n - k] = BigRat(binomial(n, k)) * numbers[k];
    return Poly(std::move(c));
}

// Sum of multinomial(n; i_1..i_r) E_{i_1}...E_{i_r} over compositions of n
// into r nonnegative parts, by lexicographic recursion.
BigRat multinomial_convolution(unsigned n, unsigned r, const std::vector<BigRat>& e) {
    BigRat total(0);
    std::function<void(unsigned, unsigned, BigRat)> rec =
        [&](unsigned parts_left, unsigned budget, BigRat partial) {
            if (partial == 0) return;
            if (parts_left == 1) {
                total += partial * e[budget];
                return;
            }
            for (unsigned i = 0; i <= budget; ++i)
                rec(parts_left - 1, budget - i, partial * BigRat(binomial(budget, i)) * e[i]);
        };
    rec(r, n, BigRat(1));
    return total;
}

}  // namespace

Poly euler_poly(unsigned n) {
    static std::mutex mu;
    static std::vector<Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() > n) return cache[n];
    std::vector<BigRat> numbers = euler_numbers(n);
    for (unsigned m = static_cast<unsigned>(cache.size()); m <= n; ++m) {
        Poly via_binomial = binomial_route(m, numbers);
        Poly via_operator = apply(euler_functional(m), Poly::monomial(m));
        if (via_binomial != via_operator)
            throw InternalCrossCheckFailure("euler_poly routes disagree at n=" + std::to_string(m));
        cache.push_back(via_binomial);
    }
    return cache[n];
}

OrderRValue euler_order_r_checked(unsigned n, unsigned r) {
    BigRat series_value = euler_functional(n).pow(r).coeff(n);
    if (n > 12 || r > 4) return {series_value, false};
    BigRat enum_value = multinomial_convolution(n, r, euler_numbers(n));
    if (enum_value != series_value)
        throw InternalCrossCheckFailure("euler_order_r routes disagree at n=" + std::to_string(n) +
                                        " r=" + std::to_string(r));
    return {enum_value, true};
}

BigRat euler_order_r(unsigned n, unsigned r) { return euler_order_r_checked(n, r).value; }

Poly euler_poly_order_r(unsigned n, unsigned r) {
    std::vector<BigRat> numbers(n + 1);
    for (unsigned k = 0; k <= n; ++k) numbers[k] = euler_order_r(k, r);
    Poly via_binomial = binomial_route(n, numbers);
    Poly via_operator = apply(euler_functional(n).pow(r), Poly::monomial(n));
    if (via_binomial != via_operator)
        throw InternalCrossCheckFailure("euler_poly_order_r routes disagree at n=" + std::to_string(n) +
                                        " r=" + std::to_string(r));
    return via_binomial;
}

EulerTable::EulerTable(unsigned order) : order_(order) {
    if (order_ == 0) throw std::domain_error("Euler table order must be positive");
}

void EulerTable::grow(unsigned n) const {
    for (unsigned m = static_cast<unsigned>(values_.size()); m <= n; ++m) {
        values_.push_back(euler_order_r(m, order_));
        polys_.push_back(euler_poly_order_r(m, order_));
    }
}

BigRat EulerTable::number(unsigned n) const {
    std::lock_guard<std::mutex> lock(mu_);
    grow(n);
    return values_[n];
}

Poly EulerTable::poly(unsigned n) const {
    std::lock_guard<std::mutex> lock(mu_);
    grow(n);
    return polys_[n];
}

}  // namespace umbral
