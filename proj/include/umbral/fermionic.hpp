#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umbral/padic.hpp"
#include "umbral/pairing.hpp"
#include "umbral/poly.hpp"

namespace umbral {

// Default cap on p^N terms for direct alternating summation.
inline constexpr std::uint64_t kDefaultSumBudget = 10'000'000;

// Exact value of the alternating-measure integral of a polynomial over Z_p:
// <2/(e^t+1)|pol>. For pol = x^n this is the n-th Euler number. The value
// does not depend on p.
BigRat integral(const Poly& pol);

// Integral of pol(x0 + y) in y; for pol = x^n this is E_n(x0).
BigRat integral_shifted(const Poly& pol, const BigRat& x0);

// Exact alternating partial sum sum_{x=0}^{p^N-1} pol(x) (-1)^x.
// Throws BudgetExceeded when p^N exceeds the budget.
BigRat partial_sum(const Poly& pol, unsigned long p, unsigned N,
                   std::uint64_t budget = kDefaultSumBudget);

// The same partial sum in closed form, (I[pol(x + p^N)] + I[pol]) / 2,
// valid because the shift p^N is odd. Cost is polynomial in deg(pol).
BigRat partial_sum_closed_form(const Poly& pol, unsigned long p, unsigned N);

// Checks I[pol(x+n)] + (-1)^{n-1} I[pol] = 2 sum_{l<n} (-1)^{n-1-l} pol(l).
bool shift_identity_check(const Poly& pol, unsigned n);

// r-fold iterated integral of pol(x_1+...+x_r+x) at x = x0, computed both
// as the operator action of (2/(e^t+1))^r and by reducing one variable at
// a time; route disagreement throws InternalCrossCheckFailure.
BigRat integral_order_r(const Poly& pol, unsigned r, const BigRat& x0);

// The functional with a_k = r-fold integral of x^k; equals the r-th power
// of 2/(e^t+1) through T.
EgfSeries functional_from_integral(unsigned T, unsigned r = 1);

struct ReportRow {
    unsigned N;
    BigRat sum;
    // v_p(S_N - exact); nullopt when indistinguishable from zero at the
    // working precision.
    std::optional<long> valuation;
    // Whether the closed form was cross-checked against direct summation
    // (false when p^N exceeded the budget) and, if so, agreed.
    bool direct_checked;
    bool closed_form_ok;
};

struct IntegralReport {
    Poly integrand;
    unsigned long p;
    BigRat exact;
    std::vector<ReportRow> rows;

    std::string to_json() const;
};

// Partial sums S_1..S_Nmax with p-adic valuations of S_N - exact tracked
// at precision M. Direct summation cross-checks the closed form wherever
// p^N fits the budget.
IntegralReport convergence_report(const Poly& pol, unsigned long p, unsigned Nmax, unsigned M,
                                  std::uint64_t budget = kDefaultSumBudget);

}  // namespace umbral
