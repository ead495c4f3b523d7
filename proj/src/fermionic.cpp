#include "umbral/fermionic.hpp"

#include <json.hpp>

#include "umbral/errors.hpp"
#include "umbral/euler.hpp"

namespace umbral {

namespace {

BigInt prime_power(unsigned long p, unsigned N) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, N);
    return r;
}

}  // namespace

BigRat integral(const Poly& pol) {
    if (pol.is_zero()) return BigRat(0);
    return pair(euler_functional(static_cast<unsigned>(pol.degree())), pol);
}

BigRat integral_shifted(const Poly& pol, const BigRat& x0) {
    return integral(pol.shift(x0));
}

BigRat partial_sum(const Poly& pol, unsigned long p, unsigned N, std::uint64_t budget) {
    require_odd_prime(p);
    BigInt terms = prime_power(p, N);
    if (terms > BigInt(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("p^N = " + terms.get_str() + " exceeds summation budget " +
                             std::to_string(budget));
    BigRat acc(0);
    BigRat x(0);
    bool negate = false;
    for (BigInt i(0); i < terms; ++i) {
        BigRat term = pol.eval(x);
        acc += negate ? -term : term;
        x += 1;
        negate = !negate;
    }
    return acc;
}

BigRat partial_sum_closed_form(const Poly& pol, unsigned long p, unsigned N) {
    require_odd_prime(p);
    BigRat shift(prime_power(p, N));
    return (integral(pol.shift(shift)) + integral(pol)) / 2;
}

bool shift_identity_check(const Poly& pol, unsigned n) {
    if (n == 0) throw std::domain_error("shift must be positive");
    BigRat lhs = integral(pol.shift(BigRat(n)));
    BigRat right_int = integral(pol);
    lhs += (n % 2 == 1) ? right_int : -right_int;
    BigRat rhs(0);
    for (unsigned l = 0; l < n; ++l) {
        BigRat term = pol.eval(BigRat(l));
        rhs += ((n - 1 - l) % 2 == 0) ? term : -term;
    }
    return lhs == 2 * rhs;
}

BigRat integral_order_r(const Poly& pol, unsigned r, const BigRat& x0) {
    if (pol.is_zero()) return BigRat(0);
    unsigned d = static_cast<unsigned>(pol.degree());
    EgfSeries g_inv_r = euler_functional(d).pow(r);
    BigRat via_operator = apply(g_inv_r, pol).eval(x0);

    // Reduce one integration variable at a time: each pass replaces q(x)
    // by the integral of q(x + y) in y, still a polynomial in x.
    EgfSeries g_inv = euler_functional(d);
    Poly q = pol;
    for (unsigned i = 0; i < r; ++i) q = apply(g_inv, q);
    BigRat via_iteration = q.eval(x0);

    if (via_operator != via_iteration)
        throw InternalCrossCheckFailure("integral_order_r routes disagree (r=" + std::to_string(r) + ")");
    return via_operator;
}

EgfSeries functional_from_integral(unsigned T, unsigned r) {
    std::vector<BigRat> coeffs(T + 1);
    for (unsigned k = 0; k <= T; ++k)
        coeffs[k] = integral_order_r(Poly::monomial(k), r, BigRat(0));
    return EgfSeries(std::move(coeffs));
}

IntegralReport convergence_report(const Poly& pol, unsigned long p, unsigned Nmax, unsigned M,
                                  std::uint64_t budget) {
    require_odd_prime(p);
    IntegralReport rep{pol, p, integral(pol), {}};
    for (unsigned N = 1; N <= Nmax; ++N) {
        ReportRow row;
        row.N = N;
        row.sum = partial_sum_closed_form(pol, p, N);
        row.direct_checked = false;
        row.closed_form_ok = true;
        if (prime_power(p, N) <= BigInt(static_cast<unsigned long>(budget))) {
            row.direct_checked = true;
            row.closed_form_ok = partial_sum(pol, p, N, budget) == row.sum;
        }
        PadicNum diff = PadicNum::from_rational(row.sum, p, M) -
                        PadicNum::from_rational(rep.exact, p, M);
        row.valuation = diff.valuation();
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string IntegralReport::to_json() const {
    nlohmann::json j;
    j["integrand"] = nlohmann::json::array();
    for (const auto& c : integrand.coeffs()) j["integrand"].push_back(rat_to_string(c));
    j["p"] = p;
    j["exact"] = rat_to_string(exact);
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r;
        r["N"] = row.N;
        r["S_N"] = rat_to_string(row.sum);
        if (row.valuation)
            r["valuation"] = *row.valuation;
        else
            r["valuation"] = nullptr;
        r["closed_form_ok"] = row.closed_form_ok;
        r["direct_checked"] = row.direct_checked;
        j["rows"].push_back(std::move(r));
    }
    return j.dump(2);
}

}  // namespace umbral
