#include <doctest.h>

#include <json.hpp>

#include <random>

#include "umbral/euler.hpp"
#include "umbral/fermionic.hpp"

using namespace umbral;

namespace {

Poly from_ints(std::initializer_list<long> cs) {
    std::vector<BigRat> v;
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

}  // namespace

TEST_CASE("exact integral values") {
    CHECK(integral(Poly::constant(BigRat(1))) == 1);
    CHECK(integral(Poly::monomial(1)) == make_rat(-1, 2));
    CHECK(integral(from_ints({0, -1, 1})) == make_rat(1, 2));  // x^2 - x
    CHECK(integral(Poly::zero()) == 0);
    // linearity
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int i = 0; i < 20; ++i) {
        std::vector<BigRat> c1(7), c2(7);
        for (auto& x : c1) x = make_rat(num(rng), den(rng));
        for (auto& x : c2) x = make_rat(num(rng), den(rng));
        Poly p(std::move(c1)), q(std::move(c2));
        BigRat alpha = make_rat(num(rng), den(rng));
        CHECK(integral(p * alpha + q) == alpha * integral(p) + integral(q));
    }
}

TEST_CASE("shifted integral") {
    CHECK(integral_shifted(Poly::monomial(2), BigRat(1)) == 0);          // E_2(1)
    CHECK(integral_shifted(Poly::monomial(1), BigRat(2)) == make_rat(3, 2));  // E_1(2)
    Poly p = from_ints({1, 2, 3});
    CHECK(integral_shifted(p, BigRat(0)) == integral(p));
    // equals E_n evaluated at the shift
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(integral_shifted(Poly::monomial(n), make_rat(5, 3)) ==
              euler_poly(n).eval(make_rat(5, 3)));
}

TEST_CASE("direct partial sums") {
    CHECK(partial_sum(Poly::monomial(1), 3, 1) == 1);
    CHECK(partial_sum(Poly::monomial(1), 3, 2) == 4);
    CHECK(partial_sum(Poly::constant(BigRat(1)), 5, 2) == 1);
    CHECK(partial_sum(Poly::constant(BigRat(1)), 7, 1) == 1);
    CHECK_THROWS_AS(partial_sum(Poly::monomial(1), 3, 20), BudgetExceeded);
    CHECK_THROWS_AS(partial_sum(Poly::monomial(1), 4, 1), InvalidPrime);
}

TEST_CASE("closed form matches direct summation") {
    CHECK(partial_sum_closed_form(Poly::monomial(1), 3, 1) == 1);
    CHECK(partial_sum_closed_form(Poly::monomial(1), 3, 2) == 4);
    CHECK(partial_sum_closed_form(Poly::constant(BigRat(1)), 3, 3) == 1);
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (unsigned long p : {3ul, 5ul, 7ul})
        for (unsigned deg = 0; deg <= 8; ++deg)
            for (unsigned N = 1; N <= 4; ++N) {
                BigInt pn;
                mpz_ui_pow_ui(pn.get_mpz_t(), p, N);
                if (pn > 100000) continue;
                std::vector<BigRat> c(deg + 1);
                for (auto& x : c) x = make_rat(num(rng), den(rng));
                Poly pol(std::move(c));
                CHECK(partial_sum(pol, p, N) == partial_sum_closed_form(pol, p, N));
            }
}

TEST_CASE("shift identity") {
    CHECK(shift_identity_check(Poly::monomial(1), 1));
    CHECK(shift_identity_check(Poly::monomial(1), 2));
    CHECK(shift_identity_check(Poly::monomial(2), 3));
    for (unsigned deg = 0; deg <= 8; ++deg)
        for (unsigned n = 1; n <= 10; ++n) CHECK(shift_identity_check(Poly::monomial(deg), n));
    CHECK_THROWS(shift_identity_check(Poly::monomial(1), 0));
}

TEST_CASE("iterated integrals") {
    CHECK(integral_order_r(Poly::monomial(2), 2, BigRat(0)) == make_rat(1, 2));
    CHECK(integral_order_r(Poly::constant(BigRat(1)), 5, make_rat(7, 3)) == 1);
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(integral_order_r(Poly::monomial(n), 1, make_rat(1, 2)) ==
              euler_poly(n).eval(make_rat(1, 2)));
    // matches the order-r polynomials
    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned n = 0; n <= 6; ++n)
            CHECK(integral_order_r(Poly::monomial(n), r, BigRat(2)) ==
                  euler_poly_order_r(n, r).eval(BigRat(2)));
}

TEST_CASE("moment functional") {
    EgfSeries f = functional_from_integral(3);
    CHECK(f.coeffs() == std::vector<BigRat>{BigRat(1), make_rat(-1, 2), BigRat(0), make_rat(1, 4)});
    EgfSeries f2 = functional_from_integral(2, 2);
    CHECK(f2.coeffs() == std::vector<BigRat>{BigRat(1), BigRat(-1), make_rat(1, 2)});
    CHECK(functional_from_integral(0).coeffs() == std::vector<BigRat>{BigRat(1)});
    for (unsigned T : {8u, 24u})
        CHECK(functional_from_integral(T).agrees_with(euler_functional(T)));
    for (unsigned r = 2; r <= 3; ++r)
        CHECK(functional_from_integral(8, r).agrees_with(euler_functional(8).pow(r)));
}

TEST_CASE("convergence report") {
    IntegralReport rep = convergence_report(Poly::monomial(1), 3, 2, 8);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.exact == make_rat(-1, 2));
    CHECK(rep.rows[0].sum == 1);
    CHECK(rep.rows[1].sum == 4);
    CHECK(rep.rows[0].valuation == 1);
    CHECK(rep.rows[1].valuation == 2);
    CHECK(rep.rows[0].closed_form_ok);
    CHECK(rep.rows[1].closed_form_ok);

    // x^2: exact 0, S_N = (p^{2N} - p^N)/2, valuation N
    IntegralReport sq = convergence_report(Poly::monomial(2), 3, 3, 10);
    for (unsigned N = 1; N <= 3; ++N) {
        BigInt pn;
        mpz_ui_pow_ui(pn.get_mpz_t(), 3, N);
        CHECK(sq.rows[N - 1].sum == BigRat(pn * pn - pn) / 2);
        CHECK(sq.rows[N - 1].valuation == static_cast<long>(N));
    }

    // constants converge instantly: every difference is flagged as zero
    IntegralReport ones = convergence_report(Poly::constant(BigRat(1)), 5, 3, 6);
    for (const auto& row : ones.rows) {
        CHECK(row.sum == 1);
        CHECK_FALSE(row.valuation.has_value());
    }

    // valuations are nondecreasing
    IntegralReport mixed = convergence_report(from_ints({2, -3, 0, 1}), 5, 3, 12);
    long last = -1000;
    for (const auto& row : mixed.rows) {
        if (!row.valuation) break;
        CHECK(*row.valuation >= last);
        last = *row.valuation;
    }

    // serialization shape
    nlohmann::json j = nlohmann::json::parse(rep.to_json());
    CHECK(j["p"] == 3);
    CHECK(j["exact"] == "-1/2");
    CHECK(j["integrand"] == nlohmann::json::array({"0", "1"}));
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][0]["N"] == 1);
    CHECK(j["rows"][0]["S_N"] == "1");
    CHECK(j["rows"][0]["valuation"] == 1);
    CHECK(j["rows"][0]["closed_form_ok"] == true);
}
