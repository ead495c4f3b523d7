#include <doctest.h>

#include <random>

#include "umbral/euler.hpp"
#include "umbral/series.hpp"

using namespace umbral;

namespace {

EgfSeries random_series(std::mt19937_64& rng, unsigned trunc, bool invertible = false,
                        bool delta = false) {
    // coefficients from a small rational pool keeps counterexamples readable
    std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
    std::vector<BigRat> c(trunc + 1);
    for (auto& x : c) x = make_rat(num(rng), den(rng));
    if (invertible)
        while (c[0] == 0) c[0] = make_rat(num(rng), den(rng));
    if (delta) {
        c[0] = 0;
        while (c[1] == 0) c[1] = make_rat(num(rng), den(rng));
    }
    return EgfSeries(std::move(c));
}

}  // namespace

TEST_CASE("addition") {
    EgfSeries et = EgfSeries::exp_linear(BigRat(1), 4);
    EgfSeries sum = et + EgfSeries::one(4);
    CHECK(sum.coeff(0) == 2);
    for (unsigned k = 1; k <= 4; ++k) CHECK(sum.coeff(k) == 1);
    CHECK((et + EgfSeries(4)).agrees_with(et));
    // (e^t+1)/2 + (e^t-1)/2 = e^t
    EgfSeries half_minus = et * make_rat(1, 2) - EgfSeries::constant(make_rat(1, 2), 4);
    CHECK((euler_denominator(4) + half_minus).agrees_with(et));
}

TEST_CASE("binomial-convolution product") {
    EgfSeries g = euler_functional(4);
    CHECK((g * g).coeff(2) == make_rat(1, 2));  // two-fold Euler number at n = 2
    std::mt19937_64 rng(3);
    EgfSeries f = random_series(rng, 4);
    CHECK((f * EgfSeries::one(4)).agrees_with(f));
    EgfSeries t = EgfSeries::t_power(1, 4);
    CHECK((t * t).coeff(2) == 2);  // t^2 = 2 * t^2/2!
}

TEST_CASE("multiplicative inverse") {
    EgfSeries inv = euler_denominator(6).inverse();
    CHECK(inv.coeff(0) == 1);
    CHECK(inv.coeff(1) == make_rat(-1, 2));
    CHECK(inv.coeff(2) == 0);
    CHECK(inv.coeff(3) == make_rat(1, 4));
    CHECK(EgfSeries::one(3).inverse().agrees_with(EgfSeries::one(3)));
    EgfSeries emt = EgfSeries::exp_linear(BigRat(1), 5).inverse();
    CHECK(emt.agrees_with(EgfSeries::exp_linear(BigRat(-1), 5)));
    CHECK_THROWS_AS(EgfSeries::t_power(1, 3).inverse(), NotInvertible);
}

TEST_CASE("derivative") {
    CHECK(EgfSeries::t_power(1, 3).derivative().agrees_with(EgfSeries::one(2)));
    EgfSeries gd = euler_denominator(5).derivative();
    for (unsigned k = 0; k <= 4; ++k) CHECK(gd.coeff(k) == make_rat(1, 2));
    EgfSeries ey = EgfSeries::exp_linear(make_rat(2, 3), 5);
    CHECK(ey.derivative().agrees_with(ey * make_rat(2, 3)));
    CHECK_THROWS_AS(EgfSeries::one(0).derivative(), TruncationExhausted);
}

TEST_CASE("composition") {
    std::mt19937_64 rng(11);
    EgfSeries f = random_series(rng, 6);
    CHECK(f.compose(EgfSeries::t_power(1, 6)).agrees_with(f));
    // f = t^2, h = 2t: EGF coefficient of t^2 in 4t^2 is 8
    EgfSeries t2 = EgfSeries::t_power(2, 4);
    EgfSeries two_t = EgfSeries::t_power(1, 4) * BigRat(2);
    CHECK(t2.compose(two_t).coeff(2) == 8);
    CHECK_THROWS_AS(f.compose(EgfSeries::one(6)), CompositionOrderError);
}

TEST_CASE("compositional inverse") {
    EgfSeries t = EgfSeries::t_power(1, 5);
    CHECK(t.comp_inverse().agrees_with(t));
    // e^t - 1 inverts to the log series, EGF coefficients (-1)^{k-1}(k-1)!
    EgfSeries expm1 = EgfSeries::exp_linear(BigRat(1), 6) - EgfSeries::one(6);
    EgfSeries log1p = expm1.comp_inverse();
    BigRat sign(1);
    for (unsigned k = 1; k <= 6; ++k) {
        CHECK(log1p.coeff(k) == sign * BigRat(factorial(k - 1)));
        sign = -sign;
    }
    // composing e^t with that inverse gives 1 + t
    EgfSeries et = EgfSeries::exp_linear(BigRat(1), 6);
    EgfSeries composed = et.compose(log1p);
    CHECK(composed.coeff(0) == 1);
    CHECK(composed.coeff(1) == 1);
    for (unsigned k = 2; k <= 6; ++k) CHECK(composed.coeff(k) == 0);
    CHECK((EgfSeries::t_power(1, 4) * BigRat(2)).comp_inverse().coeff(1) == make_rat(1, 2));
    CHECK_THROWS_AS(EgfSeries::one(3).comp_inverse(), NotDeltaSeries);
    CHECK_THROWS_AS(EgfSeries::t_power(2, 4).comp_inverse(), NotDeltaSeries);
}

TEST_CASE("exp_linear") {
    CHECK(EgfSeries::exp_linear(BigRat(0), 3).agrees_with(EgfSeries::one(3)));
    EgfSeries h = EgfSeries::exp_linear(make_rat(1, 2), 2);
    CHECK(h.coeff(0) == 1);
    CHECK(h.coeff(1) == make_rat(1, 2));
    CHECK(h.coeff(2) == make_rat(1, 4));
}

TEST_CASE("ring and inversion properties on random series") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 25; ++i) {
        EgfSeries f = random_series(rng, 8);
        EgfSeries g = random_series(rng, 8);
        EgfSeries h = random_series(rng, 8);
        CHECK((f * g).agrees_with(g * f));
        CHECK(((f * g) * h).agrees_with(f * (g * h)));
        // Leibniz
        CHECK((f * g).derivative().agrees_with(f.derivative() * g.truncate(7) +
                                               f.truncate(7) * g.derivative()));
        EgfSeries inv_able = random_series(rng, 8, /*invertible=*/true);
        CHECK((inv_able * inv_able.inverse()).agrees_with(EgfSeries::one(8)));
        EgfSeries delta = random_series(rng, 8, false, /*delta=*/true);
        EgfSeries bar = delta.comp_inverse();
        CHECK(delta.compose(bar).agrees_with(EgfSeries::t_power(1, 8)));
        CHECK(bar.comp_inverse().agrees_with(delta));
    }
    std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
    for (int i = 0; i < 10; ++i) {
        BigRat a = make_rat(num(rng), den(rng));
        BigRat b = make_rat(num(rng), den(rng));
        CHECK((EgfSeries::exp_linear(a, 6) * EgfSeries::exp_linear(b, 6))
                  .agrees_with(EgfSeries::exp_linear(a + b, 6)));
    }
}

TEST_CASE("truncation propagates as the minimum") {
    EgfSeries f = EgfSeries::one(8);
    EgfSeries g = EgfSeries::one(3);
    CHECK((f * g).trunc() == 3);
    CHECK((f + g).trunc() == 3);
    CHECK(f.compose(EgfSeries::t_power(1, 5)).trunc() == 5);
    CHECK_THROWS_AS(g.truncate(4), TruncationExhausted);
}
