#include <doctest.h>

#include <random>

#include "umbral/poly.hpp"

using namespace umbral;

namespace {

Poly from_ints(std::initializer_list<long> cs) {
    std::vector<BigRat> v;
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

Poly random_poly(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    std::vector<BigRat> c(deg + 1);
    for (auto& x : c) x = make_rat(num(rng), den(rng));
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("rational serialization round trip") {
    CHECK(rat_to_string(make_rat(-1, 2)) == "-1/2");
    CHECK(rat_to_string(make_rat(3, 1)) == "3");
    CHECK(rat_from_string("-1/2") == make_rat(-1, 2));
    CHECK(rat_from_string("6/4") == make_rat(3, 2));
    CHECK_THROWS_AS(rat_from_string("abc"), ParseError);
    CHECK_THROWS_AS(rat_from_string(""), ParseError);
    CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
}

TEST_CASE("evaluation") {
    Poly p = from_ints({0, -1, 1});  // x^2 - x
    CHECK(p.eval(BigRat(1)) == 0);
    CHECK(p.eval(BigRat(0)) == 0);
    CHECK(from_ints({7, 3}).eval(BigRat(0)) == 7);
    CHECK(Poly::monomial(3).eval(BigRat(2)) == 8);
}

TEST_CASE("derivative") {
    CHECK(Poly::monomial(3).derivative() == from_ints({0, 0, 3}));
    CHECK(Poly::monomial(5).derivative(5) == Poly::constant(BigRat(factorial(5))));
    CHECK(Poly::constant(BigRat(4)).derivative().is_zero());
    CHECK(Poly::monomial(2).derivative(3).is_zero());
}

TEST_CASE("shift") {
    CHECK(Poly::monomial(2).shift(BigRat(1)) == from_ints({1, 2, 1}));
    // x - 1/2 shifted by 1 is x + 1/2
    Poly e1({make_rat(-1, 2), BigRat(1)});
    CHECK(e1.shift(BigRat(1)) == Poly({make_rat(1, 2), BigRat(1)}));
    Poly p = from_ints({3, -2, 0, 5});
    CHECK(p.shift(BigRat(0)) == p);
}

TEST_CASE("mul_x") {
    CHECK(Poly::constant(BigRat(1)).mul_x() == Poly::monomial(1));
    CHECK(from_ints({0, -1, 1}).mul_x() == from_ints({0, 0, -1, 1}));
    CHECK(Poly::zero().mul_x().is_zero());
}

TEST_CASE("canonical form") {
    CHECK(Poly({BigRat(1), BigRat(0), BigRat(0)}).degree() == 0);
    CHECK(Poly({BigRat(0)}).is_zero());
    CHECK(Poly::zero().degree() == Poly::kNegInfDegree);
    CHECK((from_ints({1, 2}) - from_ints({1, 2})).is_zero());
}

TEST_CASE("shift composition and commutation properties") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        Poly p = random_poly(rng, 6);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        BigRat a = make_rat(num(rng), den(rng));
        BigRat b = make_rat(num(rng), den(rng));
        CHECK(p.shift(a).shift(b) == p.shift(a + b));
        CHECK(p.shift(a).derivative() == p.derivative().shift(a));
        CHECK(p.shift(a).eval(BigRat(0)) == p.eval(a));
    }
}

TEST_CASE("results stay in lowest terms") {
    Poly p({make_rat(2, 4), make_rat(6, 9)});
    BigRat v = p.eval(make_rat(3, 2));
    mpq_class copy = v;
    copy.canonicalize();
    CHECK(v == copy);
    CHECK(rat_to_string(p.coeff(0)) == "1/2");
    CHECK(rat_to_string(p.coeff(1)) == "2/3");
}
