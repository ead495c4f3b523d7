#include <doctest.h>

#include <random>

#include "umbral/euler.hpp"
#include "umbral/serialize.hpp"

using namespace umbral;

TEST_CASE("polynomial literals") {
    Poly p = poly_from_json(R"(["1/4","0","-3/2","1"])");
    CHECK(p == Poly({make_rat(1, 4), BigRat(0), make_rat(-3, 2), BigRat(1)}));
    CHECK(poly_to_json(p) == R"(["1/4","0","-3/2","1"])");
    CHECK(poly_from_json("[]").is_zero());
    CHECK_THROWS_AS(poly_from_json(R"({"not":"array"})"), ParseError);
    CHECK_THROWS_AS(poly_from_json(R"([1,2])"), ParseError);
    CHECK_THROWS_AS(poly_from_json("not json"), ParseError);
}

TEST_CASE("series literals") {
    EgfSeries f = series_from_json(R"({"coeffs":["1","-1/2","0","1/4"],"trunc":3})");
    CHECK(f.agrees_with(euler_functional(3)));
    CHECK(f.trunc() == 3);
    CHECK_THROWS_AS(series_from_json(R"({"coeffs":["1","2"],"trunc":5})"), ParseError);
    CHECK_THROWS_AS(series_from_json(R"(["1","2"])"), ParseError);
    // round trip on random series
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int i = 0; i < 20; ++i) {
        std::vector<BigRat> c(8);
        for (auto& x : c) x = make_rat(num(rng), den(rng));
        EgfSeries g(std::move(c));
        CHECK(series_from_json(series_to_json(g)) == g);
    }
}
