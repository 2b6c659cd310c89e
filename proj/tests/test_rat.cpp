#include "doctest.h"

#include <random>

#include "slq/error.hpp"
#include "slq/rat.hpp"

using namespace slq;

TEST_CASE("rat arithmetic is exact and normalized") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(-4, 9).str() == "-4/9");
    CHECK(Rat(7).str() == "7");
    CHECK(Rat(0).str() == "0");
    CHECK(Rat(5, 9).denominator() == 9);
    CHECK(Rat(-4, 9) < Rat(0));
    CHECK(Rat(5, 9) > Rat(1, 2));
}

TEST_CASE("rat parse/render round-trips") {
    for (const char* text : {"0", "1", "-1", "2/3", "-4/9", "1/9", "5/9", "123456789123456789/2"}) {
        Rat q = Rat::parse(text);
        CHECK(Rat::parse(q.str()) == q);
        CHECK(q.str() == text);
    }
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> num(-500, 500);
    std::uniform_int_distribution<long long> den(1, 500);
    for (int i = 0; i < 500; ++i) {
        Rat q(num(rng), den(rng));
        CHECK(Rat::parse(q.str()) == q);
    }
}

TEST_CASE("rat parse rejects malformed input") {
    CHECK_THROWS_AS(Rat::parse("0.5"), Error);
    CHECK_THROWS_AS(Rat::parse("1/0"), Error);
    CHECK_THROWS_AS(Rat::parse("1/-2"), Error);
    CHECK_THROWS_AS(Rat::parse(""), Error);
    CHECK_THROWS_AS(Rat::parse("x"), Error);
}

TEST_CASE("eps sign for all sufficiently small positive eps") {
    CHECK(EpsLinear(Rat(0), Rat(1)).sign() == EpsLinear::Sign::Positive);
    CHECK(EpsLinear(Rat(0), Rat(0)).sign() == EpsLinear::Sign::Zero);
    CHECK(EpsLinear(Rat(1, 6), Rat(1)).sign() == EpsLinear::Sign::Positive);
    CHECK(EpsLinear(Rat(0), Rat(-2)).sign() == EpsLinear::Sign::Negative);
    CHECK(EpsLinear(Rat(-1, 1000), Rat(1000)).sign() == EpsLinear::Sign::Negative);
    CHECK(EpsLinear(Rat(1, 1000), Rat(-1000)).sign() == EpsLinear::Sign::Positive);
}

TEST_CASE("eps linear rendering") {
    CHECK(EpsLinear(Rat(0), Rat(1)).str() == "eps");
    CHECK(EpsLinear(Rat(0), Rat(3)).str() == "3*eps");
    CHECK(EpsLinear(Rat(1, 6), Rat(1)).str() == "1/6 + eps");
    CHECK(EpsLinear(Rat(2, 3), Rat(-5)).str() == "2/3 - 5*eps");
    CHECK(EpsLinear(Rat(0), Rat(0)).str() == "0");
    CHECK(EpsLinear(Rat(-1, 3)).str() == "-1/3");
}
