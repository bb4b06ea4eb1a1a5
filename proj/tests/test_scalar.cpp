#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilcohom/scalar.hpp"

using namespace nilcohom;

namespace {

// deterministic generator for property checks
GaussianRational random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 9);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("parsing the wire grammar") {
    CHECK(parse_scalar("0") == GaussianRational(0));
    CHECK(parse_scalar("-1/2+3i") == GaussianRational(Rational(-1, 2), Rational(3)));
    CHECK(parse_scalar("2/4") == GaussianRational(Rational(1, 2)));
    CHECK(parse_scalar("3i") == GaussianRational(Rational(0), Rational(3)));
    CHECK(parse_scalar("-1i") == GaussianRational(Rational(0), Rational(-1)));
    CHECK(parse_scalar("1/2-2/3i") == GaussianRational(Rational(1, 2), Rational(-2, 3)));
    CHECK(parse_scalar(" 7 ") == GaussianRational(7));
    // leading zeros stay decimal, never octal
    CHECK(parse_scalar("09") == GaussianRational(9));
    CHECK(parse_scalar("077/010") == GaussianRational(Rational(77, 10)));
    CHECK(parse_scalar("000") == GaussianRational(0));

    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("i"), ParseError);      // grammar needs R before i
    CHECK_THROWS_AS(parse_scalar("1+i"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_scalar("2x"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), DivisionByZero);
}

TEST_CASE("canonical form") {
    GaussianRational z = parse_scalar("2/4");
    CHECK(numerator(z.re()) == 1);
    CHECK(denominator(z.re()) == 2);
    GaussianRational w = parse_scalar("-4/6");
    CHECK(numerator(w.re()) == -2);
    CHECK(denominator(w.re()) == 3);  // denominator stays positive
}

TEST_CASE("field operations") {
    GaussianRational one_plus_i(Rational(1), Rational(1));
    GaussianRational one_minus_i(Rational(1), Rational(-1));
    CHECK(one_plus_i * one_minus_i == GaussianRational(2));
    CHECK(GaussianRational::i().inv() == -GaussianRational::i());
    CHECK(GaussianRational(Rational(1, 3)) + GaussianRational(Rational(1, 6)) ==
          GaussianRational(Rational(1, 2)));
    CHECK_THROWS_AS(GaussianRational(0).inv(), DivisionByZero);
    CHECK_THROWS_AS(one_plus_i / GaussianRational(0), DivisionByZero);
}

TEST_CASE("field axioms on 1000 randomized triples") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 1000; ++trial) {
        GaussianRational a = random_scalar(rng);
        GaussianRational b = random_scalar(rng);
        GaussianRational c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a.conj() * b.conj()) == (a * b).conj());
        CHECK(a.conj().conj() == a);
        if (!a.is_zero()) CHECK(a * a.inv() == GaussianRational(1));
    }
}

TEST_CASE("the parser rejects garbage without crashing") {
    std::mt19937 rng(99);
    const std::string alphabet = "0123456789+-/i. e";
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 10);
    int parsed = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        std::string s;
        int l = len(rng);
        for (int i = 0; i < l; ++i) s += alphabet[pick(rng)];
        try {
            GaussianRational z = parse_scalar(s);
            ++parsed;
            CHECK(parse_scalar(format_scalar(z)) == z);
        } catch (const ParseError&) {
        } catch (const DivisionByZero&) {
        }
    }
    CHECK(parsed > 0);  // some random strings are valid scalars
}

TEST_CASE("parse after format is the identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        GaussianRational a = random_scalar(rng);
        CHECK(parse_scalar(format_scalar(a)) == a);
    }
    CHECK(format_scalar(GaussianRational(0)) == "0");
    CHECK(format_scalar(GaussianRational::i()) == "1i");
    CHECK(format_scalar(parse_scalar("-1/2+3i")) == "-1/2+3i");
    CHECK(format_scalar(parse_scalar("1-1i")) == "1-1i");
}
