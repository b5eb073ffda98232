#include <catch_amalgamated.hpp>
#include <random>

#include "bdiag/lincomb.hpp"
#include "bdiag/rational.hpp"

using namespace bdiag;

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a(Integer(2), Integer(4));
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);
    CHECK(a.str() == "1/2");
    Rational b(Integer(-3), Integer(-6));
    CHECK(b == a);
    CHECK(Rational(Integer(3), Integer(-6)).str() == "-1/2");
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::invalid_argument);
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
    CHECK(Rational::parse("7/21") == Rational(Integer(1), Integer(3)));
    CHECK(Rational::parse("-5").str() == "-5");
}

TEST_CASE("field laws on random rationals") {
    std::mt19937_64 rng(42);
    auto rand_q = [&] {
        long num = static_cast<long>(rng() % 2001) - 1000;
        long den = static_cast<long>(rng() % 1000) + 1;
        return Rational(Integer(num), Integer(den));
    };
    for (int i = 0; i < 200; ++i) {
        Rational a = rand_q(), b = rand_q(), c = rand_q();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!c.is_zero()) CHECK((a * c) / c == a);
    }
}

TEST_CASE("linear combinations normalize away zeros") {
    LinComb<int> x;
    x.add_term(3, Rational(2));
    x.add_term(3, Rational(-2));
    CHECK(x.is_zero());
    x.add_term(1, Rational(1));
    x.add_term(2, Rational(Integer(1), Integer(2)));
    LinComb<int> y = x + x;
    CHECK(y.coefficient(2) == Rational(1));
    y -= x;
    CHECK(y == x);
    CHECK(pairing(x, x) == Rational(1) + Rational(Integer(1), Integer(4)));
}

TEST_CASE("pairing is bilinear") {
    LinComb<int> u = LinComb<int>::unit(1, 2);
    u.add_term(2, Rational(3));
    LinComb<int> v = LinComb<int>::unit(2, 5);
    v.add_term(7, Rational(1));
    LinComb<int> w = LinComb<int>::unit(1, 11);
    CHECK(pairing(u, v + w) == pairing(u, v) + pairing(u, w));
    CHECK(pairing(Rational(4) * u, v) == Rational(4) * pairing(u, v));
    CHECK(pairing(u, v) == Rational(15));
}
