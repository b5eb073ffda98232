#include <catch_amalgamated.hpp>

#include "bdiag/heisenberg.hpp"

using namespace bdiag;

TEST_CASE("the rewriting rule itself") {
    NormalForm got = normal_order(parse_boson_word("-+"));
    NormalForm expected{{{1, 1}, 1}, {{0, 0}, 1}};  // a a+ = a+ a + 1
    CHECK(got == expected);
    CHECK(normal_order(parse_boson_word("+-")) == NormalForm{{{1, 1}, 1}});
    CHECK(normal_order({}) == NormalForm{{{0, 0}, 1}});
}

TEST_CASE("the square of the number operator") {
    // one rewriting step: (a+ a)^2 = a+ a + (a+)^2 a^2
    NormalForm got = normal_order(number_operator_power(2));
    NormalForm expected{{{1, 1}, 1}, {{2, 2}, 1}};
    CHECK(got == expected);
}

TEST_CASE("number-operator powers expand with Stirling coefficients") {
    for (int n = 1; n <= 8; ++n) {
        NormalForm got = normal_order(number_operator_power(n));
        NormalForm expected;
        for (int k = 1; k <= n; ++k) expected[{k, k}] = stirling2(n, k);
        REQUIRE(got == expected);
    }
}

TEST_CASE("rewriting is confluent under randomized schedules") {
    std::mt19937_64 rng(20240915);
    for (int trial = 0; trial < 40; ++trial) {
        int len = 1 + static_cast<int>(rng() % 10);
        BosonWord w;
        for (int i = 0; i < len; ++i)
            w.push_back(rng() % 2 ? Boson::create : Boson::annihilate);
        NormalForm reference = normal_order(w);
        for (std::uint64_t seed : {1ull, 2ull, 3ull})
            REQUIRE(normal_order_randomized(w, seed) == reference);
    }
}

TEST_CASE("normal ordering is linear and preserves the particle balance") {
    BosonWord w = parse_boson_word("-+-+");
    NormalForm nf = normal_order(w);
    for (const auto& [km, c] : nf) CHECK(km.first - km.second == 0);  // balanced word
    BosonWord u = parse_boson_word("-++");
    for (const auto& [km, c] : normal_order(u)) CHECK(km.first - km.second == 1);
    // linearity: ordering a sum matches the sum of orderings
    std::map<BosonWord, Integer> sum{{w, 2}, {u, -1}};
    NormalForm combined = normal_order_sum(sum);
    NormalForm manual;
    for (const auto& [km, c] : normal_order(w)) manual[km] += 2 * c;
    for (const auto& [km, c] : normal_order(u)) manual[km] -= c;
    for (auto it = manual.begin(); it != manual.end();)
        it = it->second == 0 ? manual.erase(it) : std::next(it);
    CHECK(combined == manual);
}

TEST_CASE("classical sequences") {
    CHECK(stirling2(0, 0) == 1);
    for (int n = 1; n <= 8; ++n) {
        CHECK(stirling2(n, 1) == 1);
        CHECK(stirling2(n, n) == 1);
    }
    std::vector<long> bells{1, 1, 2, 5, 15, 52};
    for (int n = 0; n <= 5; ++n) CHECK(bell(n) == Integer(bells[n]));
    CHECK(lah(3, 2) == 6);
    CHECK(lah_total(3) == 13);
    std::vector<long> lahs{1, 1, 3, 13, 73, 501, 4051};
    for (int n = 0; n <= 6; ++n) CHECK(lah_total(n) == Integer(lahs[n]));
    std::vector<long> fib{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (int n = 0; n <= 10; ++n) CHECK(fibonacci(n) == Integer(fib[n]));
}

TEST_CASE("word parsing accepts both letterings") {
    CHECK(parse_boson_word("c a") == parse_boson_word("+-"));
    CHECK_THROWS_AS(parse_boson_word("+x"), std::invalid_argument);
    CHECK(to_text(parse_boson_word("ca")) == "+-");
}

TEST_CASE("normal forms print deterministically") {
    CHECK(to_text(normal_order(parse_boson_word("-+"))) == "1 + (a+)^1*a^1");
    CHECK(to_text(NormalForm{}) == "0");
    CHECK(to_text(normal_order(number_operator_power(2))) == "(a+)^1*a^1 + (a+)^2*a^2");
}
