#include <catch_amalgamated.hpp>
#include <set>

#include "bdiag/embeddings.hpp"

using namespace bdiag;

namespace {
SetPartition sp(const std::string& s) { return parse_set_partition(s); }
}  // namespace

TEST_CASE("the diagram of a set partition") {
    Diagram got = g_pi(sp("{{1,4},{2,3},{5}}"));
    CHECK(got == parse_diagram("B(5; 1,1,1,1,1; 43___; {3,4,5}; {1,2,5})"));
    CHECK(g_pi(SetPartition()) == Diagram::empty());
    // compatible with juxtaposition along the shifted union
    for (int na = 0; na <= 3; ++na)
        for (const auto& a : all_set_partitions(na))
            for (const auto& b : all_set_partitions(3 - na))
                REQUIRE(g_pi(shifted_union(a, b)) == juxtapose(g_pi(a), g_pi(b)));
}

TEST_CASE("the partition embedding is injective and tracks indivisibility") {
    for (int n = 0; n <= 5; ++n) {
        std::set<Diagram> images;
        for (const auto& p : all_set_partitions(n)) {
            Diagram g = g_pi(p);
            REQUIRE(images.insert(g).second);
            REQUIRE(is_indivisible(g) == is_indivisible(p));
        }
    }
    CHECK(is_indivisible(g_pi(sp("{{1,5},{2,4},{3}}"))));
    CHECK(!is_indivisible(g_pi(sp("{{1,4},{2,3},{5}}"))));
}

TEST_CASE("the embedded product matches the monomial product") {
    LinComb<Diagram> lhs = star(g_pi(sp("{{1,3},{2}}")), g_pi(sp("{{1,4},{2,3}}")));
    CHECK(lhs.term_count() == 7);
    LinComb<Diagram> rhs;
    const LinComb<SetPartition> mp = m_product(sp("{{1,3},{2}}"), sp("{{1,4},{2,3}}"));
    for (const auto& [pi, c] : mp.terms()) rhs.add_term(g_pi(pi), c);
    CHECK(lhs == rhs);
}

TEST_CASE("the embedded coproduct matches the monomial coproduct") {
    Tensor2<Diagram> lhs = b_coproduct(g_pi(sp("{{1,3,5,6},{2,4,7}}")));
    CHECK(lhs.term_count() == 4);
    Tensor2<Diagram> rhs;
    const Tensor2<SetPartition> mc = m_coproduct(sp("{{1,3,5,6},{2,4,7}}"));
    for (const auto& [pq, c] : mc.terms()) rhs.add_term({g_pi(pq.first), g_pi(pq.second)}, c);
    CHECK(lhs == rhs);
}

TEST_CASE("the embedding verifier passes on small sizes") {
    auto report = verify_wsym_embedding(4);
    INFO(report.failure);
    CHECK(report.ok);
}

TEST_CASE("eta ranks connected diagrams by canonical key") {
    GeneratorSet dd({elementary(1, {1}, {1}), elementary(2, {1, 2}, {1, 2})});
    EtaRanking eta(dd);
    CHECK(eta.connected_count(1) == 2);
    CHECK(eta.connected_count(2) == 11);  // stated alongside the example
    // ranks are a bijection onto 1..c_n
    std::set<int> seen;
    for (int r = 1; r <= 11; ++r) {
        const Diagram& g = eta.diagram_at(2, r);
        CHECK(eta.rank(g) == r);
        seen.insert(r);
    }
    CHECK(seen.size() == 11);
    CHECK_THROWS_AS(eta.rank(parse_diagram("B(2; 1,1; __; {1,2}; {1,2})")),
                    std::invalid_argument);  // not connected
    EtaRanking w_eta(preset_w());
    for (int n = 1; n <= 4; ++n) CHECK(w_eta.connected_count(n) == 1);
}

TEST_CASE("colset colors components by their rank") {
    GeneratorSet dd({elementary(1, {1}, {1}), elementary(2, {1, 2}, {1, 2})});
    EtaRanking eta(dd);
    Diagram pair = parse_diagram("B(2; 2,2; 43__; {3,4}; {1,2})");
    Diagram single = parse_diagram("B(1; 2; __; {1,2}; {1,2})");
    ColoredPartition single_cs = colset(single, eta);
    REQUIRE(single_cs.block_count() == 1);
    CHECK(single_cs.blocks()[0].first == std::vector<int>{1});
    ColoredPartition pair_cs = colset(pair, eta);
    REQUIRE(pair_cs.block_count() == 1);
    Diagram juxt = juxtapose(pair, single);
    ColoredPartition got = colset(juxt, eta);
    std::vector<ColoredPartition::Block> expected_blocks{
        {{1, 2}, pair_cs.blocks()[0].second}, {{3}, single_cs.blocks()[0].second}};
    CHECK(got == ColoredPartition(std::move(expected_blocks)));
    CHECK(colset(Diagram::empty(), eta) == ColoredPartition());
    // a diagram outside the alphabet is rejected
    CHECK_THROWS_AS(colset(parse_diagram("B(1; 3; ___; {1,2,3}; {1})"), eta),
                    std::invalid_argument);
}

TEST_CASE("colset intertwines vertex shuffles with block relabeling") {
    GeneratorSet dd({elementary(1, {1}, {1}), elementary(2, {1, 2}, {1, 2})});
    EtaRanking eta(dd);
    Diagram pair = parse_diagram("B(2; 2,2; 43__; {3,4}; {1,2})");
    Diagram single = parse_diagram("B(1; 2; __; {1,2}; {1,2})");
    Diagram juxt = juxtapose(pair, single);
    for (const auto& sigma : shuffle_permutations(2, 1)) {
        Diagram moved = permute(juxt, sigma);
        ColoredPartition cs = colset(moved, eta);
        // blocks move with the inverse shuffle, colors are unchanged
        Permutation inv = inverse(sigma);
        ColoredPartition base = colset(juxt, eta);
        std::vector<ColoredPartition::Block> blocks;
        for (const auto& [block, color] : base.blocks()) {
            std::vector<int> moved_block;
            for (int v : block) moved_block.push_back(inv[v - 1]);
            std::sort(moved_block.begin(), moved_block.end());
            blocks.emplace_back(std::move(moved_block), color);
        }
        CHECK(cs == ColoredPartition(std::move(blocks)));
    }
}

TEST_CASE("the chi morphism verifier on the two-generator example") {
    GeneratorSet dd({elementary(1, {1}, {1}), elementary(2, {1, 2}, {1, 2})});
    auto report = verify_chi_morphism(dd, 3);
    INFO(report.failure);
    CHECK(report.ok);
}

TEST_CASE("the chi morphism collapses to one color on the single-letter alphabet") {
    EtaRanking eta(preset_w());
    auto levels = generate_levels(preset_w(), GenerateBy::size, 4);
    for (const auto& g : levels[4]) {
        ColoredPartition cs = colset(g, eta);
        for (const auto& [block, color] : cs.blocks()) CHECK(color == 1);
    }
    auto report = verify_chi_morphism(preset_w(), 4);
    INFO(report.failure);
    CHECK(report.ok);
}
