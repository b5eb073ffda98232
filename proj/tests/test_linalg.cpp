#include <catch_amalgamated.hpp>

#include "bdiag/enumeration.hpp"
#include "bdiag/hopf.hpp"
#include "bdiag/hopf_b.hpp"
#include "bdiag/partition_algebras.hpp"

using namespace bdiag;

namespace {

BialgebraOps<Diagram> b_ops() {
    BialgebraOps<Diagram> ops;
    ops.product = [](const Diagram& a, const Diagram& b) { return star(a, b); };
    ops.coproduct = [](const Diagram& g) { return b_coproduct(g); };
    ops.unit = Diagram::empty();
    ops.grade = [](const Diagram& g) { return g.omega(); };
    ops.show = [](const Diagram& g) { return to_text(g); };
    return ops;
}

std::vector<Diagram> full_weight_pool(int max_weight) {
    std::vector<Diagram> pool;
    auto levels = generate_levels(full_alphabet(max_weight), GenerateBy::weight, max_weight);
    for (auto& level : levels)
        for (auto& g : level) pool.push_back(std::move(g));
    return pool;
}

}  // namespace

TEST_CASE("delta pairing on diagram bases") {
    Diagram g = parse_diagram("B(2; 1,1; 2_; {2}; {1})");
    Diagram h = parse_diagram("B(2; 1,1; __; {1,2}; {1,2})");
    auto dg = LinComb<Diagram>::unit(g);
    auto dh = LinComb<Diagram>::unit(h);
    CHECK(pairing(dg, dg) == Rational(1));
    CHECK(pairing(dg, dh) == Rational(0));
}

TEST_CASE("pairing a dual tensor against a coproduct counts splits") {
    // <D_{G1} (x) D_{G2}, Delta(G')> is the number of splits of G' inducing
    // the pair; brute forced over the splits themselves as the oracle.
    Diagram g1 = parse_diagram("B(1; 1; _; {1}; {1})");
    Diagram gp = parse_diagram("B(3; 1,1,1; _3_; {1,3}; {1,2})");  // g1 | edge
    Tensor2<Diagram> d = b_coproduct(gp);
    long expect = 0;
    for (const auto& [I, J] : iso_split(gp))
        if (sub_diagram(gp, I) == g1) ++expect;
    Tensor2<Diagram> probe;
    for (const auto& [p, c] : d.terms())
        if (p.first == g1) probe.add_term(p, c);
    CHECK(probe.mass() == Rational(expect));
}

TEST_CASE("bialgebra laws hold for the diagram algebra on small weights") {
    auto pool = full_weight_pool(2);
    auto report = check_bialgebra(b_ops(), pool);
    INFO(report.failure);
    CHECK(report.ok);
}

TEST_CASE("bialgebra laws hold for the word symmetric algebra on small sizes") {
    std::vector<SetPartition> samples;
    for (int n = 0; n <= 3; ++n)
        for (auto& p : all_set_partitions(n)) samples.push_back(std::move(p));
    auto phi = phi_bialgebra_ops<SetPartition>([](const SetPartition& p) { return to_text(p); });
    auto report = check_bialgebra(phi, samples);
    INFO(report.failure);
    CHECK(report.ok);
    auto m_report = check_bialgebra(m_bialgebra_ops(), samples);
    INFO(m_report.failure);
    CHECK(m_report.ok);
}

TEST_CASE("a corrupted product table is reported with a counterexample") {
    auto ops = b_ops();
    ops.product = [](const Diagram& a, const Diagram& b) {
        LinComb<Diagram> r = star(a, b);
        if (a.omega() == 1 && b.omega() == 1) {
            // drop one term: no longer compatible with the coproduct
            LinComb<Diagram> broken;
            bool skipped = false;
            for (const auto& [t, c] : r.terms()) {
                if (!skipped && t.tau() == 1) {
                    skipped = true;
                    continue;
                }
                broken.add_term(t, c);
            }
            return broken;
        }
        return r;
    };
    auto pool = full_weight_pool(1);
    auto report = check_bialgebra(ops, pool);
    CHECK(!report.ok);
    CHECK(!report.failure.empty());
}

TEST_CASE("antipode fixes the unit and negates primitives") {
    auto ops = b_ops();
    Antipode<Diagram> S(ops);
    CHECK(S.of_basis(Diagram::empty()) == LinComb<Diagram>::unit(Diagram::empty()));
    // connected diagrams are primitive, so S(p) = -p
    Diagram chain = parse_diagram("B(2; 1,1; 2_; {2}; {1})");
    LinComb<Diagram> expected;
    expected.add_term(chain, -1);
    CHECK(S.of_basis(chain) == expected);
}

TEST_CASE("antipode axiom replays on all diagrams of weight up to two") {
    auto ops = b_ops();
    auto pool = full_weight_pool(2);
    auto report = check_antipode(ops, pool);
    INFO(report.failure);
    CHECK(report.ok);
}

TEST_CASE("antipode requires a connected grade-zero component") {
    BialgebraOps<int> ops;
    ops.product = [](int, int) { return LinComb<int>::unit(0); };
    ops.coproduct = [](int x) {
        Tensor2<int> d;
        d.add_term({x, 0}, 1);
        d.add_term({0, x}, 1);
        if (x == 2) d.add_term({1, 1}, 1);  // grade-0 element distinct from the unit
        return d;
    };
    ops.unit = 0;
    ops.grade = [](int x) { return x == 0 || x == 1 ? 0 : 1; };
    ops.show = [](int x) { return std::to_string(x); };
    Antipode<int> S(ops);
    CHECK_THROWS_AS(S.of_basis(2), std::runtime_error);
}
