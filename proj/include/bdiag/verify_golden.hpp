#pragma once

// Replays of the worked examples, runnable from the command line. Expected
// values are frozen here; the unit suites cross-check most of them against
// independent routes as well.

#include "bdiag/verify.hpp"

namespace bdiag {

namespace golden {

inline CheckReport structural_examples() {
    if (block_num({4, 2, 1, 5, 2}, 7) != std::pair{3, 1}) return CheckReport::fail("block/num");
    if (block_num({3, 2, 2, 1}, 8) != std::pair{4, 1}) return CheckReport::fail("block/num");
    DiagramTuple fig1{4, {3, 2, 2, 1}, {7, 4, 8, 6, 0, 0, 0, 0}, {5, 6}, {1, 2, 3, 5}};
    if (validate(fig1).kind != DiagramKind::b_diagram) return CheckReport::fail("classify");
    DiagramTuple permuted{4, {2, 2, 3, 1}, {3, 0, 0, 0, 4, 1, 8, 0}, {2, 3}, {2, 5, 6, 7}};
    if (validate(permuted).kind != DiagramKind::f_diagram)
        return CheckReport::fail("the permuted tuple must be an F-diagram");
    Diagram g = Diagram(fig1);
    if (!(sub_diagram(g, {1, 3}) == parse_diagram("B(2; 3,2; 5____; {2,3,4}; {1,2,3,4})")))
        return CheckReport::fail("sub-diagram on vertices 1,3");
    if (!(permute(g, {2, 3, 1, 4}) == Diagram(permuted)))
        return CheckReport::fail("permutation by the 3-cycle");
    Diagram gg = parse_diagram("B(3; 3,1,2; 64_5__; {3,5}; {1,2,3})");
    Diagram gp = parse_diagram("B(1; 2; __; {1,2}; {1})");
    if (!(permute(juxtapose(gg, gp), {1, 4, 2, 3}) ==
          parse_diagram("B(4; 3,2,1,2; 86___7__; {3,4,5,7}; {1,2,3,4})")))
        return CheckReport::fail("shuffled juxtaposition");
    auto comps = connected_components(juxtapose(gg, gp));
    if (comps != std::vector<VertexSequence>{{1, 2, 3}, {4}})
        return CheckReport::fail("components of the non-connected example");
    return CheckReport::pass();
}

inline CheckReport star_product_example() {
    Diagram a = parse_diagram("B(1; 1; _; {1}; {1})");
    Diagram b = parse_diagram("B(3; 2,1,1; 4___; {4}; {1,2})");
    LinComb<Diagram> expected;
    expected.add_term(parse_diagram("B(4; 1,2,1,1; _5___; {1,5}; {1,2,3})"), 1);
    expected.add_term(parse_diagram("B(4; 1,2,1,1; 25___; {5}; {1,3})"), 1);
    expected.add_term(parse_diagram("B(4; 1,2,1,1; 35___; {5}; {1,2})"), 1);
    if (!(star(a, b) == expected)) return CheckReport::fail("three-term star product");
    auto c = compose(parse_diagram("B(1; 1; _; {1}; {1})"), parse_diagram("B(1; 1; _; {1}; {1})"),
                     {{1}, {1}});
    if (!c || !(*c == parse_diagram("B(2; 1,1; 2_; {2}; {1})")))
        return CheckReport::fail("one-edge composition");
    return CheckReport::pass();
}

inline CheckReport order_closure_example() {
    Diagram f1 = parse_diagram("B(1; 1; _; {1}; {1})");
    Diagram f2 = parse_diagram("B(3; 2,1,1; 4___; {2}; {1,2})");
    Diagram f3 = parse_diagram("B(1; 2; __; {1,2}; {1})");
    std::set<Diagram> expected{
        parse_diagram("B(5; 1,2,1,1,2; _5_____; {1,3,6,7}; {1,2,3,6})"),
        parse_diagram("B(5; 1,2,1,1,2; 65_____; {3,6,7}; {1,2,3})"),
        parse_diagram("B(5; 1,2,1,1,2; _56____; {1,6,7}; {1,2,3})"),
        parse_diagram("B(5; 1,2,1,1,2; 25_____; {3,6,7}; {1,3,6})"),
        parse_diagram("B(5; 1,2,1,1,2; 35_____; {3,6,7}; {1,2,6})"),
        parse_diagram("B(5; 1,2,1,1,2; 256____; {6,7}; {1,3})"),
        parse_diagram("B(5; 1,2,1,1,2; 356____; {6,7}; {1,2})"),
    };
    if (!(medstar_closure({f1, f2, f3}) == expected))
        return CheckReport::fail("seven-element order closure");
    BasisConverter conv;
    LinComb<Diagram> phi = conv.phi_to_diagram(juxtapose(juxtapose(f1, f2), f3));
    if (phi.term_count() != 7) return CheckReport::fail("phi expansion size");
    for (const auto& [t, c] : phi.terms())
        if (c != Rational(1)) return CheckReport::fail("phi coefficients");
    return CheckReport::pass();
}

inline CheckReport phi_coproduct_example() {
    // Delta Phi^{G1|G2} = Delta Phi^{G1} star Delta Phi^{G2}, and the split
    // form, on the worked pair.
    BasisConverter conv;
    Diagram g1 = parse_diagram("B(1; 1; _; {1}; {1})");
    Diagram g2 = parse_diagram("B(3; 2,1,1; 4___; {2}; {1,2})");
    Diagram j = juxtapose(g1, g2);
    auto delta_phi = [&](const Diagram& g) {
        return extend_linear(conv.phi_to_diagram(g),
                             [](const Diagram& d) { return b_coproduct(d); });
    };
    Tensor2<Diagram> lhs = delta_phi(j);
    Tensor2<Diagram> rhs = tensor_product(delta_phi(g1), delta_phi(g2),
                                          [](const Diagram& a, const Diagram& b) {
                                              return star(a, b);
                                          });
    if (!(lhs == rhs)) return CheckReport::fail("coproduct multiplicativity");
    Tensor2<Diagram> split_form;
    for (const auto& [I, J] : iso_split(j))
        split_form += tensor(conv.phi_to_diagram(sub_diagram(j, I)),
                             conv.phi_to_diagram(sub_diagram(j, J)));
    if (!(lhs == split_form)) return CheckReport::fail("coproduct split form");
    if (iso_split(j).size() != 8) return CheckReport::fail("eight terms in the split basis");
    return CheckReport::pass();
}

inline CheckReport dual_structure_examples() {
    Diagram g1 = parse_diagram("B(1; 1; _; {1}; {1})");
    Diagram g2 = parse_diagram("B(2; 1,1; __; {1,2}; {1,2})");
    Diagram g3 = parse_diagram("B(2; 1,1; 2_; {2}; {1})");
    LinComb<Diagram> two_g2;
    two_g2.add_term(g2, 2);
    if (!(dual_product(g1, g1) == two_g2)) return CheckReport::fail("cup square");
    if (!(dual_product(Diagram::empty(), g3) == LinComb<Diagram>::unit(g3)))
        return CheckReport::fail("cup unit");
    Tensor2<Diagram> expected;
    expected.add_term({g3, Diagram::empty()}, 1);
    expected.add_term({g1, g1}, 1);
    expected.add_term({Diagram::empty(), g3}, 1);
    if (!(dual_coproduct(g3) == expected)) return CheckReport::fail("dual coproduct of the edge");
    // psi products
    BasisConverter conv;
    LinComb<Diagram> got = psi_product(g1, g1, conv);
    if (!(got == two_g2)) return CheckReport::fail("psi square");
    LinComb<Diagram> three;
    three.add_term(parse_diagram("B(3; 1,1,1; ___; {1,2,3}; {1,2,3})"), 3);
    if (!(psi_product(g1, g2, conv) == three)) return CheckReport::fail("psi of mixed grades");
    LinComb<Diagram> sum3;
    sum3.add_term(juxtapose(g1, g3), 1);
    sum3.add_term(juxtapose(g3, g1), 1);
    sum3.add_term(parse_diagram("B(3; 1,1,1; 3__; {2,3}; {1,2})"), 1);
    if (!(psi_product(g1, g3, conv) == sum3)) return CheckReport::fail("psi of the edge pair");
    Tensor2<Diagram> prim;
    prim.add_term({g3, Diagram::empty()}, 1);
    prim.add_term({Diagram::empty(), g3}, 1);
    if (!(psi_coproduct_direct(g3) == prim)) return CheckReport::fail("psi primitivity");
    return CheckReport::pass();
}

inline CheckReport wsym_examples() {
    SetPartition a = parse_set_partition("{{1,3},{2}}");
    SetPartition b = parse_set_partition("{{1,4},{2,3}}");
    LinComb<SetPartition> expected;
    for (const char* s :
         {"{{1,3},{2},{4,7},{5,6}}", "{{1,3,4,7},{2},{5,6}}", "{{1,3},{2,4,7},{5,6}}",
          "{{1,3,5,6},{2},{4,7}}", "{{1,3},{2,5,6},{4,7}}", "{{1,3,4,7},{2,5,6}}",
          "{{1,3,5,6},{2,4,7}}"})
        expected.add_term(parse_set_partition(s), 1);
    if (!(m_product(a, b) == expected)) return CheckReport::fail("seven-term monomial product");
    Tensor2<SetPartition> dm = m_coproduct(parse_set_partition("{{1,3,5,6},{2,4,7}}"));
    Tensor2<SetPartition> dm_expected;
    dm_expected.add_term({parse_set_partition("{{1,3,5,6},{2,4,7}}"), SetPartition()}, 1);
    dm_expected.add_term(
        {parse_set_partition("{{1,2,3,4}}"), parse_set_partition("{{1,2,3}}")}, 1);
    dm_expected.add_term(
        {parse_set_partition("{{1,2,3}}"), parse_set_partition("{{1,2,3,4}}")}, 1);
    dm_expected.add_term({SetPartition(), parse_set_partition("{{1,3,5,6},{2,4,7}}")}, 1);
    if (!(dm == dm_expected)) return CheckReport::fail("monomial coproduct");
    // shifted-union factorization display
    SetPartition chain = shifted_union(
        shifted_union(parse_set_partition("{{1}}"), parse_set_partition("{{1,3},{2,4}}")),
        parse_set_partition("{{1,2}}"));
    if (!(chain == parse_set_partition("{{1},{2,4},{3,5},{6,7}}")))
        return CheckReport::fail("shifted union chain");
    // the block-subset coproduct with its coefficient 2
    Tensor2<SetPartition> d = phi_coproduct(parse_set_partition("{{1,3},{2,5},{4,6}}"));
    if (d.coefficient({parse_set_partition("{{1,2}}"), parse_set_partition("{{1,3},{2,4}}")}) !=
        Rational(2))
        return CheckReport::fail("coefficient two in the block coproduct");
    if (d.mass() != Rational(8)) return CheckReport::fail("block coproduct mass");
    return CheckReport::pass();
}

inline CheckReport even_example() {
    SetPartition p1 = parse_set_partition("{{1,2},{3,5},{4,6}}");
    SetPartition p2 = parse_set_partition("{{1,2}}");
    LinComb<SetPartition> prod = psi_interleave_product(p1, p2);
    const std::vector<std::pair<const char*, int>> printed = {
        {"{{1,2},{3,5},{4,6},{7,8}}", 1}, {"{{1,2},{3,4},{5,7},{6,8}}", 2},
        {"{{1,3},{2,4},{5,7},{6,8}}", 2}, {"{{1,4},{2,3},{5,7},{6,8}}", 2},
        {"{{1,2},{3,5},{4,7},{6,8}}", 2}, {"{{1,2},{3,6},{4,7},{5,8}}", 3},
        {"{{1,2},{3,6},{5,7},{4,8}}", 2}, {"{{1,2},{4,6},{5,7},{3,8}}", 1},
        {"{{1,2},{3,5},{4,8},{6,7}}", 1}, {"{{1,2},{4,6},{5,8},{3,7}}", 2},
        {"{{1,2},{3,7},{4,8},{5,6}}", 1}, {"{{1,2},{3,7},{6,8},{4,5}}", 1},
    };
    for (const auto& [s, c] : printed)
        if (prod.coefficient(parse_set_partition(s)) != Rational(c))
            return CheckReport::fail(std::string("coefficient differs at ") + s);
    // every coefficient is the block-subset count and the mass is binomial
    for (const auto& [cand, c] : prod.terms())
        if (c != Rational(alpha_coefficient(cand, p1, p2)))
            return CheckReport::fail("alpha mismatch at " + to_text(cand));
    if (prod.mass() != Rational(binomial(8, 6))) return CheckReport::fail("total multiplicity");
    return CheckReport::pass();
}

inline CheckReport colored_examples() {
    ColorBounds bounds({1, 3, 1, 1, 1});
    ColoredPartition u1 = parse_colored_partition("{[{1,2},3]}");
    ColoredPartition u2 = parse_colored_partition("{[{1},1],[{2,3},2]}");
    LinComb<ColoredPartition> first = cpiqsym_product(u1, u2, bounds);
    LinComb<ColoredPartition> expected;
    for (const char* s :
         {"{[{1,2},3],[{3},1],[{4,5},2]}", "{[{1,3},3],[{2},1],[{4,5},2]}",
          "{[{1,4},3],[{2},1],[{3,5},2]}", "{[{1,5},3],[{2},1],[{3,4},2]}",
          "{[{2,3},3],[{1},1],[{4,5},2]}", "{[{2,4},3],[{1},1],[{3,5},2]}",
          "{[{2,5},3],[{1},1],[{3,4},2]}", "{[{3,4},3],[{1},1],[{2,5},2]}",
          "{[{3,5},3],[{1},1],[{2,4},2]}", "{[{4,5},3],[{1},1],[{2,3},2]}"})
        expected.add_term(parse_colored_partition(s), 1);
    if (!(first == expected)) return CheckReport::fail("ten-term colored product");
    // the engine route coincides term by term
    WordDualEngine<ColoredPartition> engine(colored_partition_letters(bounds));
    if (!(word_dual_partition_product(engine, u1, u2) == first))
        return CheckReport::fail("word engine differs from the interleave product");
    // second displayed expansion, with its coefficient-2 terms
    LinComb<ColoredPartition> second =
        cpiqsym_product(parse_colored_partition("{[{1,2},2]}"), u2, bounds);
    if (second.coefficient(parse_colored_partition("{[{2,3},2],[{1},1],[{4,5},2]}")) !=
        Rational(2))
        return CheckReport::fail("coefficient two in the colored product");
    if (second.mass() != Rational(10) || second.term_count() != 7)
        return CheckReport::fail("colored product shape");
    // alpha golden values
    if (alpha_coefficient(parse_colored_partition("{[{2,3},2],[{1},1],[{4,5},2]}"),
                          parse_colored_partition("{[{1,2},2]}"), u2) != 2)
        return CheckReport::fail("alpha of the doubled term");
    // colored coproduct
    ColorBounds two = ColorBounds::constant(2, 3);
    Tensor2<ColoredPartition> dc =
        cpiqsym_coproduct(parse_colored_partition("{[{1,3},1],[{2,4},2],[{5},1]}"), two);
    if (dc.term_count() != 3) return CheckReport::fail("colored coproduct shape");
    if (dc.coefficient({parse_colored_partition("{[{1,3},1],[{2,4},2]}"),
                        parse_colored_partition("{[{1},1]}")}) != Rational(1))
        return CheckReport::fail("colored coproduct middle term");
    return CheckReport::pass();
}

inline CheckReport shuffle_example() {
    // a1 a2 shuffled with a1; the recursion, not the printed line, is the
    // authority on the second coefficient
    WordDualEngine<int> engine(primitive_letters({1, 2}));
    LinComb<std::vector<int>> expected;
    expected.add_term({0, 1, 0}, 1);
    expected.add_term({0, 0, 1}, 2);
    if (!(engine.product({0, 1}, {0}) == expected)) return CheckReport::fail("free shuffle");
    return CheckReport::pass();
}

inline CheckReport aleph_example() {
    if (!(aleph_w(parse_set_partition("{{5,2},{1,3},{4}}")) ==
          parse_list_partition("{[1,3],[2,5],[4]}")))
        return CheckReport::fail("block-sorting embedding");
    return CheckReport::pass();
}

inline CheckReport embedding_examples() {
    SetPartition pi = parse_set_partition("{{1,4},{2,3},{5}}");
    if (!(g_pi(pi) == parse_diagram("B(5; 1,1,1,1,1; 43___; {3,4,5}; {1,2,5})")))
        return CheckReport::fail("diagram of a partition");
    auto f = indivisible_factorization(g_pi(pi));
    if (f.size() != 2 || !(f[1] == parse_diagram("B(1; 1; _; {1}; {1})")))
        return CheckReport::fail("factorization of the embedded partition");
    if (!is_indivisible(g_pi(parse_set_partition("{{1,5},{2,4},{3}}"))))
        return CheckReport::fail("indivisible embedded partition");
    // the seven-term product through the embedding
    LinComb<Diagram> lhs =
        star(g_pi(parse_set_partition("{{1,3},{2}}")), g_pi(parse_set_partition("{{1,4},{2,3}}")));
    if (lhs.term_count() != 7) return CheckReport::fail("embedded product size");
    LinComb<Diagram> rhs;
    const LinComb<SetPartition> mp =
        m_product(parse_set_partition("{{1,3},{2}}"), parse_set_partition("{{1,4},{2,3}}"));
    for (const auto& [p, c] : mp.terms()) rhs.add_term(g_pi(p), c);
    if (!(lhs == rhs)) return CheckReport::fail("embedded product values");
    Tensor2<Diagram> dl = b_coproduct(g_pi(parse_set_partition("{{1,3,5,6},{2,4,7}}")));
    if (dl.term_count() != 4) return CheckReport::fail("embedded coproduct size");
    return CheckReport::pass();
}

inline CheckReport colset_example(const VerifyOptions& opts) {
    GeneratorSet dd({elementary(1, {1}, {1}), elementary(2, {1, 2}, {1, 2})});
    EtaRanking eta(dd, opts.cap);
    if (eta.connected_count(1) != 2 || eta.connected_count(2) != 11)
        return CheckReport::fail("connected counts of the two-generator alphabet");
    Diagram pair = parse_diagram("B(2; 2,2; 43__; {3,4}; {1,2})");
    Diagram single = parse_diagram("B(1; 2; __; {1,2}; {1,2})");
    LinComb<ColoredPartition> lhs;
    const LinComb<Diagram> dp = dual_product(pair, single);
    if (dp.term_count() != 3) return CheckReport::fail("three shuffles of the pair");
    for (const auto& [g, c] : dp.terms()) lhs.add_term(colset(g, eta), c);
    LinComb<ColoredPartition> rhs =
        psi_interleave_product(colset(pair, eta), colset(single, eta));
    if (!(lhs == rhs)) return CheckReport::fail("chi morphism on the worked pair");
    if (rhs.term_count() != 3 || rhs.mass() != Rational(3))
        return CheckReport::fail("three colored terms");
    return CheckReport::pass();
}

}  // namespace golden

inline std::vector<CheckResult> suite_golden_examples(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    out.push_back(detail::timed_check("structural diagram examples",
                                      [] { return golden::structural_examples(); }));
    out.push_back(detail::timed_check("star product and composition",
                                      [] { return golden::star_product_example(); }));
    out.push_back(detail::timed_check("order closure of three factors",
                                      [] { return golden::order_closure_example(); }));
    out.push_back(detail::timed_check("coproduct of a multiplicative basis element",
                                      [] { return golden::phi_coproduct_example(); }));
    out.push_back(detail::timed_check("dual product, coproduct and psi examples",
                                      [] { return golden::dual_structure_examples(); }));
    out.push_back(
        detail::timed_check("word symmetric examples", [] { return golden::wsym_examples(); }));
    out.push_back(detail::timed_check("even-partition product coefficients",
                                      [] { return golden::even_example(); }));
    out.push_back(
        detail::timed_check("colored partition examples", [] { return golden::colored_examples(); }));
    out.push_back(detail::timed_check("free shuffle line", [] { return golden::shuffle_example(); }));
    out.push_back(
        detail::timed_check("block-sorting embedding", [] { return golden::aleph_example(); }));
    out.push_back(detail::timed_check("partition embedding examples",
                                      [] { return golden::embedding_examples(); }));
    out.push_back(detail::timed_check("colored components of the two-generator alphabet",
                                      [&] { return golden::colset_example(opts); }));
    return out;
}

}  // namespace bdiag
