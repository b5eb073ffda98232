#pragma once

#include <chrono>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "bdiag/embeddings.hpp"
#include "bdiag/enumeration.hpp"
#include "bdiag/heisenberg.hpp"
#include "bdiag/hopf.hpp"
#include "bdiag/hopf_b.hpp"
#include "bdiag/partition_algebras.hpp"
#include "bdiag/series.hpp"
#include "bdiag/word_dual.hpp"

namespace bdiag {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double millis = 0.0;
};

struct VerifyOptions {
    int max_weight = 4;      // full-alphabet duality bound
    int preset_weight = 6;   // preset duality bound
    int max_size = 5;        // vertex-count bounds (embeddings, chi)
    int order = 8;           // series truncation order
    int jobs = 1;            // worker cap for the pair loops
    std::uint64_t seed = 20240915;
    std::size_t cap = default_enumeration_cap();
};

namespace detail {

template <class F>
CheckResult timed_check(const std::string& name, F&& body) {
    CheckResult r;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
        CheckReport rep = body();
        r.pass = rep.ok;
        r.detail = rep.failure;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
    return r;
}

/// Runs fn(i) over [0, n) on up to `jobs` workers; returns the first failure
/// by index, independent of scheduling.
inline CheckReport parallel_scan(std::size_t n, int jobs,
                                 const std::function<CheckReport(std::size_t)>& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) {
            CheckReport r = fn(i);
            if (!r.ok) return r;
        }
        return CheckReport::pass();
    }
    std::vector<std::future<std::pair<std::size_t, CheckReport>>> futures;
    std::size_t chunk = (n + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) {
                CheckReport r = fn(i);
                if (!r.ok) return std::make_pair(i, r);
            }
            return std::make_pair(hi, CheckReport::pass());
        }));
    }
    std::size_t best = n;
    CheckReport first = CheckReport::pass();
    for (auto& f : futures) {
        auto [idx, rep] = f.get();
        if (!rep.ok && idx < best) {
            best = idx;
            first = rep;
        }
    }
    return first;
}

inline BialgebraOps<Diagram> star_ops() {
    BialgebraOps<Diagram> ops;
    ops.product = [](const Diagram& a, const Diagram& b) { return star(a, b); };
    ops.coproduct = [](const Diagram& g) { return b_coproduct(g); };
    ops.unit = Diagram::empty();
    ops.grade = [](const Diagram& g) { return g.omega(); };
    ops.show = [](const Diagram& g) { return to_text(g); };
    return ops;
}

inline BialgebraOps<Diagram> dual_ops() {
    BialgebraOps<Diagram> ops;
    ops.product = [](const Diagram& a, const Diagram& b) { return dual_product(a, b); };
    ops.coproduct = [](const Diagram& g) { return dual_coproduct(g); };
    ops.unit = Diagram::empty();
    ops.grade = [](const Diagram& g) { return g.omega(); };
    ops.show = [](const Diagram& g) { return to_text(g); };
    return ops;
}

inline std::vector<Diagram> flatten(const std::vector<std::vector<Diagram>>& levels) {
    std::vector<Diagram> all;
    for (const auto& level : levels) all.insert(all.end(), level.begin(), level.end());
    return all;
}

template <class B, class Show>
CheckReport expect_equal(const LinComb<B>& got, const LinComb<B>& want, const std::string& what,
                         Show&& show) {
    if (got == want) return CheckReport::pass();
    std::string msg = what + ": mismatch;";
    LinComb<B> diff = got - want;
    int listed = 0;
    for (const auto& [b, c] : diff.terms()) {
        if (++listed > 3) {
            msg += " ...";
            break;
        }
        msg += " [" + c.str() + " * " + show(b) + "]";
    }
    return CheckReport::fail(msg);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

/// Associativity, coassociativity, compatibility, counit and antipode, for
/// the diagram algebra and its dual on small weights and for the partition
/// algebras on small sizes.
inline std::vector<CheckResult> suite_hopf_axioms(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    const int w = std::min(3, opts.max_weight);
    auto pool = detail::flatten(generate_levels(full_alphabet(w), GenerateBy::weight, w, opts.cap));
    out.push_back(detail::timed_check("bialgebra laws, diagram algebra, weight <= " +
                                          std::to_string(w),
                                      [&] { return check_bialgebra(detail::star_ops(), pool); }));
    out.push_back(detail::timed_check(
        "antipode axiom, diagram algebra", [&] { return check_antipode(detail::star_ops(), pool); }));
    out.push_back(detail::timed_check("bialgebra laws, dual algebra", [&] {
        return check_bialgebra(detail::dual_ops(), pool);
    }));
    out.push_back(detail::timed_check(
        "antipode axiom, dual algebra", [&] { return check_antipode(detail::dual_ops(), pool); }));

    std::vector<SetPartition> sps;
    for (int n = 0; n <= 4; ++n)
        for (auto& p : all_set_partitions(n)) sps.push_back(std::move(p));
    auto show_sp = [](const SetPartition& p) { return to_text(p); };
    out.push_back(detail::timed_check("bialgebra laws, set partitions, shifted-union side", [&] {
        return check_bialgebra(phi_bialgebra_ops<SetPartition>(show_sp), sps);
    }));
    out.push_back(detail::timed_check("bialgebra laws, set partitions, monomial basis", [&] {
        return check_bialgebra(m_bialgebra_ops(), sps);
    }));
    out.push_back(detail::timed_check("bialgebra laws, set partitions, dual side", [&] {
        return check_bialgebra(dual_bialgebra_ops<SetPartition>(show_sp), sps);
    }));
    out.push_back(detail::timed_check("antipode axiom, set partitions", [&] {
        auto r = check_antipode(phi_bialgebra_ops<SetPartition>(show_sp), sps);
        if (!r.ok) return r;
        return check_antipode(dual_bialgebra_ops<SetPartition>(show_sp), sps);
    }));

    std::vector<ListPartition> lps;
    for (int n = 0; n <= 4; ++n)
        for (auto& p : all_list_partitions(n)) lps.push_back(std::move(p));
    auto show_lp = [](const ListPartition& p) { return to_text(p); };
    out.push_back(detail::timed_check("bialgebra laws, list partitions, both sides", [&] {
        auto r = check_bialgebra(phi_bialgebra_ops<ListPartition>(show_lp), lps);
        if (!r.ok) return r;
        return check_bialgebra(dual_bialgebra_ops<ListPartition>(show_lp), lps);
    }));
    out.push_back(detail::timed_check("antipode axiom, list partitions", [&] {
        return check_antipode(phi_bialgebra_ops<ListPartition>(show_lp), lps);
    }));

    std::vector<ColoredPartition> cps;
    ColorBounds two = ColorBounds::constant(2, 4);
    for (int n = 0; n <= 4; ++n)
        for (auto& p : all_colored_partitions(n, two)) cps.push_back(std::move(p));
    auto show_cp = [](const ColoredPartition& p) { return to_text(p); };
    out.push_back(detail::timed_check("bialgebra laws, two-color partitions, both sides", [&] {
        auto r = check_bialgebra(phi_bialgebra_ops<ColoredPartition>(show_cp), cps);
        if (!r.ok) return r;
        return check_bialgebra(dual_bialgebra_ops<ColoredPartition>(show_cp), cps);
    }));
    out.push_back(detail::timed_check("antipode axiom, two-color partitions", [&] {
        return check_antipode(phi_bialgebra_ops<ColoredPartition>(show_cp), cps);
    }));
    return out;
}

namespace detail {

/// Both pairing identities over one alphabet: for every pair (A, B) with
/// total weight within the bound and every diagram of the matching grade,
///   <D_A cup D_B, G'> = <D_A (x) D_B, Delta G'>   and
///   <Delta_*(D_G), A (x) B> = <D_G, A star B>.
/// Cross-grade instances vanish on both sides by the grading.
inline CheckReport duality_scan(const std::vector<std::vector<Diagram>>& levels, int bound,
                                int jobs) {
    std::vector<std::map<std::pair<Diagram, Diagram>, LinComb<Diagram>>> from_delta(bound + 1),
        from_dstar(bound + 1);
    for (int g = 0; g <= bound; ++g)
        for (const auto& gp : levels[g]) {
            const Tensor2<Diagram> d = b_coproduct(gp);
            for (const auto& [ab, c] : d.terms()) from_delta[g][ab].add_term(gp, c);
            const Tensor2<Diagram> ds = dual_coproduct(gp);
            for (const auto& [ab, c] : ds.terms()) from_dstar[g][ab].add_term(gp, c);
        }
    std::vector<std::pair<const Diagram*, const Diagram*>> pairs;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; a + b <= bound; ++b)
            for (const auto& ga : levels[a])
                for (const auto& gb : levels[b]) pairs.emplace_back(&ga, &gb);
    auto show = [](const Diagram& g) { return to_text(g); };
    return parallel_scan(pairs.size(), jobs, [&](std::size_t i) {
        const Diagram& a = *pairs[i].first;
        const Diagram& b = *pairs[i].second;
        const int g = a.omega() + b.omega();
        static const LinComb<Diagram> empty;
        auto key = std::make_pair(a, b);
        // product against coproduct
        auto it = from_delta[g].find(key);
        CheckReport r = expect_equal<Diagram>(dual_product(a, b),
                                              it == from_delta[g].end() ? empty : it->second,
                                              "cup/Delta pairing at " + to_text(a) + " , " +
                                                  to_text(b),
                                              show);
        if (!r.ok) return r;
        // star against the dual coproduct
        auto jt = from_dstar[g].find(key);
        return expect_equal<Diagram>(star(a, b), jt == from_dstar[g].end() ? empty : jt->second,
                                     "star/Delta_* pairing at " + to_text(a) + " , " + to_text(b),
                                     show);
    });
}

}  // namespace detail

/// The two pairing identities of the duality lemma, plus the brute-force
/// factorization oracle for the dual coproduct.
inline std::vector<CheckResult> suite_duality(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    {
        const int w = opts.max_weight;
        auto levels = generate_levels(full_alphabet(w), GenerateBy::weight, w, opts.cap);
        out.push_back(detail::timed_check(
            "pairing identities, full alphabet, total weight <= " + std::to_string(w),
            [&] { return detail::duality_scan(levels, w, opts.jobs); }));
        auto pool = detail::flatten(levels);
        out.push_back(detail::timed_check(
            "dual coproduct equals the factorization search, weight <= " + std::to_string(w),
            [&] {
                // the same exhaustive search over pre-factorization pairs,
                // organized pair-first so each star set is computed once
                std::map<Diagram, Tensor2<Diagram>> found;
                for (int a = 0; a <= w; ++a)
                    for (int b = 0; a + b <= w; ++b)
                        for (const auto& ga : levels[a])
                            for (const auto& gb : levels[b])
                                for (const auto& g : star_support(ga, gb))
                                    found[g].add_term({ga, gb}, 1);
                for (const auto& g : pool) {
                    auto it = found.find(g);
                    static const Tensor2<Diagram> empty;
                    if (!(dual_coproduct(g) == (it == found.end() ? empty : it->second)))
                        return CheckReport::fail("factorization search differs at " + to_text(g));
                }
                return CheckReport::pass();
            }));
    }
    for (const auto& [name, dd] :
         std::vector<std::pair<std::string, GeneratorSet>>{{"W", preset_w()},
                                                           {"BW", preset_bw()},
                                                           {"S", preset_s()}}) {
        auto levels = generate_levels(dd, GenerateBy::weight, opts.preset_weight, opts.cap);
        out.push_back(detail::timed_check(
            "pairing identities, preset " + name + ", total weight <= " +
                std::to_string(opts.preset_weight),
            [&] { return detail::duality_scan(levels, opts.preset_weight, opts.jobs); }));
    }
    return out;
}

/// Golden basis conversions, biorthogonality, and the split-counting route
/// to the dual product.
inline std::vector<CheckResult> suite_phi_psi(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    auto show = [](const Diagram& g) { return to_text(g); };
    out.push_back(detail::timed_check("golden psi conversions", [&] {
        BasisConverter conv;
        Diagram g1 = parse_diagram("B(1; 1; _; {1}; {1})");
        Diagram g2 = parse_diagram("B(2; 1,1; __; {1,2}; {1,2})");
        Diagram g3 = parse_diagram("B(2; 1,1; 2_; {2}; {1})");
        if (!(conv.psi_to_d(g2) == LinComb<Diagram>::unit(g2)))
            return CheckReport::fail("psi of the two-vertex juxtaposition");
        LinComb<Diagram> psi3;
        psi3.add_term(g3, 1);
        psi3.add_term(g2, -1);
        CheckReport r = detail::expect_equal(conv.psi_to_d(g3), psi3, "psi of the edge", show);
        if (!r.ok) return r;
        Diagram chain = parse_diagram("B(3; 1,1,1; 23_; {3}; {1})");
        LinComb<Diagram> expected;
        expected.add_term(chain, 1);
        expected.add_term(parse_diagram("B(3; 1,1,1; _3_; {1,3}; {1,2})"), -1);
        expected.add_term(parse_diagram("B(3; 1,1,1; 2__; {2,3}; {1,3})"), -1);
        expected.add_term(parse_diagram("B(3; 1,1,1; ___; {1,2,3}; {1,2,3})"), 1);
        r = detail::expect_equal(conv.psi_to_d(chain), expected, "psi of the three-chain", show);
        if (!r.ok) return r;
        // round trips
        for (const Diagram& g : {g1, g2, g3, chain}) {
            if (!(conv.psi_to_d(conv.d_to_psi(g)) == LinComb<Diagram>::unit(g)))
                return CheckReport::fail("psi/d round trip at " + to_text(g));
            if (!(conv.diagram_to_phi(conv.phi_to_diagram(g)) == LinComb<Diagram>::unit(g)))
                return CheckReport::fail("phi round trip at " + to_text(g));
        }
        return CheckReport::pass();
    }));
    const int w = std::min(3, opts.max_weight);
    out.push_back(detail::timed_check(
        "biorthogonality within each grade, weight <= " + std::to_string(w), [&] {
            auto levels = generate_levels(full_alphabet(w), GenerateBy::weight, w, opts.cap);
            BasisConverter conv;
            for (int g = 0; g <= w; ++g) {
                for (const auto& a : levels[g]) conv.psi_to_d(a);  // warm the cache
                CheckReport r =
                    detail::parallel_scan(levels[g].size(), 1, [&](std::size_t i) {
                        const Diagram& a = levels[g][i];
                        LinComb<Diagram> psi = conv.psi_to_d(a);
                        for (const auto& b : levels[g]) {
                            Rational got = pairing(psi, conv.phi_to_diagram(b));
                            if (got != Rational(a == b ? 1 : 0))
                                return CheckReport::fail("biorthogonality fails at " +
                                                         to_text(a) + " , " + to_text(b));
                        }
                        return CheckReport::pass();
                    });
                if (!r.ok) return r;
            }
            return CheckReport::pass();
        }));
    out.push_back(detail::timed_check(
        "split counting equals shuffle counting for the dual product", [&] {
            auto levels =
                generate_levels(full_alphabet(opts.max_weight), GenerateBy::weight,
                                opts.max_weight, opts.cap);
            std::vector<std::pair<const Diagram*, const Diagram*>> pairs;
            for (int a = 0; a <= opts.max_weight; ++a)
                for (int b = 0; a + b <= opts.max_weight; ++b)
                    for (const auto& ga : levels[a])
                        for (const auto& gb : levels[b]) pairs.emplace_back(&ga, &gb);
            return detail::parallel_scan(pairs.size(), opts.jobs, [&](std::size_t i) {
                const Diagram& a = *pairs[i].first;
                const Diagram& b = *pairs[i].second;
                if (!(dual_product_by_splits(a, b) == dual_product(a, b)))
                    return CheckReport::fail("split route differs at " + to_text(a) + " , " +
                                             to_text(b));
                return CheckReport::pass();
            });
        }));
    out.push_back(detail::timed_check("psi coproduct: deconcatenation equals the dual route", [&] {
        BasisConverter conv;
        auto levels = generate_levels(full_alphabet(3), GenerateBy::weight, 3, opts.cap);
        for (const auto& level : levels)
            for (const auto& g : level)
                if (!(psi_coproduct_direct(g) == psi_coproduct_via_d(g, conv)))
                    return CheckReport::fail("psi coproduct routes differ at " + to_text(g));
        return CheckReport::pass();
    }));
    return out;
}

inline std::vector<CheckResult> suite_embeddings(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    const int n = std::min(4, opts.max_size);
    out.push_back(detail::timed_check(
        "partition embedding respects product and coproduct, size <= " + std::to_string(n),
        [&] { return verify_wsym_embedding(n); }));
    out.push_back(detail::timed_check("embedding is injective and tracks indivisibility", [&] {
        for (int k = 0; k <= 5; ++k) {
            std::set<Diagram> images;
            for (const auto& p : all_set_partitions(k)) {
                Diagram g = g_pi(p);
                if (!images.insert(g).second)
                    return CheckReport::fail("embedding collides at " + to_text(p));
                if (is_indivisible(g) != is_indivisible(p))
                    return CheckReport::fail("indivisibility differs at " + to_text(p));
            }
        }
        return CheckReport::pass();
    }));
    return out;
}

inline std::vector<CheckResult> suite_chi(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    GeneratorSet two({elementary(1, {1}, {1}), elementary(2, {1, 2}, {1, 2})});
    out.push_back(detail::timed_check("chi morphism, two-generator alphabet, up to 4 vertices",
                                      [&] { return verify_chi_morphism(two, 4, opts.cap); }));
    out.push_back(detail::timed_check(
        "chi morphism, single-letter alphabet, size <= " + std::to_string(opts.max_size),
        [&] { return verify_chi_morphism(preset_w(), opts.max_size, opts.cap); }));
    return out;
}

inline std::vector<CheckResult> suite_enumeration(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    auto check_sequence = [&](const std::string& name, const GeneratorSet& dd, SequenceStat stat,
                              int limit, const std::vector<Integer>& golden) {
        return detail::timed_check(name, [&] {
            auto rows = sequence_table(dd, stat, limit, opts.cap);
            for (int i = 0; i <= limit; ++i) {
                if (!rows[i].agree())
                    return CheckReport::fail("recurrence and enumeration differ at n=" +
                                             std::to_string(i));
                if (!golden.empty() && rows[i].by_recurrence != golden[i])
                    return CheckReport::fail("value differs from the table at n=" +
                                             std::to_string(i) + ": got " +
                                             rows[i].by_recurrence.get_str());
            }
            return CheckReport::pass();
        });
    };
    out.push_back(check_sequence("beta of the two-cut alphabet is A005425", preset_s(),
                                 SequenceStat::beta, 9,
                                 {1, 2, 5, 14, 43, 142, 499, 1850, 7193, 29186}));
    {
        std::vector<Integer> bells;
        for (int n = 0; n <= 7; ++n) bells.push_back(bell(n));
        out.push_back(check_sequence("beta of the single-letter alphabet is Bell", preset_w(),
                                     SequenceStat::beta, 7, bells));
    }
    {
        std::vector<Integer> fibs;
        for (int n = 0; n <= 10; ++n) fibs.push_back(fibonacci(n));
        out.push_back(check_sequence("alpha of the free alphabet is Fibonacci", preset_f(),
                                     SequenceStat::alpha, 10, fibs));
    }
    out.push_back(detail::timed_check("connected pair-letter diagrams count factorials", [&] {
        auto c = connected_counts(preset_bw(), 6, opts.cap);
        for (int n = 1; n <= 6; ++n)
            if (c[n] != factorial_z(n))
                return CheckReport::fail("connected count differs at n=" + std::to_string(n) +
                                         ": got " + c[n].get_str());
        return CheckReport::pass();
    }));
    out.push_back(detail::timed_check("kappa matches Stirling and Lah", [&] {
        CountingTables w(preset_w()), bw(preset_bw());
        for (int n = 0; n <= 7; ++n)
            for (int p = 0; p <= n; ++p)
                if (w.kappa(n, p) != stirling2(n, p))
                    return CheckReport::fail("Stirling mismatch at " + std::to_string(n) + "," +
                                             std::to_string(p));
        for (int n = 0; n <= 7; ++n)
            for (int k = 0; k <= 2 * n; ++k) {
                Integer expected = k >= n ? lah(n, k - n) : Integer(0);
                if (bw.kappa(n, k) != expected)
                    return CheckReport::fail("Lah mismatch at " + std::to_string(n) + "," +
                                             std::to_string(k));
            }
        return CheckReport::pass();
    }));
    out.push_back(detail::timed_check("full-alphabet counts, recurrence against generation, "
                                      "weight <= 5",
                                      [&] {
                                          FullAlphabetTable table;
                                          auto levels = generate_levels(full_alphabet(5),
                                                                        GenerateBy::weight, 5,
                                                                        opts.cap);
                                          for (int p = 0; p <= 5; ++p) {
                                              std::map<int, long> by_fup;
                                              for (const auto& g : levels[p])
                                                  ++by_fup[static_cast<int>(g.f_up().size())];
                                              for (int q = 0; q <= p; ++q) {
                                                  Integer brute(by_fup.count(q) ? by_fup[q] : 0);
                                                  if (table.d(p, q) != brute)
                                                      return CheckReport::fail(
                                                          "d(" + std::to_string(p) + "," +
                                                          std::to_string(q) + ") recurrence " +
                                                          table.d(p, q).get_str() +
                                                          " != enumeration " + brute.get_str());
                                              }
                                          }
                                          return CheckReport::pass();
                                      }));
    return out;
}

inline std::vector<CheckResult> suite_exp_formula(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    auto betaser = [&](const std::string& name, const GeneratorSet& dd, int order) {
        return detail::timed_check("exponential formula, preset " + name + ", order " +
                                       std::to_string(order),
                                   [&] {
                                       auto levels = generate_levels(dd, GenerateBy::size, order,
                                                                     opts.cap);
                                       std::vector<Integer> beta, c(order + 1, 0);
                                       for (int n = 0; n <= order; ++n) {
                                           beta.push_back(
                                               Integer(static_cast<long>(levels[n].size())));
                                           long connected = 0;
                                           for (const auto& g : levels[n])
                                               if (is_connected(g)) ++connected;
                                           c[n] = connected;
                                       }
                                       SeriesQ lhs = SeriesQ::egf(beta, order);
                                       SeriesQ inner = SeriesQ::egf(c, order);
                                       inner[0] = Rational(0);
                                       if (lhs != inner.exp())
                                           return CheckReport::fail(
                                               "coefficients differ: beta EGF " + lhs.str() +
                                               " vs exp " + inner.exp().str());
                                       return CheckReport::pass();
                                   });
    };
    out.push_back(betaser("W", preset_w(), opts.order));
    out.push_back(betaser("BW", preset_bw(), opts.order));
    out.push_back(betaser("S", preset_s(), opts.order));
    out.push_back(betaser("F", preset_f(), opts.order));
    out.push_back(betaser("T:{2}", preset_t({2}), opts.order));
    out.push_back(detail::timed_check("forest series against closed forms, order 6", [&] {
        if (forest_series_ode({2}, 6) != forest_series_single(2, 6))
            return CheckReport::fail("arity 2 closed form differs");
        if (forest_series_ode({3}, 6) != forest_series_single(3, 6))
            return CheckReport::fail("arity 3 closed form differs");
        if (forest_series_ode({1, 2}, 6) != forest_series_one_and(2, 6))
            return CheckReport::fail("arity {1,2} closed form differs");
        return CheckReport::pass();
    }));
    out.push_back(detail::timed_check("forest coefficients count connected diagrams", [&] {
        for (std::vector<int> arities : {std::vector<int>{2}, std::vector<int>{1, 2}}) {
            SeriesQ f = forest_series_ode(arities, 4);
            auto c = connected_counts(preset_t(arities), 4, opts.cap);
            for (int n = 1; n <= 4; ++n)
                if (Rational(c[n]) != f[n] * factorial_q(n))
                    return CheckReport::fail("tree count differs at n=" + std::to_string(n));
        }
        return CheckReport::pass();
    }));
    out.push_back(detail::timed_check("uniform-arity weight table is the size table", [&] {
        for (int m : {2, 3}) {
            CountingTables t(preset_t({m}));
            for (int n = 0; n <= 3 * m; ++n)
                for (int k = 0; k <= n + 1; ++k) {
                    Integer expected = (n % m == 0) ? t.kappa(n / m, k) : Integer(0);
                    if (t.d(n, k) != expected)
                        return CheckReport::fail("weight/size relation fails at m=" +
                                                 std::to_string(m) + ", n=" + std::to_string(n));
                }
        }
        return CheckReport::pass();
    }));
    return out;
}

inline std::vector<CheckResult> suite_katriel(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    out.push_back(detail::timed_check("number-operator powers expand with Stirling numbers", [&] {
        for (int n = 1; n <= 8; ++n) {
            NormalForm got = normal_order(number_operator_power(n));
            NormalForm expected;
            for (int k = 1; k <= n; ++k) expected[{k, k}] = stirling2(n, k);
            if (got != expected)
                return CheckReport::fail("expansion differs at n=" + std::to_string(n));
        }
        return CheckReport::pass();
    }));
    out.push_back(detail::timed_check("rewriting is confluent under random schedules", [&] {
        std::mt19937_64 rng(opts.seed);
        for (int trial = 0; trial < 30; ++trial) {
            int len = 1 + static_cast<int>(rng() % 10);
            BosonWord w;
            for (int i = 0; i < len; ++i)
                w.push_back(rng() % 2 ? Boson::create : Boson::annihilate);
            NormalForm reference = normal_order(w);
            for (std::uint64_t s = 1; s <= 3; ++s)
                if (normal_order_randomized(w, opts.seed + s) != reference)
                    return CheckReport::fail("schedules disagree on " + to_text(w));
        }
        return CheckReport::pass();
    }));
    return out;
}

/// Replays the worked examples end to end.
std::vector<CheckResult> suite_golden_examples(const VerifyOptions& opts);

inline std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "hopf-axioms") return suite_hopf_axioms(opts);
    if (name == "duality") return suite_duality(opts);
    if (name == "phi-psi") return suite_phi_psi(opts);
    if (name == "embeddings") return suite_embeddings(opts);
    if (name == "chi") return suite_chi(opts);
    if (name == "enumeration") return suite_enumeration(opts);
    if (name == "exp-formula") return suite_exp_formula(opts);
    if (name == "katriel") return suite_katriel(opts);
    if (name == "golden-examples") return suite_golden_examples(opts);
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const char* s : {"hopf-axioms", "duality", "phi-psi", "embeddings", "chi",
                              "enumeration", "exp-formula", "katriel", "golden-examples"}) {
            auto part = run_suite(s, opts);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace bdiag

#include "bdiag/verify_golden.hpp"
