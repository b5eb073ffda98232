#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "bdiag/diagram.hpp"
#include "bdiag/diagram_ops.hpp"
#include "bdiag/lincomb.hpp"

namespace bdiag {

/// k pairs (a_i, b_i): a strictly increasing outer half-edges of the lower
/// diagram, b distinct inner half-edges of the upper one.
struct CompositionSpec {
    std::vector<int> a;
    std::vector<int> b;
};

inline void require_spec_shape(const CompositionSpec& spec) {
    if (spec.a.size() != spec.b.size())
        throw std::invalid_argument("composition spec: length mismatch");
    for (std::size_t i = 0; i < spec.a.size(); ++i) {
        if (spec.a[i] < 1 || spec.b[i] < 1)
            throw std::invalid_argument("composition spec: indices start at 1");
        if (i > 0 && spec.a[i] <= spec.a[i - 1])
            throw std::invalid_argument("composition spec: a must be strictly increasing");
    }
    std::set<int> bs(spec.b.begin(), spec.b.end());
    if (bs.size() != spec.b.size())
        throw std::invalid_argument("composition spec: b must be pairwise distinct");
}

/// Glues g_top above g, turning each chosen pair of free half-edges into an
/// edge. Returns nullopt (the zero of the guarded composition) when the spec
/// points at half-edges that are not free; malformed specs throw instead.
inline std::optional<Diagram> compose(const Diagram& g, const Diagram& g_top,
                                      const CompositionSpec& spec) {
    require_spec_shape(spec);
    const int w = g.omega();
    for (int x : spec.a)
        if (x > w) throw std::invalid_argument("composition spec: a exceeds the lower weight");
    for (int x : spec.b)
        if (x > g_top.omega())
            throw std::invalid_argument("composition spec: b exceeds the upper weight");
    std::set<int> fu(g.f_up().begin(), g.f_up().end());
    std::set<int> fd(g_top.f_down().begin(), g_top.f_down().end());
    for (int x : spec.a)
        if (!fu.count(x)) return std::nullopt;
    for (int x : spec.b)
        if (!fd.count(x)) return std::nullopt;

    DiagramTuple t;
    t.n = g.n() + g_top.n();
    t.lambda = g.lambda();
    t.lambda.insert(t.lambda.end(), g_top.lambda().begin(), g_top.lambda().end());
    t.phi = g.phi_word();
    for (int v : g_top.phi_word()) t.phi.push_back(v == kBlank ? kBlank : v + w);
    for (std::size_t i = 0; i < spec.a.size(); ++i) t.phi[spec.a[i] - 1] = spec.b[i] + w;
    for (int x : g.f_up())
        if (!std::count(spec.a.begin(), spec.a.end(), x)) t.f_up.push_back(x);
    for (int x : g_top.f_up()) t.f_up.push_back(x + w);
    t.f_down = g.f_down();
    for (int x : g_top.f_down())
        if (!std::count(spec.b.begin(), spec.b.end(), x)) t.f_down.push_back(x + w);
    return Diagram(std::move(t));
}

/// Every valid spec for the pair (g, g_top): all k, all increasing a within
/// F-up(g), all arrangements b of k distinct elements of F-down(g_top).
inline std::vector<CompositionSpec> all_specs(const Diagram& g, const Diagram& g_top) {
    const std::vector<int>& fu = g.f_up();
    const std::vector<int>& fd = g_top.f_down();
    const int kmax = static_cast<int>(std::min(fu.size(), fd.size()));
    std::vector<CompositionSpec> out;
    out.push_back({});  // k = 0, plain juxtaposition
    std::vector<int> a_idx, b_sel;
    std::vector<char> b_used(fd.size(), 0);
    // enumerate ordered b once per unordered a
    std::function<void(const std::vector<int>&, std::size_t)> arrange =
        [&](const std::vector<int>& a, std::size_t depth) {
            if (depth == a.size()) {
                CompositionSpec s;
                s.a = a;
                for (int bi : b_sel) s.b.push_back(fd[bi]);
                out.push_back(std::move(s));
                return;
            }
            for (std::size_t i = 0; i < fd.size(); ++i) {
                if (b_used[i]) continue;
                b_used[i] = 1;
                b_sel.push_back(static_cast<int>(i));
                arrange(a, depth + 1);
                b_sel.pop_back();
                b_used[i] = 0;
            }
        };
    std::function<void(std::size_t, int)> choose = [&](std::size_t start, int k) {
        if (k == 0) {
            std::vector<int> a;
            for (int i : a_idx) a.push_back(fu[i]);
            arrange(a, 0);
            return;
        }
        for (std::size_t i = start; i + k <= fu.size(); ++i) {
            a_idx.push_back(static_cast<int>(i));
            choose(i + 1, k - 1);
            a_idx.pop_back();
        }
    };
    for (int k = 1; k <= kmax; ++k) choose(0, k);
    return out;
}

/// The star product on basis diagrams: one term per composition spec.
inline LinComb<Diagram> star(const Diagram& g, const Diagram& h) {
    LinComb<Diagram> r;
    for (const auto& spec : all_specs(g, h)) r.add_term(*compose(g, h, spec), 1);
    return r;
}

inline LinComb<Diagram> star(const LinComb<Diagram>& x, const LinComb<Diagram>& y) {
    return extend_bilinear(x, y, [](const Diagram& g, const Diagram& h) { return star(g, h); });
}

/// The set G (medstar) H of all guarded compositions.
inline std::set<Diagram> star_support(const Diagram& g, const Diagram& h) {
    std::set<Diagram> out;
    for (const auto& spec : all_specs(g, h)) out.insert(*compose(g, h, spec));
    return out;
}

inline bool is_indivisible(const Diagram& g) {
    if (g.n() == 0) return false;
    std::vector<char> cut_ok(g.n(), 1);  // cut after vertex j, 1 <= j < n
    for (auto [a, b] : g.edges()) {
        int lo = g.block_of(a), hi = g.block_of(b);
        if (lo > hi) std::swap(lo, hi);
        for (int j = lo; j < hi; ++j) cut_ok[j] = 0;
    }
    for (int j = 1; j < g.n(); ++j)
        if (cut_ok[j]) return false;
    return true;
}

/// The unique maximal factorization under juxtaposition; empty for the empty
/// diagram.
inline std::vector<Diagram> indivisible_factorization(const Diagram& g) {
    std::vector<char> cut_ok(g.n() + 1, 1);
    for (auto [a, b] : g.edges()) {
        int lo = g.block_of(a), hi = g.block_of(b);
        if (lo > hi) std::swap(lo, hi);
        for (int j = lo; j < hi; ++j) cut_ok[j] = 0;
    }
    std::vector<Diagram> factors;
    int lo = 0;
    for (int j = 1; j <= g.n(); ++j) {
        if (j == g.n() || cut_ok[j]) {
            VertexSequence seq;
            for (int v = lo + 1; v <= j; ++v) seq.push_back(v);
            factors.push_back(sub_diagram(g, seq));
            lo = j;
        }
    }
    return factors;
}

/// Support of the iterated star product of indivisible factors; equals the
/// upper set of the juxtaposition in the partial order.
inline std::set<Diagram> medstar_closure(const std::vector<Diagram>& factors) {
    for (const auto& f : factors)
        if (!is_indivisible(f))
            throw std::invalid_argument("medstar_closure: factors must be indivisible");
    std::set<Diagram> acc{Diagram::empty()};
    for (const auto& f : factors) {
        std::set<Diagram> next;
        for (const auto& s : acc) {
            auto prods = star_support(s, f);
            next.insert(prods.begin(), prods.end());
        }
        acc = std::move(next);
    }
    return acc;
}

/// Delta(G) = sum over isolated splits of G[I] (x) G[complement].
inline Tensor2<Diagram> b_coproduct(const Diagram& g) {
    Tensor2<Diagram> r;
    for (const auto& [I, J] : iso_split(g)) r.add_term({sub_diagram(g, I), sub_diagram(g, J)}, 1);
    return r;
}

inline Rational b_counit(const Diagram& g) { return g.is_empty() ? Rational(1) : Rational(0); }

/// D_G cup D_H = sum over vertex shuffles of D of the permuted juxtaposition.
/// Multiplicities are retained: distinct shuffles may produce one diagram.
inline LinComb<Diagram> dual_product(const Diagram& g, const Diagram& h) {
    LinComb<Diagram> r;
    Diagram gh = juxtapose(g, h);
    for (const auto& sigma : shuffle_permutations(g.n(), h.n())) r.add_term(permute(gh, sigma), 1);
    return r;
}

inline LinComb<Diagram> dual_product(const LinComb<Diagram>& x, const LinComb<Diagram>& y) {
    return extend_bilinear(
        x, y, [](const Diagram& g, const Diagram& h) { return dual_product(g, h); });
}

/// Coproduct on the dual: one term per prefix/suffix vertex split, severed
/// crossing edges restored to free half-edges on both sides.
inline Tensor2<Diagram> dual_coproduct(const Diagram& g) {
    Tensor2<Diagram> r;
    for (int k = 0; k <= g.n(); ++k) {
        VertexSequence lo, hi;
        for (int v = 1; v <= k; ++v) lo.push_back(v);
        for (int v = k + 1; v <= g.n(); ++v) hi.push_back(v);
        r.add_term({sub_diagram(g, lo), sub_diagram(g, hi)}, 1);
    }
    return r;
}

/// Independent route for the dual coproduct: scan a candidate pool for all
/// pairs whose star set contains g. The pool must contain every diagram of
/// weight up to omega(g) from the relevant alphabet.
inline Tensor2<Diagram> dual_coproduct_by_search(const Diagram& g,
                                                 const std::vector<Diagram>& pool) {
    Tensor2<Diagram> r;
    for (const auto& a : pool) {
        if (a.omega() > g.omega() || a.n() > g.n()) continue;
        for (const auto& b : pool) {
            if (a.omega() + b.omega() != g.omega() || a.n() + b.n() != g.n()) continue;
            if (star_support(a, b).count(g)) r.add_term({a, b}, 1);
        }
    }
    return r;
}

/// Conversions between the diagram basis, the multiplicative Phi basis, the
/// tautological dual basis D and its dual Psi. Mobius data is memoized per
/// converter instance.
class BasisConverter {
public:
    /// Phi^G expanded in the diagram basis: the indicator sum of the closure.
    LinComb<Diagram> phi_to_diagram(const Diagram& g) {
        LinComb<Diagram> r;
        for (const auto& d : closure(g)) r.add_term(d, 1);
        return r;
    }

    /// A diagram expanded in the Phi basis (unitriangular inversion).
    LinComb<Diagram> diagram_to_phi(const Diagram& g) {
        auto it = memo_to_phi_.find(g);
        if (it != memo_to_phi_.end()) return it->second;
        LinComb<Diagram> r = LinComb<Diagram>::unit(g);
        for (const auto& d : closure(g)) {
            if (d == g) continue;
            r -= diagram_to_phi(d);
        }
        memo_to_phi_.emplace(g, r);
        return r;
    }

    LinComb<Diagram> diagram_to_phi(const LinComb<Diagram>& x) {
        return extend_linear(x, [&](const Diagram& g) { return diagram_to_phi(g); });
    }

    LinComb<Diagram> phi_to_diagram(const LinComb<Diagram>& x) {
        return extend_linear(x, [&](const Diagram& g) { return phi_to_diagram(g); });
    }

    /// Psi_G in the D basis: Mobius inversion over the down-set of G.
    LinComb<Diagram> psi_to_d(const Diagram& g) {
        auto it = memo_psi_.find(g);
        if (it != memo_psi_.end()) return it->second;
        std::vector<Diagram> down = down_set(g);
        // mu(x, g) by decreasing edge count; every element above x in the
        // interval has strictly more edges.
        std::sort(down.begin(), down.end(), [](const Diagram& a, const Diagram& b) {
            if (a.tau() != b.tau()) return a.tau() > b.tau();
            return a < b;
        });
        std::map<Diagram, Rational> mu;
        for (const auto& x : down) {
            if (x == g) {
                mu[x] = Rational(1);
                continue;
            }
            Rational s;
            for (const auto& z : closure(x)) {
                if (z == x) continue;
                auto zt = mu.find(z);
                if (zt != mu.end()) s += zt->second;  // z inside [x, g]
            }
            mu[x] = -s;
        }
        LinComb<Diagram> r;
        for (const auto& [x, c] : mu) r.add_term(x, c);
        memo_psi_.emplace(g, r);
        return r;
    }

    /// D_G as a sum of Psi over the down-set, all coefficients 1.
    LinComb<Diagram> d_to_psi(const Diagram& g) {
        LinComb<Diagram> r;
        for (const auto& x : down_set(g)) r.add_term(x, 1);
        return r;
    }

    LinComb<Diagram> psi_to_d(const LinComb<Diagram>& x) {
        return extend_linear(x, [&](const Diagram& g) { return psi_to_d(g); });
    }
    LinComb<Diagram> d_to_psi(const LinComb<Diagram>& x) {
        return extend_linear(x, [&](const Diagram& g) { return d_to_psi(g); });
    }

    /// Upper set {G' : G <= G'} of the order, computed as the medstar closure
    /// of the indivisible factorization.
    const std::set<Diagram>& closure(const Diagram& g) {
        auto it = memo_closure_.find(g);
        if (it != memo_closure_.end()) return it->second;
        auto cl = medstar_closure(indivisible_factorization(g));
        return memo_closure_.emplace(g, std::move(cl)).first->second;
    }

    /// Lower set {G'' : G'' <= G}: sever edge subsets, keep candidates whose
    /// closure recovers g.
    std::vector<Diagram> down_set(const Diagram& g) {
        auto edges = g.edges();
        if (edges.size() > 20) throw std::runtime_error("down_set: too many edges");
        std::vector<Diagram> out;
        for (std::size_t mask = 0; mask < (std::size_t(1) << edges.size()); ++mask) {
            DiagramTuple t = g.tuple();
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (!(mask & (std::size_t(1) << i))) continue;
                auto [a, b] = edges[i];
                t.phi[a - 1] = kBlank;
                t.f_up.push_back(a);
                t.f_down.push_back(b);
            }
            Diagram cand(std::move(t));
            if (mask == 0 || closure(cand).count(g)) out.push_back(std::move(cand));
        }
        return out;
    }

private:
    std::map<Diagram, std::set<Diagram>> memo_closure_;
    std::map<Diagram, LinComb<Diagram>> memo_to_phi_;
    std::map<Diagram, LinComb<Diagram>> memo_psi_;
};

/// D_A cup D_B evaluated by counting isolated splits instead of enumerating
/// vertex shuffles: the coefficient of D_G is the number of split pairs
/// (I, J) of G inducing (A, B). Equal to dual_product by the duality lemma,
/// which makes the two routes an oracle pair.
inline LinComb<Diagram> dual_product_by_splits(const Diagram& a, const Diagram& b) {
    std::set<Diagram> candidates;
    Diagram ab = juxtapose(a, b);
    for (const auto& sigma : shuffle_permutations(a.n(), b.n()))
        candidates.insert(permute(ab, sigma));
    LinComb<Diagram> r;
    for (const auto& g : candidates) {
        long count = 0;
        for (const auto& [I, J] : iso_split(g))
            if (sub_diagram(g, I) == a && sub_diagram(g, J) == b) ++count;
        r.add_term(g, Rational(count));
    }
    return r;
}

/// The product of dual-basis elements Psi_A cup Psi_B, through the D basis.
inline LinComb<Diagram> psi_product(const Diagram& a, const Diagram& b, BasisConverter& conv) {
    LinComb<Diagram> d = dual_product(conv.psi_to_d(a), conv.psi_to_d(b));
    return conv.d_to_psi(d);
}

/// Deconcatenation coproduct on the Psi basis: one term per juxtaposition
/// split of g, including the two trivial ones.
inline Tensor2<Diagram> psi_coproduct_direct(const Diagram& g) {
    std::vector<char> cut_ok(g.n() + 1, 1);
    for (auto [a, b] : g.edges()) {
        int lo = g.block_of(a), hi = g.block_of(b);
        if (lo > hi) std::swap(lo, hi);
        for (int j = lo; j < hi; ++j) cut_ok[j] = 0;
    }
    Tensor2<Diagram> r;
    for (int j = 0; j <= g.n(); ++j) {
        if (!cut_ok[j]) continue;
        VertexSequence lo, hi;
        for (int v = 1; v <= j; ++v) lo.push_back(v);
        for (int v = j + 1; v <= g.n(); ++v) hi.push_back(v);
        r.add_term({sub_diagram(g, lo), sub_diagram(g, hi)}, 1);
    }
    return r;
}

/// Dual-route Psi coproduct: through D and back on both tensor legs.
inline Tensor2<Diagram> psi_coproduct_via_d(const Diagram& g, BasisConverter& conv) {
    Tensor2<Diagram> r;
    const LinComb<Diagram> in_d = conv.psi_to_d(g);
    for (const auto& [dg, c] : in_d.terms()) {
        const Tensor2<Diagram> dd = dual_coproduct(dg);
        for (const auto& [p, d] : dd.terms()) {
            LinComb<Diagram> left = conv.d_to_psi(p.first);
            LinComb<Diagram> right = conv.d_to_psi(p.second);
            for (const auto& [lb, lc] : left.terms())
                for (const auto& [rb, rc] : right.terms()) r.add_term({lb, rb}, c * d * lc * rc);
        }
    }
    return r;
}

}  // namespace bdiag
