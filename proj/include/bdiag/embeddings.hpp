#pragma once

#include <map>
#include <string>
#include <vector>

#include "bdiag/enumeration.hpp"
#include "bdiag/hopf.hpp"
#include "bdiag/hopf_b.hpp"
#include "bdiag/partition_algebras.hpp"

namespace bdiag {

/// The diagram of a set partition: one half-edge pair per element, an edge
/// from each element to the next larger element of its block, maxima free on
/// top, minima free below. No half-edge is cut.
inline Diagram g_pi(const SetPartition& pi) {
    const int n = pi.size();
    DiagramTuple t;
    t.n = n;
    t.lambda.assign(n, 1);
    t.phi.assign(n, kBlank);
    for (const auto& block : pi.blocks()) {
        for (std::size_t i = 0; i + 1 < block.size(); ++i) t.phi[block[i] - 1] = block[i + 1];
        t.f_up.push_back(block.back());
        t.f_down.push_back(block.front());
    }
    return Diagram(std::move(t));
}

/// For each vertex count, the connected diagrams over the generator set in
/// canonical-key order; the rank of a connected diagram is its 1-based
/// position. Built lazily, then immutable.
class EtaRanking {
public:
    explicit EtaRanking(GeneratorSet dd, std::size_t cap = default_enumeration_cap())
        : dd_(std::move(dd)), cap_(cap) {}

    const GeneratorSet& generators() const { return dd_; }

    int rank(const Diagram& g) {
        if (!is_connected(g)) throw std::invalid_argument("eta: diagram is not connected");
        const auto& tab = table(g.n());
        auto it = std::lower_bound(tab.begin(), tab.end(), g);
        if (it == tab.end() || !(*it == g))
            throw std::invalid_argument("eta: diagram is not generated by the alphabet");
        return static_cast<int>(it - tab.begin()) + 1;
    }

    const Diagram& diagram_at(int n, int rank) {
        const auto& tab = table(n);
        if (rank < 1 || rank > static_cast<int>(tab.size()))
            throw std::out_of_range("eta: rank out of range");
        return tab[rank - 1];
    }

    /// c^D_n, the number of connected diagrams with n vertices.
    int connected_count(int n) { return static_cast<int>(table(n).size()); }

    /// Bounds sequence (c^D_m)_m usable as colored-partition color bounds.
    ColorBounds bounds_up_to(int max_block_size) {
        std::vector<int> prefix;
        for (int m = 1; m <= max_block_size; ++m) prefix.push_back(connected_count(m));
        return ColorBounds(std::move(prefix));
    }

private:
    const std::vector<Diagram>& table(int n) {
        auto it = tables_.find(n);
        if (it != tables_.end()) return it->second;
        std::vector<Diagram> connected;
        auto levels = generate_levels(dd_, GenerateBy::size, n, cap_);
        for (const auto& g : levels[n])
            if (is_connected(g)) connected.push_back(g);
        // generate_levels emits in key order already; keep the invariant
        // explicit since ranks depend on it
        std::sort(connected.begin(), connected.end());
        return tables_.emplace(n, std::move(connected)).first->second;
    }

    GeneratorSet dd_;
    std::size_t cap_;
    std::map<int, std::vector<Diagram>> tables_;
};

/// The colored partition of the vertex set: connected components as blocks,
/// colored by the rank of the induced connected sub-diagram.
inline ColoredPartition colset(const Diagram& g, EtaRanking& eta) {
    if (!in_alphabet(g, eta.generators()))
        throw std::invalid_argument("colset: diagram uses a vertex outside the generator set");
    std::vector<ColoredPartition::Block> blocks;
    for (const auto& comp : connected_components(g))
        blocks.emplace_back(comp, eta.rank(sub_diagram(g, comp)));
    return ColoredPartition(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Morphism verifiers.
// ---------------------------------------------------------------------------

/// star(G_pi, G_pi') must expand as the monomial-basis product and the
/// diagram coproduct must match the monomial coproduct, for all partitions
/// up to the size bound.
inline CheckReport verify_wsym_embedding(int max_size) {
    std::vector<SetPartition> all;
    for (int n = 0; n <= max_size; ++n)
        for (auto& p : all_set_partitions(n)) all.push_back(std::move(p));
    for (const auto& a : all)
        for (const auto& b : all) {
            if (a.size() + b.size() > max_size) continue;
            LinComb<Diagram> lhs = star(g_pi(a), g_pi(b));
            LinComb<Diagram> rhs;
            const LinComb<SetPartition> mp = m_product(a, b);
            for (const auto& [pi, c] : mp.terms()) rhs.add_term(g_pi(pi), c);
            if (!(lhs == rhs))
                return CheckReport::fail("embedding product fails at " + to_text(a) + " , " +
                                         to_text(b));
        }
    for (const auto& a : all) {
        Tensor2<Diagram> lhs = b_coproduct(g_pi(a));
        Tensor2<Diagram> rhs;
        const Tensor2<SetPartition> mc = m_coproduct(a);
        for (const auto& [pq, c] : mc.terms())
            rhs.add_term({g_pi(pq.first), g_pi(pq.second)}, c);
        if (!(lhs == rhs)) return CheckReport::fail("embedding coproduct fails at " + to_text(a));
    }
    return CheckReport::pass();
}

/// chi(D_G cup D_G') = Psi_colset(G) Psi_colset(G') in the colored algebra,
/// for all diagram pairs over the generators within the vertex bound.
inline CheckReport verify_chi_morphism(const GeneratorSet& dd, int max_vertices,
                                       std::size_t cap = default_enumeration_cap()) {
    EtaRanking eta(dd, cap);
    auto levels = generate_levels(dd, GenerateBy::size, max_vertices, cap);
    for (int na = 0; na <= max_vertices; ++na)
        for (int nb = 0; na + nb <= max_vertices; ++nb)
            for (const auto& a : levels[na])
                for (const auto& b : levels[nb]) {
                    LinComb<ColoredPartition> lhs;
                    const LinComb<Diagram> dp = dual_product(a, b);
                    for (const auto& [g, c] : dp.terms()) lhs.add_term(colset(g, eta), c);
                    LinComb<ColoredPartition> rhs =
                        psi_interleave_product(colset(a, eta), colset(b, eta));
                    if (!(lhs == rhs))
                        return CheckReport::fail("chi morphism fails at " + to_text(a) + " , " +
                                                 to_text(b));
                }
    return CheckReport::pass();
}

}  // namespace bdiag
