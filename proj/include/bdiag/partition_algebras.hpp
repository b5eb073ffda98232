#pragma once

#include <numeric>
#include <functional>

#include "bdiag/hopf.hpp"
#include "bdiag/lincomb.hpp"
#include "bdiag/partitions.hpp"

namespace bdiag {

// ---------------------------------------------------------------------------
// Phi side: shifted concatenation product, block-subset coproduct. Identical
// for set, list and colored partitions.
// ---------------------------------------------------------------------------

template <class P>
LinComb<P> phi_product(const P& a, const P& b) {
    return LinComb<P>::unit(shifted_union(a, b));
}

/// Delta(Phi^p) = sum over ordered pairs of complementary block-position
/// subsets of std(p|I) (x) std(p|J).
template <class P>
Tensor2<P> phi_coproduct(const P& p) {
    const int k = p.block_count();
    if (k > 24) throw std::runtime_error("phi_coproduct: too many blocks");
    Tensor2<P> r;
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        std::vector<int> inside, outside;
        for (int i = 0; i < k; ++i)
            (mask & (std::size_t(1) << i) ? inside : outside).push_back(i);
        r.add_term({restrict_std(p, inside), restrict_std(p, outside)}, 1);
    }
    return r;
}

/// Number of ordered pairs of disjoint block subsets covering big whose
/// standardizations are (p1, p2).
template <class P>
long alpha_coefficient(const P& big, const P& p1, const P& p2) {
    if (p1.size() + p2.size() != big.size()) return 0;
    const int k = big.block_count();
    if (k > 24) throw std::runtime_error("alpha_coefficient: too many blocks");
    long count = 0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        std::vector<int> inside, outside;
        for (int i = 0; i < k; ++i)
            (mask & (std::size_t(1) << i) ? inside : outside).push_back(i);
        if (restrict_std(big, inside) == p1 && restrict_std(big, outside) == p2) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Dual side: interleaving product with multiplicity alpha, deconcatenation
// coproduct.
// ---------------------------------------------------------------------------

/// Psi_{p} Psi_{q} = sum over interleavings; accumulating one term per
/// order-preserving embedding makes the coefficient of each result alpha.
template <class P>
LinComb<P> psi_interleave_product(const P& p, const P& q) {
    const int n1 = p.size(), n2 = q.size();
    LinComb<P> r;
    std::vector<int> pick(n1);
    std::iota(pick.begin(), pick.end(), 1);
    auto emit = [&] {
        std::vector<int> img1(n1), img2(n2);
        std::vector<char> taken(n1 + n2 + 1, 0);
        for (int i = 0; i < n1; ++i) {
            img1[i] = pick[i];
            taken[pick[i]] = 1;
        }
        int next = 0;
        for (int v = 1; v <= n1 + n2; ++v)
            if (!taken[v]) img2[next++] = v;
        std::vector<typename P::Block> blocks;
        for (const auto& b : p.blocks()) blocks.push_back(P::map_block(b, img1));
        for (const auto& b : q.blocks()) blocks.push_back(P::map_block(b, img2));
        r.add_term(P(std::move(blocks)), 1);
    };
    if (n1 == 0) {
        r.add_term(q, 1);
        return r;
    }
    while (true) {
        emit();
        int i = n1 - 1;
        while (i >= 0 && pick[i] == n1 + n2 - (n1 - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < n1; ++j) pick[j] = pick[j - 1] + 1;
    }
    return r;
}

/// Delta_bullet: deconcatenation along shifted-union factorizations.
template <class P>
Tensor2<P> psi_deconcat_coproduct(const P& p) {
    Tensor2<P> r;
    for (int m : deconcat_points(p)) {
        auto [lo, hi] = deconcat_at(p, m);
        r.add_term({std::move(lo), std::move(hi)}, 1);
    }
    return r;
}

// ---------------------------------------------------------------------------
// WSym in the monomial basis.
// ---------------------------------------------------------------------------

/// M_a M_b: sum over partial matchings between the blocks of a and the
/// shifted blocks of b, matched pairs merged.
inline LinComb<SetPartition> m_product(const SetPartition& a, const SetPartition& b) {
    std::vector<SetPartition::Block> shifted;
    {
        std::vector<int> img(b.size());
        for (int i = 0; i < b.size(); ++i) img[i] = i + 1 + a.size();
        for (const auto& blk : b.blocks()) shifted.push_back(SetPartition::map_block(blk, img));
    }
    LinComb<SetPartition> r;
    const int ka = a.block_count();
    std::vector<char> used(ka, 0);
    std::vector<SetPartition::Block> acc;
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == shifted.size()) {
            std::vector<SetPartition::Block> blocks = acc;
            for (int i = 0; i < ka; ++i)
                if (!used[i]) blocks.push_back(a.blocks()[i]);
            r.add_term(SetPartition(std::move(blocks)), 1);
            return;
        }
        acc.push_back(shifted[j]);  // block of b stays alone
        rec(j + 1);
        acc.pop_back();
        for (int i = 0; i < ka; ++i) {
            if (used[i]) continue;
            used[i] = 1;
            SetPartition::Block merged = a.blocks()[i];
            merged.insert(merged.end(), shifted[j].begin(), shifted[j].end());
            acc.push_back(std::move(merged));
            rec(j + 1);
            acc.pop_back();
            used[i] = 0;
        }
    };
    rec(0);
    return r;
}

/// Delta(M_p): same block-subset rule as the Phi basis.
inline Tensor2<SetPartition> m_coproduct(const SetPartition& p) { return phi_coproduct(p); }

/// Phi^p = sum of M over all coarsenings of p (each block of the result is a
/// union of blocks of p).
inline LinComb<SetPartition> phi_in_m(const SetPartition& p) {
    LinComb<SetPartition> r;
    for (const auto& grouping : all_set_partitions(p.block_count())) {
        std::vector<SetPartition::Block> blocks;
        for (const auto& group : grouping.blocks()) {
            SetPartition::Block merged;
            for (int i : group) {
                const auto& b = p.blocks()[i - 1];
                merged.insert(merged.end(), b.begin(), b.end());
            }
            blocks.push_back(std::move(merged));
        }
        r.add_term(SetPartition(std::move(blocks)), 1);
    }
    return r;
}

/// M_p expanded in the Phi basis: inverse of the coarsening sum, computed by
/// the unitriangular recursion over proper coarsenings.
inline LinComb<SetPartition> m_in_phi(const SetPartition& p) {
    LinComb<SetPartition> r = LinComb<SetPartition>::unit(p);
    const LinComb<SetPartition> coarsenings = phi_in_m(p);
    for (const auto& [q, c] : coarsenings.terms()) {
        if (q == p) continue;
        r -= m_in_phi(q);
    }
    return r;
}

/// Block-wise increasing reordering; an isomorphism onto its image in the
/// list-partition algebra.
inline ListPartition aleph_w(const SetPartition& p) {
    std::vector<ListPartition::Block> blocks;
    for (const auto& b : p.blocks()) blocks.push_back(b);  // already sorted
    return ListPartition(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Colored algebras: same operations with the color bounds enforced.
// ---------------------------------------------------------------------------

inline void require_bounds(const ColoredPartition& p, const ColorBounds& bounds) {
    if (!p.respects(bounds))
        throw std::invalid_argument("colored partition violates the color bounds");
}

inline LinComb<ColoredPartition> cwsym_product(const ColoredPartition& a,
                                               const ColoredPartition& b,
                                               const ColorBounds& bounds) {
    require_bounds(a, bounds);
    require_bounds(b, bounds);
    return phi_product(a, b);
}

inline Tensor2<ColoredPartition> cwsym_coproduct(const ColoredPartition& p,
                                                 const ColorBounds& bounds) {
    require_bounds(p, bounds);
    return phi_coproduct(p);
}

inline LinComb<ColoredPartition> cpiqsym_product(const ColoredPartition& a,
                                                 const ColoredPartition& b,
                                                 const ColorBounds& bounds) {
    require_bounds(a, bounds);
    require_bounds(b, bounds);
    return psi_interleave_product(a, b);
}

inline Tensor2<ColoredPartition> cpiqsym_coproduct(const ColoredPartition& p,
                                                   const ColorBounds& bounds) {
    require_bounds(p, bounds);
    return psi_deconcat_coproduct(p);
}

// ---------------------------------------------------------------------------
// Bialgebra adapters for the generic law checkers.
// ---------------------------------------------------------------------------

template <class P>
BialgebraOps<P> phi_bialgebra_ops(std::function<std::string(const P&)> show) {
    BialgebraOps<P> ops;
    ops.product = [](const P& a, const P& b) { return phi_product(a, b); };
    ops.coproduct = [](const P& p) { return phi_coproduct(p); };
    ops.unit = P();
    ops.grade = [](const P& p) { return p.size(); };
    ops.show = std::move(show);
    return ops;
}

template <class P>
BialgebraOps<P> dual_bialgebra_ops(std::function<std::string(const P&)> show) {
    BialgebraOps<P> ops;
    ops.product = [](const P& a, const P& b) { return psi_interleave_product(a, b); };
    ops.coproduct = [](const P& p) { return psi_deconcat_coproduct(p); };
    ops.unit = P();
    ops.grade = [](const P& p) { return p.size(); };
    ops.show = std::move(show);
    return ops;
}

inline BialgebraOps<SetPartition> m_bialgebra_ops() {
    BialgebraOps<SetPartition> ops;
    ops.product = [](const SetPartition& a, const SetPartition& b) { return m_product(a, b); };
    ops.coproduct = [](const SetPartition& p) { return m_coproduct(p); };
    ops.unit = SetPartition();
    ops.grade = [](const SetPartition& p) { return p.size(); };
    ops.show = [](const SetPartition& p) { return to_text(p); };
    return ops;
}

}  // namespace bdiag
