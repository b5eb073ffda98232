#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bdiag/diagram.hpp"

namespace bdiag {

using VertexSequence = std::vector<int>;  // strictly increasing vertex indices

inline void require_vertex_sequence(const Diagram& g, const VertexSequence& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 1 || seq[i] > g.n())
            throw std::invalid_argument("vertex sequence: entry out of range");
        if (i > 0 && seq[i] <= seq[i - 1])
            throw std::invalid_argument("vertex sequence: not strictly increasing");
    }
}

/// Increasing sequence on [1, |G|] \ seq.
inline VertexSequence complement(const Diagram& g, const VertexSequence& seq) {
    require_vertex_sequence(g, seq);
    VertexSequence out;
    std::size_t j = 0;
    for (int i = 1; i <= g.n(); ++i) {
        if (j < seq.size() && seq[j] == i)
            ++j;
        else
            out.push_back(i);
    }
    return out;
}

/// Sub-diagram along a sequence of distinct vertices, taken in the order
/// given (vertex t of the result is seq[t] of g). Edges survive only when
/// both endpoint vertices are retained; a half-edge of a severed
/// cross-boundary edge becomes free, free stays free, cut stays cut. For a
/// non-monotone sequence the result may be an F-diagram.
inline Diagram sub_diagram_ordered(const Diagram& g, const std::vector<int>& seq) {
    std::vector<char> seen(g.n() + 1, 0);
    for (int v : seq) {
        if (v < 1 || v > g.n()) throw std::invalid_argument("vertex sequence: entry out of range");
        if (seen[v]) throw std::invalid_argument("vertex sequence: repeated vertex");
        seen[v] = 1;
    }
    std::vector<int> new_of(g.omega() + 1, 0);  // old half-edge -> new, 0 = dropped
    int next = 1;
    for (int v : seq) {
        auto [lo, hi] = g.vertex_range(v);
        for (int a = lo; a <= hi; ++a) new_of[a] = next++;
    }
    const int omega_new = next - 1;

    DiagramTuple t;
    t.n = static_cast<int>(seq.size());
    for (int v : seq) t.lambda.push_back(g.lambda()[v - 1]);
    t.phi.assign(omega_new, kBlank);

    std::vector<char> outer_free(g.omega() + 1, 0), inner_free(g.omega() + 1, 0);
    for (int a : g.f_up()) outer_free[a] = 1;
    for (int a : g.f_down()) inner_free[a] = 1;
    for (auto [a, b] : g.edges()) {
        bool ka = new_of[a] != 0, kb = new_of[b] != 0;
        if (ka && kb)
            t.phi[new_of[a] - 1] = new_of[b];
        else if (ka)
            outer_free[a] = 1;  // severed: the outer half dangles
        else if (kb)
            inner_free[b] = 1;  // severed: the inner half dangles
    }
    for (int a = 1; a <= g.omega(); ++a) {
        if (!new_of[a]) continue;
        if (outer_free[a]) t.f_up.push_back(new_of[a]);
        if (inner_free[a]) t.f_down.push_back(new_of[a]);
    }
    return Diagram(std::move(t));
}

/// The canonical sub-diagram of an increasing vertex sequence.
inline Diagram sub_diagram(const Diagram& g, const VertexSequence& seq) {
    require_vertex_sequence(g, seq);
    return sub_diagram_ordered(g, seq);
}

/// Maximal edge-connected vertex sets, each increasing, ordered by minimum.
inline std::vector<VertexSequence> connected_components(const Diagram& g) {
    std::vector<int> parent(g.n() + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : g.edges()) {
        int ra = find(g.block_of(a)), rb = find(g.block_of(b));
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<VertexSequence> comps;
    std::vector<int> index(g.n() + 1, -1);
    for (int v = 1; v <= g.n(); ++v) {
        int r = find(v);
        if (index[r] < 0) {
            index[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[index[r]].push_back(v);
    }
    return comps;
}

inline bool is_connected(const Diagram& g) { return connected_components(g).size() == 1; }

/// Split(G): all pairs (I, complement) where I is a union of connected
/// components. Contains 2^{#components} pairs, including both trivial ones.
inline std::vector<std::pair<VertexSequence, VertexSequence>> iso_split(const Diagram& g) {
    auto comps = connected_components(g);
    const std::size_t k = comps.size();
    if (k > 24) throw std::runtime_error("iso_split: too many components");
    std::vector<std::pair<VertexSequence, VertexSequence>> out;
    out.reserve(std::size_t(1) << k);
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        VertexSequence I;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t(1) << i)) I.insert(I.end(), comps[i].begin(), comps[i].end());
        std::sort(I.begin(), I.end());
        out.emplace_back(I, complement(g, I));
    }
    return out;
}

using Permutation = std::vector<int>;  // one-line form, sigma[i-1] = sigma(i)

inline void require_permutation(const Permutation& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("permutation: size mismatch");
    std::vector<char> seen(n + 1, 0);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("permutation: not a bijection");
        seen[v] = 1;
    }
}

inline Permutation inverse(const Permutation& sigma) {
    Permutation inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

/// The induced half-edge permutation sigma[lambda]: position i of the result
/// holds the half-edge sigma_lambda(i) of the original, block by block.
inline Permutation half_edge_permutation(const Permutation& sigma,
                                         const std::vector<int>& lambda) {
    std::vector<int> start(lambda.size() + 1, 1);
    for (std::size_t i = 0; i < lambda.size(); ++i) start[i + 1] = start[i] + lambda[i];
    Permutation sl;
    for (int j : sigma)
        for (int t = 0; t < lambda[j - 1]; ++t) sl.push_back(start[j - 1] + t);
    return sl;
}

/// G^sigma: vertex i of the result is vertex sigma(i) of g, with half-edges
/// relabeled accordingly. The result of permuting a B-diagram is in general
/// only an F-diagram.
inline Diagram permute(const Diagram& g, const Permutation& sigma) {
    require_permutation(sigma, g.n());
    Permutation sl = half_edge_permutation(sigma, g.lambda());
    Permutation slinv = inverse(sl);
    DiagramTuple t;
    t.n = g.n();
    for (int j : sigma) t.lambda.push_back(g.lambda()[j - 1]);
    t.phi.assign(g.omega(), kBlank);
    for (int i = 1; i <= g.omega(); ++i) {
        int old_target = g.phi(sl[i - 1]);
        if (old_target != kBlank) t.phi[i - 1] = slinv[old_target - 1];
    }
    for (int a : g.f_up()) t.f_up.push_back(slinv[a - 1]);
    for (int a : g.f_down()) t.f_down.push_back(slinv[a - 1]);
    return Diagram(std::move(t));
}

/// Disjoint side-by-side placement with index shift (the k = 0 composition).
inline Diagram juxtapose(const Diagram& g, const Diagram& h) {
    DiagramTuple t;
    t.n = g.n() + h.n();
    t.lambda = g.lambda();
    t.lambda.insert(t.lambda.end(), h.lambda().begin(), h.lambda().end());
    const int w = g.omega();
    t.phi = g.phi_word();
    for (int v : h.phi_word()) t.phi.push_back(v == kBlank ? kBlank : v + w);
    t.f_up = g.f_up();
    for (int v : h.f_up()) t.f_up.push_back(v + w);
    t.f_down = g.f_down();
    for (int v : h.f_down()) t.f_down.push_back(v + w);
    return Diagram(std::move(t));
}

/// All words in 1...n shuffled with (n+1)...(n+m); count C(n+m, n).
inline std::vector<Permutation> shuffle_permutations(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("shuffle_permutations: negative size");
    std::vector<Permutation> out;
    const int total = n + m;
    std::vector<int> pick(n);
    std::iota(pick.begin(), pick.end(), 0);  // positions of the first word
    auto emit = [&] {
        Permutation w(total);
        std::vector<char> taken(total, 0);
        for (int i = 0; i < n; ++i) {
            w[pick[i]] = i + 1;
            taken[pick[i]] = 1;
        }
        int next = n + 1;
        for (int p = 0; p < total; ++p)
            if (!taken[p]) w[p] = next++;
        out.push_back(std::move(w));
    };
    if (n == 0) {
        Permutation w(total);
        std::iota(w.begin(), w.end(), 1);
        out.push_back(std::move(w));
        return out;
    }
    while (true) {
        emit();
        int i = n - 1;
        while (i >= 0 && pick[i] == total - n + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

}  // namespace bdiag
