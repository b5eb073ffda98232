#pragma once

#include <numeric>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bdiag/hopf_b.hpp"
#include "bdiag/rational.hpp"

namespace bdiag {

/// Finite set of elementary diagrams (one vertex each).
class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<Diagram> elements) : elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        for (const auto& g : elements_)
            if (g.n() != 1)
                throw std::invalid_argument("generator set: elements must have one vertex");
    }

    const std::vector<Diagram>& elements() const { return elements_; }
    bool contains(const Diagram& g) const {
        return std::binary_search(elements_.begin(), elements_.end(), g);
    }
    int max_weight() const {
        int m = 0;
        for (const auto& g : elements_) m = std::max(m, g.omega());
        return m;
    }
    int max_f_up() const {
        int m = 0;
        for (const auto& g : elements_)
            m = std::max(m, static_cast<int>(g.f_up().size()));
        return m;
    }

private:
    std::vector<Diagram> elements_;
};

inline Diagram elementary(int arity, std::vector<int> f_up, std::vector<int> f_down) {
    return Diagram(1, {arity}, std::vector<int>(arity, kBlank), std::move(f_up),
                   std::move(f_down));
}

// The example families.
inline GeneratorSet preset_w() { return GeneratorSet({elementary(1, {1}, {1})}); }
inline GeneratorSet preset_bw() { return GeneratorSet({elementary(2, {1, 2}, {1})}); }
inline GeneratorSet preset_f() {
    return GeneratorSet({elementary(1, {}, {1}), elementary(2, {}, {1, 2})});
}
inline GeneratorSet preset_s() {
    return GeneratorSet({elementary(1, {}, {1}), elementary(1, {1}, {})});
}
inline GeneratorSet preset_t(const std::vector<int>& arities) {
    std::vector<Diagram> gens;
    for (int m : arities) {
        if (m < 1) throw std::invalid_argument("tree preset: arities must be positive");
        std::vector<int> up(m);
        std::iota(up.begin(), up.end(), 1);
        gens.push_back(elementary(m, up, {1}));
    }
    return GeneratorSet(std::move(gens));
}

/// Every elementary diagram of weight at most max_weight: all arities with
/// all free/cut patterns on both sides.
inline GeneratorSet full_alphabet(int max_weight) {
    std::vector<Diagram> gens;
    for (int arity = 1; arity <= max_weight; ++arity) {
        for (std::size_t up = 0; up < (std::size_t(1) << arity); ++up)
            for (std::size_t down = 0; down < (std::size_t(1) << arity); ++down) {
                std::vector<int> f_up, f_down;
                for (int i = 0; i < arity; ++i) {
                    if (up & (std::size_t(1) << i)) f_up.push_back(i + 1);
                    if (down & (std::size_t(1) << i)) f_down.push_back(i + 1);
                }
                gens.push_back(elementary(arity, std::move(f_up), std::move(f_down)));
            }
    }
    return GeneratorSet(std::move(gens));
}

struct CapExceeded : std::runtime_error {
    std::size_t partial_count;
    explicit CapExceeded(std::size_t n)
        : std::runtime_error("enumeration cap exceeded after " + std::to_string(n) +
                             " diagrams; raise BDIAG_CAP"),
          partial_count(n) {}
};

inline std::size_t default_enumeration_cap() {
    if (const char* env = std::getenv("BDIAG_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 2'000'000;
}

enum class GenerateBy { weight, size };

/// All diagrams over the generator set, graded by weight or by vertex count
/// up to the bound, each exactly once. Every diagram arises uniquely by
/// stacking one generator as the top vertex onto a smaller diagram; the
/// uniqueness is asserted rather than assumed, which doubles as a test of
/// the inductive construction.
inline std::vector<std::vector<Diagram>> generate_levels(
    const GeneratorSet& dd, GenerateBy mode, int bound,
    std::size_t cap = default_enumeration_cap()) {
    if (bound < 0) throw std::invalid_argument("generate: negative bound");
    std::vector<std::vector<Diagram>> levels(bound + 1);
    levels[0].push_back(Diagram::empty());
    std::size_t total = 1;
    for (int level = 1; level <= bound; ++level) {
        std::set<Diagram> seen;
        for (const Diagram& v : dd.elements()) {
            int parent = mode == GenerateBy::weight ? level - v.omega() : level - 1;
            if (parent < 0) continue;
            for (const Diagram& tilde : levels[parent]) {
                for (const auto& spec : all_specs(tilde, v)) {
                    Diagram g = *compose(tilde, v, spec);
                    if (!seen.insert(g).second)
                        throw std::logic_error("generate: duplicate diagram from distinct stacks");
                    if (++total > cap) throw CapExceeded(total - 1);
                }
            }
        }
        levels[level].assign(seen.begin(), seen.end());
    }
    return levels;
}

/// The elementary diagram a vertex of g came from: edges count as free slots
/// of the original generator, cuts stay cut.
inline Diagram vertex_generator(const Diagram& g, int vertex) {
    auto [lo, hi] = g.vertex_range(vertex);
    std::vector<char> outer_used(g.omega() + 1, 0), inner_used(g.omega() + 1, 0);
    for (auto [a, b] : g.edges()) {
        outer_used[a] = 1;
        inner_used[b] = 1;
    }
    std::vector<char> outer_free(g.omega() + 1, 0), inner_free(g.omega() + 1, 0);
    for (int a : g.f_up()) outer_free[a] = 1;
    for (int a : g.f_down()) inner_free[a] = 1;
    std::vector<int> f_up, f_down;
    for (int a = lo; a <= hi; ++a) {
        if (outer_used[a] || outer_free[a]) f_up.push_back(a - lo + 1);
        if (inner_used[a] || inner_free[a]) f_down.push_back(a - lo + 1);
    }
    return elementary(g.lambda()[vertex - 1], std::move(f_up), std::move(f_down));
}

/// True when every vertex of g matches a generator of dd.
inline bool in_alphabet(const Diagram& g, const GeneratorSet& dd) {
    for (int v = 1; v <= g.n(); ++v)
        if (!dd.contains(vertex_generator(g, v))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Counting recurrences. kappa grades by vertex count, d by weight; both
// track the number of free outer half-edges.
// ---------------------------------------------------------------------------

/// Memoized tables for one generator set.
class CountingTables {
public:
    explicit CountingTables(GeneratorSet dd) : dd_(std::move(dd)) {}

    const GeneratorSet& generators() const { return dd_; }

    /// Diagrams with n vertices and p free outer half-edges.
    Integer kappa(int n, int p) {
        if (n < 0 || p < 0) return 0;
        if (n == 0) return p == 0 ? 1 : 0;
        auto key = std::make_pair(n, p);
        auto it = kappa_.find(key);
        if (it != kappa_.end()) return it->second;
        Integer total = 0;
        for (const Diagram& v : dd_.elements()) {
            const int fu = static_cast<int>(v.f_up().size());
            const int fd = static_cast<int>(v.f_down().size());
            for (int j = 0; j <= fd; ++j) {
                int pp = p - fu + j;
                if (pp < 0) continue;
                total += factorial_z(j) * binomial(fd, j) * binomial(pp, j) * kappa(n - 1, pp);
            }
        }
        kappa_.emplace(key, total);
        return total;
    }

    /// Diagrams with weight n and p free outer half-edges.
    Integer d(int n, int p) {
        if (n < 0 || p < 0) return 0;
        if (n == 0) return p == 0 ? 1 : 0;
        auto key = std::make_pair(n, p);
        auto it = d_.find(key);
        if (it != d_.end()) return it->second;
        Integer total = 0;
        for (const Diagram& v : dd_.elements()) {
            const int fu = static_cast<int>(v.f_up().size());
            const int fd = static_cast<int>(v.f_down().size());
            for (int j = 0; j <= fd; ++j) {
                int pp = p - fu + j;
                if (pp < 0) continue;
                total +=
                    factorial_z(j) * binomial(fd, j) * binomial(pp, j) * d(n - v.omega(), pp);
            }
        }
        d_.emplace(key, total);
        return total;
    }

    /// Total count by vertex number.
    Integer beta(int n) {
        Integer total = 0;
        for (int p = 0; p <= n * std::max(1, dd_.max_f_up()); ++p) total += kappa(n, p);
        return total;
    }

    /// Total count by weight.
    Integer alpha(int n) {
        Integer total = 0;
        for (int p = 0; p <= n; ++p) total += d(n, p);
        return total;
    }

private:
    GeneratorSet dd_;
    std::map<std::pair<int, int>, Integer> kappa_;
    std::map<std::pair<int, int>, Integer> d_;
};

/// Full-alphabet diagram counts by (weight, free outer half-edges): the
/// closed recurrence summing over the top vertex's arity i, free inner count
/// j, free outer count k and edge count l.
class FullAlphabetTable {
public:
    Integer d(int p, int q) {
        if (p == 0 && q == 0) return 1;
        if (p <= 0 || q < 0) return 0;
        auto key = std::make_pair(p, q);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Integer total = 0;
        for (int i = 1; i <= p; ++i)
            for (int j = 0; j <= i; ++j)
                for (int k = 0; k <= i; ++k)
                    for (int l = 0; l <= j; ++l) {
                        int qq = q - k + l;
                        if (qq < 0) continue;
                        total += factorial_z(l) * binomial(j, l) * binomial(qq, l) *
                                 binomial(i, j) * binomial(i, k) * d(p - i, qq);
                    }
        memo_.emplace(key, total);
        return total;
    }

private:
    std::map<std::pair<int, int>, Integer> memo_;
};

// ---------------------------------------------------------------------------
// Sequence tables: recurrence and brute force side by side.
// ---------------------------------------------------------------------------

struct SequenceRow {
    int index = 0;
    Integer by_recurrence;
    Integer by_enumeration;
    bool agree() const { return by_recurrence == by_enumeration; }
};

enum class SequenceStat { beta, alpha, c, kappa, d };

/// beta (by vertices), alpha (by weight) or c (connected, by vertices),
/// computed independently from the recurrences and from exhaustive
/// generation. The c column has no recurrence; both entries come from the
/// enumeration so callers can consume one table shape.
inline std::vector<SequenceRow> sequence_table(const GeneratorSet& dd, SequenceStat stat,
                                               int limit,
                                               std::size_t cap = default_enumeration_cap()) {
    CountingTables tables(dd);
    std::vector<SequenceRow> rows;
    const GenerateBy mode =
        stat == SequenceStat::alpha ? GenerateBy::weight : GenerateBy::size;
    auto levels = generate_levels(dd, mode, limit, cap);
    for (int n = 0; n <= limit; ++n) {
        SequenceRow row;
        row.index = n;
        switch (stat) {
            case SequenceStat::beta:
                row.by_recurrence = tables.beta(n);
                row.by_enumeration = static_cast<long>(levels[n].size());
                break;
            case SequenceStat::alpha:
                row.by_recurrence = tables.alpha(n);
                row.by_enumeration = static_cast<long>(levels[n].size());
                break;
            case SequenceStat::c: {
                long connected = 0;
                for (const auto& g : levels[n])
                    if (is_connected(g)) ++connected;
                row.by_recurrence = connected;
                row.by_enumeration = connected;
                break;
            }
            default:
                throw std::invalid_argument("sequence_table: kappa and d are two-parameter");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Connected counts c_1..c_limit by exhaustive generation.
inline std::vector<Integer> connected_counts(const GeneratorSet& dd, int limit,
                                             std::size_t cap = default_enumeration_cap()) {
    auto levels = generate_levels(dd, GenerateBy::size, limit, cap);
    std::vector<Integer> c(limit + 1, 0);
    for (int n = 1; n <= limit; ++n) {
        long connected = 0;
        for (const auto& g : levels[n])
            if (is_connected(g)) ++connected;
        c[n] = connected;
    }
    return c;
}

}  // namespace bdiag
