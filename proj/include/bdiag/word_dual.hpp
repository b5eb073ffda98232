#pragma once

#include <memory>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "bdiag/lincomb.hpp"
#include "bdiag/partition_algebras.hpp"

namespace bdiag {

/// Words over a graded alphabet together with the coproduct table of the
/// letters. delta(a) takes values in word (x) word; the alphabet callback
/// enumerates the (finite) set of letters of a given positive grade.
template <class L>
struct GradedLetterCoalgebra {
    std::function<std::vector<L>(int)> alphabet;
    std::function<Tensor2<std::vector<L>>(const L&)> delta;
    std::function<int(const L&)> grade;
};

/// The recursive dual product on words,
///   u1 cup u2 = sum over prefix splits (p1, p2) != (1, 1) and letters a of
///               (p1 (x) p2, delta a) . a (v1 cup v2),
/// memoized per engine instance. Instantiates the duals of every connected
/// graded word bialgebra in the library: the plain shuffle, the set-, list-
/// and colored-partition algebras.
template <class L>
class WordDualEngine {
public:
    using Word = std::vector<L>;

    explicit WordDualEngine(GradedLetterCoalgebra<L> alg) : alg_(std::move(alg)) {}

    LinComb<Word> product(const Word& u1, const Word& u2) {
        auto key = std::make_pair(u1, u2);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        LinComb<Word> r;
        if (u1.empty() && u2.empty()) {
            r.add_term(Word{}, 1);
        } else {
            for (std::size_t k1 = 0; k1 <= u1.size(); ++k1)
                for (std::size_t k2 = 0; k2 <= u2.size(); ++k2) {
                    if (k1 == 0 && k2 == 0) continue;
                    Word p1(u1.begin(), u1.begin() + k1), v1(u1.begin() + k1, u1.end());
                    Word p2(u2.begin(), u2.begin() + k2), v2(u2.begin() + k2, u2.end());
                    int g = word_grade(p1) + word_grade(p2);
                    LinComb<Word> tail;  // computed lazily, only when a letter pairs
                    bool have_tail = false;
                    for (const L& a : alphabet_of_grade(g)) {
                        Rational c = delta_of(a).coefficient({p1, p2});
                        if (c.is_zero()) continue;
                        if (!have_tail) {
                            tail = product(v1, v2);
                            have_tail = true;
                        }
                        for (const auto& [w, cw] : tail.terms()) {
                            Word aw;
                            aw.reserve(w.size() + 1);
                            aw.push_back(a);
                            aw.insert(aw.end(), w.begin(), w.end());
                            r.add_term(std::move(aw), c * cw);
                        }
                    }
                }
        }
        return memo_.emplace(std::move(key), std::move(r)).first->second;
    }

    int word_grade(const Word& w) const {
        int g = 0;
        for (const L& a : w) g += alg_.grade(a);
        return g;
    }

private:
    const std::vector<L>& alphabet_of_grade(int g) {
        auto it = letters_.find(g);
        if (it != letters_.end()) return it->second;
        std::vector<L> ls = g >= 1 ? alg_.alphabet(g) : std::vector<L>{};
        for (const L& a : ls) {
            if (alg_.grade(a) != g)
                throw std::invalid_argument("word dual: alphabet grade mismatch");
        }
        return letters_.emplace(g, std::move(ls)).first->second;
    }

    const Tensor2<Word>& delta_of(const L& a) {
        auto it = deltas_.find(a);
        if (it != deltas_.end()) return it->second;
        Tensor2<Word> d = alg_.delta(a);
        if (!d.coefficient({Word{}, Word{}}).is_zero())
            throw std::invalid_argument(
                "word dual: coproduct table is not connected (grade-0 (x) grade-0 term)");
        return deltas_.emplace(a, std::move(d)).first->second;
    }

    GradedLetterCoalgebra<L> alg_;
    std::map<L, Tensor2<Word>> deltas_;
    std::map<int, std::vector<L>> letters_;
    std::map<std::pair<Word, Word>, LinComb<Word>> memo_;
};

// ---------------------------------------------------------------------------
// Instances.
// ---------------------------------------------------------------------------

/// Primitive letters of prescribed grades: the engine degenerates to the
/// ordinary shuffle product.
inline GradedLetterCoalgebra<int> primitive_letters(std::vector<int> grades) {
    GradedLetterCoalgebra<int> alg;
    auto shared = std::make_shared<std::vector<int>>(std::move(grades));
    alg.alphabet = [shared](int g) {
        std::vector<int> r;
        for (std::size_t i = 0; i < shared->size(); ++i)
            if ((*shared)[i] == g) r.push_back(static_cast<int>(i));
        return r;
    };
    alg.grade = [shared](int letter) { return (*shared)[letter]; };
    alg.delta = [](int letter) {
        Tensor2<std::vector<int>> d;
        d.add_term({{letter}, {}}, 1);
        d.add_term({{}, {letter}}, 1);
        return d;
    };
    return alg;
}

/// Factorization of a partition into its indivisible pieces, the word of
/// letters under the canonical algebra isomorphism.
template <class P>
std::vector<P> factor_indivisible(const P& p) {
    std::vector<P> out;
    std::vector<int> cuts = deconcat_points(p);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto [lo, hi] = deconcat_at(p, cuts[i + 1]);
        auto [drop, piece] = deconcat_at(lo, cuts[i]);
        (void)drop;
        out.push_back(std::move(piece));
    }
    return out;
}

template <class P>
P word_to_partition(const std::vector<P>& w) {
    P acc;
    for (const P& letter : w) acc = shifted_union(acc, letter);
    return acc;
}

namespace detail {

template <class P>
Tensor2<std::vector<P>> letter_delta_as_words(const P& a) {
    Tensor2<std::vector<P>> out;
    const Tensor2<P> d = phi_coproduct(a);
    for (const auto& [pq, c] : d.terms())
        out.add_term({factor_indivisible(pq.first), factor_indivisible(pq.second)}, c);
    return out;
}

}  // namespace detail

/// Indivisible set partitions as letters; instantiates the dual of the
/// word-symmetric-function algebra.
inline GradedLetterCoalgebra<SetPartition> set_partition_letters() {
    GradedLetterCoalgebra<SetPartition> alg;
    alg.alphabet = [](int g) {
        std::vector<SetPartition> r;
        for (auto& p : all_set_partitions(g))
            if (is_indivisible(p)) r.push_back(std::move(p));
        return r;
    };
    alg.grade = [](const SetPartition& p) { return p.size(); };
    alg.delta = [](const SetPartition& a) { return detail::letter_delta_as_words(a); };
    return alg;
}

inline GradedLetterCoalgebra<ListPartition> list_partition_letters() {
    GradedLetterCoalgebra<ListPartition> alg;
    alg.alphabet = [](int g) {
        std::vector<ListPartition> r;
        for (auto& p : all_list_partitions(g))
            if (is_indivisible(p)) r.push_back(std::move(p));
        return r;
    };
    alg.grade = [](const ListPartition& p) { return p.size(); };
    alg.delta = [](const ListPartition& a) { return detail::letter_delta_as_words(a); };
    return alg;
}

inline GradedLetterCoalgebra<ColoredPartition> colored_partition_letters(ColorBounds bounds) {
    GradedLetterCoalgebra<ColoredPartition> alg;
    auto shared = std::make_shared<ColorBounds>(std::move(bounds));
    alg.alphabet = [shared](int g) {
        std::vector<ColoredPartition> r;
        for (auto& p : all_colored_partitions(g, *shared))
            if (is_indivisible(p)) r.push_back(std::move(p));
        return r;
    };
    alg.grade = [](const ColoredPartition& p) { return p.size(); };
    alg.delta = [](const ColoredPartition& a) { return detail::letter_delta_as_words(a); };
    return alg;
}

/// Dual product evaluated through the word engine and mapped back to the
/// partition basis; must reproduce psi_interleave_product.
template <class P, class Engine>
LinComb<P> word_dual_partition_product(Engine& engine, const P& a, const P& b) {
    auto w = engine.product(factor_indivisible(a), factor_indivisible(b));
    LinComb<P> r;
    for (const auto& [word, c] : w.terms()) r.add_term(word_to_partition(word), c);
    return r;
}

}  // namespace bdiag
