#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bdiag/rational.hpp"

namespace bdiag {

enum class Boson : char { create, annihilate };

using BosonWord = std::vector<Boson>;

/// sum c_{k,m} (a+)^k a^m, keyed by (creation count, annihilation count).
using NormalForm = std::map<std::pair<int, int>, Integer>;

/// "+-" or "ca" per letter: '+'/'c' creation, '-'/'a' annihilation.
inline BosonWord parse_boson_word(const std::string& s) {
    BosonWord w;
    for (char ch : s) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == '+' || ch == 'c')
            w.push_back(Boson::create);
        else if (ch == '-' || ch == 'a')
            w.push_back(Boson::annihilate);
        else
            throw std::invalid_argument("boson word: unexpected character '" +
                                        std::string(1, ch) + "'");
    }
    return w;
}

inline std::string to_text(const BosonWord& w) {
    std::string s;
    for (Boson b : w) s += (b == Boson::create ? '+' : '-');
    return s;
}

/// The word (a+ a)^n.
inline BosonWord number_operator_power(int n) {
    BosonWord w;
    for (int i = 0; i < n; ++i) {
        w.push_back(Boson::create);
        w.push_back(Boson::annihilate);
    }
    return w;
}

namespace detail {

inline std::vector<std::size_t> redexes(const BosonWord& w) {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == Boson::annihilate && w[i + 1] == Boson::create) r.push_back(i);
    return r;
}

/// Rewrites until every word has all creations in front, choosing the redex
/// with the given policy. Confluence of a a+ -> a+ a + 1 makes the policy
/// irrelevant for the result.
template <class Pick>
NormalForm normal_order_with(const std::map<BosonWord, Integer>& input, Pick&& pick) {
    NormalForm done;
    std::map<BosonWord, Integer> pending = input;
    while (!pending.empty()) {
        auto it = pending.begin();
        BosonWord w = it->first;
        Integer c = it->second;
        pending.erase(it);
        if (c == 0) continue;
        auto rs = redexes(w);
        if (rs.empty()) {
            int creations = 0;
            for (Boson b : w)
                if (b == Boson::create) ++creations;
            done[{creations, static_cast<int>(w.size()) - creations}] += c;
            continue;
        }
        std::size_t i = rs[pick(rs.size())];
        BosonWord swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        BosonWord contracted;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (j != i && j != i + 1) contracted.push_back(w[j]);
        pending[swapped] += c;
        pending[contracted] += c;
    }
    for (auto it = done.begin(); it != done.end();)
        it = it->second == 0 ? done.erase(it) : std::next(it);
    return done;
}

}  // namespace detail

/// Normal ordering by confluent rewriting of a a+ -> a+ a + 1.
inline NormalForm normal_order(const BosonWord& w) {
    std::map<BosonWord, Integer> input{{w, Integer(1)}};
    return detail::normal_order_with(input, [](std::size_t) { return std::size_t(0); });
}

inline NormalForm normal_order_sum(const std::map<BosonWord, Integer>& input) {
    return detail::normal_order_with(input, [](std::size_t) { return std::size_t(0); });
}

/// Same rewriting with a randomized redex schedule; used to exercise
/// confluence.
inline NormalForm normal_order_randomized(const BosonWord& w, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::map<BosonWord, Integer> input{{w, Integer(1)}};
    return detail::normal_order_with(input, [&rng](std::size_t n) {
        return static_cast<std::size_t>(rng() % n);
    });
}

inline std::string to_text(const NormalForm& nf) {
    if (nf.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [km, c] : nf) {
        if (!first) s += " + ";
        first = false;
        std::string coeff = c.get_str();
        bool need_coeff = !(c == 1) || (km.first == 0 && km.second == 0);
        if (need_coeff) s += coeff;
        if (km.first > 0) {
            if (need_coeff) s += "*";
            s += "(a+)^" + std::to_string(km.first);
        }
        if (km.second > 0) {
            if (km.first > 0 || need_coeff) s += "*";
            s += "a^" + std::to_string(km.second);
        }
        first = false;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Classical sequences, exposed for cross-checks against the enumeration.
// ---------------------------------------------------------------------------

/// Stirling numbers of the second kind, S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline Integer stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0) return 0;
    std::vector<Integer> row(k + 1, 0), prev(k + 1, 0);
    prev[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) row[j] = Integer(j) * prev[j] + prev[j - 1];
        row[0] = 0;
        prev = row;
    }
    return prev[k];
}

inline Integer bell(int n) {
    Integer total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

/// Partitions of an n-set into k nonempty ordered lists.
inline Integer lah(int n, int k) {
    if (n == 0 && k == 0) return 1;
    if (n <= 0 || k <= 0 || k > n) return 0;
    return binomial(n - 1, k - 1) * factorial_z(n) / factorial_z(k);
}

/// Partitions of an n-set into lists.
inline Integer lah_total(int n) {
    Integer total = 0;
    for (int k = 0; k <= n; ++k) total += lah(n, k);
    return total;
}

/// Compositions of n into parts 1 and 2: fibonacci(0) = fibonacci(1) = 1.
inline Integer fibonacci(int n) {
    if (n < 0) return 0;
    Integer a = 1, b = 1;  // F_0, F_1
    for (int i = 2; i <= n; ++i) {
        Integer c = a + b;
        a = b;
        b = c;
    }
    return n == 0 ? a : b;
}

}  // namespace bdiag
