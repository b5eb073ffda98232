#pragma once

#include <functional>
#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bdiag/diagram.hpp"  // detail::TextCursor

namespace bdiag {

namespace detail {

inline void require_cover(const std::vector<const std::vector<int>*>& supports, int n,
                          const char* what) {
    std::vector<char> seen(n + 1, 0);
    int count = 0;
    for (const auto* s : supports)
        for (int e : *s) {
            if (e < 1 || e > n || seen[e])
                throw std::invalid_argument(std::string(what) +
                                            ": blocks must partition an initial segment");
            seen[e] = 1;
            ++count;
        }
    if (count != n)
        throw std::invalid_argument(std::string(what) +
                                    ": blocks must partition an initial segment");
}

}  // namespace detail

/// Set partition of [1, n], blocks sorted internally and ordered by minimum.
class SetPartition {
public:
    using Block = std::vector<int>;

    SetPartition() = default;
    explicit SetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        for (auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("set partition: empty block");
            std::sort(b.begin(), b.end());
            size_ += static_cast<int>(b.size());
        }
        std::vector<const std::vector<int>*> views;
        for (const auto& b : blocks_) views.push_back(&b);
        detail::require_cover(views, size_, "set partition");
        std::sort(blocks_.begin(), blocks_.end());
    }

    int size() const { return size_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Block>& blocks() const { return blocks_; }

    static const std::vector<int>& elements_of(const Block& b) { return b; }
    static Block map_block(const Block& b, const std::vector<int>& img) {
        Block r;
        for (int e : b) r.push_back(img[e - 1]);
        std::sort(r.begin(), r.end());
        return r;
    }

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.blocks_ == b.blocks_;
    }
    friend bool operator<(const SetPartition& a, const SetPartition& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        return a.blocks_ < b.blocks_;
    }

private:
    std::vector<Block> blocks_;
    int size_ = 0;
};

/// Partition of [1, n] into nonempty ordered lists of distinct entries.
class ListPartition {
public:
    using Block = std::vector<int>;

    ListPartition() = default;
    explicit ListPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        for (auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("list partition: empty block");
            size_ += static_cast<int>(b.size());
        }
        std::vector<const std::vector<int>*> views;
        for (const auto& b : blocks_) views.push_back(&b);
        detail::require_cover(views, size_, "list partition");
        std::sort(blocks_.begin(), blocks_.end(), [](const Block& x, const Block& y) {
            int mx = *std::min_element(x.begin(), x.end());
            int my = *std::min_element(y.begin(), y.end());
            if (mx != my) return mx < my;
            return x < y;
        });
    }

    int size() const { return size_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Block>& blocks() const { return blocks_; }

    static const std::vector<int>& elements_of(const Block& b) { return b; }
    static Block map_block(const Block& b, const std::vector<int>& img) {
        Block r;
        for (int e : b) r.push_back(img[e - 1]);  // list order is kept
        return r;
    }

    friend bool operator==(const ListPartition& a, const ListPartition& b) {
        return a.blocks_ == b.blocks_;
    }
    friend bool operator<(const ListPartition& a, const ListPartition& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        return a.blocks_ < b.blocks_;
    }

private:
    std::vector<Block> blocks_;
    int size_ = 0;
};

/// Per-block color bounds: a_m colors are allowed on a block of size m. The
/// sequence is supplied as an explicit finite prefix; probing beyond it is an
/// error rather than a silent default.
class ColorBounds {
public:
    ColorBounds() = default;
    explicit ColorBounds(std::vector<int> prefix) : prefix_(std::move(prefix)) {}
    static ColorBounds constant(int value, int length) {
        return ColorBounds(std::vector<int>(length, value));
    }

    int at(int block_size) const {
        if (block_size < 1 || block_size > static_cast<int>(prefix_.size()))
            throw std::out_of_range("color bounds: block size " + std::to_string(block_size) +
                                    " beyond the supplied prefix");
        return prefix_[block_size - 1];
    }
    int known_length() const { return static_cast<int>(prefix_.size()); }

    friend bool operator==(const ColorBounds& a, const ColorBounds& b) {
        return a.prefix_ == b.prefix_;
    }

private:
    std::vector<int> prefix_;
};

/// Colored set partition: disjoint blocks covering [1, n], each with a color.
/// Color bounds are enforced by the operations, not stored in the value.
class ColoredPartition {
public:
    using Block = std::pair<std::vector<int>, int>;  // (sorted elements, color)

    ColoredPartition() = default;
    explicit ColoredPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        for (auto& [b, color] : blocks_) {
            if (b.empty()) throw std::invalid_argument("colored partition: empty block");
            if (color < 1) throw std::invalid_argument("colored partition: colors start at 1");
            std::sort(b.begin(), b.end());
            size_ += static_cast<int>(b.size());
        }
        std::vector<const std::vector<int>*> views;
        for (const auto& [b, color] : blocks_) views.push_back(&b);
        detail::require_cover(views, size_, "colored partition");
        std::sort(blocks_.begin(), blocks_.end());
    }

    int size() const { return size_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Block>& blocks() const { return blocks_; }

    bool respects(const ColorBounds& bounds) const {
        for (const auto& [b, color] : blocks_)
            if (color > bounds.at(static_cast<int>(b.size()))) return false;
        return true;
    }

    static const std::vector<int>& elements_of(const Block& b) { return b.first; }
    static Block map_block(const Block& b, const std::vector<int>& img) {
        std::vector<int> r;
        for (int e : b.first) r.push_back(img[e - 1]);
        std::sort(r.begin(), r.end());
        return {std::move(r), b.second};
    }

    friend bool operator==(const ColoredPartition& a, const ColoredPartition& b) {
        return a.blocks_ == b.blocks_;
    }
    friend bool operator<(const ColoredPartition& a, const ColoredPartition& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        return a.blocks_ < b.blocks_;
    }

private:
    std::vector<Block> blocks_;
    int size_ = 0;
};

// ---------------------------------------------------------------------------
// Shared operations. All three partition families expose the same surface.
// ---------------------------------------------------------------------------

/// Standardization: relabel blocks over any finite integer support by the
/// unique increasing bijection onto an initial segment. List order and
/// colors are untouched.
template <class P>
P std_partition(const std::vector<typename P::Block>& raw) {
    std::vector<int> support;
    for (const auto& b : raw)
        for (int e : P::elements_of(b)) support.push_back(e);
    std::sort(support.begin(), support.end());
    if (!support.empty()) {
        std::vector<int> img(support.back(), 0);
        for (std::size_t i = 0; i < support.size(); ++i) img[support[i] - 1] = static_cast<int>(i) + 1;
        std::vector<typename P::Block> mapped;
        for (const auto& b : raw) mapped.push_back(P::map_block(b, img));
        return P(std::move(mapped));
    }
    return P();
}

/// p followed by q shifted past it; the product of every Phi basis.
template <class P>
P shifted_union(const P& p, const P& q) {
    std::vector<typename P::Block> blocks = p.blocks();
    std::vector<int> img(q.size());
    for (int i = 0; i < q.size(); ++i) img[i] = i + 1 + p.size();
    for (const auto& b : q.blocks()) blocks.push_back(P::map_block(b, img));
    return P(std::move(blocks));
}

/// std of the sub-multiset of blocks at the given positions.
template <class P>
P restrict_std(const P& p, const std::vector<int>& positions) {
    std::vector<typename P::Block> raw;
    for (int i : positions) raw.push_back(p.blocks()[i]);
    return std_partition<P>(raw);
}

/// Cut values m such that every block lies within [1,m] or [m+1,n]; 0 and n
/// are always present.
template <class P>
std::vector<int> deconcat_points(const P& p) {
    std::vector<char> ok(p.size() + 1, 1);
    for (const auto& b : p.blocks()) {
        const auto& e = P::elements_of(b);
        int lo = *std::min_element(e.begin(), e.end());
        int hi = *std::max_element(e.begin(), e.end());
        for (int m = lo; m < hi; ++m) ok[m] = 0;
    }
    std::vector<int> r;
    for (int m = 0; m <= p.size(); ++m)
        if (ok[m]) r.push_back(m);
    return r;
}

/// p = left (shifted-union) right at the cut m; both halves standardized.
template <class P>
std::pair<P, P> deconcat_at(const P& p, int m) {
    std::vector<typename P::Block> lo, hi;
    for (const auto& b : p.blocks()) {
        const auto& e = P::elements_of(b);
        if (*std::max_element(e.begin(), e.end()) <= m)
            lo.push_back(b);
        else
            hi.push_back(b);
    }
    return {std_partition<P>(lo), std_partition<P>(hi)};
}

/// No nontrivial shifted-union factorization.
template <class P>
bool is_indivisible(const P& p) {
    return p.size() > 0 && deconcat_points(p).size() == 2;
}

// ---------------------------------------------------------------------------
// Exhaustive families for tests and the word-dual alphabet.
// ---------------------------------------------------------------------------

/// All set partitions of [1, n] via restricted growth strings.
inline std::vector<SetPartition> all_set_partitions(int n) {
    std::vector<SetPartition> out;
    std::vector<int> rgs(n, 0);
    auto emit = [&] {
        int k = n ? 1 + *std::max_element(rgs.begin(), rgs.end()) : 0;
        std::vector<SetPartition::Block> blocks(k);
        for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
        out.push_back(SetPartition(std::move(blocks)));
    };
    if (n == 0) {
        out.push_back(SetPartition());
        return out;
    }
    std::function<void(int, int)> rec = [&](int i, int maxseen) {
        if (i == n) {
            emit();
            return;
        }
        for (int v = 0; v <= maxseen + 1; ++v) {
            rgs[i] = v;
            rec(i + 1, std::max(maxseen, v));
        }
    };
    rec(1, 0);  // rgs[0] = 0 fixed
    return out;
}

/// All partitions of [1, n] into lists.
inline std::vector<ListPartition> all_list_partitions(int n) {
    std::vector<ListPartition> out;
    for (const auto& sp : all_set_partitions(n)) {
        std::vector<std::vector<ListPartition::Block>> per_block;
        for (const auto& b : sp.blocks()) {
            std::vector<ListPartition::Block> perms;
            ListPartition::Block w = b;
            std::sort(w.begin(), w.end());
            do perms.push_back(w);
            while (std::next_permutation(w.begin(), w.end()));
            per_block.push_back(std::move(perms));
        }
        std::vector<std::size_t> idx(per_block.size(), 0);
        while (true) {
            std::vector<ListPartition::Block> blocks;
            for (std::size_t i = 0; i < per_block.size(); ++i)
                blocks.push_back(per_block[i][idx[i]]);
            out.push_back(ListPartition(std::move(blocks)));
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == per_block[i].size()) idx[i++] = 0;
            if (i == idx.size()) break;
        }
        if (per_block.empty()) break;  // n = 0 already emitted once
    }
    if (n == 0) out.assign(1, ListPartition());
    return out;
}

/// All colored partitions of [1, n] within the bounds.
inline std::vector<ColoredPartition> all_colored_partitions(int n, const ColorBounds& bounds) {
    std::vector<ColoredPartition> out;
    for (const auto& sp : all_set_partitions(n)) {
        std::vector<int> colors(sp.block_count(), 1);
        while (true) {
            std::vector<ColoredPartition::Block> blocks;
            for (int i = 0; i < sp.block_count(); ++i)
                blocks.emplace_back(sp.blocks()[i], colors[i]);
            out.push_back(ColoredPartition(std::move(blocks)));
            int i = 0;
            while (i < sp.block_count()) {
                int cap = bounds.at(static_cast<int>(sp.blocks()[i].size()));
                if (++colors[i] <= cap) break;
                colors[i++] = 1;
            }
            if (i == sp.block_count()) break;
        }
        if (sp.block_count() == 0) break;  // n = 0
    }
    if (n == 0) out.assign(1, ColoredPartition());
    return out;
}

// ---------------------------------------------------------------------------
// Text forms: {{1,3},{2}}, {[1,3],[2]}, {[{1,2},3],[{3},1]}.
// ---------------------------------------------------------------------------

inline std::string to_text(const SetPartition& p) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
        if (i) os << ",";
        os << "{";
        const auto& b = p.blocks()[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (j) os << ",";
            os << b[j];
        }
        os << "}";
    }
    os << "}";
    return os.str();
}

inline std::string to_text(const ListPartition& p) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
        if (i) os << ",";
        os << "[";
        const auto& b = p.blocks()[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (j) os << ",";
            os << b[j];
        }
        os << "]";
    }
    os << "}";
    return os.str();
}

inline std::string to_text(const ColoredPartition& p) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
        if (i) os << ",";
        os << "[{";
        const auto& b = p.blocks()[i].first;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (j) os << ",";
            os << b[j];
        }
        os << "}," << p.blocks()[i].second << "]";
    }
    os << "}";
    return os.str();
}

inline SetPartition parse_set_partition(const std::string& text) {
    detail::TextCursor c(text, "set partition");
    c.expect('{');
    std::vector<SetPartition::Block> blocks;
    if (!c.try_consume('}')) {
        do blocks.push_back(c.braced_set());
        while (c.try_consume(','));
        c.expect('}');
    }
    c.done();
    return SetPartition(std::move(blocks));
}

inline ListPartition parse_list_partition(const std::string& text) {
    detail::TextCursor c(text, "list partition");
    c.expect('{');
    std::vector<ListPartition::Block> blocks;
    if (!c.try_consume('}')) {
        do {
            c.expect('[');
            ListPartition::Block b;
            if (!c.try_consume(']')) {
                b.push_back(c.integer());
                while (c.try_consume(',')) b.push_back(c.integer());
                c.expect(']');
            }
            blocks.push_back(std::move(b));
        } while (c.try_consume(','));
        c.expect('}');
    }
    c.done();
    return ListPartition(std::move(blocks));
}

inline ColoredPartition parse_colored_partition(const std::string& text) {
    detail::TextCursor c(text, "colored partition");
    c.expect('{');
    std::vector<ColoredPartition::Block> blocks;
    if (!c.try_consume('}')) {
        do {
            c.expect('[');
            std::vector<int> b = c.braced_set();
            c.expect(',');
            int color = c.integer();
            c.expect(']');
            blocks.emplace_back(std::move(b), color);
        } while (c.try_consume(','));
        c.expect('}');
    }
    c.done();
    return ColoredPartition(std::move(blocks));
}

}  // namespace bdiag
