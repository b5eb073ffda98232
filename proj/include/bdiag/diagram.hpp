#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bdiag {

/// phi entry for an unmapped outer half-edge (the blank symbol).
inline constexpr int kBlank = 0;

/// Raw 5-tuple candidate, prior to classification.
struct DiagramTuple {
    int n = 0;
    std::vector<int> lambda;
    std::vector<int> phi;  // length omega; kBlank where undefined
    std::vector<int> f_up;
    std::vector<int> f_down;
};

enum class DiagramKind { b_diagram, f_diagram, invalid };

struct ValidationReport {
    DiagramKind kind = DiagramKind::invalid;
    std::string violation;  // names the first violated invariant, empty when valid
};

/// The unique (block, num) pair of half-edge k in the arity vector lambda:
/// k = lambda_1 + ... + lambda_{block-1} + num, 1 <= num <= lambda_block.
inline std::pair<int, int> block_num(const std::vector<int>& lambda, int k) {
    if (k < 1) throw std::out_of_range("block_num: index below 1");
    int acc = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (k <= acc + lambda[i]) return {static_cast<int>(i) + 1, k - acc};
        acc += lambda[i];
    }
    throw std::out_of_range("block_num: index exceeds the half-edge count");
}

namespace detail {

inline std::vector<int> sorted_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline void append_u16(std::string& out, int v) {
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>(v & 0xff));
}

}  // namespace detail

/// Classifies a raw tuple as a B-diagram, an F-diagram (edge direction
/// relaxed to "distinct vertices"), or invalid. Invariants are checked in a
/// fixed order -- length, injectivity, edge direction, disjointness -- and
/// the first violation is reported.
inline ValidationReport validate(const DiagramTuple& t) {
    auto fail = [](std::string s) { return ValidationReport{DiagramKind::invalid, std::move(s)}; };
    // length and ranges
    if (t.n < 0) return fail("length: negative vertex count");
    if (static_cast<int>(t.lambda.size()) != t.n)
        return fail("length: arity vector size differs from the vertex count");
    long omega = 0;
    for (int a : t.lambda) {
        if (a < 1) return fail("length: arity entries must be positive");
        omega += a;
    }
    if (omega > 0xffff) return fail("length: weight too large");
    if (static_cast<long>(t.phi.size()) != omega)
        return fail("length: phi word length differs from the weight");
    for (int v : t.phi)
        if (v != kBlank && (v < 1 || v > omega)) return fail("length: phi value out of range");
    for (int v : t.f_up)
        if (v < 1 || v > omega) return fail("length: outer free half-edge out of range");
    for (int v : t.f_down)
        if (v < 1 || v > omega) return fail("length: inner free half-edge out of range");
    // injectivity
    std::vector<char> seen(static_cast<std::size_t>(omega) + 1, 0);
    for (int v : t.phi)
        if (v != kBlank) {
            if (seen[v]) return fail("injectivity: phi maps two half-edges to one target");
            seen[v] = 1;
        }
    // edge direction
    bool increasing = true;
    for (int a = 1; a <= omega; ++a) {
        int b = t.phi[a - 1];
        if (b == kBlank) continue;
        int ba = block_num(t.lambda, a).first;
        int bb = block_num(t.lambda, b).first;
        if (ba == bb) return fail("edge direction: phi joins a vertex to itself");
        if (ba > bb) increasing = false;
    }
    // disjointness
    for (int v : t.f_up)
        if (t.phi[v - 1] != kBlank)
            return fail("disjointness: outer free half-edge is used by an edge");
    for (int v : t.f_down)
        if (seen[v]) return fail("disjointness: inner free half-edge is used by an edge");
    return {increasing ? DiagramKind::b_diagram : DiagramKind::f_diagram, ""};
}

/// Immutable diagram value. Construction classifies the tuple and rejects
/// invalid ones; the canonical key is computed once and orders diagrams
/// everywhere (maps, eta ranks, printed output).
class Diagram {
public:
    Diagram() { init(); }

    explicit Diagram(DiagramTuple t) : tuple_(std::move(t)) {
        tuple_.f_up = detail::sorted_set(std::move(tuple_.f_up));
        tuple_.f_down = detail::sorted_set(std::move(tuple_.f_down));
        init();
    }

    Diagram(int n, std::vector<int> lambda, std::vector<int> phi, std::vector<int> f_up,
            std::vector<int> f_down)
        : Diagram(DiagramTuple{n, std::move(lambda), std::move(phi), std::move(f_up),
                               std::move(f_down)}) {}

    static const Diagram& empty() {
        static const Diagram e;
        return e;
    }

    int n() const { return tuple_.n; }
    int omega() const { return static_cast<int>(tuple_.phi.size()); }
    const std::vector<int>& lambda() const { return tuple_.lambda; }
    const std::vector<int>& phi_word() const { return tuple_.phi; }
    const std::vector<int>& f_up() const { return tuple_.f_up; }
    const std::vector<int>& f_down() const { return tuple_.f_down; }
    const DiagramTuple& tuple() const { return tuple_; }

    int phi(int a) const { return tuple_.phi[a - 1]; }
    int block_of(int k) const { return block_num(tuple_.lambda, k).first; }
    int num_of(int k) const { return block_num(tuple_.lambda, k).second; }

    /// Half-edge labels of vertex i, as the inclusive range [first, last].
    std::pair<int, int> vertex_range(int i) const {
        int start = 1;
        for (int j = 1; j < i; ++j) start += tuple_.lambda[j - 1];
        return {start, start + tuple_.lambda[i - 1] - 1};
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int a = 1; a <= omega(); ++a)
            if (phi(a) != kBlank) e.emplace_back(a, phi(a));
        return e;
    }

    int tau() const {
        int t = 0;
        for (int v : tuple_.phi)
            if (v != kBlank) ++t;
        return t;
    }

    std::vector<int> e_up() const {
        std::vector<int> r;
        for (int a = 1; a <= omega(); ++a)
            if (phi(a) != kBlank) r.push_back(a);
        return r;
    }
    std::vector<int> e_down() const {
        std::vector<int> r;
        for (int v : tuple_.phi)
            if (v != kBlank) r.push_back(v);
        std::sort(r.begin(), r.end());
        return r;
    }
    std::vector<int> cut_up() const {
        std::vector<char> used(omega() + 1, 0);
        for (int a : e_up()) used[a] = 1;
        for (int a : tuple_.f_up) used[a] = 1;
        std::vector<int> r;
        for (int a = 1; a <= omega(); ++a)
            if (!used[a]) r.push_back(a);
        return r;
    }
    std::vector<int> cut_down() const {
        std::vector<char> used(omega() + 1, 0);
        for (int a : e_down()) used[a] = 1;
        for (int a : tuple_.f_down) used[a] = 1;
        std::vector<int> r;
        for (int a = 1; a <= omega(); ++a)
            if (!used[a]) r.push_back(a);
        return r;
    }

    bool is_b() const { return kind_ == DiagramKind::b_diagram; }
    DiagramKind kind() const { return kind_; }
    bool is_empty() const { return tuple_.n == 0; }

    /// Injective byte encoding; equal diagrams have equal keys. Lexicographic
    /// byte order on keys is the total order used throughout.
    const std::string& key() const { return key_; }

    friend bool operator==(const Diagram& a, const Diagram& b) { return a.key_ == b.key_; }
    friend bool operator!=(const Diagram& a, const Diagram& b) { return a.key_ != b.key_; }
    friend bool operator<(const Diagram& a, const Diagram& b) { return a.key_ < b.key_; }

private:
    void init() {
        ValidationReport rep = validate(tuple_);
        if (rep.kind == DiagramKind::invalid)
            throw std::invalid_argument("invalid diagram: " + rep.violation);
        kind_ = rep.kind;
        key_.reserve(2 * (3 + tuple_.lambda.size() + tuple_.phi.size() + tuple_.f_up.size() +
                          tuple_.f_down.size()));
        detail::append_u16(key_, tuple_.n);
        for (int v : tuple_.lambda) detail::append_u16(key_, v);
        detail::append_u16(key_, static_cast<int>(tuple_.phi.size()));
        for (int v : tuple_.phi) detail::append_u16(key_, v);
        detail::append_u16(key_, static_cast<int>(tuple_.f_up.size()));
        for (int v : tuple_.f_up) detail::append_u16(key_, v);
        detail::append_u16(key_, static_cast<int>(tuple_.f_down.size()));
        for (int v : tuple_.f_down) detail::append_u16(key_, v);
    }

    DiagramTuple tuple_;
    DiagramKind kind_ = DiagramKind::b_diagram;
    std::string key_;
};

// ---------------------------------------------------------------------------
// Text form: B(n; l1,...,ln; phi-word; {F-up}; {F-down}) with '_' for blanks.
// The phi word is a plain digit string when the weight is at most 9 and a
// comma-separated list otherwise. Round-trips bit-exactly.
// ---------------------------------------------------------------------------

inline std::string to_text(const Diagram& g) {
    std::ostringstream os;
    os << "B(" << g.n() << "; ";
    for (std::size_t i = 0; i < g.lambda().size(); ++i) {
        if (i) os << ",";
        os << g.lambda()[i];
    }
    os << "; ";
    if (g.omega() <= 9) {
        for (int v : g.phi_word()) {
            if (v == kBlank)
                os << '_';
            else
                os << v;
        }
    } else {
        for (int a = 1; a <= g.omega(); ++a) {
            if (a > 1) os << ",";
            int v = g.phi(a);
            if (v == kBlank)
                os << '_';
            else
                os << v;
        }
    }
    os << "; {";
    for (std::size_t i = 0; i < g.f_up().size(); ++i) {
        if (i) os << ",";
        os << g.f_up()[i];
    }
    os << "}; {";
    for (std::size_t i = 0; i < g.f_down().size(); ++i) {
        if (i) os << ",";
        os << g.f_down()[i];
    }
    os << "})";
    return os.str();
}

namespace detail {

class TextCursor {
public:
    TextCursor(const std::string& s, std::string what) : s_(s), what_(std::move(what)) {}

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw std::invalid_argument(what_ + ": expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(pos_));
        ++pos_;
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    int integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start)
            throw std::invalid_argument(what_ + ": expected an integer at position " +
                                        std::to_string(start));
        return std::stoi(s_.substr(start, pos_ - start));
    }
    void done() {
        skip_ws();
        if (pos_ != s_.size())
            throw std::invalid_argument(what_ + ": trailing input at position " +
                                        std::to_string(pos_));
    }
    std::size_t pos() const { return pos_; }
    void advance_to(std::size_t p) { pos_ = p; }
    const std::string& text() const { return s_; }

    std::vector<int> braced_set() {
        expect('{');
        std::vector<int> v;
        if (!try_consume('}')) {
            v.push_back(integer());
            while (try_consume(',')) v.push_back(integer());
            expect('}');
        }
        return v;
    }

private:
    const std::string& s_;
    std::string what_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Diagram parse_diagram(const std::string& text) {
    detail::TextCursor c(text, "diagram");
    c.skip_ws();
    c.expect('B');
    c.expect('(');
    DiagramTuple t;
    t.n = c.integer();
    c.expect(';');
    if (!c.peek_is(';')) {
        t.lambda.push_back(c.integer());
        while (c.try_consume(',')) t.lambda.push_back(c.integer());
    }
    c.expect(';');
    long omega = 0;
    for (int a : t.lambda) omega += a;
    // phi word: digits/underscores, or comma-separated when omega > 9
    c.skip_ws();
    {
        const std::string& s = c.text();
        std::size_t p = c.pos();
        std::string word;
        while (p < s.size() && s[p] != ';') word.push_back(s[p++]);
        while (!word.empty() && (word.back() == ' ' || word.back() == '\t')) word.pop_back();
        if (word.find(',') != std::string::npos) {
            std::istringstream ws(word);
            std::string tok;
            while (std::getline(ws, tok, ',')) {
                tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
                if (tok == "_")
                    t.phi.push_back(kBlank);
                else
                    t.phi.push_back(std::stoi(tok));
            }
        } else {
            for (char ch : word) {
                if (ch == ' ' || ch == '\t') continue;
                if (ch == '_')
                    t.phi.push_back(kBlank);
                else if (std::isdigit(static_cast<unsigned char>(ch)))
                    t.phi.push_back(ch - '0');
                else
                    throw std::invalid_argument("diagram: unexpected character '" +
                                                std::string(1, ch) + "' in the phi word");
            }
        }
        c.advance_to(p);
    }
    c.expect(';');
    t.f_up = c.braced_set();
    c.expect(';');
    t.f_down = c.braced_set();
    c.expect(')');
    c.done();
    return Diagram(std::move(t));
}

}  // namespace bdiag
