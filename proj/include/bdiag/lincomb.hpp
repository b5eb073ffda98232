#pragma once

#include <functional>
#include <map>
#include <utility>

#include "bdiag/rational.hpp"

namespace bdiag {

/// Finite linear combination of canonical basis elements with exact rational
/// coefficients. Zero coefficients are never stored; iteration order is the
/// basis order, so equal elements print identically.
template <class B>
class LinComb {
public:
    using Map = std::map<B, Rational>;

    LinComb() = default;

    static LinComb unit(const B& b, const Rational& c = Rational(1)) {
        LinComb x;
        x.add_term(b, c);
        return x;
    }

    void add_term(const B& b, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    Rational coefficient(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Sum of all coefficients (total multiplicity for counting sums).
    Rational mass() const {
        Rational m;
        for (const auto& [b, c] : terms_) m += c;
        return m;
    }

    const Map& terms() const { return terms_; }

private:
    Map terms_;
};

/// Coproduct values: linear combinations over ordered basis pairs.
template <class B>
using Tensor2 = LinComb<std::pair<B, B>>;

/// <u, v> = sum over the common support of coefficient products. Both sides
/// are indexed by the same canonical basis family.
template <class B>
Rational pairing(const LinComb<B>& u, const LinComb<B>& v) {
    Rational r;
    const auto& a = u.terms();
    const auto& b = v.terms();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            r += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return r;
}

template <class B>
Rational pairing(const Tensor2<B>& u, const Tensor2<B>& v) {
    return pairing<std::pair<B, B>>(u, v);
}

/// Linear extension of a basis map b -> LinComb.
template <class B, class F>
auto extend_linear(const LinComb<B>& x, F&& f) -> decltype(f(std::declval<B>())) {
    decltype(f(std::declval<B>())) r;
    for (const auto& [b, c] : x.terms()) {
        auto y = f(b);
        y *= c;
        r += y;
    }
    return r;
}

/// Bilinear extension of a product on basis elements.
template <class B, class F>
LinComb<B> extend_bilinear(const LinComb<B>& x, const LinComb<B>& y, F&& f) {
    LinComb<B> r;
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms()) {
            LinComb<B> t = f(bx, by);
            t *= cx * cy;
            r += t;
        }
    return r;
}

template <class B>
Tensor2<B> tensor(const LinComb<B>& x, const LinComb<B>& y) {
    Tensor2<B> r;
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms()) r.add_term({bx, by}, cx * cy);
    return r;
}

/// Componentwise product of tensors: (a (x) b)(c (x) d) = ac (x) bd.
template <class B, class F>
Tensor2<B> tensor_product(const Tensor2<B>& x, const Tensor2<B>& y, F&& basis_product) {
    Tensor2<B> r;
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms()) {
            LinComb<B> left = basis_product(bx.first, by.first);
            LinComb<B> right = basis_product(bx.second, by.second);
            Rational c = cx * cy;
            for (const auto& [lb, lc] : left.terms())
                for (const auto& [rb, rc] : right.terms()) r.add_term({lb, rb}, c * lc * rc);
        }
    return r;
}

template <class B>
Tensor2<B> swap_legs(const Tensor2<B>& x) {
    Tensor2<B> r;
    for (const auto& [b, c] : x.terms()) r.add_term({b.second, b.first}, c);
    return r;
}

}  // namespace bdiag
