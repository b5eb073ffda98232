#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bdiag/rational.hpp"

namespace bdiag {

/// Truncated formal power series with exact rational coefficients. All
/// operations are closed at the truncation order; no floating point.
class SeriesQ {
public:
    explicit SeriesQ(int order) : c_(order + 1) {
        if (order < 0) throw std::invalid_argument("series: negative order");
    }

    static SeriesQ zero(int order) { return SeriesQ(order); }
    static SeriesQ constant(const Rational& v, int order) {
        SeriesQ s(order);
        s.c_[0] = v;
        return s;
    }
    static SeriesQ z(int order) {
        SeriesQ s(order);
        if (order >= 1) s.c_[1] = Rational(1);
        return s;
    }

    /// Exponential generating function of a counting sequence.
    static SeriesQ egf(const std::vector<Integer>& counts, int order) {
        SeriesQ s(order);
        for (int n = 0; n <= order && n < static_cast<int>(counts.size()); ++n)
            s.c_[n] = Rational(counts[n]) / factorial_q(n);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int i) const { return c_.at(i); }
    Rational& operator[](int i) { return c_.at(i); }

    friend bool operator==(const SeriesQ& a, const SeriesQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SeriesQ& a, const SeriesQ& b) { return !(a == b); }

    friend SeriesQ operator+(const SeriesQ& a, const SeriesQ& b) {
        SeriesQ r(common_order(a, b));
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend SeriesQ operator-(const SeriesQ& a, const SeriesQ& b) {
        SeriesQ r(common_order(a, b));
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
        SeriesQ r(common_order(a, b));
        for (int i = 0; i <= r.order(); ++i)
            for (int j = 0; i + j <= r.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }
    friend SeriesQ operator*(const Rational& v, const SeriesQ& a) {
        SeriesQ r = a;
        for (auto& x : r.c_) x *= v;
        return r;
    }

    SeriesQ derivative() const {
        SeriesQ r(order());
        for (int i = 1; i <= order(); ++i) r.c_[i - 1] = Rational(i) * c_[i];
        r.c_[order()] = Rational(0);
        return r;
    }

    /// exp(f) for f with zero constant term, by the usual first-order
    /// recurrence n y_n = sum k f_k y_{n-k}.
    SeriesQ exp() const {
        if (!c_[0].is_zero()) throw std::invalid_argument("series exp: nonzero constant term");
        SeriesQ y(order());
        y.c_[0] = Rational(1);
        for (int n = 1; n <= order(); ++n) {
            Rational acc;
            for (int k = 1; k <= n; ++k) acc += Rational(k) * c_[k] * y.c_[n - k];
            y.c_[n] = acc / Rational(n);
        }
        return y;
    }

    /// log(f) for f with constant term 1.
    SeriesQ log() const {
        if (c_[0] != Rational(1))
            throw std::invalid_argument("series log: constant term must be 1");
        SeriesQ g(order());
        for (int n = 1; n <= order(); ++n) {
            Rational acc = Rational(n) * c_[n];
            for (int k = 1; k < n; ++k) acc -= Rational(k) * g.c_[k] * c_[n - k];
            g.c_[n] = acc / Rational(n);
        }
        return g;
    }

    /// f^alpha for rational alpha, with f(0) = 1.
    SeriesQ pow(const Rational& alpha) const { return (alpha * log()).exp(); }

    /// f(g) for g with zero constant term.
    SeriesQ compose(const SeriesQ& g) const {
        if (!g.c_[0].is_zero())
            throw std::invalid_argument("series compose: inner constant term must vanish");
        SeriesQ r = SeriesQ::constant(c_[order()], common_order(*this, g));
        for (int i = order() - 1; i >= 0; --i) {
            r = r * g;
            r.c_[0] += c_[i];
        }
        return r;
    }

    /// Integer power by repeated multiplication.
    SeriesQ ipow(int e) const {
        if (e < 0) throw std::invalid_argument("series ipow: negative exponent");
        SeriesQ r = SeriesQ::constant(Rational(1), order());
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i <= order(); ++i) {
            if (i) s += " ";
            s += c_[i].str();
        }
        return s;
    }

private:
    static int common_order(const SeriesQ& a, const SeriesQ& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("series: mixed truncation orders");
        return a.order();
    }

    std::vector<Rational> c_;
};

/// Solves f' = sum_{m in E} f^m with f(0) = 1, coefficient by coefficient.
inline SeriesQ forest_series_ode(const std::vector<int>& arities, int order) {
    SeriesQ f(order);
    f[0] = Rational(1);
    for (int t = 0; t < order; ++t) {
        // right-hand side to order t using the coefficients known so far
        Rational rhs_t;
        for (int m : arities) {
            SeriesQ p = f.ipow(m);
            rhs_t += p[t];
        }
        f[t + 1] = rhs_t / Rational(t + 1);
    }
    return f;
}

/// Closed form for a single arity: exp(z) when m = 1, else the binomial
/// series (1 - (m-1) z)^{1/(1-m)}.
inline SeriesQ forest_series_single(int m, int order) {
    if (m < 1) throw std::invalid_argument("forest series: arity must be positive");
    if (m == 1) return SeriesQ::z(order).exp();
    SeriesQ base = SeriesQ::constant(Rational(1), order);
    base[1] = Rational(-(m - 1));
    return base.pow(Rational(Integer(1), Integer(1 - m)));
}

/// Closed form for arities {1, m} with m > 1: (2 e^{(1-m)z} - 1)^{1/(1-m)}.
inline SeriesQ forest_series_one_and(int m, int order) {
    if (m <= 1) throw std::invalid_argument("forest series: need m > 1");
    SeriesQ inner = Rational(1 - m) * SeriesQ::z(order);
    SeriesQ base = Rational(2) * inner.exp() - SeriesQ::constant(Rational(1), order);
    return base.pow(Rational(Integer(1), Integer(1 - m)));
}

}  // namespace bdiag
