#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "bdiag/lincomb.hpp"

namespace bdiag {

/// A graded connected bialgebra presented through its structure maps on
/// basis elements. The grade-0 component must be spanned by `unit` alone.
template <class B>
struct BialgebraOps {
    std::function<LinComb<B>(const B&, const B&)> product;
    std::function<Tensor2<B>(const B&)> coproduct;
    B unit;
    std::function<int(const B&)> grade;
    std::function<std::string(const B&)> show;

    Rational counit(const B& b) const { return b == unit ? Rational(1) : Rational(0); }

    LinComb<B> multiply(const LinComb<B>& x, const LinComb<B>& y) const {
        return extend_bilinear(x, y, product);
    }
    Tensor2<B> comultiply(const LinComb<B>& x) const { return extend_linear(x, coproduct); }
};

struct CheckReport {
    bool ok = true;
    std::string failure;  // describes the first counterexample

    static CheckReport pass() { return {}; }
    static CheckReport fail(std::string what) { return {false, std::move(what)}; }
};

namespace detail {

template <class B>
LinComb<std::tuple<B, B, B>> coassoc_left(const BialgebraOps<B>& ops, const B& x) {
    LinComb<std::tuple<B, B, B>> r;
    const Tensor2<B> dx = ops.coproduct(x);
    for (const auto& [p, c] : dx.terms()) {
        const Tensor2<B> dp = ops.coproduct(p.first);
        for (const auto& [q, d] : dp.terms()) r.add_term({q.first, q.second, p.second}, c * d);
    }
    return r;
}

template <class B>
LinComb<std::tuple<B, B, B>> coassoc_right(const BialgebraOps<B>& ops, const B& x) {
    LinComb<std::tuple<B, B, B>> r;
    const Tensor2<B> dx = ops.coproduct(x);
    for (const auto& [p, c] : dx.terms()) {
        const Tensor2<B> dp = ops.coproduct(p.second);
        for (const auto& [q, d] : dp.terms()) r.add_term({p.first, q.first, q.second}, c * d);
    }
    return r;
}

}  // namespace detail

/// Checks the bialgebra laws on an explicit finite sample of basis elements:
/// associativity and compatibility on all pairs/triples drawn from the
/// sample, coassociativity and counit laws elementwise. Returns the first
/// counterexample found.
template <class B>
CheckReport check_bialgebra(const BialgebraOps<B>& ops, const std::vector<B>& samples) {
    const LinComb<B> one = LinComb<B>::unit(ops.unit);
    if (!(ops.coproduct(ops.unit) == tensor(one, one)))
        return CheckReport::fail("coproduct(unit) != unit (x) unit");
    for (const B& x : samples) {
        const LinComb<B> lx = LinComb<B>::unit(x);
        if (!(ops.multiply(one, lx) == lx) || !(ops.multiply(lx, one) == lx))
            return CheckReport::fail("unit law fails at " + ops.show(x));
        // counit laws
        auto dx = ops.coproduct(x);
        LinComb<B> left, right;
        for (const auto& [p, c] : dx.terms()) {
            left.add_term(p.second, c * ops.counit(p.first));
            right.add_term(p.first, c * ops.counit(p.second));
        }
        if (!(left == lx) || !(right == lx))
            return CheckReport::fail("counit law fails at " + ops.show(x));
        if (!(detail::coassoc_left(ops, x) == detail::coassoc_right(ops, x)))
            return CheckReport::fail("coassociativity fails at " + ops.show(x));
    }
    for (const B& x : samples)
        for (const B& y : samples) {
            // Delta(x y) = Delta(x) Delta(y), product taken componentwise
            Tensor2<B> lhs = ops.comultiply(ops.product(x, y));
            Tensor2<B> rhs = tensor_product(ops.coproduct(x), ops.coproduct(y), ops.product);
            if (!(lhs == rhs))
                return CheckReport::fail("compatibility fails at " + ops.show(x) + ", " +
                                         ops.show(y));
            // counit is an algebra morphism
            Rational eps_prod;
            const LinComb<B> xy = ops.product(x, y);
            for (const auto& [b, c] : xy.terms()) eps_prod += c * ops.counit(b);
            if (eps_prod != ops.counit(x) * ops.counit(y))
                return CheckReport::fail("counit morphism fails at " + ops.show(x) + ", " +
                                         ops.show(y));
        }
    for (const B& x : samples)
        for (const B& y : samples)
            for (const B& z : samples) {
                LinComb<B> lhs = ops.multiply(ops.product(x, y), LinComb<B>::unit(z));
                LinComb<B> rhs = ops.multiply(LinComb<B>::unit(x), ops.product(y, z));
                if (!(lhs == rhs))
                    return CheckReport::fail("associativity fails at " + ops.show(x) + ", " +
                                             ops.show(y) + ", " + ops.show(z));
            }
    return CheckReport::pass();
}

/// Antipode of a graded connected bialgebra via the standard recursion
///   S(unit) = unit,
///   S(u) = - sum S(u^(1)) u^(2)  over coproduct terms with grade(u^(1)) < grade(u).
/// Values are memoized per basis element; instances are cheap to create per
/// call, which keeps concurrent use race-free.
template <class B>
class Antipode {
public:
    explicit Antipode(const BialgebraOps<B>& ops) : ops_(&ops) {}

    const LinComb<B>& of_basis(const B& b) {
        auto it = memo_.find(b);
        if (it != memo_.end()) return it->second;
        int g = ops_->grade(b);
        LinComb<B> r;
        if (g == 0) {
            if (!(b == ops_->unit))
                throw std::runtime_error("antipode: grade-0 element distinct from the unit");
            r = LinComb<B>::unit(b);
        } else {
            const Tensor2<B> db = ops_->coproduct(b);
            for (const auto& [p, c] : db.terms()) {
                if (ops_->grade(p.first) >= g) continue;
                LinComb<B> t = extend_linear(of_basis(p.first), [&](const B& s) {
                    return ops_->product(s, p.second);
                });
                t *= -c;
                r += t;
            }
        }
        return memo_.emplace(b, std::move(r)).first->second;
    }

    LinComb<B> operator()(const LinComb<B>& x) {
        LinComb<B> r;
        for (const auto& [b, c] : x.terms()) {
            LinComb<B> t = of_basis(b);
            t *= c;
            r += t;
        }
        return r;
    }

private:
    const BialgebraOps<B>* ops_;
    std::map<B, LinComb<B>> memo_;
};

/// m o (S (x) id) o Delta = unit o counit, checked on each sample.
template <class B>
CheckReport check_antipode(const BialgebraOps<B>& ops, const std::vector<B>& samples) {
    Antipode<B> S(ops);
    for (const B& x : samples) {
        LinComb<B> acc;
        const Tensor2<B> dx = ops.coproduct(x);
        for (const auto& [p, c] : dx.terms()) {
            LinComb<B> t = extend_linear(
                S.of_basis(p.first), [&](const B& s) { return ops.product(s, p.second); });
            t *= c;
            acc += t;
        }
        LinComb<B> expected = LinComb<B>::unit(ops.unit, ops.counit(x));
        if (!(acc == expected)) return CheckReport::fail("antipode axiom fails at " + ops.show(x));
    }
    return CheckReport::pass();
}

}  // namespace bdiag
