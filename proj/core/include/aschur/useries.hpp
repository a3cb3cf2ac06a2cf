#pragma once

#include <cassert>
#include <map>

#include "aschur/rat.hpp"

namespace aschur {

/**
 * Truncated Laurent series in u^{-1} with coefficients in an arbitrary
 * additive structure R.
 *
 * Coefficients are keyed by d, the exponent of u^{-d}; negative d means a
 * positive power of u (finitely many of these occur, e.g. for monic
 * polynomials in u). Terms with d > trunc are discarded, so two series
 * agree when their retained coefficients agree.
 *
 * Multiplication takes the coefficient product as an argument: the same
 * machinery serves scalar series, series of polynomials, and series of
 * morphisms (where the product is composition or a monoidal product).
 */
template <class R>
class USeries {
public:
    explicit USeries(int trunc) : trunc_(trunc) {}

    int trunc() const { return trunc_; }
    const std::map<int, R>& coeffs() const { return c_; }

    void set(int d, R r) {
        if (d > trunc_) return;
        c_.insert_or_assign(d, std::move(r));
    }

    const R* get(int d) const {
        auto it = c_.find(d);
        return it == c_.end() ? nullptr : &it->second;
    }

    void add(int d, const R& r) {
        if (d > trunc_) return;
        auto [it, fresh] = c_.emplace(d, r);
        if (!fresh) it->second = it->second + r;
    }

    USeries operator+(const USeries& rhs) const {
        USeries out(std::min(trunc_, rhs.trunc_));
        for (const auto& [d, r] : c_) out.add(d, r);
        for (const auto& [d, r] : rhs.c_) out.add(d, r);
        return out;
    }

    USeries operator-() const {
        USeries out(trunc_);
        for (const auto& [d, r] : c_) out.set(d, r * Rat(-1));
        return out;
    }

    USeries operator-(const USeries& rhs) const { return *this + (-rhs); }

    USeries operator*(const Rat& s) const {
        USeries out(trunc_);
        for (const auto& [d, r] : c_) out.set(d, r * s);
        return out;
    }

    // Drop coefficients recognized as zero by the predicate.
    template <class IsZero>
    void trim(IsZero is_zero) {
        for (auto it = c_.begin(); it != c_.end();) {
            it = is_zero(it->second) ? c_.erase(it) : std::next(it);
        }
    }

    // Coefficientwise map into another structure.
    template <class S, class F>
    USeries<S> map(F f) const {
        USeries<S> out(trunc_);
        for (const auto& [d, r] : c_) out.set(d, f(r));
        return out;
    }

    // Product with an explicit coefficient multiplication.
    template <class Mul>
    static USeries mul(const USeries& a, const USeries& b, Mul m) {
        USeries out(std::min(a.trunc_, b.trunc_));
        for (const auto& [d1, r1] : a.c_) {
            for (const auto& [d2, r2] : b.c_) {
                if (d1 + d2 > out.trunc_) continue;
                out.add(d1 + d2, m(r1, r2));
            }
        }
        return out;
    }

    // Multiplicative inverse of a = one + (terms with d >= 1). The caller
    // supplies the identity coefficient; all exponents of a must be >= 0.
    template <class Mul>
    static USeries invert(const USeries& a, const R& one, Mul m) {
        assert(a.c_.empty() || a.c_.begin()->first >= 0);
        USeries out(a.trunc_);
        out.set(0, one);
        for (int d = 1; d <= a.trunc_; ++d) {
            bool any = false;
            R acc = one; // placeholder; replaced on first term
            for (const auto& [k, r] : a.c_) {
                if (k < 1 || k > d) continue;
                const R* b = out.get(d - k);
                if (!b) continue;
                R t = m(r, *b);
                if (!any) {
                    acc = std::move(t);
                    any = true;
                } else {
                    acc = acc + t;
                }
            }
            if (any) out.set(d, acc * Rat(-1));
        }
        return out;
    }

    // Substitution u -> u + s, re-expanded in u^{-1}:
    //   (u + s)^{-d} = sum_{k >= 0} C(-d, k) s^k u^{-d-k}.
    // For d <= 0 the sum is finite; for d > 0 it is cut at the truncation.
    USeries shift_u(const Rat& s) const {
        USeries out(trunc_);
        for (const auto& [d, r] : c_) {
            Rat sk = 1;
            for (int k = 0; d + k <= trunc_; ++k) {
                if (d <= 0 && k > -d) break;
                Rat coef = binom(-d, k) * sk;
                if (coef != 0) out.add(d + k, r * coef);
                sk *= s;
            }
        }
        return out;
    }

private:
    int trunc_;
    std::map<int, R> c_;
};

} // namespace aschur
