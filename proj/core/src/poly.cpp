#include "aschur/poly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace aschur {

Poly::Poly(int nvars, const Rat& c) : nvars_(nvars) {
    if (c != 0) terms_.emplace(Exponents(static_cast<size_t>(nvars), 0), c);
}

Poly Poly::variable(int nvars, int i) {
    assert(1 <= i && i <= nvars);
    Exponents e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i - 1)] = 1;
    return monomial(std::move(e));
}

Poly Poly::monomial(Exponents e, const Rat& c) {
    Poly f(static_cast<int>(e.size()));
    if (c != 0) f.terms_.emplace(std::move(e), c);
    return f;
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            terms_.begin()->first == Exponents(static_cast<size_t>(nvars_), 0));
}

Rat Poly::constant_term() const {
    auto it = terms_.find(Exponents(static_cast<size_t>(nvars_), 0));
    return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    }
    return d;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
    assert(static_cast<int>(e.size()) == nvars_);
    if (c == 0) return;
    Rat& t = terms_[e];
    t += c;
    if (t == 0) terms_.erase(e);
}

Poly& Poly::operator+=(const Poly& rhs) {
    assert(nvars_ == rhs.nvars_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    assert(nvars_ == rhs.nvars_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& rhs) const {
    Poly f = *this;
    f += rhs;
    return f;
}

Poly Poly::operator-(const Poly& rhs) const {
    Poly f = *this;
    f -= rhs;
    return f;
}

Poly Poly::operator-() const {
    Poly f(nvars_);
    for (const auto& [e, c] : terms_) f.terms_.emplace(e, -c);
    return f;
}

Poly Poly::operator*(const Poly& rhs) const {
    assert(nvars_ == rhs.nvars_);
    Poly f(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            Exponents e = e1;
            for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
            f.add_term(e, c1 * c2);
        }
    }
    return f;
}

Poly Poly::operator*(const Rat& c) const {
    Poly f(nvars_);
    if (c == 0) return f;
    for (const auto& [e, cc] : terms_) f.terms_.emplace(e, cc * c);
    return f;
}

bool Poly::operator<(const Poly& rhs) const {
    if (nvars_ != rhs.nvars_) return nvars_ < rhs.nvars_;
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    for (; a != terms_.end() && b != rhs.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        int c = cmp(a->second, b->second);
        if (c != 0) return c < 0;
    }
    return b != rhs.terms_.end();
}

Poly Poly::act(const Permutation& w) const {
    assert(w.size() == nvars_);
    Poly f(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents e2(static_cast<size_t>(nvars_), 0);
        for (int i = 1; i <= nvars_; ++i) {
            e2[static_cast<size_t>(w(i) - 1)] = e[static_cast<size_t>(i - 1)];
        }
        f.add_term(e2, c);
    }
    return f;
}

Poly Poly::demazure(int i) const {
    assert(1 <= i && i < nvars_);
    Poly f(nvars_);
    const size_t ia = static_cast<size_t>(i - 1), ib = static_cast<size_t>(i);
    for (const auto& [e, c] : terms_) {
        const int a = e[ia], b = e[ib];
        if (a == b) continue;
        Exponents e2 = e;
        const int lo = std::min(a, b), hi = std::max(a, b);
        const Rat sign = (a > b) ? c : -c;
        for (int k = lo; k < hi; ++k) {
            e2[ia] = k;
            e2[ib] = a + b - 1 - k;
            f.add_term(e2, sign);
        }
    }
    return f;
}

Poly Poly::diamond_s(int i) const {
    return act(Permutation::transposition(nvars_, i)) + demazure(i);
}

Poly Poly::diamond(const Permutation& w) const {
    assert(w.size() == nvars_);
    // Left action: w = s_{j_1} * ... * s_{j_m} acts with s_{j_m} first.
    std::vector<int> word = w.reduced_word();
    Poly f = *this;
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = f.diamond_s(*it);
    return f;
}

Poly Poly::shifted(int nvars, int offset) const {
    assert(offset >= 0 && nvars_ + offset <= nvars);
    Poly f(nvars);
    for (const auto& [e, c] : terms_) {
        Exponents e2(static_cast<size_t>(nvars), 0);
        std::copy(e.begin(), e.end(), e2.begin() + offset);
        f.terms_.emplace(std::move(e2), c);
    }
    return f;
}

Poly Poly::tensor(const Poly& f, const Poly& g) {
    const int n = f.nvars() + g.nvars();
    return f.shifted(n, 0) * g.shifted(n, f.nvars());
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    assert(static_cast<int>(point.size()) == nvars_);
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i) {
            for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) {
                t *= point[static_cast<size_t>(i)];
            }
        }
        total += t;
    }
    return total;
}

Poly Poly::substitute(const std::vector<Poly>& values, int nvars_out) const {
    assert(static_cast<int>(values.size()) == nvars_);
    Poly total(nvars_out);
    for (const auto& [e, c] : terms_) {
        Poly t(nvars_out, c);
        for (int i = 0; i < nvars_; ++i) {
            for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) {
                t = t * values[static_cast<size_t>(i)];
            }
        }
        total += t;
    }
    return total;
}

bool Poly::is_block_symmetric(const Composition& nu) const {
    assert(comp_sum(nu) == nvars_);
    std::vector<int> offs = comp_offsets(nu);
    for (size_t b = 0; b < nu.size(); ++b) {
        for (int i = offs[b] + 1; i < offs[b + 1]; ++i) {
            if (act(Permutation::transposition(nvars_, i)) != *this) return false;
        }
    }
    return true;
}

Poly Poly::homogeneous_part(int d) const {
    Poly f(nvars_);
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0) == d) f.terms_.emplace(e, c);
    }
    return f;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        for (int i = 0; i < nvars_; ++i) {
            if (e[static_cast<size_t>(i)] > 0) {
                os << "*x" << (i + 1);
                if (e[static_cast<size_t>(i)] > 1) os << '^' << e[static_cast<size_t>(i)];
            }
        }
    }
    return os.str();
}

Poly elementary_sym(int m, int d) {
    if (d < 0 || d > m) return Poly(m);
    Poly f(m);
    std::vector<int> idx(static_cast<size_t>(d));
    auto rec = [&](auto&& self, int k, int lo) -> void {
        if (k == d) {
            Poly::Exponents e(static_cast<size_t>(m), 0);
            for (int i : idx) e[static_cast<size_t>(i - 1)] = 1;
            f.add_term(e, 1);
            return;
        }
        for (int i = lo; i <= m; ++i) {
            idx[static_cast<size_t>(k)] = i;
            self(self, k + 1, i + 1);
        }
    };
    rec(rec, 0, 1);
    return f;
}

Poly complete_sym(int m, int d) {
    if (d < 0) return Poly(m);
    Poly f(m);
    for (const auto& lam : partitions_max_parts(d, m)) f += monomial_sym(m, lam);
    return f;
}

Poly power_sym(int m, int d) {
    assert(d >= 1);
    Poly f(m);
    for (int i = 1; i <= m; ++i) {
        Poly::Exponents e(static_cast<size_t>(m), 0);
        e[static_cast<size_t>(i - 1)] = d;
        f.add_term(e, 1);
    }
    return f;
}

Poly monomial_sym(int m, const std::vector<int>& lambda) {
    assert(static_cast<int>(lambda.size()) <= m);
    std::vector<int> e(static_cast<size_t>(m), 0);
    std::copy(lambda.begin(), lambda.end(), e.begin());
    std::sort(e.begin(), e.end());
    Poly f(m);
    do {
        f.add_term(e, 1);
    } while (std::next_permutation(e.begin(), e.end()));
    return f;
}

std::vector<std::vector<int>> partitions_max_parts(int d, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == m) return;
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

std::vector<std::pair<Poly, Poly>> coproduct_split(const Poly& f, int a, int b) {
    assert(f.nvars() == a + b);
    // Expand f in the monomial symmetric basis: supports of distinct
    // m_lambda are disjoint, so the coefficient of m_lambda is the
    // coefficient of any single monomial with sorted exponents lambda.
    std::map<std::vector<int>, Rat> coeffs; // sorted-descending pattern -> c
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> lam = e;
        std::sort(lam.begin(), lam.end(), std::greater<int>());
        auto it = coeffs.find(lam);
        if (it == coeffs.end()) {
            coeffs.emplace(std::move(lam), c);
        } else {
            assert(it->second == c && "coproduct_split requires a symmetric input");
        }
    }
    std::vector<std::pair<Poly, Poly>> out;
    for (const auto& [lam, c] : coeffs) {
        // Distinct nonzero parts with multiplicities.
        std::vector<std::pair<int, int>> parts; // (value, multiplicity)
        for (int v : lam) {
            if (v == 0) continue;
            if (!parts.empty() && parts.back().first == v) {
                ++parts.back().second;
            } else {
                parts.emplace_back(v, 1);
            }
        }
        // Each multiset split lambda = muu union nuu, counted once.
        std::vector<int> muu, nuu;
        auto rec = [&](auto&& self, size_t k) -> void {
            if (k == parts.size()) {
                if (static_cast<int>(muu.size()) > a || static_cast<int>(nuu.size()) > b) return;
                out.emplace_back(monomial_sym(a, muu) * c, monomial_sym(b, nuu));
                return;
            }
            auto [v, mult] = parts[k];
            for (int take = 0; take <= mult; ++take) {
                for (int t = 0; t < take; ++t) muu.push_back(v);
                for (int t = take; t < mult; ++t) nuu.push_back(v);
                self(self, k + 1);
                for (int t = 0; t < take; ++t) muu.pop_back();
                for (int t = take; t < mult; ++t) nuu.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

Poly sym_family(SymKind kind, int d, int r) {
    switch (kind) {
        case SymKind::e: return elementary_sym(r, d);
        case SymKind::h: return complete_sym(r, d);
        case SymKind::p: {
            if (d == 0) return Poly(r, Rat(r));
            // Newton: p_d = (-1)^{d-1} d e_d + sum_{i=1}^{d-1} (-1)^{i-1} e_i p_{d-i}.
            Poly p = elementary_sym(r, d) * (Rat(d) * Rat((d % 2 == 1) ? 1 : -1));
            for (int i = 1; i < d; ++i) {
                Poly t = elementary_sym(r, i) * sym_family(SymKind::p, d - i, r);
                p += (i % 2 == 1) ? t : -t;
            }
            return p;
        }
        case SymKind::tilde_p: {
            if (d == 0) return Poly(r, Rat(r));
            // tilde_p_d = p_d + p_{<d}, where the lower-order correction
            // satisfies
            //   p_{<d} = C(r, d+1)
            //          + sum_{i=1}^{d-1} (-1)^{i-1} (p_{<(d-i)} - C(r-i, d+1-i)) e_i.
            std::vector<Poly> plt(static_cast<size_t>(d) + 1, Poly(r));
            for (int k = 1; k <= d; ++k) {
                Poly acc(r, binom(r, k + 1));
                for (int i = 1; i < k; ++i) {
                    Poly t = (plt[static_cast<size_t>(k - i)] -
                              Poly(r, binom(r - i, k + 1 - i))) *
                             elementary_sym(r, i);
                    acc += (i % 2 == 1) ? t : -t;
                }
                plt[static_cast<size_t>(k)] = acc;
            }
            return sym_family(SymKind::p, d, r) + plt[static_cast<size_t>(d)];
        }
    }
    return Poly(r);
}

std::vector<BlockSymPoly> block_orbit_basis(const Composition& nu, int D) {
    const int r = comp_sum(nu);
    std::vector<int> offs = comp_offsets(nu);
    std::vector<BlockSymPoly> out;
    Poly cur(r, Rat(1));
    auto rec = [&](auto&& self, size_t b, int budget) -> void {
        if (b == nu.size()) {
            out.push_back({nu, cur});
            return;
        }
        for (int d = 0; d <= budget; ++d) {
            for (const auto& lam : partitions_max_parts(d, nu[b])) {
                Poly saved = cur;
                cur = cur * monomial_sym(nu[b], lam).shifted(r, offs[b]);
                self(self, b + 1, budget - d);
                cur = saved;
            }
        }
    };
    rec(rec, 0, D);
    return out;
}

USeries<Poly> expand_linear_inverse(const Poly& c, int N) {
    USeries<Poly> s(N);
    Poly power(c.nvars(), Rat(1));
    for (int d = 0; d + 1 <= N; ++d) {
        if (!power.is_zero()) s.add(d + 1, power);
        power = power * c;
    }
    return s;
}

USeries<Poly> linear_product_series(int r, int pm, int N) {
    assert(pm == 1 || pm == -1);
    if (pm == 1) {
        // prod (u - x_p) = sum_d (-1)^d e_d u^{r-d}.
        USeries<Poly> s(N);
        for (int d = 0; d <= r; ++d) {
            Poly e = elementary_sym(r, d);
            s.add(d - r, (d % 2 == 0) ? e : -e);
        }
        return s;
    }
    // 1 / prod (u - x_p) = product of geometric series.
    USeries<Poly> s(N);
    s.add(0, Poly(r, Rat(1)));
    for (int p = 1; p <= r; ++p) {
        s = USeries<Poly>::mul(s, expand_linear_inverse(Poly::variable(r, p), N),
                               [](const Poly& f, const Poly& g) { return f * g; });
    }
    return s;
}

std::vector<std::vector<int>> monomials_up_to(int m, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(m), 0);
    auto rec = [&](auto&& self, int idx, int rest) -> void {
        if (idx == m) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<size_t>(idx)] = v;
            self(self, idx + 1, rest - v);
        }
        cur[static_cast<size_t>(idx)] = 0;
    };
    rec(rec, 0, d);
    return out;
}

} // namespace aschur
