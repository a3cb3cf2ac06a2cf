#include "aschur/tenspace.hpp"

#include <cassert>

namespace aschur {

Composition word_content(const Word& i, int n) {
    Composition mu(static_cast<size_t>(n), 0);
    for (int v : i) {
        assert(1 <= v && v <= n);
        ++mu[static_cast<size_t>(v - 1)];
    }
    return mu;
}

Word word_act(const Word& i, const Permutation& w) {
    assert(static_cast<int>(i.size()) == w.size());
    Word out(i.size());
    for (int p = 1; p <= w.size(); ++p) out[static_cast<size_t>(p - 1)] = i[static_cast<size_t>(w(p) - 1)];
    return out;
}

Word dominant_word(const Composition& mu) {
    Word out;
    for (size_t v = 0; v < mu.size(); ++v) {
        out.insert(out.end(), static_cast<size_t>(mu[v]), static_cast<int>(v) + 1);
    }
    return out;
}

Permutation sorting_permutation(const Word& i, int n) {
    // w(p) = offset of the letter i_p plus its occurrence count so far;
    // this is the minimal coset representative with i = i^mu . w.
    Composition mu = word_content(i, n);
    std::vector<int> offs = comp_offsets(mu);
    std::vector<int> seen(static_cast<size_t>(n), 0);
    std::vector<int> v(i.size());
    for (size_t p = 0; p < i.size(); ++p) {
        const int letter = i[p];
        v[p] = offs[static_cast<size_t>(letter - 1)] + (++seen[static_cast<size_t>(letter - 1)]);
    }
    return Permutation(std::move(v));
}

TensorVector TensorVector::basis(int n, const Word& i) {
    TensorVector tv(n, static_cast<int>(i.size()));
    tv.add_term(i, AHElement::one(static_cast<int>(i.size())));
    return tv;
}

void TensorVector::add_term(const Word& i, const AHElement& h) {
    assert(static_cast<int>(i.size()) == r_ && h.rank() == r_);
    if (h.is_zero()) return;
    auto [it, fresh] = terms_.emplace(i, h);
    if (!fresh) {
        it->second = it->second + h;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorVector TensorVector::operator+(const TensorVector& rhs) const {
    assert(n_ == rhs.n_ && r_ == rhs.r_);
    TensorVector out = *this;
    for (const auto& [i, h] : rhs.terms_) out.add_term(i, h);
    return out;
}

TensorVector TensorVector::operator-(const TensorVector& rhs) const {
    return *this + rhs * Rat(-1);
}

TensorVector TensorVector::operator*(const Rat& c) const {
    TensorVector out(n_, r_);
    if (c == 0) return out;
    for (const auto& [i, h] : terms_) out.terms_.emplace(i, h * c);
    return out;
}

TensorVector TensorVector::times(const AHElement& a) const {
    TensorVector out(n_, r_);
    for (const auto& [i, h] : terms_) out.add_term(i, h * a);
    return out;
}

TensorVector TensorVector::left_mul(const AHElement& a) const {
    TensorVector out(n_, r_);
    for (const auto& [i, h] : terms_) out.add_term(i, a * h);
    return out;
}

TensorVector TensorVector::word_shift(const Permutation& w) const {
    TensorVector out(n_, r_);
    for (const auto& [i, h] : terms_) out.add_term(word_act(i, w), h);
    return out;
}

std::map<Composition, InducedVector> project(const TensorVector& tv) {
    std::map<Composition, InducedVector> out;
    for (const auto& [i, h] : tv.terms()) {
        Composition mu = word_content(i, tv.n());
        Permutation w = sorting_permutation(i, tv.n());
        auto it = out.find(mu);
        if (it == out.end()) it = out.emplace(mu, InducedVector(mu)).first;
        // m_mu (w h): move w into the AH factor, then normalize.
        AHElement wh = AHElement::from_perm(w) * h;
        for (const auto& [u, f] : wh.terms()) it->second.add_term(u, f);
    }
    return out;
}

USeries<TensorVector> ytt_act(int i, int j, const TensorVector& tv, int N) {
    const int n = tv.n(), r = tv.rank();
    assert(1 <= i && i <= n && 1 <= j && j <= n);
    USeries<TensorVector> out(N);
    if (i == j) out.add(0, tv);
    // Subsets of strand positions as bitmasks of {1..r}.
    for (int mask = 1; mask < (1 << r); ++mask) {
        std::vector<int> ps;
        for (int p = 1; p <= r; ++p) {
            if (mask & (1 << (p - 1))) ps.push_back(p);
        }
        const int s = static_cast<int>(ps.size());
        if (s > N) continue;
        // Index chains i = i_0, i_1, ..., i_s = j.
        std::vector<int> chain(static_cast<size_t>(s) + 1);
        chain.front() = i;
        chain.back() = j;
        auto rec = [&](auto&& self, int k) -> void {
            if (k == s) {
                // Apply the matrix units to each word, then distribute
                // the expanded denominators.
                TensorVector moved(n, r);
                for (const auto& [word, h] : tv.terms()) {
                    bool ok = true;
                    for (int t = 0; ok && t < s; ++t) {
                        if (word[static_cast<size_t>(ps[static_cast<size_t>(t)] - 1)] !=
                            chain[static_cast<size_t>(t) + 1]) {
                            ok = false;
                        }
                    }
                    if (!ok) continue;
                    Word w2 = word;
                    for (int t = 0; t < s; ++t) {
                        w2[static_cast<size_t>(ps[static_cast<size_t>(t)] - 1)] =
                            chain[static_cast<size_t>(t)];
                    }
                    moved.add_term(w2, h);
                }
                if (moved.is_zero()) return;
                // 1 / prod_k (u - x_{p_k}) = sum over exponents m_k >= 0 of
                // prod x_{p_k}^{m_k} u^{-(s + sum m)}.
                std::vector<int> expo(static_cast<size_t>(s), 0);
                auto mono = [&](auto&& mself, int t, int budget) -> void {
                    if (t == s) {
                        Poly::Exponents e(static_cast<size_t>(r), 0);
                        for (int q = 0; q < s; ++q) {
                            e[static_cast<size_t>(ps[static_cast<size_t>(q)] - 1)] =
                                expo[static_cast<size_t>(q)];
                        }
                        int total = s;
                        for (int v : expo) total += v;
                        TensorVector piece =
                            moved.left_mul(AHElement::from_poly(Poly::monomial(e)));
                        if (!piece.is_zero()) out.add(total, piece);
                        return;
                    }
                    for (int m = 0; m <= budget; ++m) {
                        expo[static_cast<size_t>(t)] = m;
                        mself(mself, t + 1, budget - m);
                    }
                    expo[static_cast<size_t>(t)] = 0;
                };
                mono(mono, 0, N - s);
                return;
            }
            for (int v = 1; v <= n; ++v) {
                chain[static_cast<size_t>(k)] = v;
                self(self, k + 1);
            }
        };
        rec(rec, 1);
    }
    out.trim([](const TensorVector& t) { return t.is_zero(); });
    return out;
}

} // namespace aschur
