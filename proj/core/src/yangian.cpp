#include "aschur/yangian.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "aschur/linalg.hpp"
#include "aschur/tenspace.hpp"

namespace aschur {

namespace {

using PS = USeries<Poly>;

ASElement as_prod(const ASElement& a, const ASElement& b) { return a * b; }

ASeries s_mul(const ASeries& a, const ASeries& b) {
    return ASeries::mul(a, b, as_prod);
}

ASeries s_inv(const ASeries& a, int n, int r) {
    return ASeries::invert(a, ASElement::one(n, r), as_prod);
}

void s_trim(ASeries& s) {
    s.trim([](const ASElement& z) { return z.is_zero(); });
}

PS ps_mul(const PS& a, const PS& b) {
    return PS::mul(a, b, [](const Poly& f, const Poly& g) { return f * g; });
}

// Series expansions of 1/(u - x_p) and 1 + 1/(u - x_p) in r variables.
PS inv_factor(int r, int p, int N) {
    return expand_linear_inverse(Poly::variable(r, p), N);
}

PS one_plus_inv(int r, int p, int N) {
    PS s = inv_factor(r, p, N);
    s.add(0, Poly(r, Rat(1)));
    return s;
}

CosetMatrix diag_of(const Composition& mu) {
    const int n = static_cast<int>(mu.size());
    CosetMatrix a(n, n);
    for (int i = 1; i <= n; ++i) a.at(i, i) = mu[static_cast<size_t>(i - 1)];
    return a;
}

// Coefficient of u^{-d} in an entry, with the u^0 convention
// T_{i,j}^{(0)} = delta_{i,j}.
ASElement t_coef(const TMatrixImage& t, int i, int j, int d) {
    if (d == 0) {
        return i == j ? ASElement::one(t.n, t.r) : ASElement(t.n, t.r);
    }
    const ASElement* p = t.entry(i, j).get(d);
    return p ? *p : ASElement(t.n, t.r);
}

// Keep only the blocks whose source and target weights have the given
// part (first or last) equal to m: the two-sided cut by the corner
// idempotent of a strand adjunction.
ASElement corner_cut(const ASElement& x, int m, bool first) {
    ASElement z(x.n(), x.r());
    for (const auto& [key, mor] : x.blocks()) {
        const Composition& lam = key.first;
        const Composition& mu = key.second;
        const int a = first ? lam.front() : lam.back();
        const int b = first ? mu.front() : mu.back();
        if (a == m && b == m) z.add_block(mor);
    }
    return z;
}

// Blockwise strand adjunction into AS(n+1, r+m).
ASElement adjoin(const ASElement& x, int m, bool on_left) {
    ASElement z(x.n() + 1, x.r() + m);
    for (const auto& [key, mor] : x.blocks()) {
        z.add_block(strand_adjoin(mor, m, on_left));
    }
    return z;
}

// Sparse coordinates of an ASElement in the basis indexed by
// (target, source, matrix, exponent vector).
using FlatKey = std::tuple<Composition, Composition, CosetMatrix, std::vector<int>>;

std::map<FlatKey, Rat> flatten(const ASElement& x) {
    std::map<FlatKey, Rat> v;
    for (const auto& [key, mor] : x.blocks()) {
        for (const auto& [a, f] : mor.terms()) {
            for (const auto& [e, c] : f.terms()) {
                v.emplace(FlatKey{key.first, key.second, a, e}, c);
            }
        }
    }
    return v;
}

} // namespace

bool series_equal(const ASeries& a, const ASeries& b) {
    ASeries x = a, y = b;
    s_trim(x);
    s_trim(y);
    const int N = std::min(x.trunc(), y.trunc());
    std::map<int, ASElement> cx, cy;
    for (const auto& [d, z] : x.coeffs()) {
        if (d <= N) cx.emplace(d, z);
    }
    for (const auto& [d, z] : y.coeffs()) {
        if (d <= N) cy.emplace(d, z);
    }
    return cx == cy;
}

bool tmatrix_equal(const TMatrixImage& a, const TMatrixImage& b) {
    if (a.n != b.n || a.r != b.r) return false;
    for (int i = 1; i <= a.n; ++i) {
        for (int j = 1; j <= a.n; ++j) {
            if (!series_equal(a.entry(i, j), b.entry(i, j))) return false;
        }
    }
    return true;
}

TMatrixImage drinfeld_image(int n, int r, int N) {
    TMatrixImage t(n, r, N);
    for (const Composition& mu : enumerate_compositions(n, r)) {
        const TensorVector gen = TensorVector::basis(n, dominant_word(mu));
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                const USeries<TensorVector> s = ytt_act(i, j, gen, N);
                for (const auto& [d, tv] : s.coeffs()) {
                    const std::map<Composition, InducedVector> parts = project(tv);
                    for (const auto& [lam, v] : parts) {
                        if (v.is_zero()) continue;
                        const Morphism m = extract(v, lam, mu);
                        t.entry(i, j).add(d, ASElement::from_morphism(n, r, m));
                    }
                }
            }
        }
    }
    for (ASeries& s : t.entries) s_trim(s);
    return t;
}

TMatrixImage slava_closed_form(int n, int r, int N) {
    TMatrixImage t(n, r, N);
    const std::vector<Composition> weights = enumerate_compositions(n, r);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            // Chains j_1 < ... < j_t = j with j_1 <= i: subsets of
            // {1, ..., j-1} (possibly empty when j <= i) with j appended.
            for (int mask = 0; mask < (1 << (j - 1)); ++mask) {
                std::vector<int> chain;
                for (int v = 1; v < j; ++v) {
                    if (mask & (1 << (v - 1))) chain.push_back(v);
                }
                chain.push_back(j);
                if (chain.front() > i) continue;
                const int j1 = chain.front();
                const int tlen = static_cast<int>(chain.size());
                for (const Composition& mu : weights) {
                    if (i != j1 && mu[static_cast<size_t>(j1 - 1)] == 0) continue;
                    bool ok = true;
                    for (int k = 1; k < tlen; ++k) {
                        if (mu[static_cast<size_t>(chain[static_cast<size_t>(k)] - 1)] == 0) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;

                    CosetMatrix a = diag_of(mu);
                    if (i != j1) {
                        a.at(i, j1) += 1;
                        a.at(j1, j1) -= 1;
                    }
                    for (int k = 1; k < tlen; ++k) {
                        a.at(chain[static_cast<size_t>(k - 1)], chain[static_cast<size_t>(k)]) += 1;
                        a.at(chain[static_cast<size_t>(k)], chain[static_cast<size_t>(k)]) -= 1;
                    }

                    const std::vector<int> offs = comp_offsets(mu);
                    const int a1 = offs[static_cast<size_t>(j1 - 1)] + 1;
                    const int b1 = offs[static_cast<size_t>(j1)];
                    PS f(N);
                    f.set(0, Poly(r, Rat(1)));
                    if (i != j1) {
                        for (int p = a1; p <= b1 - 1; ++p) {
                            f = ps_mul(f, one_plus_inv(r, p, N));
                        }
                        f = ps_mul(f, inv_factor(r, b1, N));
                    } else {
                        for (int p = a1; p <= b1; ++p) {
                            f = ps_mul(f, one_plus_inv(r, p, N));
                        }
                    }
                    for (int k = 1; k < tlen; ++k) {
                        const int ak = offs[static_cast<size_t>(chain[static_cast<size_t>(k)] - 1)] + 1;
                        f = ps_mul(f, inv_factor(r, ak, N));
                    }

                    for (const auto& [d, g] : f.coeffs()) {
                        if (g.is_zero()) continue;
                        t.entry(i, j).add(d, ASElement::from_morphism(n, r, Morphism::xi(a, g)));
                    }
                }
            }
        }
    }
    for (ASeries& s : t.entries) s_trim(s);
    return t;
}

GaussFactors gauss_factorize(const TMatrixImage& t) {
    const int n = t.n;
    std::vector<std::vector<ASeries>> w(
        static_cast<size_t>(n), std::vector<ASeries>(static_cast<size_t>(n), ASeries(t.N)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            w[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = t.entry(i, j);
        }
    }
    GaussFactors out;
    for (int k = 1; k <= n; ++k) {
        ASeries dk = w[static_cast<size_t>(k - 1)][static_cast<size_t>(k - 1)];
        s_trim(dk);
        const ASElement* head = dk.get(0);
        if (head == nullptr || !(*head == ASElement::one(t.n, t.r))) {
            throw std::runtime_error("gauss_factorize: pivot is not invertible");
        }
        out.d.push_back(dk);
        const ASeries dkinv = s_inv(dk, t.n, t.r);
        for (int j = k + 1; j <= n; ++j) {
            out.e.emplace(std::make_pair(k, j),
                          s_mul(dkinv, w[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)]));
        }
        for (int i = k + 1; i <= n; ++i) {
            out.f.emplace(std::make_pair(k, i),
                          s_mul(w[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)], dkinv));
        }
        for (int i = k + 1; i <= n; ++i) {
            for (int j = k + 1; j <= n; ++j) {
                ASeries& cell = w[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
                cell = cell -
                       s_mul(s_mul(w[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)], dkinv),
                             w[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)]);
            }
        }
    }
    for (ASeries& s : out.d) s_trim(s);
    for (auto& [key, s] : out.e) s_trim(s);
    for (auto& [key, s] : out.f) s_trim(s);
    return out;
}

bool gauss_remultiply_check(const TMatrixImage& t, const GaussFactors& g) {
    const int n = t.n;
    auto upper = [&](int k, int j) -> ASeries { // entry (k, j) of E
        if (k == j) {
            ASeries s(t.N);
            s.set(0, ASElement::one(t.n, t.r));
            return s;
        }
        return g.e.at(std::make_pair(k, j));
    };
    auto lower = [&](int i, int k) -> ASeries { // entry (i, k) of F
        if (i == k) {
            ASeries s(t.N);
            s.set(0, ASElement::one(t.n, t.r));
            return s;
        }
        return g.f.at(std::make_pair(k, i));
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            ASeries acc(t.N);
            for (int k = 1; k <= std::min(i, j); ++k) {
                acc = acc + s_mul(s_mul(lower(i, k), g.d[static_cast<size_t>(k - 1)]), upper(k, j));
            }
            if (!series_equal(acc, t.entry(i, j))) return false;
        }
    }
    return true;
}

ASeries dform_image(int n, int r, int i, int N) {
    ASeries out(N);
    for (const Composition& lam : enumerate_compositions(n, r)) {
        const int m = lam[static_cast<size_t>(i - 1)];
        const int off = comp_offsets(lam)[static_cast<size_t>(i - 1)];
        // E(u+i) H(u+i-1) on the block-i variables, with enough headroom
        // for the positive powers of u in E.
        const PS e = linear_product_series(m, 1, N + m).shift_u(Rat(i));
        const PS h = linear_product_series(m, -1, N + m).shift_u(Rat(i - 1));
        const PS p = ps_mul(e, h);
        const CosetMatrix a = diag_of(lam);
        for (const auto& [d, g] : p.coeffs()) {
            if (d > N || g.is_zero()) continue;
            out.add(d, ASElement::from_morphism(n, r, Morphism::xi(a, g.shifted(r, off))));
        }
    }
    s_trim(out);
    return out;
}

ASeries eform_image(int n, int r, int i, int j, int N) {
    if (!(1 <= i && i < j && j <= n)) {
        throw std::invalid_argument("eform_image: need 1 <= i < j <= n");
    }
    ASeries out(N);
    for (const Composition& mu : enumerate_compositions(n, r)) {
        if (mu[static_cast<size_t>(j - 1)] == 0) continue;
        CosetMatrix a = diag_of(mu);
        a.at(i, j) += 1;
        a.at(j, j) -= 1;
        const int s = comp_offsets(mu)[static_cast<size_t>(i)];
        const PS f = inv_factor(r, s + 1, N).shift_u(Rat(i));
        for (const auto& [d, g] : f.coeffs()) {
            if (g.is_zero()) continue;
            out.add(d, ASElement::from_morphism(n, r, xi_left(g, a)));
        }
    }
    s_trim(out);
    return out;
}

ASeries fform_image(int n, int r, int i, int j, int N) {
    if (!(1 <= i && i < j && j <= n)) {
        throw std::invalid_argument("fform_image: need 1 <= i < j <= n");
    }
    ASeries out(N);
    for (const Composition& mu : enumerate_compositions(n, r)) {
        if (mu[static_cast<size_t>(i - 1)] == 0) continue;
        CosetMatrix a = diag_of(mu);
        a.at(j, i) += 1;
        a.at(i, i) -= 1;
        const int s = comp_offsets(mu)[static_cast<size_t>(i)];
        const PS f = inv_factor(r, s, N).shift_u(Rat(i));
        for (const auto& [d, g] : f.coeffs()) {
            if (g.is_zero()) continue;
            out.add(d, ASElement::from_morphism(n, r, Morphism::xi(a, g)));
        }
    }
    s_trim(out);
    return out;
}

bool rtt_check(const TMatrixImage& t, int bound) {
    if (2 * bound - 1 > t.N) {
        throw std::invalid_argument("rtt_check: truncation too small for the bound");
    }
    for (int a = 1; a <= bound; ++a) {
        for (int b = 1; b <= bound; ++b) {
            for (int i = 1; i <= t.n; ++i) {
                for (int j = 1; j <= t.n; ++j) {
                    for (int k = 1; k <= t.n; ++k) {
                        for (int l = 1; l <= t.n; ++l) {
                            const ASElement x = t_coef(t, i, j, a);
                            const ASElement y = t_coef(t, k, l, b);
                            ASElement lhs = x * y - y * x;
                            ASElement rhs(t.n, t.r);
                            for (int c = 0; c < std::min(a, b); ++c) {
                                rhs = rhs +
                                      t_coef(t, i, l, a + b - 1 - c) * t_coef(t, k, j, c) -
                                      t_coef(t, i, l, c) * t_coef(t, k, j, a + b - 1 - c);
                            }
                            if (!(lhs == rhs)) return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

ASeries hc_center_image(int n, int r, int N) {
    const GaussFactors g = gauss_factorize(drinfeld_image(n, r, N));
    ASeries c = g.d[0];
    for (int i = 2; i <= n; ++i) {
        c = s_mul(c, g.d[static_cast<size_t>(i - 1)].shift_u(Rat(-(i - 1))));
    }
    s_trim(c);

    // The deformed-power-sum generating function acting diagonally.
    const PS num = linear_product_series(r, 1, N + r).shift_u(Rat(1));
    const PS den = linear_product_series(r, -1, N + r);
    const PS p = ps_mul(num, den);
    ASeries expected(N);
    for (const Composition& lam : enumerate_compositions(n, r)) {
        const CosetMatrix a = diag_of(lam);
        for (const auto& [d, f] : p.coeffs()) {
            if (d > N || f.is_zero()) continue;
            expected.add(d, ASElement::from_morphism(n, r, Morphism::xi(a, f)));
        }
    }
    s_trim(expected);
    if (!series_equal(c, expected)) {
        throw std::runtime_error("hc_center_image: product of diagonal series does not "
                                 "match the deformed-power-sum generating function");
    }
    return c;
}

bool diagonal_power_sum_check(int n, int r, int N) {
    const GaussFactors g = gauss_factorize(drinfeld_image(n, r, N));
    for (int i = 1; i <= n; ++i) {
        const ASeries di = g.d[static_cast<size_t>(i - 1)].shift_u(Rat(-(i - 1)));
        for (const Composition& lam : enumerate_compositions(n, r)) {
            const int m = lam[static_cast<size_t>(i - 1)];
            const int off = comp_offsets(lam)[static_cast<size_t>(i - 1)];
            for (int d = 0; d + 1 <= N; ++d) {
                Morphism got(lam, lam);
                if (const ASElement* z = di.get(d + 1)) {
                    if (const Morphism* blk = z->block(lam, lam)) got = *blk;
                }
                Morphism want(lam, lam);
                if (m > 0) {
                    const Poly tp = sym_family(SymKind::tilde_p, d, m);
                    want = Morphism::xi(diag_of(lam), tp.shifted(r, off));
                }
                if (!(got == want)) return false;
            }
        }
    }
    return true;
}

TMatrixImage eta_shift(const TMatrixImage& t, const Rat& c) {
    TMatrixImage out(t.n, t.r, t.N);
    for (int i = 1; i <= t.n; ++i) {
        for (int j = 1; j <= t.n; ++j) {
            out.entry(i, j) = t.entry(i, j).shift_u(c);
            s_trim(out.entry(i, j));
        }
    }
    return out;
}

bool tau_check(const TMatrixImage& t) {
    for (int i = 1; i <= t.n; ++i) {
        for (int j = 1; j <= t.n; ++j) {
            const ASeries flipped = t.entry(i, j).map<ASElement>([&](const ASElement& z) {
                ASElement out(t.n, t.r);
                for (const auto& [key, mor] : z.blocks()) out.add_block(flip(mor));
                return out;
            });
            if (!series_equal(flipped, t.entry(j, i))) return false;
        }
    }
    return true;
}

bool shifty_check(int n, int r, int m, int N) {
    const TMatrixImage small = drinfeld_image(n, r, N);
    const TMatrixImage big = drinfeld_image(n + 1, r + m, N);

    // Right adjunction against the natural embedding of the generators.
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const ASeries lhs = big.entry(i, j).map<ASElement>(
                [&](const ASElement& z) { return corner_cut(z, m, /*first=*/false); });
            const ASeries rhs = small.entry(i, j).map<ASElement>(
                [&](const ASElement& z) { return adjoin(z, m, /*on_left=*/false); });
            if (!series_equal(lhs, rhs)) return false;
        }
    }

    // Left adjunction against the twisted embedding
    // T_{i,j}(u) -> T_{i+1,j+1}(v) - T_{i+1,1}(v) T_{1,1}(v)^{-1} T_{1,j+1}(v)
    // at v = u - 1.
    const ASeries d11inv = s_inv(big.entry(1, 1).shift_u(Rat(-1)), n + 1, r + m);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            ASeries lhs = big.entry(i + 1, j + 1).shift_u(Rat(-1)) -
                          s_mul(s_mul(big.entry(i + 1, 1).shift_u(Rat(-1)), d11inv),
                                big.entry(1, j + 1).shift_u(Rat(-1)));
            lhs = lhs.map<ASElement>(
                [&](const ASElement& z) { return corner_cut(z, m, /*first=*/true); });
            const ASeries rhs = small.entry(i, j).map<ASElement>(
                [&](const ASElement& z) { return adjoin(z, m, /*on_left=*/true); });
            if (!series_equal(lhs, rhs)) return false;
        }
    }
    return true;
}

std::pair<int, int> surjectivity_dim(int n, int r, int D) {
    int full = 0;
    const std::vector<Composition> weights = enumerate_compositions(n, r);
    for (const Composition& lam : weights) {
        for (const Composition& mu : weights) {
            full += filtered_dim(lam, mu, D);
        }
    }

    const TMatrixImage t = drinfeld_image(n, r, D + 1);
    std::vector<std::pair<ASElement, int>> gens; // (image, filtration weight)
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            for (int d = 1; d <= D + 1; ++d) {
                const ASElement* z = t.entry(i, j).get(d);
                if (z != nullptr && !z->is_zero()) gens.emplace_back(*z, d - 1);
            }
        }
    }

    SpanBuilder<FlatKey> span;
    std::vector<std::pair<ASElement, int>> frontier;
    const ASElement unit = ASElement::one(n, r);
    span.add(flatten(unit));
    frontier.emplace_back(unit, 0);
    while (!frontier.empty()) {
        std::vector<std::pair<ASElement, int>> next;
        for (const auto& [x, wx] : frontier) {
            for (const auto& [g, wg] : gens) {
                if (wx + wg > D) continue;
                ASElement y = x * g;
                if (span.add(flatten(y))) next.emplace_back(std::move(y), wx + wg);
            }
        }
        frontier = std::move(next);
    }
    return {span.rank(), full};
}

} // namespace aschur
