#include "aschur/relations.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace aschur {

namespace {

using MS = USeries<Morphism>;
using PS = USeries<Poly>;

Morphism idn(int a) { return Morphism::identity({a}); }

Morphism hcat(const std::vector<Morphism>& parts) {
    Morphism out = parts.front();
    for (size_t i = 1; i < parts.size(); ++i) out = hstack(out, parts[i]);
    return out;
}

// Layers listed bottom to top, as the diagrams are drawn.
Morphism vcat(const std::vector<Morphism>& layers) {
    Morphism out = layers.front();
    for (size_t i = 1; i < layers.size(); ++i) out = compose(layers[i], out);
    return out;
}

MS ms_const(const Morphism& m, int N) {
    MS s(N);
    s.set(0, m);
    return s;
}

MS ms_compose(const MS& g, const MS& h) {
    return MS::mul(g, h,
                   [](const Morphism& a, const Morphism& b) { return compose(a, b); });
}

MS ms_hstack(const MS& g, const MS& h) {
    return MS::mul(g, h,
                   [](const Morphism& a, const Morphism& b) { return hstack(a, b); });
}

PS ps_mul(const PS& a, const PS& b) {
    return PS::mul(a, b, [](const Poly& f, const Poly& g) { return f * g; });
}

MS pin_series(int m, const PS& s) {
    return s.map<Morphism>([m](const Poly& f) { return pin_gen(m, f); });
}

// E(u) = prod_p (u - x_p) and H(u) = 1/E(u) as pin series on a strand of
// thickness m (E is an exact polynomial in u; H is truncated at N).
PS eser(int m, int N) { return linear_product_series(m, 1, N); }
PS hser(int m, int N) { return linear_product_series(m, -1, N); }

bool ms_equal(MS x, MS y) {
    auto zero = [](const Morphism& m) { return m.is_zero(); };
    x.trim(zero);
    y.trim(zero);
    const int N = std::min(x.trunc(), y.trunc());
    std::map<int, Morphism> a, b;
    for (const auto& [d, m] : x.coeffs()) {
        if (d <= N) a.emplace(d, m);
    }
    for (const auto& [d, m] : y.coeffs()) {
        if (d <= N) b.emplace(d, m);
    }
    return a == b;
}

Rat sgn(int s) { return (s % 2 == 0) ? Rat(1) : Rat(-1); }

// A pin placed on the middle of the standard "exchange s strands"
// sandwich: bottom object (p, q), top object (q, p), and `mid` any
// morphism (p-s, q-s) -> (q-s, p-s).
Morphism sandwich(int p, int q, int s, const Morphism& mid) {
    return vcat({hcat({split_gen(s, p - s), split_gen(q - s, s)}),
                 hcat({idn(s), mid, idn(s)}),
                 hcat({merge_gen(s, q - s), merge_gen(p - s, s)})});
}

// ---------------------------------------------------------------------------
// Exact (non-series) relations
// ---------------------------------------------------------------------------

bool rel_secondone() {
    return compose(spot_down(), spot_up()) == Morphism::identity(Composition{}) &&
           compose(spot_up(), spot_down()) == Morphism::identity({0});
}

bool rel_zeroforks(int a) {
    return merge_gen(a, 0) == hstack(idn(a), spot_down()) &&
           merge_gen(0, a) == hstack(spot_down(), idn(a)) &&
           split_gen(a, 0) == hstack(idn(a), spot_up()) &&
           split_gen(0, a) == hstack(spot_up(), idn(a));
}

bool rel_assrel(int a, int b, int c) {
    return compose(merge_gen(a + b, c), hstack(merge_gen(a, b), idn(c))) ==
               compose(merge_gen(a, b + c), hstack(idn(a), merge_gen(b, c))) &&
           compose(hstack(split_gen(a, b), idn(c)), split_gen(a + b, c)) ==
               compose(hstack(idn(a), split_gen(b, c)), split_gen(a, b + c));
}

bool rel_mergesplit(int a, int b, int c, int d) {
    if (a + b != c + d) throw std::invalid_argument("mergesplit: a+b != c+d");
    Morphism rhs(Composition{c, d}, Composition{a, b});
    for (const CosetMatrix& m : coset_matrices({c, d}, {a, b})) {
        rhs.add_term(m, Poly(a + b, Rat(1)));
    }
    bool ok = compose(split_gen(c, d), merge_gen(a, b)) == rhs;
    if (a == c && b == d) {
        ok = ok && compose(merge_gen(a, b), split_gen(a, b)) ==
                       idn(a + b) * binom(a + b, a);
    }
    return ok;
}

bool rel_tourists(int a, int b) {
    const Morphism cr = cross_gen(a, b);
    Morphism sum1(Composition{b, a}, Composition{a, b});
    Morphism sum2(Composition{b, a}, Composition{a, b});
    for (int s = 0; s <= std::min(a, b); ++s) {
        sum1 = sum1 + vcat({hcat({split_gen(s, a - s), idn(b)}),
                            hcat({idn(s), merge_gen(a - s, b)}),
                            hcat({idn(s), split_gen(b - s, a)}),
                            hcat({merge_gen(s, b - s), idn(a)})}) *
                          sgn(s);
        sum2 = sum2 + vcat({hcat({idn(a), split_gen(b - s, s)}),
                            hcat({merge_gen(a, b - s), idn(s)}),
                            hcat({split_gen(b, a - s), idn(s)}),
                            hcat({idn(b), merge_gen(a - s, s)})}) *
                          sgn(s);
    }
    return cr == sum1 && cr == sum2;
}

bool rel_sliders(int v, int a, int b, int c) {
    switch (v) {
        case 1:
            return compose(hstack(idn(a), split_gen(b, c)), cross_gen(b + c, a)) ==
                   vcat({hcat({split_gen(b, c), idn(a)}),
                         hcat({idn(b), cross_gen(c, a)}),
                         hcat({cross_gen(b, a), idn(c)})});
        case 2:
            return compose(hstack(split_gen(a, b), idn(c)), cross_gen(c, a + b)) ==
                   vcat({hcat({idn(c), split_gen(a, b)}),
                         hcat({cross_gen(c, a), idn(b)}),
                         hcat({idn(a), cross_gen(c, b)})});
        case 3:
            return compose(cross_gen(a, b + c), hstack(idn(a), merge_gen(b, c))) ==
                   vcat({hcat({cross_gen(a, b), idn(c)}),
                         hcat({idn(b), cross_gen(a, c)}),
                         hcat({merge_gen(b, c), idn(a)})});
        case 4:
            return compose(cross_gen(a + b, c), hstack(merge_gen(a, b), idn(c))) ==
                   vcat({hcat({idn(a), cross_gen(b, c)}),
                         hcat({cross_gen(a, c), idn(b)}),
                         hcat({idn(c), merge_gen(a, b)})});
        default:
            throw std::invalid_argument("sliders: variant must be 1..4");
    }
}

bool rel_symmetric(const std::vector<int>& p) {
    if (p.size() == 2) {
        return compose(cross_gen(p[1], p[0]), cross_gen(p[0], p[1])) ==
               Morphism::identity({p[0], p[1]});
    }
    const int a = p[0], b = p[1], c = p[2];
    return vcat({hcat({idn(a), cross_gen(b, c)}),
                 hcat({cross_gen(a, c), idn(b)}),
                 hcat({idn(c), cross_gen(a, b)})}) ==
           vcat({hcat({cross_gen(a, b), idn(c)}),
                 hcat({idn(b), cross_gen(a, c)}),
                 hcat({cross_gen(b, c), idn(a)})});
}

bool rel_swallows(int a, int b) {
    return compose(merge_gen(b, a), cross_gen(a, b)) == merge_gen(a, b) &&
           compose(cross_gen(b, a), split_gen(b, a)) == split_gen(a, b);
}

bool rel_squareswitch1(int a, int b, int c, int d) {
    if (d > a || c > b + d) throw std::invalid_argument("squareswitch1: bounds");
    Morphism lhs = vcat({hcat({split_gen(a - d, d), idn(b)}),
                         hcat({idn(a - d), merge_gen(d, b)}),
                         hcat({idn(a - d), split_gen(c, d + b - c)}),
                         hcat({merge_gen(a - d, c), idn(b + d - c)})});
    Morphism rhs(Composition{a - d + c, b + d - c}, Composition{a, b});
    for (int s = std::max(0, c - b); s <= std::min(c, d); ++s) {
        rhs = rhs + vcat({hcat({idn(a), split_gen(c - s, b - c + s)}),
                          hcat({merge_gen(a, c - s), idn(b - c + s)}),
                          hcat({split_gen(a + c - d, d - s), idn(b - c + s)}),
                          hcat({idn(a + c - d), merge_gen(d - s, b - c + s)})}) *
                        binom(a - b + c - d, s);
    }
    return lhs == rhs;
}

bool rel_squareswitch2(int a, int b, int c, int d) {
    if (d > a || c > b + d) throw std::invalid_argument("squareswitch2: bounds");
    Morphism lhs = vcat({hcat({idn(b), split_gen(d, a - d)}),
                         hcat({merge_gen(b, d), idn(a - d)}),
                         hcat({split_gen(b + d - c, c), idn(a - d)}),
                         hcat({idn(b + d - c), merge_gen(c, a - d)})});
    Morphism rhs(Composition{b + d - c, a - d + c}, Composition{b, a});
    for (int s = std::max(0, c - b); s <= std::min(c, d); ++s) {
        rhs = rhs + vcat({hcat({split_gen(b - c + s, c - s), idn(a)}),
                          hcat({idn(b - c + s), merge_gen(c - s, a)}),
                          hcat({idn(b - c + s), split_gen(d - s, a + c - d)}),
                          hcat({merge_gen(b - c + s, d - s), idn(a + c - d)})}) *
                        binom(a - b + c - d, s);
    }
    return lhs == rhs;
}

bool rel_alghom(int r, int d1, int d2) {
    const Poly f = elementary_sym(r, d1), g = elementary_sym(r, d2);
    return pin_gen(r, Poly(r, Rat(5, 3))) == idn(r) * Rat(5, 3) &&
           pin_gen(r, f + g) == pin_gen(r, f) + pin_gen(r, g) &&
           compose(pin_gen(r, f), pin_gen(r, g)) == pin_gen(r, f * g);
}

bool rel_demazurerel() {
    const Morphism px = pin_gen(1, Poly::variable(1, 1));
    const Morphism cr = cross_gen(1, 1);
    const Morphism one = Morphism::identity({1, 1});
    return compose(cr, hstack(px, idn(1))) ==
               compose(hstack(idn(1), px), cr) + one &&
           compose(hstack(px, idn(1)), cr) ==
               compose(cr, hstack(idn(1), px)) + one;
}

bool rel_fridaynight(int a, int b, int d) {
    const Poly f = elementary_sym(a + b, d);
    Morphism rhs(Composition{a + b}, Composition{a, b});
    Morphism rhs2(Composition{a, b}, Composition{a + b});
    for (const auto& [f1, f2] : coproduct_split(f, a, b)) {
        const Morphism pins = hstack(pin_gen(a, f1), pin_gen(b, f2));
        rhs = rhs + compose(merge_gen(a, b), pins);
        rhs2 = rhs2 + compose(pins, split_gen(a, b));
    }
    return compose(pin_gen(a + b, f), merge_gen(a, b)) == rhs &&
           compose(split_gen(a, b), pin_gen(a + b, f)) == rhs2;
}

// Shared scaffold for the two shuffle relations: the merge-pin-split
// composite against the sum over minimal left coset representatives,
// with the representative acting ordinarily (graded version) or by the
// deformed action (exact version).
bool rel_shuffle(int a, int b, int d1, int d2, bool deformed) {
    const Poly f = elementary_sym(a, d1), g = elementary_sym(b, d2);
    const Morphism lhs = vcat({split_gen(a, b),
                               hstack(pin_gen(a, f), pin_gen(b, g)),
                               merge_gen(a, b)});
    const Poly fg = Poly::tensor(f, g);
    Poly sum(a + b);
    for (const Permutation& w : min_left_coset_reps({a, b})) {
        sum += deformed ? fg.diamond(w) : fg.act(w);
    }
    CosetMatrix diag(1, 1);
    diag.at(1, 1) = a + b;
    Morphism rhs(Composition{a + b}, Composition{a + b});
    rhs.add_term(diag, sum);
    if (deformed) return lhs == rhs;
    const int dt = d1 + d2;
    return lhs.homogeneous_part(dt) == rhs.homogeneous_part(dt);
}

bool rel_jonrel(int v, int a, int b, int d) {
    const Poly e = elementary_sym(a, d);
    Morphism lhs(Composition{}, Composition{});
    Morphism rhs = (v == 1 || v == 4)
                       ? Morphism(Composition{b, a}, Composition{a, b})
                       : Morphism(Composition{a, b}, Composition{b, a});
    for (int s = 0; s <= std::min({a, b, d}); ++s) {
        const Morphism pd = pin_gen(a - s, elementary_sym(a - s, d - s));
        switch (v) {
            case 1: // pin above, strand ends on the right
                rhs = rhs + sandwich(a, b, s,
                                     compose(hstack(idn(b - s), pd),
                                             cross_gen(a - s, b - s))) *
                                factorial(s);
                break;
            case 2: // pin above, strand ends on the left
                rhs = rhs + sandwich(b, a, s,
                                     compose(hstack(pd, idn(b - s)),
                                             cross_gen(b - s, a - s))) *
                                (factorial(s) * sgn(s));
                break;
            case 3: // pin below, strand starts on the right
                rhs = rhs + sandwich(b, a, s,
                                     compose(cross_gen(b - s, a - s),
                                             hstack(idn(b - s), pd))) *
                                factorial(s);
                break;
            case 4: // pin below, strand starts on the left
                rhs = rhs + sandwich(a, b, s,
                                     compose(cross_gen(a - s, b - s),
                                             hstack(pd, idn(b - s)))) *
                                (factorial(s) * sgn(s));
                break;
            default:
                throw std::invalid_argument("jonrel: variant must be 1..4");
        }
    }
    switch (v) {
        case 1:
            lhs = compose(cross_gen(a, b), hstack(pin_gen(a, e), idn(b)));
            break;
        case 2:
            lhs = compose(cross_gen(b, a), hstack(idn(b), pin_gen(a, e)));
            break;
        case 3:
            lhs = compose(hstack(pin_gen(a, e), idn(b)), cross_gen(b, a));
            break;
        case 4:
            lhs = compose(hstack(idn(b), pin_gen(a, e)), cross_gen(a, b));
            break;
    }
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Generating-function relations
// ---------------------------------------------------------------------------

bool rel_bingley(int v, int a, int b, int N) {
    const int t = (v == 1 || v == 4) ? a : b; // thickness of the pinned strand
    MS lhs(N), rhs(N);
    const MS ep = pin_series(t, eser(t, N));
    switch (v) {
        case 1:
            lhs = ep.map<Morphism>([&](const Morphism& m) {
                return compose(cross_gen(a, b), hstack(m, idn(b)));
            });
            break;
        case 2:
            lhs = ep.map<Morphism>([&](const Morphism& m) {
                return compose(hstack(m, idn(a)), cross_gen(a, b));
            });
            break;
        case 3:
            lhs = ep.map<Morphism>([&](const Morphism& m) {
                return compose(cross_gen(a, b), hstack(idn(a), m));
            });
            break;
        case 4:
            lhs = ep.map<Morphism>([&](const Morphism& m) {
                return compose(hstack(idn(b), m), cross_gen(a, b));
            });
            break;
        default:
            throw std::invalid_argument("bingley: variant must be 1..4");
    }
    for (int s = 0; s <= std::min(a, b); ++s) {
        const MS eps = pin_series(t - s, eser(t - s, N));
        const Rat coef = factorial(s) * ((v <= 2) ? sgn(s) : Rat(1));
        MS term(N);
        switch (v) {
            case 1: // pinned above on the right
                term = eps.map<Morphism>([&](const Morphism& m) {
                    return sandwich(a, b, s,
                                    compose(hstack(idn(b - s), m),
                                            cross_gen(a - s, b - s)));
                });
                break;
            case 2: // pinned below on the right
                term = eps.map<Morphism>([&](const Morphism& m) {
                    return sandwich(a, b, s,
                                    compose(cross_gen(a - s, b - s),
                                            hstack(idn(a - s), m)));
                });
                break;
            case 3: // pinned above on the left
                term = eps.map<Morphism>([&](const Morphism& m) {
                    return sandwich(a, b, s,
                                    compose(hstack(m, idn(a - s)),
                                            cross_gen(a - s, b - s)));
                });
                break;
            case 4: // pinned below on the left
                term = eps.map<Morphism>([&](const Morphism& m) {
                    return sandwich(a, b, s,
                                    compose(cross_gen(a - s, b - s),
                                            hstack(m, idn(b - s))));
                });
                break;
        }
        rhs = rhs + term * coef;
    }
    return ms_equal(lhs, rhs);
}

bool rel_rome(int a, int b, int kind, int N) {
    const PS pa = kind == 0 ? eser(a, N) : hser(a, N);
    const PS pb = kind == 0 ? eser(b, N) : hser(b, N);
    const MS fa = pin_series(a, pa), fb = pin_series(b, pb);
    const MS cr = ms_const(cross_gen(a, b), N);
    return ms_equal(ms_compose(cr, ms_hstack(fa, fb)),
                    ms_compose(ms_hstack(fb, fa), cr));
}

bool rel_averagedotslide(int v, int r, int N) {
    const MS hp = pin_series(1, hser(1, N));
    const MS idr = ms_const(idn(r), N);
    const MS mid = ms_hstack(hp, ms_hstack(ms_const(idn(r - 1), N), hp));
    if (v == 1) {
        const MS cr = ms_const(cross_gen(r, 1), N);
        const MS lhs = ms_compose(ms_hstack(hp, idr), cr);
        const MS rhs = ms_compose(cr, ms_hstack(idr, hp));
        const MS corr =
            ms_compose(ms_const(hcat({idn(1), merge_gen(r - 1, 1)}), N),
                       ms_compose(mid, ms_const(hcat({split_gen(1, r - 1), idn(1)}), N)));
        return ms_equal(lhs, rhs + corr);
    }
    if (v == 2) {
        const MS cr = ms_const(cross_gen(1, r), N);
        const MS lhs = ms_compose(cr, ms_hstack(hp, idr));
        const MS rhs = ms_compose(ms_hstack(idr, hp), cr);
        const MS corr =
            ms_compose(ms_const(hcat({merge_gen(1, r - 1), idn(1)}), N),
                       ms_compose(mid, ms_const(hcat({idn(1), split_gen(r - 1, 1)}), N)));
        return ms_equal(lhs, rhs + corr);
    }
    throw std::invalid_argument("averagedotslide: variant must be 1..2");
}

bool rel_skiving(int r, int N, bool mirrored) {
    const MS hp = pin_series(1, hser(1, N));
    MS side(N);
    if (!mirrored) {
        side = hp.map<Morphism>([&](const Morphism& m) {
            return vcat({split_gen(1, r - 1), hstack(m, idn(r - 1)),
                         merge_gen(1, r - 1)});
        });
    } else {
        side = hp.map<Morphism>([&](const Morphism& m) {
            return vcat({split_gen(r - 1, 1), hstack(idn(r - 1), m),
                         merge_gen(r - 1, 1)});
        });
    }
    const MS lhs =
        mirrored ? ms_const(idn(r), N) - side : ms_const(idn(r), N) + side;
    // E(u +/- 1) has powers of u up to u^r, so the paired H factor must be
    // expanded r orders beyond the comparison order.
    const PS prod = ps_mul(eser(r, N + r).shift_u(mirrored ? Rat(-1) : Rat(1)),
                           hser(r, N + r));
    return ms_equal(lhs, pin_series(r, prod));
}

bool rel_crazy(int v, int a, int b, int N) {
    const int r = a + b;
    const PS er = eser(r, N + r);
    const PS hr = hser(r, N + r);
    MS lhs(N);
    PS acc(N + r);
    if (v == 1) {
        lhs = pin_series(a, hser(a, N)).map<Morphism>([&](const Morphism& m) {
            return vcat({split_gen(a, b), hstack(m, idn(b)), merge_gen(a, b)});
        });
        for (int i = 0; i <= a; ++i) {
            acc = acc + ps_mul(er.shift_u(Rat(i)), hr) *
                            (binom(a, i) / factorial(a) * sgn(a - i));
        }
    } else if (v == 2) {
        lhs = pin_series(b, hser(b, N)).map<Morphism>([&](const Morphism& m) {
            return vcat({split_gen(a, b), hstack(idn(a), m), merge_gen(a, b)});
        });
        for (int i = 0; i <= b; ++i) {
            acc = acc + ps_mul(er.shift_u(Rat(-i)), hr) *
                            (binom(b, i) / factorial(b) * sgn(i));
        }
    } else {
        throw std::invalid_argument("crazy: variant must be 1..2");
    }
    return ms_equal(lhs, pin_series(r, acc));
}

void need(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

} // namespace

bool verify_relation(const std::string& name, const std::vector<int>& p, int N) {
    if (name == "secondone") return rel_secondone();
    if (name == "demazurerel") return rel_demazurerel();
    if (name == "zeroforks") {
        need(p.size() == 1, "zeroforks: params [a]");
        return rel_zeroforks(p[0]);
    }
    if (name == "assrel") {
        need(p.size() == 3, "assrel: params [a,b,c]");
        return rel_assrel(p[0], p[1], p[2]);
    }
    if (name == "mergesplit") {
        need(p.size() == 4, "mergesplit: params [a,b,c,d]");
        return rel_mergesplit(p[0], p[1], p[2], p[3]);
    }
    if (name == "tourists") {
        need(p.size() == 2, "tourists: params [a,b]");
        return rel_tourists(p[0], p[1]);
    }
    if (name == "sliders") {
        need(p.size() == 4, "sliders: params [v,a,b,c]");
        return rel_sliders(p[0], p[1], p[2], p[3]);
    }
    if (name == "symmetric") {
        need(p.size() == 2 || p.size() == 3, "symmetric: params [a,b] or [a,b,c]");
        return rel_symmetric(p);
    }
    if (name == "swallows") {
        need(p.size() == 2, "swallows: params [a,b]");
        return rel_swallows(p[0], p[1]);
    }
    if (name == "squareswitch1") {
        need(p.size() == 4, "squareswitch1: params [a,b,c,d]");
        return rel_squareswitch1(p[0], p[1], p[2], p[3]);
    }
    if (name == "squareswitch2") {
        need(p.size() == 4, "squareswitch2: params [a,b,c,d]");
        return rel_squareswitch2(p[0], p[1], p[2], p[3]);
    }
    if (name == "alghom") {
        need(p.size() == 3, "alghom: params [r,d1,d2]");
        return rel_alghom(p[0], p[1], p[2]);
    }
    if (name == "fridaynight") {
        need(p.size() == 3, "fridaynight: params [a,b,d]");
        return rel_fridaynight(p[0], p[1], p[2]);
    }
    if (name == "shufflerel") {
        need(p.size() == 4, "shufflerel: params [a,b,d1,d2]");
        return rel_shuffle(p[0], p[1], p[2], p[3], /*deformed=*/false);
    }
    if (name == "deformedshuffle") {
        need(p.size() == 4, "deformedshuffle: params [a,b,d1,d2]");
        return rel_shuffle(p[0], p[1], p[2], p[3], /*deformed=*/true);
    }
    if (name == "jonrel") {
        need(p.size() == 4 && (p[0] == 1 || p[0] == 2), "jonrel: params [v,a,b,d]");
        return rel_jonrel(p[0], p[1], p[2], p[3]);
    }
    if (name == "otherjon") {
        need(p.size() == 4 && (p[0] == 3 || p[0] == 4), "otherjon: params [v,a,b,d]");
        return rel_jonrel(p[0], p[1], p[2], p[3]);
    }
    if (name == "bingley") {
        need(p.size() == 3, "bingley: params [v,a,b]");
        return rel_bingley(p[0], p[1], p[2], N);
    }
    if (name == "rome") {
        need(p.size() == 3, "rome: params [a,b,kind]");
        return rel_rome(p[0], p[1], p[2], N);
    }
    if (name == "averagedotslide") {
        need(p.size() == 2, "averagedotslide: params [v,r]");
        return rel_averagedotslide(p[0], p[1], N);
    }
    if (name == "skiving") {
        need(p.size() == 1, "skiving: params [r]");
        return rel_skiving(p[0], N, /*mirrored=*/false);
    }
    if (name == "skiving2") {
        need(p.size() == 1, "skiving2: params [r]");
        return rel_skiving(p[0], N, /*mirrored=*/true);
    }
    if (name == "crazy") {
        need(p.size() == 3, "crazy: params [v,a,b]");
        return rel_crazy(p[0], p[1], p[2], N);
    }
    throw std::invalid_argument("unknown relation id: " + name);
}

std::vector<RelationInstance> relation_grid(int T, int D, int N) {
    std::vector<RelationInstance> out;
    auto add = [&out](std::string name, std::vector<int> params, int n = 0) {
        out.push_back({std::move(name), std::move(params), n});
    };
    add("secondone", {});
    add("demazurerel", {});
    for (int a = 0; a <= T; ++a) add("zeroforks", {a});
    for (int a = 0; a <= T; ++a) {
        for (int b = 0; b <= T; ++b) {
            add("tourists", {a, b});
            add("swallows", {a, b});
            add("symmetric", {a, b});
            for (int c = 0; c <= T; ++c) {
                add("assrel", {a, b, c});
                add("symmetric", {a, b, c});
                for (int v = 1; v <= 4; ++v) add("sliders", {v, a, b, c});
                const int d = a + b - c;
                if (d >= 0 && c <= T && d <= T) add("mergesplit", {a, b, c, d});
            }
            for (int c = 0; c <= T; ++c) {
                for (int d = 0; d <= T; ++d) {
                    if (d <= a && c <= b + d) {
                        add("squareswitch1", {a, b, c, d});
                        add("squareswitch2", {a, b, c, d});
                    }
                }
            }
        }
    }
    for (int r = 1; r <= T; ++r) {
        for (int d1 = 0; d1 <= D; ++d1) {
            for (int d2 = 0; d2 <= D; ++d2) add("alghom", {r, d1, d2});
        }
        for (int v = 1; v <= 2; ++v) add("averagedotslide", {v, r}, N);
        add("skiving", {r}, N);
        add("skiving2", {r}, N);
    }
    for (int a = 1; a <= T; ++a) {
        for (int b = 1; b <= T; ++b) {
            for (int d = 0; d <= D; ++d) {
                add("fridaynight", {a, b, d});
                for (int v = 1; v <= 2; ++v) add("jonrel", {v, a, b, d});
                for (int v = 3; v <= 4; ++v) add("otherjon", {v, a, b, d});
            }
            for (int d1 = 0; d1 <= std::min(a, D); ++d1) {
                for (int d2 = 0; d2 <= std::min(b, D); ++d2) {
                    add("shufflerel", {a, b, d1, d2});
                    add("deformedshuffle", {a, b, d1, d2});
                }
            }
            for (int v = 1; v <= 4; ++v) add("bingley", {v, a, b}, N);
            for (int k = 0; k <= 1; ++k) add("rome", {a, b, k}, N);
            for (int v = 1; v <= 2; ++v) add("crazy", {v, a, b}, N);
        }
    }
    return out;
}

} // namespace aschur
