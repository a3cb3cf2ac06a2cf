#include "aschur/reps.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace aschur {

namespace {

Poly uvar() { return Poly::variable(1, 1); }

Poly uconst(const Rat& c) { return Poly(1, c); }

// (u - b).
Poly ulinear(const Rat& b) { return uvar() - uconst(b); }

using PolyMat = std::vector<std::vector<Poly>>;

PolyMat zero_mat(int rows, int cols) {
    return PolyMat(static_cast<size_t>(rows),
                   std::vector<Poly>(static_cast<size_t>(cols), Poly(1)));
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
    const size_t rows = a.size(), mid = b.size(), cols = b.front().size();
    PolyMat c(rows, std::vector<Poly>(cols, Poly(a.front().front().nvars())));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t k = 0; k < mid; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

// All k-element subsets of {1, ..., n}, each ascending, in
// lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::string subset_label(const std::vector<int>& s) {
    if (s.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += "^";
        out += "v" + std::to_string(s[i]);
    }
    return out;
}

// Sorts a word of distinct letters ascending and returns the sign of
// the sorting permutation; nullopt if a letter repeats.
std::optional<std::pair<std::vector<int>, Rat>> wedge_normalize(std::vector<int> w) {
    int inversions = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        for (size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] == w[j]) return std::nullopt;
            if (w[i] > w[j]) ++inversions;
        }
    }
    std::sort(w.begin(), w.end());
    return std::make_pair(std::move(w), inversions % 2 == 0 ? Rat(1) : Rat(-1));
}

// Divisors of a positive integer (trial division; desk-scale inputs).
std::vector<Int> divisors(const Int& n) {
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

// One rational root of a nonconstant univariate polynomial, or nullopt.
std::optional<Rat> find_rational_root(const Poly& f) {
    const int deg = f.degree();
    if (upoly_coeff(f, 0) == 0) return Rat(0);
    // Clear denominators to an integer polynomial.
    Int scale = 1;
    for (int d = 0; d <= deg; ++d) {
        const Rat c = upoly_coeff(f, d);
        scale = scale / gcd(scale, c.get_den()) * c.get_den();
    }
    const Int c0 = abs(Rat(upoly_coeff(f, 0) * Rat(scale)).get_num());
    const Int cl = abs(Rat(upoly_coeff(f, deg) * Rat(scale)).get_num());
    for (const Int& p : divisors(c0)) {
        for (const Int& q : divisors(cl)) {
            for (int sign : {1, -1}) {
                Rat cand(p * sign, q);
                cand.canonicalize();
                if (f.eval({cand}) == 0) return cand;
            }
        }
    }
    return std::nullopt;
}

// Reduced row echelon span of a list of vectors: rows in echelon form
// plus their pivot columns.
struct EchelonSpan {
    RatMat rows;
    std::vector<int> pivots;

    int dim() const { return static_cast<int>(rows.size()); }

    // Remainder of v modulo the span.
    RatVec reduce(RatVec v) const {
        for (size_t t = 0; t < rows.size(); ++t) {
            const Rat c = v[static_cast<size_t>(pivots[t])];
            if (c == 0) continue;
            for (size_t q = 0; q < v.size(); ++q) v[q] -= c * rows[t][q];
        }
        return v;
    }
};

EchelonSpan echelon(RatMat m) {
    const std::vector<int> piv = rref(m);
    EchelonSpan out;
    for (size_t t = 0; t < piv.size(); ++t) out.rows.push_back(m[t]);
    out.pivots = piv;
    return out;
}

RatVec mat_vec(const RatMat& g, const RatVec& v) {
    RatVec w(g.size(), Rat(0));
    for (size_t i = 0; i < g.size(); ++i) {
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j] != 0) w[i] += g[i][j] * v[j];
        }
    }
    return w;
}

// Coefficient matrices of all numerators: a finite generating set of
// the action.
std::vector<RatMat> action_generators(const YModule& m) {
    std::vector<RatMat> gens;
    for (const auto& [key, mat] : m.numer) {
        int maxdeg = -1;
        for (const auto& row : mat) {
            for (const Poly& f : row) maxdeg = std::max(maxdeg, f.degree());
        }
        for (int d = 0; d <= maxdeg; ++d) {
            RatMat g(static_cast<size_t>(m.dim), RatVec(static_cast<size_t>(m.dim), Rat(0)));
            bool nonzero = false;
            for (int t = 0; t < m.dim; ++t) {
                for (int s = 0; s < m.dim; ++s) {
                    g[static_cast<size_t>(t)][static_cast<size_t>(s)] =
                        upoly_coeff(mat[static_cast<size_t>(t)][static_cast<size_t>(s)], d);
                    nonzero = nonzero || g[static_cast<size_t>(t)][static_cast<size_t>(s)] != 0;
                }
            }
            if (nonzero) gens.push_back(std::move(g));
        }
    }
    return gens;
}

// Index of the lexicographically largest weight; the list of all basis
// indices carrying it.
std::vector<int> top_weight_indices(const YModule& m) {
    Composition top = m.weights.front();
    for (const Composition& w : m.weights) top = std::max(top, w);
    std::vector<int> idx;
    for (int t = 0; t < m.dim; ++t) {
        if (m.weights[static_cast<size_t>(t)] == top) idx.push_back(t);
    }
    return idx;
}

RatFun ratfun_reduce(const Poly& num, const Poly& den) {
    if (num.is_zero()) return RatFun{Poly(1), uconst(1)};
    const Poly g = upoly_gcd(num, den);
    Poly p = upoly_divmod(num, g).first;
    Poly q = upoly_divmod(den, g).first;
    const Rat lead = upoly_coeff(q, q.degree());
    p = p * (1 / lead);
    q = q * (1 / lead);
    return RatFun{p, q};
}

YModule tensor_module(const YModule& m1, const YModule& m2) {
    YModule out;
    out.n = m1.n;
    out.dim = m1.dim * m2.dim;
    for (int t1 = 0; t1 < m1.dim; ++t1) {
        for (int t2 = 0; t2 < m2.dim; ++t2) {
            const std::string& l1 = m1.labels[static_cast<size_t>(t1)];
            const std::string& l2 = m2.labels[static_cast<size_t>(t2)];
            out.labels.push_back(l1 == "1" ? l2 : (l2 == "1" ? l1 : l1 + "*" + l2));
            Composition w = m1.weights[static_cast<size_t>(t1)];
            for (int i = 0; i < m1.n; ++i) {
                w[static_cast<size_t>(i)] += m2.weights[static_cast<size_t>(t2)][static_cast<size_t>(i)];
            }
            out.weights.push_back(std::move(w));
        }
    }
    out.den_roots = m1.den_roots;
    out.den_roots.insert(out.den_roots.end(), m2.den_roots.begin(), m2.den_roots.end());
    for (int i = 1; i <= out.n; ++i) {
        for (int j = 1; j <= out.n; ++j) {
            PolyMat mat = zero_mat(out.dim, out.dim);
            for (int k = 1; k <= out.n; ++k) {
                const PolyMat& a = m1.action(i, k);
                const PolyMat& b = m2.action(k, j);
                for (int t1 = 0; t1 < m1.dim; ++t1) {
                    for (int s1 = 0; s1 < m1.dim; ++s1) {
                        const Poly& f = a[static_cast<size_t>(t1)][static_cast<size_t>(s1)];
                        if (f.is_zero()) continue;
                        for (int t2 = 0; t2 < m2.dim; ++t2) {
                            for (int s2 = 0; s2 < m2.dim; ++s2) {
                                const Poly& g = b[static_cast<size_t>(t2)][static_cast<size_t>(s2)];
                                if (g.is_zero()) continue;
                                mat[static_cast<size_t>(t1 * m2.dim + t2)]
                                   [static_cast<size_t>(s1 * m2.dim + s2)] += f * g;
                            }
                        }
                    }
                }
            }
            out.numer.emplace(std::make_pair(i, j), std::move(mat));
        }
    }
    return out;
}

YModule trivial_module(int n) {
    YModule out;
    out.n = n;
    out.dim = 1;
    out.labels = {"1"};
    out.weights = {Composition(static_cast<size_t>(n), 0)};
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            PolyMat mat = zero_mat(1, 1);
            if (i == j) mat[0][0] = uconst(1);
            out.numer.emplace(std::make_pair(i, j), std::move(mat));
        }
    }
    return out;
}

} // namespace

// --- univariate helpers ------------------------------------------------------

Rat upoly_coeff(const Poly& f, int d) {
    assert(f.nvars() == 1);
    const auto it = f.terms().find(Poly::Exponents{d});
    return it == f.terms().end() ? Rat(0) : it->second;
}

Poly upoly_from_roots(const std::vector<Rat>& roots) {
    Poly p = uconst(1);
    for (const Rat& b : roots) p = p * ulinear(b);
    return p;
}

bool upoly_is_monic(const Poly& f) {
    return !f.is_zero() && upoly_coeff(f, f.degree()) == 1;
}

std::pair<Poly, Poly> upoly_divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("upoly_divmod: zero divisor");
    const int dg = g.degree();
    const Rat lead = upoly_coeff(g, dg);
    Poly q(1), r = f;
    while (!r.is_zero() && r.degree() >= dg) {
        const int d = r.degree();
        const Rat c = upoly_coeff(r, d) / lead;
        Poly t = Poly::monomial(Poly::Exponents{d - dg}, c);
        q += t;
        r -= t * g;
    }
    return {q, r};
}

Poly upoly_gcd(Poly f, Poly g) {
    while (!g.is_zero()) {
        Poly r = upoly_divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return f;
    return f * (1 / upoly_coeff(f, f.degree()));
}

Poly upoly_shift(const Poly& f, const Rat& s) {
    return f.substitute({uvar() + uconst(s)}, 1);
}

std::vector<Rat> upoly_rational_roots(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("upoly_rational_roots: zero polynomial");
    std::vector<Rat> roots;
    Poly g = f;
    while (g.degree() > 0) {
        const std::optional<Rat> b = find_rational_root(g);
        if (!b) throw std::runtime_error("upoly_rational_roots: irrational root");
        roots.push_back(*b);
        g = upoly_divmod(g, ulinear(*b)).first;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// --- classification data ------------------------------------------------------

bool validate_sequence(const PolySequence& s, int r) {
    if (s.polys.empty()) return r == 0;
    int total = 0;
    for (const Poly& f : s.polys) {
        if (f.nvars() != 1 || !upoly_is_monic(f)) return false;
        total += f.degree();
    }
    if (total != r) return false;
    for (size_t i = 0; i + 1 < s.polys.size(); ++i) {
        if (!upoly_divmod(s.polys[i], s.polys[i + 1]).second.is_zero()) return false;
    }
    return true;
}

std::vector<Poly> drinfeld_polys(const PolySequence& s) {
    int r = 0;
    for (const Poly& f : s.polys) r += std::max(f.degree(), 0);
    if (!validate_sequence(s, r)) {
        throw std::invalid_argument("drinfeld_polys: invalid sequence");
    }
    std::vector<Poly> out;
    for (size_t i = 0; i + 1 < s.polys.size(); ++i) {
        out.push_back(upoly_divmod(s.polys[i], s.polys[i + 1]).first);
    }
    return out;
}

SegmentList segments_from_sequence(const PolySequence& s, int n) {
    if (static_cast<int>(s.polys.size()) != n) {
        throw std::invalid_argument("segments_from_sequence: need n polynomials");
    }
    int r = 0;
    for (const Poly& f : s.polys) r += std::max(f.degree(), 0);
    if (!validate_sequence(s, r)) {
        throw std::invalid_argument("segments_from_sequence: invalid sequence");
    }
    std::vector<Poly> lam = s.polys;
    SegmentList out;
    while (lam.front().degree() > 0) {
        const std::vector<Rat> roots = upoly_rational_roots(lam.front());
        const Rat b = roots.front();
        int k = 0;
        while (k < n && lam[static_cast<size_t>(k)].eval({b}) == 0) ++k;
        out.segments.push_back(Segment{b, b + Rat(k - 1)});
        for (int i = 0; i < k; ++i) {
            lam[static_cast<size_t>(i)] =
                upoly_divmod(lam[static_cast<size_t>(i)], ulinear(b)).first;
        }
    }
    std::sort(out.segments.begin(), out.segments.end(),
              [](const Segment& x, const Segment& y) {
                  return x.a != y.a ? x.a > y.a : x.b > y.b;
              });
    out.dominant = true;
    return out;
}

// --- matrix modules ------------------------------------------------------------

YModule evaluation_module(const Rat& c, int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("evaluation_module: k out of range");
    YModule out;
    out.n = n;
    const std::vector<std::vector<int>> basis = k_subsets(n, k);
    out.dim = static_cast<int>(basis.size());
    out.den_roots = {c};
    for (const std::vector<int>& s : basis) {
        out.labels.push_back(subset_label(s));
        Composition w(static_cast<size_t>(n), 0);
        for (int v : s) w[static_cast<size_t>(v - 1)] = 1;
        out.weights.push_back(std::move(w));
    }
    std::map<std::vector<int>, int> index;
    for (int t = 0; t < out.dim; ++t) index.emplace(basis[static_cast<size_t>(t)], t);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            PolyMat mat = zero_mat(out.dim, out.dim);
            for (int t = 0; t < out.dim; ++t) {
                if (i == j) mat[static_cast<size_t>(t)][static_cast<size_t>(t)] += ulinear(c);
                // The derived matrix-unit action on the wedge.
                const std::vector<int>& s = basis[static_cast<size_t>(t)];
                if (std::find(s.begin(), s.end(), j) == s.end()) continue;
                std::vector<int> word = s;
                *std::find(word.begin(), word.end(), j) = i;
                const auto norm = wedge_normalize(std::move(word));
                if (!norm) continue;
                const int tgt = index.at(norm->first);
                mat[static_cast<size_t>(tgt)][static_cast<size_t>(t)] += uconst(norm->second);
            }
            out.numer.emplace(std::make_pair(i, j), std::move(mat));
        }
    }
    return out;
}

YModule standard_module(const SegmentList& segs, int n) {
    YModule out = trivial_module(n);
    for (const Segment& seg : segs.segments) {
        const Rat len = seg.a - seg.b;
        if (len.get_den() != 1 || len < 0 || len > n - 1) {
            throw std::invalid_argument("standard_module: segment not valid for this rank");
        }
        const int k = static_cast<int>(len.get_num().get_si()) + 1;
        out = tensor_module(out, evaluation_module(seg.b, k, n));
    }
    return out;
}

std::pair<RatVec, std::vector<RatFun>> highest_weight(const YModule& m) {
    const std::vector<int> top = top_weight_indices(m);

    // Singular space inside the top weight space: all u-coefficients of
    // every raising numerator kill the vector.
    RatMat constraints;
    for (int i = 1; i <= m.n; ++i) {
        for (int j = i + 1; j <= m.n; ++j) {
            const PolyMat& mat = m.action(i, j);
            int maxdeg = -1;
            for (const auto& row : mat) {
                for (const Poly& f : row) maxdeg = std::max(maxdeg, f.degree());
            }
            for (int d = 0; d <= maxdeg; ++d) {
                for (int t = 0; t < m.dim; ++t) {
                    RatVec row;
                    for (int w : top) {
                        row.push_back(upoly_coeff(
                            mat[static_cast<size_t>(t)][static_cast<size_t>(w)], d));
                    }
                    constraints.push_back(std::move(row));
                }
            }
        }
    }
    if (constraints.empty()) {
        constraints.push_back(RatVec(top.size(), Rat(0)));
    }
    const std::vector<RatVec> sing = nullspace(constraints);
    if (sing.size() != 1) {
        throw std::runtime_error("highest_weight: singular space at the top weight is "
                                 "not one-dimensional");
    }
    RatVec v(static_cast<size_t>(m.dim), Rat(0));
    for (size_t p = 0; p < top.size(); ++p) v[static_cast<size_t>(top[p])] = sing[0][p];

    int t0 = 0;
    while (v[static_cast<size_t>(t0)] == 0) ++t0;
    const Poly den = m.den();
    std::vector<RatFun> eigen;
    for (int i = 1; i <= m.n; ++i) {
        const PolyMat& mat = m.action(i, i);
        Poly w0(1);
        for (int s = 0; s < m.dim; ++s) {
            if (v[static_cast<size_t>(s)] != 0) {
                w0 += mat[static_cast<size_t>(t0)][static_cast<size_t>(s)] *
                      v[static_cast<size_t>(s)];
            }
        }
        const Poly g = w0 * (1 / v[static_cast<size_t>(t0)]);
        // The vector must be a genuine eigenvector of the diagonal series.
        for (int t = 0; t < m.dim; ++t) {
            Poly wt(1);
            for (int s = 0; s < m.dim; ++s) {
                if (v[static_cast<size_t>(s)] != 0) {
                    wt += mat[static_cast<size_t>(t)][static_cast<size_t>(s)] *
                          v[static_cast<size_t>(s)];
                }
            }
            if (!(wt == g * v[static_cast<size_t>(t)])) {
                throw std::runtime_error("highest_weight: singular vector is not a "
                                         "diagonal eigenvector");
            }
        }
        eigen.push_back(ratfun_reduce(g, den));
    }
    return {v, eigen};
}

YModule irreducible_quotient(const YModule& m) {
    const std::vector<int> top = top_weight_indices(m);
    if (top.size() != 1) {
        throw std::runtime_error("irreducible_quotient: top weight space is not "
                                 "one-dimensional");
    }
    const std::vector<RatMat> gens = action_generators(m);

    // Start from the sum of the non-top weight spaces and shrink to the
    // largest invariant subspace inside it.
    RatMat basis;
    for (int t = 0; t < m.dim; ++t) {
        if (t == top.front()) continue;
        RatVec e(static_cast<size_t>(m.dim), Rat(0));
        e[static_cast<size_t>(t)] = 1;
        basis.push_back(std::move(e));
    }
    for (;;) {
        const EchelonSpan span = echelon(basis);
        if (span.dim() == 0) {
            basis.clear();
            break;
        }
        RatMat constraints;
        for (const RatMat& g : gens) {
            std::vector<RatVec> reduced;
            for (const RatVec& row : span.rows) {
                reduced.push_back(span.reduce(mat_vec(g, row)));
            }
            for (int q = 0; q < m.dim; ++q) {
                RatVec crow;
                bool nonzero = false;
                for (const RatVec& w : reduced) {
                    crow.push_back(w[static_cast<size_t>(q)]);
                    nonzero = nonzero || w[static_cast<size_t>(q)] != 0;
                }
                if (nonzero) constraints.push_back(std::move(crow));
            }
        }
        if (constraints.empty()) break; // already invariant
        const std::vector<RatVec> ns = nullspace(constraints);
        if (static_cast<int>(ns.size()) == span.dim()) break;
        RatMat next;
        for (const RatVec& x : ns) {
            RatVec v(static_cast<size_t>(m.dim), Rat(0));
            for (size_t b = 0; b < x.size(); ++b) {
                if (x[b] == 0) continue;
                for (int q = 0; q < m.dim; ++q) {
                    v[static_cast<size_t>(q)] += x[b] * span.rows[b][static_cast<size_t>(q)];
                }
            }
            next.push_back(std::move(v));
        }
        basis = std::move(next);
    }

    const EchelonSpan rad = echelon(basis);
    std::vector<int> complement;
    for (int t = 0; t < m.dim; ++t) {
        if (std::find(rad.pivots.begin(), rad.pivots.end(), t) == rad.pivots.end()) {
            complement.push_back(t);
        }
    }

    YModule out;
    out.n = m.n;
    out.dim = static_cast<int>(complement.size());
    for (int t : complement) {
        out.labels.push_back(m.labels[static_cast<size_t>(t)]);
        out.weights.push_back(m.weights[static_cast<size_t>(t)]);
    }
    out.den_roots = m.den_roots;
    for (const auto& [key, mat] : m.numer) {
        PolyMat q = zero_mat(out.dim, out.dim);
        for (int c = 0; c < out.dim; ++c) {
            // Image of the c-th complement vector, reduced modulo the
            // radical (polynomial entries reduce coefficientwise).
            std::vector<Poly> w;
            for (int t = 0; t < m.dim; ++t) {
                w.push_back(mat[static_cast<size_t>(t)][static_cast<size_t>(complement[
                    static_cast<size_t>(c)])]);
            }
            for (size_t b = 0; b < rad.rows.size(); ++b) {
                const Poly head = w[static_cast<size_t>(rad.pivots[b])];
                if (head.is_zero()) continue;
                for (int t = 0; t < m.dim; ++t) {
                    const Rat coef = rad.rows[b][static_cast<size_t>(t)];
                    if (coef != 0) w[static_cast<size_t>(t)] -= head * coef;
                }
            }
            for (int cc = 0; cc < out.dim; ++cc) {
                q[static_cast<size_t>(cc)][static_cast<size_t>(c)] =
                    w[static_cast<size_t>(complement[static_cast<size_t>(cc)])];
            }
        }
        out.numer.emplace(key, std::move(q));
    }
    return out;
}

PolySequence sequence_from_eigenvalues(const std::vector<RatFun>& a) {
    PolySequence out;
    for (const RatFun& af : a) {
        const RatFun f = ratfun_reduce(af.num, af.den);
        if (f.num.degree() != f.den.degree() || !upoly_is_monic(f.num) ||
            !upoly_is_monic(f.den)) {
            throw std::runtime_error("sequence_from_eigenvalues: eigenvalue is not a "
                                     "ratio of shifted monic polynomials");
        }
        std::vector<Rat> lam_roots;
        if (f.num.degree() > 0) {
            const std::vector<Rat> rp = upoly_rational_roots(f.num);
            std::multiset<Rat> rq;
            for (const Rat& b : upoly_rational_roots(f.den)) rq.insert(b);
            for (const Rat& alpha : rp) {
                // Chain start alpha + 1, chain end the matching root of
                // the denominator.
                auto it = rq.end();
                for (auto cand = rq.begin(); cand != rq.end(); ++cand) {
                    const Rat step = *cand - alpha;
                    if (step.get_den() == 1 && step >= 1) {
                        it = cand;
                        break;
                    }
                }
                if (it == rq.end()) {
                    throw std::runtime_error("sequence_from_eigenvalues: roots do not "
                                             "pair into chains");
                }
                for (Rat c = alpha + 1; c <= *it; c += 1) lam_roots.push_back(c);
                rq.erase(it);
            }
        }
        const Poly lam = upoly_from_roots(lam_roots);
        if (!(upoly_shift(lam, 1) * f.den == lam * f.num)) {
            throw std::runtime_error("sequence_from_eigenvalues: verification failed");
        }
        out.polys.push_back(lam);
    }
    return out;
}

// --- verification helpers -------------------------------------------------------

bool rtt_module_check(const YModule& m) {
    // Embed the one-variable numerators into two variables: x1 carries
    // u, x2 carries v.
    auto in_u = [](const PolyMat& a) {
        PolyMat out = a;
        for (auto& row : out) {
            for (Poly& f : row) f = f.shifted(2, 0);
        }
        return out;
    };
    auto in_v = [](const PolyMat& a) {
        PolyMat out = a;
        for (auto& row : out) {
            for (Poly& f : row) f = f.shifted(2, 1);
        }
        return out;
    };
    const Poly umv = Poly::variable(2, 1) - Poly::variable(2, 2);
    std::map<std::pair<int, int>, PolyMat> nu, nv;
    for (const auto& [key, mat] : m.numer) {
        nu.emplace(key, in_u(mat));
        nv.emplace(key, in_v(mat));
    }
    for (int i = 1; i <= m.n; ++i) {
        for (int j = 1; j <= m.n; ++j) {
            for (int k = 1; k <= m.n; ++k) {
                for (int l = 1; l <= m.n; ++l) {
                    const PolyMat x = mat_mul(nu.at({i, j}), nv.at({k, l}));
                    const PolyMat y = mat_mul(nv.at({k, l}), nu.at({i, j}));
                    const PolyMat p = mat_mul(nu.at({k, j}), nv.at({i, l}));
                    const PolyMat q = mat_mul(nv.at({k, j}), nu.at({i, l}));
                    for (int t = 0; t < m.dim; ++t) {
                        for (int s = 0; s < m.dim; ++s) {
                            const Poly lhs =
                                umv * (x[static_cast<size_t>(t)][static_cast<size_t>(s)] -
                                       y[static_cast<size_t>(t)][static_cast<size_t>(s)]);
                            const Poly rhs =
                                p[static_cast<size_t>(t)][static_cast<size_t>(s)] -
                                q[static_cast<size_t>(t)][static_cast<size_t>(s)];
                            if (!(lhs == rhs)) return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

bool weight_check(const YModule& m, int r) {
    const Poly den = m.den();
    const int dd = den.degree();
    for (int t = 0; t < m.dim; ++t) {
        int total = 0;
        for (int i = 1; i <= m.n; ++i) {
            const int w = m.weights[static_cast<size_t>(t)][static_cast<size_t>(i - 1)];
            if (w < 0) return false;
            total += w;
            // T_{i,i}^{(1)} must be diagonal with entry w: the numerator
            // on the diagonal is den + w u^{deg-1} + lower, and zero at
            // degree deg-1 off the diagonal.
            for (int s = 0; s < m.dim; ++s) {
                const Poly& f = m.action(i, i)[static_cast<size_t>(t)][static_cast<size_t>(s)];
                Rat expect(0);
                if (t == s) expect = Rat(w) + upoly_coeff(den, dd - 1);
                if (dd == 0) {
                    // Trivial denominator: the series is exactly delta.
                    if (!(f == (t == s ? uconst(1) : Poly(1)))) return false;
                    continue;
                }
                if (upoly_coeff(f, dd - 1) != expect) return false;
                if (t == s && upoly_coeff(f, dd) != 1) return false;
                if (t != s && upoly_coeff(f, dd) != 0) return false;
            }
        }
        if (total != r) return false;
    }
    return true;
}

bool evaluation_functor_check(const Rat& b, int r, int n) {
    if (r < 1 || r > n) throw std::invalid_argument("evaluation_functor_check: r out of range");
    const std::vector<std::vector<int>> basis = k_subsets(n, r);
    std::map<std::vector<int>, int> index;
    for (size_t t = 0; t < basis.size(); ++t) index.emplace(basis[t], static_cast<int>(t));
    const int dim = static_cast<int>(basis.size());

    // Common denominator of the generating product with x_p = b + p - 1.
    std::vector<Rat> xvals;
    for (int p = 1; p <= r; ++p) xvals.push_back(b + Rat(p - 1));
    const Poly fden = upoly_from_roots(xvals);

    const YModule ev = evaluation_module(b, r, n);

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            PolyMat numer = zero_mat(dim, dim);
            for (int t = 0; t < dim; ++t) {
                const std::vector<int>& word = basis[static_cast<size_t>(t)];
                // Expand the product over slot subsets: slots p_1 < ... <
                // p_s carry the matrix units of the chain read off the
                // word, shifted one step; the last slot letter must be j
                // and the first receives i.
                for (int mask = 0; mask < (1 << r); ++mask) {
                    std::vector<int> slots;
                    for (int p = 1; p <= r; ++p) {
                        if (mask & (1 << (p - 1))) slots.push_back(p);
                    }
                    std::vector<int> w = word;
                    Poly coef = uconst(1);
                    if (slots.empty()) {
                        if (i != j) continue;
                        coef = fden;
                    } else {
                        if (w[static_cast<size_t>(slots.back() - 1)] != j) continue;
                        int carry = i;
                        for (int p : slots) {
                            std::swap(carry, w[static_cast<size_t>(p - 1)]);
                        }
                        for (int p = 1; p <= r; ++p) {
                            if (!(mask & (1 << (p - 1)))) {
                                coef = coef * ulinear(xvals[static_cast<size_t>(p - 1)]);
                            }
                        }
                    }
                    const auto norm = wedge_normalize(std::move(w));
                    if (!norm) continue;
                    numer[static_cast<size_t>(index.at(norm->first))]
                         [static_cast<size_t>(t)] += coef * norm->second;
                }
            }
            // Compare as rational functions by cross-multiplication.
            const PolyMat& evn = ev.action(i, j);
            for (int t = 0; t < dim; ++t) {
                for (int s = 0; s < dim; ++s) {
                    const Poly lhs = numer[static_cast<size_t>(t)][static_cast<size_t>(s)] *
                                     ulinear(b);
                    const Poly rhs = evn[static_cast<size_t>(t)][static_cast<size_t>(s)] * fden;
                    if (!(lhs == rhs)) return false;
                }
            }
        }
    }
    return true;
}

} // namespace aschur
