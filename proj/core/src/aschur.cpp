#include "aschur/aschur.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "aschur/linalg.hpp"

namespace aschur {

// ---------------------------------------------------------------------------
// Morphism container
// ---------------------------------------------------------------------------

Morphism Morphism::xi(const CosetMatrix& a, const Poly& f) {
    Morphism m(a.lam(), a.mu());
    assert(f.nvars() == a.total());
    assert(f.is_block_symmetric(a.nu_bottom()));
    m.add_term(a, f);
    return m;
}

Morphism Morphism::xi(const CosetMatrix& a) {
    return xi(a, Poly(a.total(), Rat(1)));
}

Morphism Morphism::identity(const Composition& lam) {
    const int n = static_cast<int>(lam.size());
    CosetMatrix d(n, n);
    for (int i = 1; i <= n; ++i) d.at(i, i) = lam[static_cast<size_t>(i - 1)];
    return xi(d);
}

void Morphism::add_term(const CosetMatrix& a, const Poly& f) {
    assert(a.lam() == target_ && a.mu() == source_);
    if (f.is_zero()) return;
    auto [it, fresh] = terms_.emplace(a, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Morphism Morphism::operator+(const Morphism& rhs) const {
    assert(target_ == rhs.target_ && source_ == rhs.source_);
    Morphism m = *this;
    for (const auto& [a, f] : rhs.terms_) m.add_term(a, f);
    return m;
}

Morphism Morphism::operator-(const Morphism& rhs) const {
    return *this + rhs * Rat(-1);
}

Morphism Morphism::operator*(const Rat& c) const {
    Morphism m(target_, source_);
    if (c == 0) return m;
    for (const auto& [a, f] : terms_) m.terms_.emplace(a, f * c);
    return m;
}

int Morphism::degree() const {
    int d = -1;
    for (const auto& [a, f] : terms_) d = std::max(d, f.degree());
    return d;
}

Morphism Morphism::leading_term() const { return homogeneous_part(degree()); }

Morphism Morphism::homogeneous_part(int d) const {
    Morphism m(target_, source_);
    if (d < 0) return m;
    for (const auto& [a, f] : terms_) m.add_term(a, f.homogeneous_part(d));
    return m;
}

std::string Morphism::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "xi{" << a.str() << "; " << f.str() << '}';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Evaluation and extraction
// ---------------------------------------------------------------------------

InducedVector xi_eval(const CosetMatrix& a, const Poly& f) {
    // The basis meaning requires f to be S_{nu_bottom(a)}-invariant, but
    // the formula is well defined for any f; extraction exploits this
    // when peeling intermediate (not yet symmetric) coefficients.
    assert(f.nvars() == a.total());
    InducedVector out(a.lam());
    if (f.is_zero()) return out;
    const Permutation d = dA(a);
    for (const Permutation& y : min_coset_reps(a.nu_bottom(), a.mu())) {
        // d_A f y in normal form: push f to the right past y.
        const AHElement moved = push_right(f, y);
        for (const auto& [u, h] : moved.terms()) out.add_term(d * u, h);
    }
    return out;
}

InducedVector apply(const Morphism& m, const InducedVector& v) {
    assert(v.weight() == m.source());
    InducedVector out(m.target());
    if (v.is_zero()) return out;
    // The argument as an element of AH acting on the right of the value
    // on the generator.
    AHElement arg(v.rank());
    for (const auto& [y, g] : v.terms()) arg.add_term(y, g);
    for (const auto& [a, f] : m.terms()) {
        out = out + xi_eval(a, f).times(arg);
    }
    return out;
}

namespace {

InducedVector eval_on_generator(const Morphism& m) {
    InducedVector out(m.target());
    for (const auto& [a, f] : m.terms()) out = out + xi_eval(a, f);
    return out;
}

// Dense fallback: solve for the coordinates of `value` in the evaluated
// block-orbit basis of Hom(M_mu, M_lam) up to degree D.
Morphism extract_solve(const InducedVector& value, const Composition& lam,
                       const Composition& mu, int D) {
    struct Unknown {
        CosetMatrix a;
        Poly b;
    };
    std::vector<Unknown> unknowns;
    std::vector<InducedVector> evals;
    for (const CosetMatrix& a : coset_matrices(lam, mu)) {
        for (const BlockSymPoly& b : block_orbit_basis(a.nu_bottom(), D)) {
            unknowns.push_back({a, b.poly});
            evals.push_back(xi_eval(a, b.poly));
        }
    }
    using Coord = std::pair<std::vector<int>, std::vector<int>>;
    std::map<Coord, size_t> coord;
    auto index_of = [&coord](const Permutation& w, const std::vector<int>& e) {
        return coord.emplace(Coord{w.one_line(), e}, coord.size()).first->second;
    };
    for (const InducedVector& ev : evals) {
        for (const auto& [w, f] : ev.terms()) {
            for (const auto& [e, c] : f.terms()) index_of(w, e);
        }
    }
    for (const auto& [w, f] : value.terms()) {
        for (const auto& [e, c] : f.terms()) index_of(w, e);
    }
    RatMat m(coord.size(), RatVec(unknowns.size(), Rat(0)));
    RatVec rhs(coord.size(), Rat(0));
    for (size_t col = 0; col < evals.size(); ++col) {
        for (const auto& [w, f] : evals[col].terms()) {
            for (const auto& [e, c] : f.terms()) m[index_of(w, e)][col] = c;
        }
    }
    for (const auto& [w, f] : value.terms()) {
        for (const auto& [e, c] : f.terms()) rhs[index_of(w, e)] = c;
    }
    std::optional<RatVec> sol = solve(m, rhs);
    if (!sol) {
        throw std::runtime_error(
            "extract: value is not in the image of the basis (not a module "
            "homomorphism)");
    }
    Morphism out(lam, mu);
    for (size_t col = 0; col < unknowns.size(); ++col) {
        if ((*sol)[col] != 0) {
            out.add_term(unknowns[col].a, unknowns[col].b * (*sol)[col]);
        }
    }
    return out;
}

} // namespace

Morphism extract(const InducedVector& value, const Composition& lam,
                 const Composition& mu) {
    Morphism out(lam, mu);
    if (value.is_zero()) return out;
    assert(value.weight() == lam);
    const int D = std::max(0, [&value] {
        int d = -1;
        for (const auto& [w, f] : value.terms()) d = std::max(d, f.degree());
        return d;
    }());

    // Matrices ordered by decreasing length of d_A; d_A itself is the
    // minimal representative of its left coset, so it appears verbatim as
    // a key of the induced vector.
    std::vector<std::pair<CosetMatrix, Permutation>> mats;
    for (const CosetMatrix& a : coset_matrices(lam, mu)) {
        mats.emplace_back(a, dA(a));
    }
    std::sort(mats.begin(), mats.end(), [](const auto& p, const auto& q) {
        return p.second.length() > q.second.length();
    });

    // Greedy peeling: the coefficient of value at the key d_A equals f_A
    // plus strictly lower-degree corrections coming from terms already
    // attributed, so repeated subtraction terminates in at most D+2
    // rounds.
    InducedVector residual = value;
    bool clean = true;
    for (int pass = 0; pass <= D + 1 && !residual.is_zero(); ++pass) {
        bool progress = false;
        for (const auto& [a, d] : mats) {
            auto it = residual.terms().find(d);
            if (it == residual.terms().end()) continue;
            out.add_term(a, it->second);
            progress = true;
        }
        if (!progress) break;
        residual = value - eval_on_generator(out);
    }
    if (!residual.is_zero()) clean = false;
    for (const auto& [a, f] : out.terms()) {
        if (!f.is_block_symmetric(a.nu_bottom())) clean = false;
    }
    if (!clean) out = extract_solve(value, lam, mu, D);
    if (!(eval_on_generator(out) == value)) {
        throw std::runtime_error(
            "extract: re-evaluation mismatch (value does not define a "
            "morphism)");
    }
    return out;
}

Morphism compose(const Morphism& g, const Morphism& h) {
    assert(g.source() == h.target());
    InducedVector inner = apply(h, InducedVector::generator(h.source()));
    return extract(apply(g, inner), g.target(), h.source());
}

Morphism hstack(const Morphism& g, const Morphism& h) {
    Composition target = g.target(), source = g.source();
    target.insert(target.end(), h.target().begin(), h.target().end());
    source.insert(source.end(), h.source().begin(), h.source().end());
    Morphism out(std::move(target), std::move(source));
    for (const auto& [a, f] : g.terms()) {
        for (const auto& [b, u] : h.terms()) {
            out.add_term(block_diag(a, b), Poly::tensor(f, u));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

Morphism merge_gen(int a, int b) {
    CosetMatrix m(1, 2);
    m.at(1, 1) = a;
    m.at(1, 2) = b;
    return Morphism::xi(m);
}

Morphism split_gen(int a, int b) {
    CosetMatrix m(2, 1);
    m.at(1, 1) = a;
    m.at(2, 1) = b;
    return Morphism::xi(m);
}

Morphism cross_gen(int a, int b) {
    CosetMatrix m(2, 2);
    m.at(1, 2) = b;
    m.at(2, 1) = a;
    return Morphism::xi(m);
}

Morphism pin_gen(int r, const Poly& f) {
    CosetMatrix m(1, 1);
    m.at(1, 1) = r;
    return Morphism::xi(m, f);
}

Morphism spot_up() { return Morphism::xi(CosetMatrix(1, 0)); }

Morphism spot_down() { return Morphism::xi(CosetMatrix(0, 1)); }

Morphism strand_adjoin(const Morphism& m, int thickness, bool on_left) {
    Morphism id = Morphism::identity({thickness});
    return on_left ? hstack(id, m) : hstack(m, id);
}

// ---------------------------------------------------------------------------
// Left form, flip and reversal
// ---------------------------------------------------------------------------

namespace {

// Value of xi_{f, A} on the generator: sum_y m (f d_A y).
InducedVector xi_left_eval(const Poly& f, const CosetMatrix& a) {
    assert(f.nvars() == a.total());
    assert(f.is_block_symmetric(a.nu_top()));
    InducedVector out(a.lam());
    if (f.is_zero()) return out;
    const Permutation d = dA(a);
    for (const Permutation& y : min_coset_reps(a.nu_bottom(), a.mu())) {
        const AHElement moved = push_right(f, d * y);
        for (const auto& [u, h] : moved.terms()) out.add_term(u, h);
    }
    return out;
}

} // namespace

Morphism xi_left(const Poly& f, const CosetMatrix& a) {
    return extract(xi_left_eval(f, a), a.lam(), a.mu());
}

Morphism flip(const Morphism& m) {
    InducedVector value(m.source());
    for (const auto& [a, f] : m.terms()) {
        // f is nu_bottom(A)-invariant, i.e. nu_top(A^T)-invariant.
        value = value + xi_left_eval(f, a.transpose());
    }
    return extract(value, m.source(), m.target());
}

Morphism reverse(const Morphism& m) {
    const int r = m.rank();
    std::vector<int> rev(static_cast<size_t>(r));
    for (int i = 1; i <= r; ++i) rev[static_cast<size_t>(i - 1)] = r + 1 - i;
    const Permutation w0{std::vector<int>(rev)};
    Composition target(m.target().rbegin(), m.target().rend());
    Composition source(m.source().rbegin(), m.source().rend());
    Morphism out(std::move(target), std::move(source));
    for (const auto& [a, f] : m.terms()) {
        Poly g = f.act(w0);
        Poly signed_g(r);
        for (int d = 0; d <= g.degree(); ++d) {
            signed_g += g.homogeneous_part(d) * Rat((d % 2 == 0) ? 1 : -1);
        }
        out.add_term(a.reverse(), signed_g);
    }
    return out;
}

int filtered_dim(const Composition& lam, const Composition& mu, int D) {
    int dim = 0;
    for (const CosetMatrix& a : coset_matrices(lam, mu)) {
        dim += static_cast<int>(block_orbit_basis(a.nu_bottom(), D).size());
    }
    return dim;
}

// ---------------------------------------------------------------------------
// The affine Schur algebra
// ---------------------------------------------------------------------------

ASElement ASElement::one(int n, int r) {
    ASElement z(n, r);
    for (const Composition& lam : enumerate_compositions(n, r)) {
        z.add_block(Morphism::identity(lam));
    }
    return z;
}

ASElement ASElement::from_morphism(int n, int r, const Morphism& m) {
    ASElement z(n, r);
    z.add_block(m);
    return z;
}

void ASElement::add_block(const Morphism& m) {
    assert(static_cast<int>(m.target().size()) == n_ &&
           static_cast<int>(m.source().size()) == n_);
    assert(comp_sum(m.target()) == r_ && comp_sum(m.source()) == r_);
    if (m.is_zero()) return;
    auto key = std::make_pair(m.target(), m.source());
    auto [it, fresh] = blocks_.emplace(std::move(key), m);
    if (!fresh) {
        it->second = it->second + m;
        if (it->second.is_zero()) blocks_.erase(it);
    }
}

const Morphism* ASElement::block(const Composition& lam,
                                 const Composition& mu) const {
    auto it = blocks_.find(std::make_pair(lam, mu));
    return it == blocks_.end() ? nullptr : &it->second;
}

ASElement ASElement::operator+(const ASElement& rhs) const {
    assert(n_ == rhs.n_ && r_ == rhs.r_);
    ASElement z = *this;
    for (const auto& [key, m] : rhs.blocks_) z.add_block(m);
    return z;
}

ASElement ASElement::operator-(const ASElement& rhs) const {
    return *this + rhs * Rat(-1);
}

ASElement ASElement::operator*(const Rat& c) const {
    ASElement z(n_, r_);
    if (c == 0) return z;
    for (const auto& [key, m] : blocks_) z.blocks_.emplace(key, m * c);
    return z;
}

ASElement ASElement::operator*(const ASElement& rhs) const {
    assert(n_ == rhs.n_ && r_ == rhs.r_);
    ASElement z(n_, r_);
    for (const auto& [kg, g] : blocks_) {
        for (const auto& [kh, h] : rhs.blocks_) {
            if (kg.second != kh.first) continue;
            z.add_block(compose(g, h));
        }
    }
    return z;
}

int ASElement::degree() const {
    int d = -1;
    for (const auto& [key, m] : blocks_) d = std::max(d, m.degree());
    return d;
}

std::string ASElement::str() const {
    if (blocks_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, m] : blocks_) {
        if (!first) os << " + ";
        first = false;
        os << m.str();
    }
    return os.str();
}

std::vector<ASElement> as_generators(int n, int r) {
    std::vector<ASElement> gens;
    const std::vector<Composition> objects = enumerate_compositions(n, r);
    for (const Composition& lam : objects) {
        for (const Composition& mu : objects) {
            for (const CosetMatrix& a : coset_matrices(lam, mu)) {
                gens.push_back(ASElement::from_morphism(n, r, Morphism::xi(a)));
            }
        }
    }
    for (const Composition& lam : objects) {
        const std::vector<int> offs = comp_offsets(lam);
        for (int i = 1; i <= n; ++i) {
            const int li = lam[static_cast<size_t>(i - 1)];
            for (int d = 1; d <= li; ++d) {
                Poly f = elementary_sym(li, d).shifted(r, offs[static_cast<size_t>(i - 1)]);
                Morphism m = Morphism::identity(lam);
                CosetMatrix diag = m.terms().begin()->first;
                gens.push_back(
                    ASElement::from_morphism(n, r, Morphism::xi(diag, f)));
            }
        }
    }
    return gens;
}

bool is_central(const ASElement& z) {
    for (const ASElement& g : as_generators(z.n(), z.r())) {
        if (!(z * g == g * z)) return false;
    }
    return true;
}

std::vector<ASElement> central_basis(int n, int r, int D) {
    std::vector<ASElement> out;
    for (const BlockSymPoly& b : block_orbit_basis({r}, D)) {
        ASElement z(n, r);
        for (const Composition& lam : enumerate_compositions(n, r)) {
            CosetMatrix diag = Morphism::identity(lam).terms().begin()->first;
            z.add_block(Morphism::xi(diag, b.poly));
        }
        out.push_back(std::move(z));
    }
    return out;
}

std::vector<ASElement> center_commutant_basis(int n, int r, int D) {
    // Coordinate basis of the filtered piece: one basis element per
    // (matrix A, block-orbit polynomial of nu_bottom(A)).
    struct BasisElt {
        CosetMatrix a;
        Poly b;
    };
    std::vector<BasisElt> basis;
    const std::vector<Composition> objects = enumerate_compositions(n, r);
    for (const Composition& lam : objects) {
        for (const Composition& mu : objects) {
            for (const CosetMatrix& a : coset_matrices(lam, mu)) {
                for (const BlockSymPoly& b : block_orbit_basis(a.nu_bottom(), D)) {
                    basis.push_back({a, b.poly});
                }
            }
        }
    }
    const std::vector<ASElement> gens = as_generators(n, r);
    // One row block per generator: every commutator must vanish on its
    // own. Rows are coordinates of the canonical basis decomposition.
    using Coord = std::tuple<size_t, CosetMatrix, std::vector<int>>;
    std::map<Coord, int> coord;
    int rows = 0;
    std::vector<std::map<int, Rat>> cols(basis.size());
    for (size_t c = 0; c < basis.size(); ++c) {
        ASElement z =
            ASElement::from_morphism(n, r, Morphism::xi(basis[c].a, basis[c].b));
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            ASElement comm = z * gens[gi] - gens[gi] * z;
            for (const auto& [key, m] : comm.blocks()) {
                for (const auto& [a, f] : m.terms()) {
                    for (const auto& [e, cf] : f.terms()) {
                        auto [it, fresh] = coord.emplace(Coord{gi, a, e}, rows);
                        if (fresh) ++rows;
                        cols[c][it->second] += cf;
                    }
                }
            }
        }
    }
    std::vector<ASElement> out;
    if (rows == 0) {
        for (const BasisElt& b : basis) {
            out.push_back(ASElement::from_morphism(n, r, Morphism::xi(b.a, b.b)));
        }
        return out;
    }
    RatMat m(static_cast<size_t>(rows), RatVec(basis.size(), Rat(0)));
    for (size_t c = 0; c < basis.size(); ++c) {
        for (const auto& [row, v] : cols[c]) m[static_cast<size_t>(row)][c] = v;
    }
    for (const RatVec& v : nullspace(m)) {
        ASElement z(n, r);
        for (size_t c = 0; c < basis.size(); ++c) {
            if (v[c] != 0) {
                z.add_block(Morphism::xi(basis[c].a, basis[c].b * v[c]));
            }
        }
        out.push_back(std::move(z));
    }
    return out;
}

} // namespace aschur
