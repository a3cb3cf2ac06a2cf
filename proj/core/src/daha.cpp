#include "aschur/daha.hpp"

#include <cassert>
#include <sstream>

#include "aschur/linalg.hpp"

namespace aschur {

AHElement AHElement::one(int r) { return from_poly(Poly(r, Rat(1))); }

AHElement AHElement::from_poly(const Poly& f) {
    AHElement a(f.nvars());
    a.add_term(Permutation(f.nvars()), f);
    return a;
}

AHElement AHElement::from_perm(const Permutation& w) {
    AHElement a(w.size());
    a.add_term(w, Poly(w.size(), Rat(1)));
    return a;
}

AHElement AHElement::term(const Permutation& w, const Poly& f) {
    AHElement a(w.size());
    a.add_term(w, f);
    return a;
}

void AHElement::add_term(const Permutation& w, const Poly& f) {
    assert(w.size() == r_ && f.nvars() == r_);
    if (f.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AHElement AHElement::operator+(const AHElement& rhs) const {
    assert(r_ == rhs.r_);
    AHElement a = *this;
    for (const auto& [w, f] : rhs.terms_) a.add_term(w, f);
    return a;
}

AHElement AHElement::operator-(const AHElement& rhs) const {
    return *this + rhs * Rat(-1);
}

AHElement AHElement::operator*(const Rat& c) const {
    AHElement a(r_);
    if (c == 0) return a;
    for (const auto& [w, f] : terms_) a.terms_.emplace(w, f * c);
    return a;
}

AHElement push_right(const Poly& f, const Permutation& v) {
    const int r = f.nvars();
    assert(v.size() == r);
    if (f.is_zero()) return AHElement(r);
    std::vector<int> word = v.reduced_word();
    if (word.empty()) return AHElement::from_poly(f);
    const int j = word.front();
    Permutation rest = Permutation::transposition(r, j) * v; // v = s_j * rest
    // f s_j = s_j (s_j f) + demazure_j(f), then push past the remainder.
    AHElement out(r);
    AHElement swapped = push_right(f.act(Permutation::transposition(r, j)), rest);
    for (const auto& [u, h] : swapped.terms()) {
        out.add_term(Permutation::transposition(r, j) * u, h);
    }
    AHElement lower = push_right(f.demazure(j), rest);
    for (const auto& [u, h] : lower.terms()) out.add_term(u, h);
    return out;
}

AHElement AHElement::operator*(const AHElement& rhs) const {
    assert(r_ == rhs.r_);
    AHElement out(r_);
    for (const auto& [w, f] : terms_) {
        for (const auto& [v, g] : rhs.terms_) {
            AHElement mid = push_right(f, v);
            for (const auto& [u, h] : mid.terms()) out.add_term(w * u, h * g);
        }
    }
    return out;
}

int AHElement::poly_degree() const {
    int d = -1;
    for (const auto& [w, f] : terms_) d = std::max(d, f.degree());
    return d;
}

AHElement AHElement::leading() const {
    const int d = poly_degree();
    AHElement out(r_);
    if (d < 0) return out;
    for (const auto& [w, f] : terms_) out.add_term(w, f.homogeneous_part(d));
    return out;
}

std::string AHElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << w.str() << "*(" << f.str() << ')';
    }
    return os.str();
}

Poly poly_rep(const AHElement& h, const Poly& f) {
    assert(h.rank() == f.nvars());
    Poly out(f.nvars());
    for (const auto& [w, g] : h.terms()) out += (g * f).diamond(w);
    return out;
}

std::vector<AHElement> ah_center_basis(int r, int D) {
    // Coordinates on the filtered piece: pairs (w, monomial of degree <= D).
    std::vector<Permutation> group = symmetric_group(r);
    std::vector<std::vector<int>> monos = monomials_up_to(r, D);
    std::vector<std::pair<Permutation, std::vector<int>>> basis;
    for (const auto& w : group) {
        for (const auto& e : monos) basis.emplace_back(w, e);
    }
    // Generators of AH_r to commute against.
    std::vector<AHElement> gens;
    for (int i = 1; i < r; ++i) {
        gens.push_back(AHElement::from_perm(Permutation::transposition(r, i)));
    }
    for (int j = 1; j <= r; ++j) {
        gens.push_back(AHElement::from_poly(Poly::variable(r, j)));
    }
    // Commutators live in filtered degree <= D+1; each generator gets its
    // own block of rows (all commutators must vanish separately).
    std::map<std::tuple<size_t, std::vector<int>, std::vector<int>>, int> coord;
    int rows = 0;
    auto coord_of = [&](size_t gi, const Permutation& w, const std::vector<int>& e) {
        auto key = std::make_tuple(gi, w.one_line(), e);
        auto [it, fresh] = coord.emplace(key, rows);
        if (fresh) ++rows;
        return it->second;
    };
    std::vector<std::map<int, Rat>> cols(basis.size());
    for (size_t c = 0; c < basis.size(); ++c) {
        AHElement z = AHElement::term(basis[c].first, Poly::monomial(basis[c].second));
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            AHElement comm = z * gens[gi] - gens[gi] * z;
            for (const auto& [w, f] : comm.terms()) {
                for (const auto& [e, cf] : f.terms()) {
                    cols[c][coord_of(gi, w, e)] += cf;
                }
            }
        }
    }
    std::vector<AHElement> out;
    if (rows == 0) { // everything commutes (r = 1)
        for (const auto& [w, e] : basis) out.push_back(AHElement::term(w, Poly::monomial(e)));
        return out;
    }
    RatMat m(static_cast<size_t>(rows), RatVec(basis.size(), Rat(0)));
    for (size_t c = 0; c < basis.size(); ++c) {
        for (const auto& [row, v] : cols[c]) m[static_cast<size_t>(row)][c] = v;
    }
    for (const RatVec& v : nullspace(m)) {
        AHElement z(r);
        for (size_t c = 0; c < basis.size(); ++c) {
            if (v[c] != 0) z.add_term(basis[c].first, Poly::monomial(basis[c].second, v[c]));
        }
        out.push_back(std::move(z));
    }
    return out;
}

InducedVector InducedVector::generator(const Composition& lam) {
    InducedVector v(lam);
    const int r = comp_sum(lam);
    v.add_term(Permutation(r), Poly(r, Rat(1)));
    return v;
}

void InducedVector::add_term(const Permutation& w, const Poly& f) {
    assert(w.size() == rank() && f.nvars() == rank());
    if (f.is_zero()) return;
    Permutation key = min_coset_rep(lam_, w);
    auto [it, fresh] = terms_.emplace(std::move(key), f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

InducedVector InducedVector::operator+(const InducedVector& rhs) const {
    assert(lam_ == rhs.lam_);
    InducedVector v = *this;
    for (const auto& [w, f] : rhs.terms_) v.add_term(w, f);
    return v;
}

InducedVector InducedVector::operator-(const InducedVector& rhs) const {
    return *this + rhs * Rat(-1);
}

InducedVector InducedVector::operator*(const Rat& c) const {
    InducedVector v(lam_);
    if (c == 0) return v;
    for (const auto& [w, f] : terms_) v.terms_.emplace(w, f * c);
    return v;
}

InducedVector InducedVector::times(const AHElement& a) const {
    assert(a.rank() == rank());
    InducedVector out(lam_);
    for (const auto& [w, f] : terms_) {
        for (const auto& [v, g] : a.terms()) {
            AHElement mid = push_right(f, v);
            for (const auto& [u, h] : mid.terms()) out.add_term(w * u, h * g);
        }
    }
    return out;
}

std::string InducedVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << 'm' << w.str() << "*(" << f.str() << ')';
    }
    return os.str();
}

} // namespace aschur
