#pragma once

#include <map>
#include <string>

#include "aschur/combinat.hpp"
#include "aschur/poly.hpp"

namespace aschur {

/**
 * The degenerate affine Hecke algebra AH_r.
 *
 * Generated by the symmetric group S_r and a polynomial algebra in
 * commuting x_1, ..., x_r, subject to s_i x_i = x_{i+1} s_i + 1 (and
 * s_i x_j = x_j s_i for j not in {i, i+1}). Every element has a unique
 * normal form sum_w w * f_w with the group element on the left and the
 * polynomial on the right; this class maintains that normal form.
 */
class AHElement {
public:
    AHElement() = default;
    explicit AHElement(int r) : r_(r) {}

    static AHElement one(int r);
    static AHElement from_poly(const Poly& f);
    static AHElement from_perm(const Permutation& w);
    static AHElement term(const Permutation& w, const Poly& f);

    int rank() const { return r_; }
    const std::map<Permutation, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Permutation& w, const Poly& f);

    AHElement operator+(const AHElement& rhs) const;
    AHElement operator-(const AHElement& rhs) const;
    AHElement operator*(const AHElement& rhs) const;
    AHElement operator*(const Rat& c) const;
    bool operator==(const AHElement& rhs) const = default;

    // Top-degree part: keeps, for each group element, the homogeneous
    // component of the polynomial of maximal total degree over the whole
    // element (the associated graded leading term).
    AHElement leading() const;
    int poly_degree() const; // max degree over all coefficients; -1 if zero

    std::string str() const;

private:
    int r_ = 0;
    std::map<Permutation, Poly> terms_;
};

// The left polynomial representation: x_i acts by multiplication, group
// elements by the deformed (diamond) action, so a normal-form term w g
// sends f to w diamond (g f).
Poly poly_rep(const AHElement& h, const Poly& f);

// Basis of the center of AH_r in filtered degree <= D, computed as the
// exact nullspace of the commutator map with the generators s_i and x_j.
std::vector<AHElement> ah_center_basis(int r, int D);

// Normal form of the product f * v (polynomial times group element),
// obtained by pushing f to the right letter by letter using
// f s_i = s_i (s_i f) + demazure_i(f).
AHElement push_right(const Poly& f, const Permutation& v);

/**
 * The induced right AH_r-module with generator m_lam, where the Young
 * subgroup S_lam acts trivially on the left: m_lam (x a) = m_lam a for
 * x in S_lam. Elements are kept in the normal form
 *   sum_w m_lam (w f_w),  w ranging over minimal coset representatives
 * of S_lam \ S_r.
 */
class InducedVector {
public:
    InducedVector() = default;
    explicit InducedVector(Composition lam) : lam_(std::move(lam)) {}

    static InducedVector generator(const Composition& lam); // m_lam * 1

    const Composition& weight() const { return lam_; }
    int rank() const { return comp_sum(lam_); }
    const std::map<Permutation, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds m_lam (w f), reducing w to its minimal coset representative.
    void add_term(const Permutation& w, const Poly& f);

    InducedVector operator+(const InducedVector& rhs) const;
    InducedVector operator-(const InducedVector& rhs) const;
    InducedVector operator*(const Rat& c) const;
    bool operator==(const InducedVector& rhs) const = default;

    // Right action of AH_r.
    InducedVector times(const AHElement& a) const;

    std::string str() const;

private:
    Composition lam_;
    std::map<Permutation, Poly> terms_;
};

} // namespace aschur
