#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aschur/combinat.hpp"
#include "aschur/daha.hpp"
#include "aschur/poly.hpp"

namespace aschur {

/**
 * Morphisms of the degenerate affine Schur category.
 *
 * A morphism from the induced module M_mu to M_lam is a right-AH-linear
 * map, stored in the canonical basis xi_{A, f}: the keys are coset
 * matrices A with row sums lam and column sums mu, and each coefficient
 * f_A is a polynomial invariant under S_{nu_bottom(A)}. The basis
 * element xi_{A, f} sends the generator m_mu to
 *   sum_y m_lam (d_A f y),  y over minimal reps of S_{nu(A)} \ S_mu.
 */
class Morphism {
public:
    Morphism() = default;
    Morphism(Composition target, Composition source)
        : target_(std::move(target)), source_(std::move(source)) {}

    // The basis element xi_{A, f}; f must be S_{nu_bottom(A)}-invariant.
    static Morphism xi(const CosetMatrix& a, const Poly& f);
    static Morphism xi(const CosetMatrix& a); // f = 1
    static Morphism identity(const Composition& lam);

    const Composition& target() const { return target_; } // lam
    const Composition& source() const { return source_; } // mu
    int rank() const { return comp_sum(target_); }

    const std::map<CosetMatrix, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const CosetMatrix& a, const Poly& f);

    Morphism operator+(const Morphism& rhs) const;
    Morphism operator-(const Morphism& rhs) const;
    Morphism operator*(const Rat& c) const;
    bool operator==(const Morphism& rhs) const = default;

    // Max total degree over the coefficients; -1 if zero.
    int degree() const;
    // Top part in the associated graded: for each A keep the homogeneous
    // component of f_A of the overall maximal degree.
    Morphism leading_term() const;
    // Homogeneous slice: keep the degree-d component of every f_A.
    Morphism homogeneous_part(int d) const;

    std::string str() const;

private:
    Composition target_, source_;
    std::map<CosetMatrix, Poly> terms_;
};

inline Morphism operator*(const Rat& c, const Morphism& m) { return m * c; }

// Value of the basis element xi_{A, f} on the generator m_{mu(A)}.
InducedVector xi_eval(const CosetMatrix& a, const Poly& f);

// Value of a morphism on an arbitrary vector of the source module, by
// right-AH-linearity from its value on the generator.
InducedVector apply(const Morphism& m, const InducedVector& v);

// Inverse of evaluation-on-the-generator: recovers the basis coordinates
// of the unique morphism M_mu -> M_lam whose value on m_mu is `value`.
// Throws std::runtime_error if `value` is not the generator image of any
// morphism (the result is always re-validated by exact evaluation).
Morphism extract(const InducedVector& value, const Composition& lam,
                 const Composition& mu);

// Composition g after h (so source(g) == target(h)): evaluated on the
// generator of source(h) and pulled back through extract.
Morphism compose(const Morphism& g, const Morphism& h);

// Monoidal (horizontal) product: on basis elements
// xi_{A,f} * xi_{B,g} = xi_{diag(A,B), f tensor g}.
Morphism hstack(const Morphism& g, const Morphism& h);

// The generating morphisms.
Morphism merge_gen(int a, int b);        // (a, b) -> (a + b)
Morphism split_gen(int a, int b);        // (a + b) -> (a, b)
Morphism cross_gen(int a, int b);        // (a, b) -> (b, a)
Morphism pin_gen(int r, const Poly& f);  // (r) -> (r), f symmetric
Morphism spot_up();                      // () -> (0)
Morphism spot_down();                    // (0) -> ()

// Adjoin an identity strand of the given thickness on the right (or the
// left) of a morphism.
Morphism strand_adjoin(const Morphism& m, int thickness, bool on_left = false);

// The basis element of the left form xi_{f, A}, with f invariant under
// S_{nu_top(A)}: m_mu -> sum_y m_lam (f d_A y). Returned in the standard
// right-form coordinates via extract.
Morphism xi_left(const Poly& f, const CosetMatrix& a);

// Contravariant flip: xi_{A, f} -> xi_{f, A^T} (reverses source/target).
Morphism flip(const Morphism& m);

// Covariant reversal: xi_{A, f} -> (-1)^{deg f} xi_{A-dagger, f-dagger},
// where A-dagger reverses rows and columns and f-dagger substitutes
// x_k -> x_{r+1-k}.
Morphism reverse(const Morphism& m);

// Dimension of the filtered piece of Hom(M_mu, M_lam) of degree <= D:
// the number of basis elements xi_{A, b}, b ranging over the block-orbit
// basis of the S_{nu_bottom(A)}-invariants.
int filtered_dim(const Composition& lam, const Composition& mu, int D);

/**
 * Elements of the affine Schur algebra AS(n, r): block matrices of
 * morphisms indexed by pairs of compositions in Lambda(n, r), with the
 * convolution product given by blockwise composition.
 */
class ASElement {
public:
    ASElement() = default;
    ASElement(int n, int r) : n_(n), r_(r) {}

    static ASElement one(int n, int r); // sum of identities 1_lam
    static ASElement from_morphism(int n, int r, const Morphism& m);

    int n() const { return n_; }
    int r() const { return r_; }
    const std::map<std::pair<Composition, Composition>, Morphism>& blocks() const {
        return blocks_;
    }
    bool is_zero() const { return blocks_.empty(); }

    void add_block(const Morphism& m);
    const Morphism* block(const Composition& lam, const Composition& mu) const;

    ASElement operator+(const ASElement& rhs) const;
    ASElement operator-(const ASElement& rhs) const;
    ASElement operator*(const ASElement& rhs) const; // blockwise compose
    ASElement operator*(const Rat& c) const;
    bool operator==(const ASElement& rhs) const = default;

    int degree() const;

    std::string str() const;

private:
    int n_ = 0, r_ = 0;
    std::map<std::pair<Composition, Composition>, Morphism> blocks_;
};

// A finite generating set of AS(n, r): all degree-zero basis elements
// xi_A (these include every merge, split and crossing realizable inside
// Lambda(n, r)) together with, for each object lam and each block i, the
// pins of the elementary symmetric polynomials of that block's variables.
std::vector<ASElement> as_generators(int n, int r);

// True if z commutes with every element of as_generators(n, r).
bool is_central(const ASElement& z);

// The central elements f . 1_{n,r}, f running over the block-orbit basis
// of the fully symmetric polynomials of degree <= D: f acts on 1_lam as
// the pin of f.
std::vector<ASElement> central_basis(int n, int r, int D);

// Basis of the degree-<= D commutant of as_generators(n, r) inside
// AS(n, r), computed as an exact nullspace (the brute-force center).
std::vector<ASElement> center_commutant_basis(int n, int r, int D);

} // namespace aschur
