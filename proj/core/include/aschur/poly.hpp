#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aschur/combinat.hpp"
#include "aschur/rat.hpp"
#include "aschur/useries.hpp"

namespace aschur {

/**
 * Sparse multivariate polynomials in x_1, ..., x_r over Rat.
 *
 * The number of variables is part of the value (zero variables is the
 * scalar case). Terms are held in a map from exponent vectors to nonzero
 * coefficients, so equality is structural and exact.
 */
class Poly {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Rat>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}
    Poly(int nvars, const Rat& c);               // constant
    static Poly variable(int nvars, int i);      // x_i
    static Poly monomial(Exponents e, const Rat& c = 1);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    int degree() const; // total degree; -1 for the zero polynomial

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator-() const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& rhs) const = default;
    bool operator<(const Poly& rhs) const; // deterministic total order

    void add_term(const Exponents& e, const Rat& c);

    // Variable permutation: x_i -> x_{w(i)}.
    Poly act(const Permutation& w) const;

    // Divided difference (f - s_i f) / (x_i - x_{i+1}), computed
    // term by term so the division is exact by construction.
    Poly demazure(int i) const;

    // Deformed (diamond) action of s_i: s_i(f) + demazure_i(f).
    Poly diamond_s(int i) const;
    // Deformed action of w via any reduced word (well defined).
    Poly diamond(const Permutation& w) const;

    // Reindex into `nvars` variables, moving x_i to x_{i+offset}.
    Poly shifted(int nvars, int offset) const;

    // Product f(x_1..x_a) * g(x_{a+1}..x_{a+b}) in a+b variables.
    static Poly tensor(const Poly& f, const Poly& g);

    // Exact evaluation at a full point.
    Rat eval(const std::vector<Rat>& point) const;

    // Substitute x_i -> values[i-1] (a polynomial in `nvars_out` vars).
    Poly substitute(const std::vector<Poly>& values, int nvars_out) const;

    // True if f is invariant under S_nu permuting variables within the
    // blocks of nu (sum of nu must be nvars).
    bool is_block_symmetric(const Composition& nu) const;

    // The part of f of total degree exactly d.
    Poly homogeneous_part(int d) const;

    std::string str() const;

private:
    int nvars_ = 0;
    Terms terms_;
};

inline Poly operator*(const Rat& c, const Poly& f) { return f * c; }

/**
 * A polynomial tagged with the block structure under which it is
 * invariant (invariance is the caller's contract, checked in debug and
 * in tests via Poly::is_block_symmetric).
 */
struct BlockSymPoly {
    Composition blocks;
    Poly poly;

    bool operator==(const BlockSymPoly& rhs) const = default;
};

// Elementary, complete homogeneous, power sum, and monomial symmetric
// polynomials in m variables.
Poly elementary_sym(int m, int d);
Poly complete_sym(int m, int d);
Poly power_sym(int m, int d);
Poly monomial_sym(int m, const std::vector<int>& lambda);

// The named symmetric family in r variables: elementary e_d, complete
// h_d, power sum p_d, or the deformed power sum tilde_p_d (tilde_p_0 = r;
// for d >= 1, tilde_p_d = p_d plus a lower-degree correction computed by
// an explicit recursion in the e_k).
enum class SymKind { e, h, p, tilde_p };
Poly sym_family(SymKind kind, int d, int r);

// Canonical basis of the degree-<=D part of the S_nu-invariants: all
// products over the blocks of per-block monomial symmetric polynomials,
// indexed by tuples of partitions fitting in the blocks.
std::vector<BlockSymPoly> block_orbit_basis(const Composition& nu, int D);

// Partitions of d with at most m parts (parts weakly decreasing, > 0).
std::vector<std::vector<int>> partitions_max_parts(int d, int m);

// Decomposition of a symmetric f in a+b variables as
//   f(x_1..x_a, y_1..y_b) = sum_k f1_k(x) * f2_k(y),
// via the monomial symmetric basis. Requires f fully symmetric.
std::vector<std::pair<Poly, Poly>> coproduct_split(const Poly& f, int a, int b);

// All monomial exponent vectors in m variables of total degree <= d.
std::vector<std::vector<int>> monomials_up_to(int m, int d);

// Geometric expansion 1/(u - c) = sum_{d >= 0} c^d u^{-d-1}, truncated.
USeries<Poly> expand_linear_inverse(const Poly& c, int N);

// Expansion of prod_{p=1..r} (u - x_p)^{pm} as a series in u^{-1}: the
// full product for pm = +1 (a polynomial in u, exponents down to -r) or
// its inverse for pm = -1.
USeries<Poly> linear_product_series(int r, int pm, int N);

} // namespace aschur
