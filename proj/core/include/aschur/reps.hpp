#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aschur/linalg.hpp"
#include "aschur/poly.hpp"

namespace aschur {

/**
 * Representation theory of the Yangian at a fixed polynomial degree:
 * classification data (divisibility chains of monic polynomials),
 * segments, evaluation and standard modules as explicit matrix modules
 * over exact rational functions, highest weights, and irreducible
 * quotients.
 *
 * Univariate polynomials in u are Poly values with a single variable.
 */

// --- univariate helpers ---------------------------------------------------

// Coefficient of u^d.
Rat upoly_coeff(const Poly& f, int d);

// prod_j (u - roots[j]).
Poly upoly_from_roots(const std::vector<Rat>& roots);

// Leading coefficient 1 (the constant 1 counts as monic of degree 0).
bool upoly_is_monic(const Poly& f);

// Exact division with remainder (g nonzero).
std::pair<Poly, Poly> upoly_divmod(const Poly& f, const Poly& g);

// Monic greatest common divisor.
Poly upoly_gcd(Poly f, Poly g);

// f(u + s).
Poly upoly_shift(const Poly& f, const Rat& s);

// All roots with multiplicity, in increasing order. Throws
// std::runtime_error if a positive-degree factor without rational roots
// remains (irrational roots are out of scope).
std::vector<Rat> upoly_rational_roots(const Poly& f);

// --- classification data ---------------------------------------------------

// A divisibility chain lambda_1(u), ..., lambda_n(u) of monic
// polynomials with lambda_{i+1} | lambda_i and total degree r.
struct PolySequence {
    std::vector<Poly> polys;
};

struct Segment {
    Rat b, a; // endpoints, a - b a natural number; length a - b + 1
};

// Segments ordered dominantly: the upper endpoints a_j never increase.
struct SegmentList {
    std::vector<Segment> segments;
    bool dominant = false;
};

// Checks monicity, total degree r, and the divisibility chain.
bool validate_sequence(const PolySequence& s, int r);

// The quotients P_i(u) = lambda_i(u) / lambda_{i+1}(u), i = 1..n-1.
// Throws std::invalid_argument if the sequence is invalid.
std::vector<Poly> drinfeld_polys(const PolySequence& s);

// The peel-off algorithm: repeatedly choose the smallest rational root b
// of lambda_1, let k be maximal with b a root of lambda_1, ...,
// lambda_k, record the segment [b, b+k-1], divide it out, and repeat;
// the result is reordered dominantly. Requires a valid sequence with
// all roots rational.
SegmentList segments_from_sequence(const PolySequence& s, int n);

// --- matrix modules ---------------------------------------------------------

/**
 * A finite-dimensional module over the Yangian of rank n given by
 * explicit matrices of rational functions: the generating series
 * T_{i,j}(u) acts as numer[(i,j)] / den(u), where den(u) is the monic
 * product of (u - b) over den_roots (with multiplicity) and
 * numer[(i,j)] is a dim x dim matrix of univariate numerators. As
 * u -> infinity the action tends to delta_{i,j} times the identity.
 * Vectors are column vectors; weights[t] is the gl_n-weight of the t-th
 * basis vector (the T_{i,i}^{(1)} actions are diagonal in this basis).
 */
struct YModule {
    int n = 0;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<Composition> weights;
    std::vector<Rat> den_roots;
    std::map<std::pair<int, int>, std::vector<std::vector<Poly>>> numer;

    Poly den() const { return upoly_from_roots(den_roots); }
    const std::vector<std::vector<Poly>>& action(int i, int j) const {
        return numer.at(std::make_pair(i, j));
    }
};

// The k-th exterior power of the natural rank-n module, pulled back
// through evaluation at c: T_{i,j}(u) acts as
// delta_{i,j} + e_{i,j} / (u - c). Dimension C(n, k); requires
// 1 <= k <= n.
YModule evaluation_module(const Rat& c, int k, int n);

// Iterated tensor product of evaluation modules over the segments,
// with T_{i,j}(u) acting by sum_k T_{i,k}(u) (x) T_{k,j}(u). The empty
// list yields the trivial module.
YModule standard_module(const SegmentList& segs, int n);

// A rational function in u, num / den.
struct RatFun {
    Poly num, den;
    bool operator==(const RatFun& rhs) const = default;
};

// The singular vector of the top weight (the lexicographically largest
// weight among the basis vectors) and the eigenvalues A_i(u) of
// T_{i,i}(u) on it. The space {v of top weight : T_{i,j}(u) v = 0 for
// all i < j} must be one-dimensional; throws std::runtime_error
// otherwise.
std::pair<RatVec, std::vector<RatFun>> highest_weight(const YModule& m);

// The quotient by the largest submodule avoiding the highest-weight
// vector, computed as the decreasing fixed point
// N_{t+1} = N_t cap (intersection over g of g^{-1} N_t) starting from
// the sum of the non-top weight spaces, over the coefficient matrices
// of all numerators. Requires dominant ordering data (the top weight
// space one-dimensional).
YModule irreducible_quotient(const YModule& m);

// Recovers the monic chain from highest-weight eigenvalues of the form
// A_i(u) = lambda_i(u+1) / lambda_i(u); throws std::runtime_error if
// the eigenvalues are not of this form.
PolySequence sequence_from_eigenvalues(const std::vector<RatFun>& a);

// --- verification helpers ----------------------------------------------------

// The defining commutator relation as a polynomial matrix identity in
// two variables after clearing denominators:
//   (u - v) [T_{i,j}(u), T_{k,l}(v)] = T_{k,j}(u) T_{i,l}(v)
//                                      - T_{k,j}(v) T_{i,l}(u).
bool rtt_module_check(const YModule& m);

// The T_{i,i}^{(1)} actions are simultaneously diagonal with
// natural-number eigenvalues given by the stored weights, summing to
// the module's degree on every basis vector.
bool weight_check(const YModule& m, int r);

// One-segment consistency with the induced tensor space construction:
// the operator series on the r-th exterior power computed from the
// generating product with x_p evaluated at b + p - 1 agrees with
// evaluation_module(b, r, n) entrywise as rational functions.
bool evaluation_functor_check(const Rat& b, int r, int n);

} // namespace aschur
