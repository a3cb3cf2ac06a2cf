#pragma once

#include <map>
#include <utility>
#include <vector>

#include "aschur/aschur.hpp"
#include "aschur/useries.hpp"

namespace aschur {

using ASeries = USeries<ASElement>;

/**
 * Truncated image of the Yangian's RTT generator matrix under the
 * Drinfeld homomorphism into AS(n, r).
 *
 * Entry (i, j) is the image of the generating series T_{i,j}(u), a
 * truncated series in u^{-1} with ASElement coefficients. The u^0
 * coefficient of entry (i, j) is delta_{i,j} times the identity, and
 * every block of the (i, j) entry goes from a weight mu to mu + eps_i -
 * eps_j.
 */
struct TMatrixImage {
    int n = 0, r = 0, N = 0;
    std::vector<ASeries> entries; // row-major, (i-1)*n + (j-1)

    TMatrixImage(int n_, int r_, int N_)
        : n(n_), r(r_), N(N_),
          entries(static_cast<size_t>(n_ * n_), ASeries(N_)) {}

    ASeries& entry(int i, int j) {
        return entries[static_cast<size_t>((i - 1) * n + (j - 1))];
    }
    const ASeries& entry(int i, int j) const {
        return entries[static_cast<size_t>((i - 1) * n + (j - 1))];
    }
};

// Default series truncation for identity checks at rank r.
inline int default_order(int r) { return r + 3; }

// Equality of truncated series of ASElement, compared over the keys up
// to the smaller truncation after dropping zero coefficients.
bool series_equal(const ASeries& a, const ASeries& b);

// Entrywise series_equal of two images with the same n and r.
bool tmatrix_equal(const TMatrixImage& a, const TMatrixImage& b);

// The Drinfeld homomorphism on the RTT generators, computed through the
// action on the induced tensor space: for each weight mu, the operator
// series is applied to the generator v_{dominant word} (x) 1, projected
// onto the induced modules, and pulled back to basis coordinates.
TMatrixImage drinfeld_image(int n, int r, int N);

// The same images built directly from the closed summation formula over
// chains i >= j_1 < ... < j_t = j and weights mu, with the
// rational-function labels expanded as series in u^{-1}. Serves as an
// independent oracle for drinfeld_image.
TMatrixImage slava_closed_form(int n, int r, int N);

/**
 * Gauss factorization T(u) = F(u) D(u) E(u) with F lower unitriangular,
 * D diagonal and E upper unitriangular, computed by block elimination
 * over the noncommutative coefficient ring using truncated series
 * inverses. d[i-1] is D_i(u); e and f are keyed by (i, j) with i < j,
 * holding E_{i,j}(u) (the (i, j) entry of E) and F_{i,j}(u) (the (j, i)
 * entry of F).
 */
struct GaussFactors {
    std::vector<ASeries> d;
    std::map<std::pair<int, int>, ASeries> e, f;
};

GaussFactors gauss_factorize(const TMatrixImage& t);

// Re-multiplication check: sum_k F_{k,i} D_k E_{k,j} recovers T
// entrywise modulo u^{-N-1}.
bool gauss_remultiply_check(const TMatrixImage& t, const GaussFactors& g);

// Direct diagram values of the Drinfeld generator series, built without
// Gauss elimination:
//   dform_image:  D_i(u) = sum over lambda of 1_lambda with the pin
//                 E(u+i) H(u+i-1) on block i, where E(v) and H(v) are
//                 the product of (v - x_p) over the block and its
//                 inverse;
//   eform_image:  E_{i,j}(u) (i < j) = sum over mu with mu_j > 0 of the
//                 left-form basis element with matrix
//                 diag(mu) + e_{i,j} - e_{j,j} and top label
//                 1/(u + i - x_{mu_{<=i}+1});
//   fform_image:  F_{i,j}(u) (i < j) = sum over mu with mu_i > 0 of the
//                 right-form basis element with matrix
//                 diag(mu) + e_{j,i} - e_{i,i} and bottom label
//                 1/(u + i - x_{mu_{<=i}}).
ASeries dform_image(int n, int r, int i, int N);
ASeries eform_image(int n, int r, int i, int j, int N);
ASeries fform_image(int n, int r, int i, int j, int N);

// Defining RTT commutator relation on images, for all entry indices and
// all orders a, b <= bound (requires a + b - 1 <= t.N):
//   [T_ij^(a), T_kl^(b)] = sum_{c=0}^{min(a,b)-1}
//       (T_il^(a+b-1-c) T_kj^(c) - T_il^(c) T_kj^(a+b-1-c)).
bool rtt_check(const TMatrixImage& t, int bound);

// Image of the Harish-Chandra series C_n(u) = D_1(u) D_2(u-1) ... ,
// computed from the Gauss factorization. Throws std::runtime_error if
// the result does not equal the deformed-power-sum generating function
//   prod_p (u+1-x_p)/(u-x_p)
// acting diagonally (its u^{-d-1} coefficient is tilde_p_d . 1_{n,r}).
ASeries hc_center_image(int n, int r, int N);

// The diagonal cut of the shifted Drinfeld generator series: for every
// weight lambda, every i and every d < N, the (lambda, lambda) block of
// the u^{-d-1} coefficient of D_i(u-i+1) equals the deformed power sum
// tilde_p_d in the block-i variables times 1_lambda.
bool diagonal_power_sum_check(int n, int r, int N);

// The translation symmetry u -> u + c, applied entrywise by re-expanding
// in u^{-1} (binomially on coefficients).
TMatrixImage eta_shift(const TMatrixImage& t, const Rat& c);

// Transposition symmetry: the contravariant flip of the image of
// T_{i,j}(u) equals the image of T_{j,i}(u), for all entries.
bool tau_check(const TMatrixImage& t);

// Compatibility of the Drinfeld homomorphism with the two strand
// adjunction embeddings AS(n,r) -> AS(n+1, r+m):
//   - adjoining a strand of thickness m on the right intertwines with
//     the natural embedding of the smaller Yangian (entry (i,j) of the
//     bigger image, cut to the corner of weights whose last part is m,
//     equals the adjoined smaller entry);
//   - adjoining on the left intertwines with the twisted embedding
//     T_{i,j}(u) -> T_{i+1,j+1}(u-1)
//                   - T_{i+1,1}(u-1) T_{1,1}(u-1)^{-1} T_{1,j+1}(u-1),
//     cut to the corner of weights whose first part is m.
bool shifty_check(int n, int r, int m, int N);

// Desk-scale surjectivity evidence: spans products of the image
// coefficients T_{i,j}^{(d)} with total weight sum (d-1) at most D,
// growing the word length until the span stabilizes, and compares with
// the total dimension of the filtered degree-<=D piece of AS(n, r).
// Returns (spanned, full).
std::pair<int, int> surjectivity_dim(int n, int r, int D);

} // namespace aschur
