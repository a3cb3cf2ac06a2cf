#pragma once

#include <cassert>
#include <compare>
#include <string>
#include <vector>

namespace aschur {

/**
 * Compositions (finite sequences of nonnegative integers) and the block
 * structure they induce on {1, ..., r}, r = sum of parts. Zero parts are
 * meaningful and are kept.
 */
using Composition = std::vector<int>;

int comp_sum(const Composition& mu);

// Offsets: offs[j] = mu_1 + ... + mu_j (offs[0] = 0, size n+1). Block j
// (1-based) occupies positions offs[j-1]+1 .. offs[j].
std::vector<int> comp_offsets(const Composition& mu);

// 1-based index of the block containing position p (1 <= p <= r). Zero
// blocks are never returned since they contain no positions.
int comp_block_of(const Composition& mu, int p);

// All compositions of r with exactly n parts >= 0, in lexicographic order.
std::vector<Composition> enumerate_compositions(int n, int r);

// True if nu is a refinement of mu compatible with the block structure:
// nu is obtained by splitting each part of mu into consecutive parts.
// `splits` (optional out) receives, for each mu-block, the range of
// nu-blocks it splits into.
bool refines(const Composition& nu, const Composition& mu);

/**
 * Permutations of {1, ..., r} in one-line notation, 1-based.
 *
 * The convention throughout: w maps bottom position p to top position
 * w(p), and products compose diagrams bottom to top, so (v * w)(p) =
 * v(w(p)) applies w first.
 */
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int r); // identity
    explicit Permutation(std::vector<int> one_line);

    static Permutation transposition(int r, int i); // s_i = (i, i+1)

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int p) const { return w_[p - 1]; }
    const std::vector<int>& one_line() const { return w_; }

    Permutation operator*(const Permutation& rhs) const; // rhs first
    Permutation inverse() const;

    bool is_identity() const;
    int length() const; // number of inversions

    // A reduced word (j_1, ..., j_m) with *this == s_{j_1} * ... * s_{j_m},
    // chosen deterministically (smallest descent first).
    std::vector<int> reduced_word() const;

    bool operator==(const Permutation& rhs) const = default;
    auto operator<=>(const Permutation& rhs) const = default;

    std::string str() const;

private:
    std::vector<int> w_; // w_[p-1] = w(p)
};

// All of S_r, by repeated std::next_permutation (lex order on one-line).
std::vector<Permutation> symmetric_group(int r);

// The Young subgroup S_mu <= S_r: permutations preserving each mu-block
// of positions (equivalently of values).
std::vector<Permutation> young_subgroup(const Composition& mu);

// Minimal-length representative of the coset S_nu w (S_nu acting by left
// multiplication, i.e. permuting values within nu-blocks): positions
// mapped into each nu-block of values keep their relative order.
Permutation min_coset_rep(const Composition& nu, const Permutation& w);

// Minimal-length representatives of S_nu \ S_mu where nu refines mu.
// These are exactly the w in S_mu fixed by min_coset_rep(nu, .).
std::vector<Permutation> min_coset_reps(const Composition& nu,
                                        const Composition& mu);

// Minimal-length representatives of S_r / S_nu (r = sum nu): permutations
// increasing on each nu-block of positions.
std::vector<Permutation> min_left_coset_reps(const Composition& nu);

/**
 * Nonnegative integer matrices with prescribed row and column sums.
 *
 * A matrix A encodes a double coset of Young subgroups: row sums lam(A)
 * index the target blocks (top of the diagram), column sums mu(A) the
 * source blocks (bottom), and entry a_{ij} counts strands from bottom
 * block j to top block i.
 */
class CosetMatrix {
public:
    CosetMatrix() = default;
    CosetMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), 0) {}
    explicit CosetMatrix(const std::vector<std::vector<int>>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int& at(int i, int j) { return a_[static_cast<size_t>((i - 1) * cols_ + j - 1)]; }
    int at(int i, int j) const { return a_[static_cast<size_t>((i - 1) * cols_ + j - 1)]; }

    Composition lam() const; // row sums
    Composition mu() const;  // column sums
    int total() const;

    // Entries read row-major; a composition refining lam().
    Composition nu_top() const;
    // Entries read column-major; a composition refining mu().
    Composition nu_bottom() const;

    CosetMatrix transpose() const;
    // Reverses the order of both rows and columns.
    CosetMatrix reverse() const;

    bool operator==(const CosetMatrix& rhs) const = default;
    auto operator<=>(const CosetMatrix& rhs) const = default;

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<int> a_;
};

// The pair of compositions read off a matrix: entries along rows (a
// refinement of lam) and entries down columns (a refinement of mu).
inline std::pair<Composition, Composition> redundancies(const CosetMatrix& a) {
    return {a.nu_top(), a.nu_bottom()};
}

// All matrices with row sums lam and column sums mu.
std::vector<CosetMatrix> coset_matrices(const Composition& lam,
                                        const Composition& mu);

// Block-diagonal concatenation (for the monoidal product).
CosetMatrix block_diag(const CosetMatrix& a, const CosetMatrix& b);

// The distinguished permutation d_A of the double coset encoded by A.
// Bottom strands are grouped per cell in column-major cell order, top
// strands per cell in row-major cell order; the k-th bottom strand of a
// cell connects to its k-th top strand.
Permutation dA(const CosetMatrix& a);

// Bruhat order on double cosets via partial sums: for all s, t,
// sum_{i<=s, j<=t} a_{ij} >= sum_{i<=s, j<=t} b_{ij} iff d_A <= d_B.
bool bruhat_leq(const CosetMatrix& a, const CosetMatrix& b);

/**
 * Decomposition of w in S_r as x * dA(A) * y with x in S_lam and y a
 * minimal representative of S_{nu_bottom(A)} \ S_mu.
 */
struct CosetDecomposition {
    CosetMatrix a;
    Permutation x, y;
};

CosetDecomposition coset_decompose(const Composition& lam,
                                   const Composition& mu,
                                   const Permutation& w);

} // namespace aschur
