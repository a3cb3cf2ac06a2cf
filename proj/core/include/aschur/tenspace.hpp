#pragma once

#include <map>
#include <vector>

#include "aschur/daha.hpp"
#include "aschur/useries.hpp"

namespace aschur {

/**
 * The tensor space V^{tensor r} tensor AH_r, V = k^n, together with the
 * projection onto the induced module sum_mu (m_mu AH_r).
 *
 * Words index the V^{tensor r} basis: a word is a tuple (i_1, ..., i_r)
 * with entries in 1..n. The symmetric group acts on words on the right by
 * place permutation, (i . w)_p = i_{w(p)}; matrix units e_{a,b}^{[p]} act
 * on the left in the p-th slot. The AH factor carries a left polynomial
 * multiplication (used by the generating-function action) and the right
 * regular AH action.
 */
using Word = std::vector<int>;

// Content of a word: mu_v = number of letters equal to v, v = 1..n.
Composition word_content(const Word& i, int n);

// Right place permutation: (i . w)_p = i_{w(p)}.
Word word_act(const Word& i, const Permutation& w);

// Dominant word of content mu: 1 repeated mu_1 times, then 2, ...
Word dominant_word(const Composition& mu);

// The minimal w with i = dominant_word(content) . w, found by a stable
// sort of the letters.
Permutation sorting_permutation(const Word& i, int n);

class TensorVector {
public:
    TensorVector() = default;
    TensorVector(int n, int r) : n_(n), r_(r) {}

    static TensorVector basis(int n, const Word& i); // v_i tensor 1

    int n() const { return n_; }
    int rank() const { return r_; }
    const std::map<Word, AHElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& i, const AHElement& h);

    TensorVector operator+(const TensorVector& rhs) const;
    TensorVector operator-(const TensorVector& rhs) const;
    TensorVector operator*(const Rat& c) const;
    bool operator==(const TensorVector& rhs) const = default;

    // Right action of AH_r on the second factor.
    TensorVector times(const AHElement& a) const;

    // Left multiplication of every AH coefficient by a (used for the
    // x_p factors of the generating-function action and for s_p in the
    // defining quotient relation).
    TensorVector left_mul(const AHElement& a) const;

    // Right place permutation on the first factor only.
    TensorVector word_shift(const Permutation& w) const;

private:
    int n_ = 0, r_ = 0;
    std::map<Word, AHElement> terms_;
};

// Projection onto sum_mu (m_mu AH_r): each word is sorted to the dominant
// word of its content mu, the sorting permutation moves into the AH
// factor, and the result is split by weight.
std::map<Composition, InducedVector> project(const TensorVector& tv);

// The (i,j) matrix entry of prod_{p=1..r} (1 + Q^{[1,p+1]} / (u - x_p))
// applied to tv, truncated at u^{-N}. Expanding the product gives, for
// every subset p_1 < ... < p_s of strands and every index chain
// i = i_0, i_1, ..., i_s = j, the operator
//   e_{i_0,i_1}^{[p_1]} ... e_{i_{s-1},i_s}^{[p_s]} / prod_k (u - x_{p_k}),
// with the denominators expanded as geometric series acting by left
// polynomial multiplication on the AH factor.
USeries<TensorVector> ytt_act(int i, int j, const TensorVector& tv, int N);

} // namespace aschur
