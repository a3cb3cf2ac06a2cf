/**
 * Tests for the tensor space, its projection onto the induced modules,
 * and the generating-function matrix action used by the Drinfeld
 * homomorphism.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aschur/tenspace.hpp"

using namespace aschur;

namespace {

Poly x(int r, int i) { return Poly::variable(r, i); }

AHElement s(int r, int i) {
    return AHElement::from_perm(Permutation::transposition(r, i));
}

// Sum over p of the single matrix unit e_{i,j}^{[p]} applied to tv.
TensorVector matrix_unit_sum(int i, int j, const TensorVector& tv) {
    TensorVector out(tv.n(), tv.rank());
    for (const auto& [word, h] : tv.terms()) {
        for (int p = 1; p <= tv.rank(); ++p) {
            if (word[static_cast<size_t>(p - 1)] == j) {
                Word w2 = word;
                w2[static_cast<size_t>(p - 1)] = i;
                out.add_term(w2, h);
            }
        }
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Words and sorting
// ---------------------------------------------------------------------------

TEST_CASE("word actions and sorting permutations") {
    Word i{2, 1, 2};
    CHECK(word_content(i, 3) == Composition{1, 2, 0});
    CHECK(dominant_word({1, 2, 0}) == Word{1, 2, 2});
    Permutation w = sorting_permutation(i, 3);
    CHECK(word_act(dominant_word({1, 2, 0}), w) == i);
    CHECK(min_coset_rep({1, 2, 0}, w) == w);

    // Right place permutation composes contravariantly on the right.
    for (const auto& v : symmetric_group(3)) {
        for (const auto& u : symmetric_group(3)) {
            CHECK(word_act(word_act(i, v), u) == word_act(i, v * u));
        }
    }
}

// ---------------------------------------------------------------------------
// Projection
// ---------------------------------------------------------------------------

TEST_CASE("projection of basis words") {
    TensorVector tv = TensorVector::basis(2, {1, 2});
    auto parts = project(tv);
    REQUIRE(parts.size() == 1);
    const auto& [mu, v] = *parts.begin();
    CHECK(mu == Composition{1, 1});
    REQUIRE(v.terms().size() == 1);
    CHECK(v.terms().begin()->first.is_identity());

    auto parts2 = project(TensorVector::basis(2, {2, 1}));
    REQUIRE(parts2.size() == 1);
    CHECK(parts2.begin()->second.terms().begin()->first ==
          Permutation::transposition(2, 1));
}

TEST_CASE("projection kills the defining relations of the quotient") {
    const int n = 2;
    for (int r = 2; r <= 3; ++r) {
        AHElement h = s(r, 1) * AHElement::from_poly(x(r, 1)) + AHElement::one(r);
        std::vector<Word> words;
        if (r == 2) {
            words = {{1, 2}, {2, 2}, {2, 1}};
        } else {
            words = {{1, 2, 2}, {2, 1, 2}, {1, 1, 2}};
        }
        for (const Word& i : words) {
            TensorVector tv(n, r);
            tv.add_term(i, h);
            for (int p = 1; p < r; ++p) {
                TensorVector diff =
                    tv.word_shift(Permutation::transposition(r, p)) -
                    tv.left_mul(s(r, p));
                for (const auto& [mu, part] : project(diff)) {
                    CHECK(part.is_zero());
                }
            }
        }
    }
}

TEST_CASE("projection intertwines the right action") {
    const int n = 2, r = 3;
    TensorVector tv(n, r);
    tv.add_term({2, 1, 2}, AHElement::one(r));
    tv.add_term({1, 1, 2}, s(r, 2) * AHElement::from_poly(x(r, 1)));
    std::vector<AHElement> sample = {s(r, 1), AHElement::from_poly(x(r, 2)),
                                     s(r, 2) * AHElement::from_poly(x(r, 3))};
    for (const auto& a : sample) {
        auto moved = project(tv.times(a));
        for (auto [mu, part] : project(tv)) {
            InducedVector expect = part.times(a);
            auto it = moved.find(mu);
            if (it == moved.end()) {
                CHECK(expect.is_zero());
            } else {
                CHECK(it->second == expect);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Generating-function action
// ---------------------------------------------------------------------------

TEST_CASE("constant and first-order coefficients") {
    const int n = 2, r = 2, N = 3;
    TensorVector tv(n, r);
    tv.add_term({1, 2}, AHElement::one(r));
    tv.add_term({2, 2}, s(r, 1));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            USeries<TensorVector> series = ytt_act(i, j, tv, N);
            const TensorVector* c0 = series.get(0);
            if (i == j) {
                REQUIRE(c0 != nullptr);
                CHECK(*c0 == tv);
            } else {
                CHECK(c0 == nullptr);
            }
            const TensorVector* c1 = series.get(1);
            TensorVector expect = matrix_unit_sum(i, j, tv);
            if (c1 == nullptr) {
                CHECK(expect.is_zero());
            } else {
                CHECK(*c1 == expect);
            }
        }
    }
}

TEST_CASE("rank-one case is multiplication by the product series") {
    // n = 1: the action multiplies the AH factor on the left by
    // prod_p (1 + 1/(u - x_p)).
    const int r = 2, N = 4;
    TensorVector tv(1, r);
    AHElement h = s(r, 1) * AHElement::from_poly(x(r, 2));
    tv.add_term({1, 1}, h);
    USeries<TensorVector> series = ytt_act(1, 1, tv, N);

    USeries<Poly> prod(N);
    prod.set(0, Poly(r, Rat(1)));
    for (int p = 1; p <= r; ++p) {
        USeries<Poly> f(N);
        f.set(0, Poly(r, Rat(1)));
        f = f + expand_linear_inverse(x(r, p), N);
        prod = USeries<Poly>::mul(prod, f,
                                  [](const Poly& a, const Poly& b) { return a * b; });
    }
    for (int d = 0; d <= N; ++d) {
        const TensorVector* c = series.get(d);
        const Poly* q = prod.get(d);
        if (q == nullptr || q->is_zero()) {
            CHECK(c == nullptr);
            continue;
        }
        REQUIRE(c != nullptr);
        CHECK(*c == tv.left_mul(AHElement::from_poly(*q)));
    }
}

TEST_CASE("the action descends to the quotient") {
    const int n = 2, N = 4;
    for (int r = 2; r <= 3; ++r) {
        AHElement h = AHElement::from_poly(x(r, 1)) + s(r, r - 1);
        Word word(static_cast<size_t>(r), 1);
        word.back() = 2;
        TensorVector tv(n, r);
        tv.add_term(word, h);
        for (int p = 1; p < r; ++p) {
            TensorVector diff = tv.word_shift(Permutation::transposition(r, p)) -
                                tv.left_mul(s(r, p));
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    USeries<TensorVector> series = ytt_act(i, j, diff, N);
                    for (const auto& [d, c] : series.coeffs()) {
                        for (const auto& [mu, part] : project(c)) {
                            CHECK(part.is_zero());
                        }
                    }
                }
            }
        }
    }
}
