/**
 * Tests for the canonical text format: the parsers invert the printers
 * exactly, and malformed inputs are rejected.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aschur/serialize.hpp"

using namespace aschur;

// ---------------------------------------------------------------------------
// Round trips
// ---------------------------------------------------------------------------

TEST_CASE("compositions and coset matrices round-trip") {
    for (const Composition& mu : {Composition{}, Composition{0}, Composition{1, 0, 2}}) {
        CHECK(comp_parse(comp_str(mu)) == mu);
    }
    CHECK(comp_str(Composition{1, 0, 2}) == "(1,0,2)");

    const CosetMatrix a(std::vector<std::vector<int>>{{1, 0, 3}, {2, 2, 1}});
    CHECK(a.str() == "[[1 0 3] [2 2 1]]");
    CHECK(coset_parse(a.str()) == a);
}

TEST_CASE("polynomials round-trip with exact coefficients") {
    Poly f(3);
    f.add_term({2, 0, 1}, rat(3, 2));
    f.add_term({0, 1, 0}, Rat(-1));
    f.add_term({0, 0, 0}, rat(-5, 7));
    CHECK(poly_parse(f.str(), 3) == f);
    CHECK(poly_parse("0", 3) == Poly(3));
    CHECK(poly_parse("1", 0) == Poly(0, Rat(1)));

    // Every symmetric family member round-trips.
    for (int d = 0; d <= 4; ++d) {
        const Poly g = sym_family(SymKind::tilde_p, d, 3);
        CHECK(poly_parse(g.str(), 3) == g);
    }
}

TEST_CASE("morphisms and algebra elements round-trip") {
    const Morphism m = merge_gen(1, 2) + merge_gen(1, 2) * rat(1, 3);
    CHECK(morphism_parse(m.str(), m.target(), m.source()) == m);

    const Morphism zero = Morphism(Composition{2}, Composition{2});
    CHECK(morphism_parse("0", {2}, {2}) == zero);

    for (const ASElement& z : as_generators(2, 2)) {
        CHECK(aselement_parse(z.str(), 2, 2) == z);
    }
    for (const ASElement& z : central_basis(2, 2, 2)) {
        CHECK(aselement_parse(z.str(), 2, 2) == z);
    }
}

TEST_CASE("series round-trip including zero coefficients") {
    const TMatrixImage t = drinfeld_image(2, 2, 3);
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            const ASeries& s = t.entry(i, j);
            const ASeries back = series_parse(series_str(s, 2, 2));
            CHECK(series_equal(back, s));
            CHECK(back.trunc() == s.trunc());
        }
    }
}

TEST_CASE("serialization is byte-stable") {
    const ASElement z = as_generators(2, 2).front();
    CHECK(z.str() == aselement_parse(z.str(), 2, 2).str());
    const TMatrixImage t = drinfeld_image(2, 1, 3);
    const ASeries& s = t.entry(1, 2);
    CHECK(series_str(s, 2, 1) == series_str(series_parse(series_str(s, 2, 1)), 2, 1));
}

// ---------------------------------------------------------------------------
// Error handling
// ---------------------------------------------------------------------------

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(comp_parse("(1,"), std::invalid_argument);
    CHECK_THROWS_AS(comp_parse("(1) junk"), std::invalid_argument);
    CHECK_THROWS_AS(coset_parse("[[1 2]"), std::invalid_argument);
    CHECK_THROWS_AS(poly_parse("1*x5", 3), std::invalid_argument);
    CHECK_THROWS_AS(poly_parse("1 +", 3), std::invalid_argument);
    CHECK_THROWS_AS(morphism_parse("xi{[[2]]; 1}", {1, 1}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(aselement_parse("xi{[[2]]; 1}", 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(series_parse("nonsense"), std::invalid_argument);
}
