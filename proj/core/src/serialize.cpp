#include "aschur/serialize.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace aschur {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error: " + what);
}

// Cursor over the input with the small set of token helpers the
// grammar needs. Whitespace is never significant except inside the
// fixed separators, so the helpers skip it explicitly where allowed.
struct Cursor {
    const std::string& s;
    size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    // Literal string match.
    bool accept(const std::string& lit) {
        if (s.compare(pos, lit.size(), lit) != 0) return false;
        pos += lit.size();
        return true;
    }

    void skip_spaces() {
        while (peek() == ' ') ++pos;
    }

    long integer() {
        const bool neg = accept('-');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[pos++] - '0');
        }
        return neg ? -v : v;
    }

    Rat rational() {
        const long num = integer();
        if (!accept('/')) return Rat(num);
        return rat(num, integer());
    }
};

CosetMatrix coset(Cursor& c) {
    c.expect('[');
    std::vector<std::vector<int>> rows;
    while (!c.accept(']')) {
        if (!rows.empty()) c.expect(' ');
        c.expect('[');
        std::vector<int> row;
        while (!c.accept(']')) {
            if (!row.empty()) c.expect(' ');
            row.push_back(static_cast<int>(c.integer()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail("empty matrix");
    return CosetMatrix(rows);
}

Poly poly(Cursor& c, int nvars) {
    Poly f(nvars);
    for (;;) {
        const Rat coef = c.rational();
        Poly::Exponents e(static_cast<size_t>(nvars), 0);
        while (c.accept("*x")) {
            const long i = c.integer();
            if (i < 1 || i > nvars) fail("variable index out of range");
            e[static_cast<size_t>(i - 1)] += c.accept('^') ? static_cast<int>(c.integer()) : 1;
        }
        f.add_term(e, coef);
        if (!c.accept(" + ")) break;
    }
    return f;
}

// One "xi{A; f}" term.
std::pair<CosetMatrix, Poly> xi_term(Cursor& c) {
    if (!c.accept("xi{")) fail("expected xi term");
    const CosetMatrix a = coset(c);
    if (!c.accept("; ")) fail("expected '; ' in xi term");
    Poly f = poly(c, a.total());
    c.expect('}');
    return {a, std::move(f)};
}

} // namespace

std::string comp_str(const Composition& mu) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < mu.size(); ++i) {
        if (i > 0) os << ',';
        os << mu[i];
    }
    os << ')';
    return os.str();
}

Composition comp_parse(const std::string& s) {
    Cursor c{s};
    c.expect('(');
    Composition mu;
    while (!c.accept(')')) {
        if (!mu.empty()) c.expect(',');
        mu.push_back(static_cast<int>(c.integer()));
    }
    if (!c.done()) fail("trailing input after composition");
    return mu;
}

CosetMatrix coset_parse(const std::string& s) {
    Cursor c{s};
    const CosetMatrix a = coset(c);
    if (!c.done()) fail("trailing input after matrix");
    return a;
}

Poly poly_parse(const std::string& s, int nvars) {
    if (s == "0") return Poly(nvars);
    Cursor c{s};
    const Poly f = poly(c, nvars);
    if (!c.done()) fail("trailing input after polynomial");
    return f;
}

Morphism morphism_parse(const std::string& s, const Composition& lam,
                        const Composition& mu) {
    Morphism m(lam, mu);
    if (s == "0") return m;
    Cursor c{s};
    do {
        auto [a, f] = xi_term(c);
        if (a.lam() != lam || a.mu() != mu) fail("xi term outside the stated block");
        m.add_term(a, f);
    } while (c.accept(" + "));
    if (!c.done()) fail("trailing input after morphism");
    return m;
}

ASElement aselement_parse(const std::string& s, int n, int r) {
    ASElement z(n, r);
    if (s == "0") return z;
    Cursor c{s};
    do {
        auto [a, f] = xi_term(c);
        if (a.rows() != n || a.cols() != n || a.total() != r) {
            fail("xi term has the wrong shape for this algebra");
        }
        Morphism m(a.lam(), a.mu());
        m.add_term(a, f);
        z.add_block(m);
    } while (c.accept(" + "));
    if (!c.done()) fail("trailing input after element");
    return z;
}

std::string series_str(const ASeries& s, int n, int r) {
    std::ostringstream os;
    os << "series n=" << n << " r=" << r << " order=" << s.trunc() << '\n';
    for (const auto& [d, z] : s.coeffs()) {
        os << "u^-" << d << ": " << z.str() << '\n';
    }
    return os.str();
}

ASeries series_parse(const std::string& s) {
    std::istringstream in(s);
    std::string line;
    if (!std::getline(in, line)) fail("empty series");
    Cursor h{line};
    if (!h.accept("series n=")) fail("expected series header");
    const int n = static_cast<int>(h.integer());
    if (!h.accept(" r=")) fail("expected r= in header");
    const int r = static_cast<int>(h.integer());
    if (!h.accept(" order=")) fail("expected order= in header");
    const int order = static_cast<int>(h.integer());
    if (!h.done()) fail("trailing input in header");

    ASeries out(order);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Cursor c{line};
        if (!c.accept("u^-")) fail("expected u^- coefficient line");
        const int d = static_cast<int>(c.integer());
        if (!c.accept(": ")) fail("expected ': ' after the key");
        out.set(d, aselement_parse(line.substr(c.pos), n, r));
    }
    return out;
}

} // namespace aschur
