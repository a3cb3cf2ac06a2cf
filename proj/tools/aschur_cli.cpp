/**
 * Command-line interface: composition of morphisms, batch verification
 * suites, series images of the T-matrix entries, dimension tables, and
 * representation reports from polynomial sequence files.
 *
 * Output is line-oriented and deterministic. Exit codes: 0 on success,
 * 1 on a verification failure, 2 on usage or input errors.
 */

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "aschur/relations.hpp"
#include "aschur/reps.hpp"
#include "aschur/serialize.hpp"
#include "aschur/yangian.hpp"

namespace {

using namespace aschur;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- small parsers -----------------------------------------------------------

// A morphism argument: a generator spec merge(a,b) / split(a,b) /
// cross(a,b) / identity((lam)) / pin(r; f), or a serialized morphism
// "xi{A; f} + ..." whose block is read off the first matrix.
Morphism parse_morphism_arg(const std::string& s) {
    auto two_ints = [&](size_t open) {
        std::istringstream in(s.substr(open + 1, s.size() - open - 2));
        int a = 0, b = 0;
        char comma = 0;
        if (!(in >> a >> comma >> b) || comma != ',') {
            throw UsageError("bad generator arguments in: " + s);
        }
        return std::make_pair(a, b);
    };
    if (s.rfind("merge(", 0) == 0 && s.back() == ')') {
        const auto [a, b] = two_ints(5);
        return merge_gen(a, b);
    }
    if (s.rfind("split(", 0) == 0 && s.back() == ')') {
        const auto [a, b] = two_ints(5);
        return split_gen(a, b);
    }
    if (s.rfind("cross(", 0) == 0 && s.back() == ')') {
        const auto [a, b] = two_ints(5);
        return cross_gen(a, b);
    }
    if (s.rfind("identity(", 0) == 0 && s.back() == ')') {
        return Morphism::identity(comp_parse(s.substr(9, s.size() - 10)));
    }
    if (s.rfind("pin(", 0) == 0 && s.back() == ')') {
        const size_t semi = s.find(';');
        if (semi == std::string::npos) throw UsageError("pin needs 'pin(r; f)'");
        const int r = std::stoi(s.substr(4, semi - 4));
        std::string f = s.substr(semi + 1, s.size() - semi - 2);
        while (!f.empty() && f.front() == ' ') f.erase(f.begin());
        return pin_gen(r, poly_parse(f, r));
    }
    // Serialized form: peek at the first coset matrix for the block.
    const size_t open = s.find('['), close = s.find(';');
    if (s.rfind("xi{", 0) != 0 || open == std::string::npos || close == std::string::npos) {
        throw UsageError("unrecognized morphism spec: " + s);
    }
    const CosetMatrix a = coset_parse(s.substr(open, close - open));
    return morphism_parse(s, a.lam(), a.mu());
}

// A polynomial in u: either the canonical form ("1*x1^2 + -2*x1 + 1")
// or a product of linear factors ("(u-1)^2", "(u+1/2)(u-3)", "1").
Poly parse_lambda(std::string s) {
    std::erase(s, ' ');
    if (s.empty()) throw UsageError("empty polynomial");
    if (s == "1") return Poly(1, Rat(1));
    if (s.find('x') != std::string::npos) return poly_parse(s, 1);
    std::vector<Rat> roots;
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == '*') {
            ++pos;
            continue;
        }
        if (s[pos] != '(' || pos + 2 >= s.size() || s[pos + 1] != 'u') {
            throw UsageError("expected a factor (u-b) in: " + s);
        }
        const char sign = s[pos + 2];
        if (sign != '+' && sign != '-') throw UsageError("expected (u-b) or (u+b)");
        const size_t close = s.find(')', pos);
        if (close == std::string::npos) throw UsageError("unclosed factor in: " + s);
        Rat b = rat_parse(s.substr(pos + 3, close - pos - 3));
        if (sign == '+') b = -b;
        int mult = 1;
        pos = close + 1;
        if (pos < s.size() && s[pos] == '^') {
            size_t end = pos + 1;
            while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
            mult = std::stoi(s.substr(pos + 1, end - pos - 1));
            pos = end;
        }
        for (int k = 0; k < mult; ++k) roots.push_back(b);
    }
    return upoly_from_roots(roots);
}

PolySequence read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string all = buf.str();
    for (char& c : all) {
        if (c == '\n' || c == '\r') c = ',';
    }
    PolySequence s;
    std::stringstream fields(all);
    std::string field;
    while (std::getline(fields, field, ',')) {
        std::erase(field, ' ');
        if (!field.empty()) s.polys.push_back(parse_lambda(field));
    }
    if (s.polys.empty()) throw UsageError("no polynomials in " + path);
    return s;
}

// --- report plumbing -----------------------------------------------------------

struct Reporter {
    bool all_pass = true;

    void line(bool pass, const std::string& what, long ms,
              const std::string& counterexample = "") {
        std::cout << (pass ? "PASS " : "FAIL ") << what << " (" << ms << " ms)";
        if (!pass) {
            all_pass = false;
            std::cout << " counterexample: "
                      << (counterexample.empty() ? what : counterexample);
        }
        std::cout << '\n';
    }
};

template <typename F>
std::pair<bool, long> timed(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    const bool ok = f();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return {ok, ms};
}

std::string params_str(const std::vector<int>& p) {
    std::string out = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(p[i]);
    }
    return out + "]";
}

// --- verification suites ----------------------------------------------------------

int run_schur_relations(int max_thickness, int max_degree, int order) {
    Reporter rep;
    for (const RelationInstance& inst : relation_grid(max_thickness, max_degree, order)) {
        const auto [ok, ms] =
            timed([&] { return verify_relation(inst.name, inst.params, inst.N); });
        std::string what = inst.name + " " + params_str(inst.params);
        if (inst.N > 0) what += " N=" + std::to_string(inst.N);
        rep.line(ok, what, ms);
    }
    return rep.all_pass ? 0 : 1;
}

int run_rtt(int n, int r, int order) {
    Reporter rep;
    const int bound = (order + 1) / 2;
    const auto [ok, ms] = timed([&] {
        const TMatrixImage t = drinfeld_image(n, r, order);
        return rtt_check(t, bound);
    });
    rep.line(ok, "rtt n=" + std::to_string(n) + " r=" + std::to_string(r) +
                     " order=" + std::to_string(order) +
                     " bound=" + std::to_string(bound),
             ms);
    return rep.all_pass ? 0 : 1;
}

// All divisibility chains of length n, total degree r, with roots drawn
// from {0, 1, 2}: encoded by per-root multiplicities non-increasing
// along the chain.
std::vector<PolySequence> sequences_with_small_roots(int n, int r) {
    const std::vector<Rat> pool = {Rat(0), Rat(1), Rat(2)};
    // Non-increasing n-tuples with a given sum.
    auto tuples = [&](int total) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int left, int cap) -> void {
            if (static_cast<int>(cur.size()) == n) {
                if (left == 0) out.push_back(cur);
                return;
            }
            for (int v = std::min(left, cap); v >= 0; --v) {
                cur.push_back(v);
                self(self, left - v, v);
                cur.pop_back();
            }
        };
        rec(rec, total, total);
        return out;
    };
    std::vector<PolySequence> out;
    // Split r across the three roots, then pick a chain shape per root.
    for (int r0 = 0; r0 <= r; ++r0) {
        for (int r1 = 0; r0 + r1 <= r; ++r1) {
            const int r2 = r - r0 - r1;
            for (const auto& t0 : tuples(r0)) {
                for (const auto& t1 : tuples(r1)) {
                    for (const auto& t2 : tuples(r2)) {
                        PolySequence s;
                        for (int i = 0; i < n; ++i) {
                            std::vector<Rat> roots;
                            const std::vector<const std::vector<int>*> parts = {&t0, &t1, &t2};
                            for (size_t b = 0; b < pool.size(); ++b) {
                                for (int k = 0; k < (*parts[b])[static_cast<size_t>(i)]; ++k) {
                                    roots.push_back(pool[b]);
                                }
                            }
                            s.polys.push_back(upoly_from_roots(roots));
                        }
                        out.push_back(std::move(s));
                    }
                }
            }
        }
    }
    return out;
}

std::string sequence_str(const PolySequence& s) {
    std::string out;
    for (size_t i = 0; i < s.polys.size(); ++i) {
        if (i > 0) out += ", ";
        out += s.polys[i].str();
    }
    return out;
}

bool roundtrip_once(const PolySequence& s, int n) {
    const SegmentList segs = segments_from_sequence(s, n);
    const YModule m = standard_module(segs, n);
    const auto eigen = highest_weight(m).second;
    if (!(sequence_from_eigenvalues(eigen).polys == s.polys)) return false;
    const YModule head = irreducible_quotient(m);
    if (!(sequence_from_eigenvalues(highest_weight(head).second).polys == s.polys)) {
        return false;
    }
    // Single-segment standard modules must already be irreducible.
    if (segs.segments.size() <= 1 && head.dim != m.dim) return false;
    return true;
}

int run_reps_roundtrip(int n, int rmax) {
    Reporter rep;
    for (int r = 0; r <= rmax; ++r) {
        for (const PolySequence& s : sequences_with_small_roots(n, r)) {
            const auto [ok, ms] = timed([&] { return roundtrip_once(s, n); });
            rep.line(ok, "roundtrip n=" + std::to_string(n) + " lambda=(" +
                             sequence_str(s) + ")",
                     ms, sequence_str(s));
        }
    }
    return rep.all_pass ? 0 : 1;
}

// --- commands -----------------------------------------------------------------

int cmd_compose(int r, const std::string& lhs, const std::string& rhs) {
    const Morphism g = parse_morphism_arg(lhs);
    const Morphism h = parse_morphism_arg(rhs);
    if (g.source() != h.target()) {
        throw UsageError("objects do not match: cannot compose " + comp_str(g.source()) +
                         " <- with -> " + comp_str(h.target()));
    }
    if (g.rank() != r) {
        throw UsageError("rank mismatch: morphisms have rank " +
                         std::to_string(g.rank()));
    }
    std::cout << compose(g, h).str() << '\n';
    return 0;
}

int cmd_drinfeld(int n, int r, int order, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n) throw UsageError("indices out of range");
    const TMatrixImage t = drinfeld_image(n, r, order);
    std::cout << series_str(t.entry(i, j), n, r);
    return 0;
}

int cmd_dims(int n, int r, int degree) {
    long total = 0;
    for (const Composition& lam : enumerate_compositions(n, r)) {
        for (const Composition& mu : enumerate_compositions(n, r)) {
            const int d = filtered_dim(lam, mu, degree);
            total += d;
            std::cout << comp_str(lam) << ' ' << comp_str(mu) << ' ' << d << '\n';
        }
    }
    std::cout << "total " << total << '\n';
    return 0;
}

int cmd_reps(const std::string& path) {
    const PolySequence s = read_sequence_file(path);
    const int n = static_cast<int>(s.polys.size());
    int r = 0;
    for (const Poly& f : s.polys) r += std::max(f.degree(), 0);
    if (!validate_sequence(s, r)) throw UsageError("invalid polynomial sequence");

    std::cout << "sequence: " << sequence_str(s) << '\n';
    const SegmentList segs = segments_from_sequence(s, n);
    std::cout << "segments:";
    for (const Segment& seg : segs.segments) {
        std::cout << " (" << rat_str(seg.b) << ',' << rat_str(seg.a) << ')';
    }
    std::cout << '\n';

    const std::vector<Poly> dp = drinfeld_polys(s);
    for (size_t i = 0; i < dp.size(); ++i) {
        std::cout << "P_" << (i + 1) << " = " << dp[i].str() << '\n';
    }

    const YModule m = standard_module(segs, n);
    std::cout << "standard dim: " << m.dim << '\n';
    const YModule head = irreducible_quotient(m);
    std::cout << "head dim: " << head.dim << '\n';
    const auto eigen = highest_weight(head).second;
    for (size_t i = 0; i < eigen.size(); ++i) {
        std::cout << "A_" << (i + 1) << "(u) = (" << eigen[i].num.str() << ") / ("
                  << eigen[i].den.str() << ")\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the degenerate affine Schur algebra"};
    app.require_subcommand(1);

    int n = 1, r = 1, order = 4, degree = 0, i = 1, j = 1;
    int max_thickness = 2, max_degree = 2;
    std::string lhs, rhs, suite, path;

    CLI::App* compose_cmd = app.add_subcommand("compose", "Compose two morphisms");
    compose_cmd->add_option("--n", n, "ambient rank (unused by composition itself)");
    compose_cmd->add_option("--r", r, "number of strands")->required();
    compose_cmd->add_option("lhs", lhs, "outer morphism")->required();
    compose_cmd->add_option("rhs", rhs, "inner morphism")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "schur-relations | rtt | reps-roundtrip")
        ->required();
    verify_cmd->add_option("--max-thickness", max_thickness, "strand thickness bound");
    verify_cmd->add_option("--max-degree", max_degree, "polynomial degree bound");
    verify_cmd->add_option("--n", n, "matrix rank n");
    verify_cmd->add_option("--r", r, "number of strands r");
    verify_cmd->add_option("--order", order, "series truncation order");

    CLI::App* drinfeld_cmd =
        app.add_subcommand("drinfeld", "Series image of a T-matrix entry");
    drinfeld_cmd->add_option("--n", n)->required();
    drinfeld_cmd->add_option("--r", r)->required();
    drinfeld_cmd->add_option("--order", order)->required();
    drinfeld_cmd->add_option("i", i, "row index")->required();
    drinfeld_cmd->add_option("j", j, "column index")->required();

    CLI::App* dims_cmd = app.add_subcommand("dims", "Filtered dimension table");
    dims_cmd->add_option("--n", n)->required();
    dims_cmd->add_option("--r", r)->required();
    dims_cmd->add_option("--degree", degree)->required();

    CLI::App* reps_cmd =
        app.add_subcommand("reps", "Report on a polynomial sequence file");
    reps_cmd->add_option("file", path, "sequence file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compose_cmd) return cmd_compose(r, lhs, rhs);
        if (*verify_cmd) {
            if (suite == "schur-relations") {
                return run_schur_relations(max_thickness, max_degree,
                                           order > 0 ? order : 4);
            }
            if (suite == "rtt") return run_rtt(n, r, order);
            if (suite == "reps-roundtrip") return run_reps_roundtrip(n, r);
            std::cerr << "unknown suite: " << suite << '\n';
            return 2;
        }
        if (*drinfeld_cmd) return cmd_drinfeld(n, r, order, i, j);
        if (*dims_cmd) return cmd_dims(n, r, degree);
        if (*reps_cmd) return cmd_reps(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
