#include "aschur/linalg.hpp"

namespace aschur {

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] != 0) { p = i; break; }
        }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rat lead = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] /= lead;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    assert(static_cast<int>(b.size()) == rows);
    RatMat aug(rows, RatVec(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (int c : pivots) {
        if (c == cols) return std::nullopt; // pivot in the RHS column
    }
    RatVec x(cols, Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
    return x;
}

std::vector<RatVec> nullspace(const RatMat& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    RatMat m = a;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols, Rat(0));
        v[f] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RatVec> intersect_spans(const std::vector<RatVec>& u,
                                    const std::vector<RatVec>& v, int n) {
    // Zassenhaus: row reduce [U U; V 0]; rows of shape [0 W] span U cap V.
    const int nu = static_cast<int>(u.size());
    const int nv = static_cast<int>(v.size());
    if (nu == 0 || nv == 0) return {};
    RatMat m(nu + nv, RatVec(2 * n, Rat(0)));
    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j < n; ++j) { m[i][j] = u[i][j]; m[i][n + j] = u[i][j]; }
    }
    for (int i = 0; i < nv; ++i) {
        for (int j = 0; j < n; ++j) m[nu + i][j] = v[i][j];
    }
    rref(m);
    std::vector<RatVec> basis;
    for (const RatVec& row : m) {
        bool left_zero = true, right_zero = true;
        for (int j = 0; j < n; ++j) {
            if (row[j] != 0) left_zero = false;
            if (row[n + j] != 0) right_zero = false;
        }
        if (left_zero && !right_zero) {
            basis.emplace_back(row.begin() + n, row.end());
        }
    }
    return basis;
}

} // namespace aschur
