#include "aschur/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace aschur {

int comp_sum(const Composition& mu) {
    return std::accumulate(mu.begin(), mu.end(), 0);
}

std::vector<int> comp_offsets(const Composition& mu) {
    std::vector<int> offs(mu.size() + 1, 0);
    for (size_t j = 0; j < mu.size(); ++j) offs[j + 1] = offs[j] + mu[j];
    return offs;
}

int comp_block_of(const Composition& mu, int p) {
    int acc = 0;
    for (size_t j = 0; j < mu.size(); ++j) {
        acc += mu[j];
        if (p <= acc) return static_cast<int>(j) + 1;
    }
    assert(false && "position out of range");
    return -1;
}

std::vector<Composition> enumerate_compositions(int n, int r) {
    std::vector<Composition> out;
    Composition cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int idx, int rest) -> void {
        if (idx == n - 1) {
            cur[static_cast<size_t>(idx)] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<size_t>(idx)] = v;
            self(self, idx + 1, rest - v);
        }
    };
    if (n == 0) {
        if (r == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, r);
    return out;
}

bool refines(const Composition& nu, const Composition& mu) {
    size_t k = 0;
    for (int part : mu) {
        int acc = 0;
        while (acc < part) {
            if (k >= nu.size()) return false;
            acc += nu[k++];
        }
        if (acc != part) return false;
    }
    // Trailing zero parts of nu may close out the refinement.
    while (k < nu.size()) {
        if (nu[k++] != 0) return false;
    }
    return true;
}

Permutation::Permutation(int r) : w_(static_cast<size_t>(r)) {
    std::iota(w_.begin(), w_.end(), 1);
}

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
#ifndef NDEBUG
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
        assert(v >= 1 && v <= static_cast<int>(w_.size()) && !seen[v - 1]);
        seen[v - 1] = true;
    }
#endif
}

Permutation Permutation::transposition(int r, int i) {
    assert(1 <= i && i < r);
    Permutation s(r);
    std::swap(s.w_[i - 1], s.w_[i]);
    return s;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    assert(size() == rhs.size());
    std::vector<int> v(w_.size());
    for (int p = 1; p <= size(); ++p) v[p - 1] = (*this)(rhs(p));
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(w_.size());
    for (int p = 1; p <= size(); ++p) v[w_[p - 1] - 1] = p;
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
    for (int p = 1; p <= size(); ++p) {
        if (w_[p - 1] != p) return false;
    }
    return true;
}

int Permutation::length() const {
    int inv = 0;
    for (int p = 1; p <= size(); ++p) {
        for (int q = p + 1; q <= size(); ++q) {
            if (w_[p - 1] > w_[q - 1]) ++inv;
        }
    }
    return inv;
}

std::vector<int> Permutation::reduced_word() const {
    // Strip descents on the right: w * s_i swaps the values in positions
    // i, i+1 and shortens w whenever w(i) > w(i+1). Collecting the swaps
    // and reversing gives w = s_{j_1} * ... * s_{j_m}.
    std::vector<int> word;
    std::vector<int> v = w_;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                word.push_back(static_cast<int>(i) + 1);
                moved = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << '(';
    for (int p = 1; p <= size(); ++p) {
        if (p > 1) os << ' ';
        os << w_[p - 1];
    }
    os << ')';
    return os.str();
}

std::vector<Permutation> symmetric_group(int r) {
    std::vector<int> v(static_cast<size_t>(r));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Permutation> young_subgroup(const Composition& mu) {
    const int r = comp_sum(mu);
    std::vector<int> offs = comp_offsets(mu);
    std::vector<Permutation> out{Permutation(r)};
    for (size_t j = 0; j < mu.size(); ++j) {
        if (mu[j] <= 1) continue;
        std::vector<int> block(static_cast<size_t>(mu[j]));
        std::iota(block.begin(), block.end(), offs[j] + 1);
        std::vector<Permutation> grown;
        do {
            for (const Permutation& w : out) {
                std::vector<int> v = w.one_line();
                for (int k = 0; k < mu[j]; ++k) v[offs[j] + k] = block[static_cast<size_t>(k)];
                grown.emplace_back(std::move(v));
            }
        } while (std::next_permutation(block.begin(), block.end()));
        out = std::move(grown);
    }
    return out;
}

Permutation min_coset_rep(const Composition& nu, const Permutation& w) {
    // Left multiplication by S_nu sorts values within each nu-block of
    // values; the minimal representative keeps the relative order of the
    // positions mapping into each block.
    const int r = w.size();
    assert(comp_sum(nu) == r);
    std::vector<int> offs = comp_offsets(nu);
    std::vector<int> v(static_cast<size_t>(r));
    for (size_t b = 0; b < nu.size(); ++b) {
        int next = offs[b] + 1;
        for (int p = 1; p <= r; ++p) {
            if (w(p) > offs[b] && w(p) <= offs[b + 1]) v[p - 1] = next++;
        }
    }
    return Permutation(std::move(v));
}

namespace {

// Enumerates, within one mu-block, the ways to distribute its positions
// among the nu-subblocks. Minimality forces the values of a subblock to
// be assigned in increasing order along increasing positions, so each
// distribution determines the representative on this block uniquely.
void distribute_block(std::vector<int>& remaining,
                      const std::vector<int>& sizes, size_t si, int value,
                      std::vector<int>& one_line,
                      const std::function<void()>& done) {
    if (si == sizes.size()) {
        done();
        return;
    }
    const int k = sizes[si];
    // Choose k of the remaining positions (as indices into `remaining`).
    std::vector<size_t> pick(static_cast<size_t>(k));
    std::function<void(size_t, int)> choose = [&](size_t start, int taken) {
        if (taken == k) {
            std::vector<int> next;
            std::vector<bool> used(remaining.size(), false);
            for (int t = 0; t < k; ++t) {
                one_line[static_cast<size_t>(remaining[pick[static_cast<size_t>(t)]] - 1)] =
                    value + t;
                used[pick[static_cast<size_t>(t)]] = true;
            }
            for (size_t i = 0; i < remaining.size(); ++i) {
                if (!used[i]) next.push_back(remaining[i]);
            }
            std::swap(remaining, next);
            distribute_block(remaining, sizes, si + 1, value + k, one_line, done);
            std::swap(remaining, next);
            return;
        }
        for (size_t i = start; i + static_cast<size_t>(k - taken) <= remaining.size();
             ++i) {
            pick[static_cast<size_t>(taken)] = i;
            choose(i + 1, taken + 1);
        }
    };
    choose(0, 0);
}

} // namespace

std::vector<Permutation> min_coset_reps(const Composition& nu,
                                        const Composition& mu) {
    assert(refines(nu, mu));
    const int r = comp_sum(mu);
    // Group the nu-blocks under the mu-blocks they refine (zero blocks
    // contribute nothing and may sit at either boundary).
    std::vector<std::vector<int>> sub(mu.size());
    {
        size_t bi = 0;
        int acc = 0;
        for (int k : nu) {
            while (bi + 1 < mu.size() && k > 0 &&
                   acc == mu[bi]) {
                ++bi;
                acc = 0;
            }
            if (!mu.empty()) {
                if (bi >= mu.size()) bi = mu.size() - 1;
                sub[bi].push_back(k);
                acc += k;
            }
        }
    }
    const std::vector<int> moffs = comp_offsets(mu);
    std::vector<int> one_line(static_cast<size_t>(r), 0);
    std::vector<Permutation> out;
    // Blocks are independent; run a product of per-block enumerations.
    std::function<void(size_t)> per_block = [&](size_t j) {
        if (j == mu.size()) {
            out.emplace_back(one_line);
            return;
        }
        std::vector<int> remaining;
        for (int p = moffs[j] + 1; p <= moffs[j + 1]; ++p) remaining.push_back(p);
        distribute_block(remaining, sub[j], 0, moffs[j] + 1, one_line,
                         [&] { per_block(j + 1); });
    };
    per_block(0);
    return out;
}

std::vector<Permutation> min_left_coset_reps(const Composition& nu) {
    const int r = comp_sum(nu);
    std::vector<int> offs = comp_offsets(nu);
    std::vector<Permutation> out;
    for (const Permutation& w : symmetric_group(r)) {
        bool ok = true;
        for (size_t b = 0; ok && b < nu.size(); ++b) {
            for (int p = offs[b] + 1; p < offs[b + 1]; ++p) {
                if (w(p) > w(p + 1)) { ok = false; break; }
            }
        }
        if (ok) out.push_back(w);
    }
    return out;
}

CosetMatrix::CosetMatrix(const std::vector<std::vector<int>>& entries)
    : rows_(static_cast<int>(entries.size())),
      cols_(entries.empty() ? 0 : static_cast<int>(entries[0].size())) {
    a_.reserve(static_cast<size_t>(rows_ * cols_));
    for (const auto& row : entries) {
        assert(static_cast<int>(row.size()) == cols_);
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

Composition CosetMatrix::lam() const {
    Composition out(static_cast<size_t>(rows_), 0);
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) out[static_cast<size_t>(i - 1)] += at(i, j);
    }
    return out;
}

Composition CosetMatrix::mu() const {
    Composition out(static_cast<size_t>(cols_), 0);
    for (int j = 1; j <= cols_; ++j) {
        for (int i = 1; i <= rows_; ++i) out[static_cast<size_t>(j - 1)] += at(i, j);
    }
    return out;
}

int CosetMatrix::total() const {
    return std::accumulate(a_.begin(), a_.end(), 0);
}

Composition CosetMatrix::nu_top() const {
    Composition out;
    out.reserve(a_.size());
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) out.push_back(at(i, j));
    }
    return out;
}

Composition CosetMatrix::nu_bottom() const {
    Composition out;
    out.reserve(a_.size());
    for (int j = 1; j <= cols_; ++j) {
        for (int i = 1; i <= rows_; ++i) out.push_back(at(i, j));
    }
    return out;
}

CosetMatrix CosetMatrix::transpose() const {
    CosetMatrix t(cols_, rows_);
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) t.at(j, i) = at(i, j);
    }
    return t;
}

CosetMatrix CosetMatrix::reverse() const {
    CosetMatrix t(rows_, cols_);
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) t.at(rows_ + 1 - i, cols_ + 1 - j) = at(i, j);
    }
    return t;
}

std::string CosetMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 1; i <= rows_; ++i) {
        if (i > 1) os << ' ';
        os << '[';
        for (int j = 1; j <= cols_; ++j) {
            if (j > 1) os << ' ';
            os << at(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::vector<CosetMatrix> coset_matrices(const Composition& lam,
                                        const Composition& mu) {
    assert(comp_sum(lam) == comp_sum(mu));
    const int nr = static_cast<int>(lam.size());
    const int nc = static_cast<int>(mu.size());
    std::vector<CosetMatrix> out;
    CosetMatrix cur(nr, nc);
    Composition colrest = mu;
    auto rec = [&](auto&& self, int i) -> void {
        if (i > nr) {
            out.push_back(cur);
            return;
        }
        // Fill row i with sum lam[i-1], bounded by remaining column sums.
        auto row = [&](auto&& rself, int j, int rest) -> void {
            if (j == nc) {
                if (rest <= colrest[static_cast<size_t>(nc - 1)]) {
                    cur.at(i, nc) = rest;
                    colrest[static_cast<size_t>(nc - 1)] -= rest;
                    self(self, i + 1);
                    colrest[static_cast<size_t>(nc - 1)] += rest;
                }
                return;
            }
            int cap = std::min(rest, colrest[static_cast<size_t>(j - 1)]);
            for (int v = 0; v <= cap; ++v) {
                cur.at(i, j) = v;
                colrest[static_cast<size_t>(j - 1)] -= v;
                rself(rself, j + 1, rest - v);
                colrest[static_cast<size_t>(j - 1)] += v;
            }
        };
        if (nc == 0) {
            if (lam[static_cast<size_t>(i - 1)] == 0) self(self, i + 1);
            return;
        }
        row(row, 1, lam[static_cast<size_t>(i - 1)]);
    };
    if (nr == 0) {
        if (comp_sum(mu) == 0) out.emplace_back(CosetMatrix(0, nc));
        return out;
    }
    rec(rec, 1);
    return out;
}

CosetMatrix block_diag(const CosetMatrix& a, const CosetMatrix& b) {
    CosetMatrix d(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= a.cols(); ++j) d.at(i, j) = a.at(i, j);
    }
    for (int i = 1; i <= b.rows(); ++i) {
        for (int j = 1; j <= b.cols(); ++j) d.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    }
    return d;
}

Permutation dA(const CosetMatrix& a) {
    const int r = a.total();
    // Starting top position of the strand bundle for each cell, allotted
    // in row-major cell order.
    std::vector<std::vector<int>> top(static_cast<size_t>(a.rows()),
                                      std::vector<int>(static_cast<size_t>(a.cols()), 0));
    int pos = 1;
    for (int i = 1; i <= a.rows(); ++i) {
        for (int j = 1; j <= a.cols(); ++j) {
            top[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = pos;
            pos += a.at(i, j);
        }
    }
    // Bottom positions in column-major cell order.
    std::vector<int> v(static_cast<size_t>(r));
    pos = 1;
    for (int j = 1; j <= a.cols(); ++j) {
        for (int i = 1; i <= a.rows(); ++i) {
            for (int k = 0; k < a.at(i, j); ++k) {
                v[static_cast<size_t>(pos - 1)] =
                    top[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] + k;
                ++pos;
            }
        }
    }
    return Permutation(std::move(v));
}

bool bruhat_leq(const CosetMatrix& a, const CosetMatrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    for (int s = 1; s <= a.rows(); ++s) {
        for (int t = 1; t <= a.cols(); ++t) {
            int pa = 0, pb = 0;
            for (int i = 1; i <= s; ++i) {
                for (int j = 1; j <= t; ++j) {
                    pa += a.at(i, j);
                    pb += b.at(i, j);
                }
            }
            if (pa < pb) return false;
        }
    }
    return true;
}

CosetDecomposition coset_decompose(const Composition& lam,
                                   const Composition& mu,
                                   const Permutation& w) {
    const int nr = static_cast<int>(lam.size());
    const int nc = static_cast<int>(mu.size());
    CosetMatrix a(nr, nc);
    std::vector<int> moffs = comp_offsets(mu);
    for (int j = 1; j <= nc; ++j) {
        for (int p = moffs[static_cast<size_t>(j - 1)] + 1; p <= moffs[static_cast<size_t>(j)]; ++p) {
            ++a.at(comp_block_of(lam, w(p)), j);
        }
    }
    const Permutation d = dA(a);
    const Composition nub = a.nu_bottom();
    std::vector<int> loffs = comp_offsets(lam);
    for (const Permutation& y : min_coset_reps(nub, mu)) {
        Permutation x = w * y.inverse() * d.inverse();
        bool in_lam = true;
        for (int p = 1; in_lam && p <= x.size(); ++p) {
            if (comp_block_of(lam, x(p)) != comp_block_of(lam, p)) in_lam = false;
        }
        if (in_lam) return {a, x, y};
    }
    assert(false && "double coset decomposition failed");
    return {a, Permutation(w.size()), Permutation(w.size())};
}

} // namespace aschur
