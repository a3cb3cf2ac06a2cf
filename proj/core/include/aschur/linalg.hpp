#pragma once

#include <cassert>
#include <map>
#include <optional>
#include <vector>

#include "aschur/rat.hpp"

namespace aschur {

/**
 * Small dense exact-rational linear algebra.
 *
 * Everything here operates on matrices of Rat via plain Gaussian
 * elimination. Problem sizes in this library are tiny (at most a few
 * hundred rows), so no fraction-free tricks or pivot heuristics are
 * needed; exactness is what matters.
 */
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row-major

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

// Solves A x = b exactly. Returns std::nullopt if inconsistent; free
// variables (if any) are set to zero.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

// Basis of the right nullspace of A (each vector has a.cols entries).
std::vector<RatVec> nullspace(const RatMat& a);

// Basis of the intersection of two subspaces, each given by a list of
// spanning vectors of common dimension n.
std::vector<RatVec> intersect_spans(const std::vector<RatVec>& u,
                                    const std::vector<RatVec>& v, int n);

/**
 * Incremental row-echelon span tracker over sparse vectors with ordered
 * keys. Used for rank counts and span-stabilization loops where vectors
 * live in a large implicit coordinate space.
 */
template <class Key>
class SpanBuilder {
public:
    using Sparse = std::map<Key, Rat>;

    // Reduces v against the rows held so far; if a nonzero remainder is
    // left it is added as a new row. Returns true if the rank grew.
    bool add(Sparse v) {
        reduce(v);
        if (v.empty()) return false;
        const Key pivot = v.begin()->first;
        Rat lead = v.begin()->second;
        for (auto& [k, c] : v) c /= lead;
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    // True if v lies in the current span (v is not added).
    bool contains(Sparse v) const {
        reduce(v);
        return v.empty();
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(Sparse& v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.begin()->first);
            if (it == rows_.end()) return;
            Rat c = v.begin()->second;
            for (const auto& [k, rc] : it->second) {
                Rat& t = v[k];
                t -= c * rc;
                if (t == 0) v.erase(k);
            }
        }
    }

    std::map<Key, Sparse> rows_; // pivot key -> normalized row
};

} // namespace aschur
