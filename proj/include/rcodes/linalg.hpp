/*
   Copyright 2025 The rcodes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.

   v1.0
*/

#ifndef RCODES_LINALG_HPP
#define RCODES_LINALG_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ring.hpp"

namespace rcodes {

using TernaryVector = std::vector<Trit>;
using TernaryMatrix = std::vector<TernaryVector>;

/* section: vector helpers */

inline Trit dot(const TernaryVector& x, const TernaryVector& y) {
    if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "dot product of vectors of different length");
    Trit acc;
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

inline size_t hamming_weight(const TernaryVector& x) noexcept {
    size_t w = 0;
    for (auto t : x) w += !t.is_zero();
    return w;
}

inline bool is_zero_vector(const TernaryVector& x) noexcept {
    for (auto t : x)
        if (!t.is_zero()) return false;
    return true;
}

/* x += s * y */
inline void axpy(TernaryVector& x, Trit s, const TernaryVector& y) noexcept {
    if (s.is_zero()) return;
    for (size_t i = 0; i < x.size(); ++i) x[i] += s * y[i];
}

inline std::string to_string(const TernaryVector& x) {
    std::string s;
    for (auto t : x) s += char('0' + t.value());
    return s;
}

/*
    Subspace: an incrementally built subspace of GF(3)^ncols kept in row echelon form;
    rows are stored in insertion order, each row vanishes at the pivots of all earlier rows
*/
class Subspace {
   public:
    /* constructors */
    explicit Subspace(size_t ncols = 0) noexcept : ncols_(ncols) {}
    Subspace(size_t ncols, const TernaryMatrix& gens) : ncols_(ncols) {
        for (const auto& g : gens) insert(g);
    }

    /* getters */
    size_t ncols() const noexcept { return ncols_; }
    size_t rank() const noexcept { return rows_.size(); }
    const TernaryMatrix& basis() const noexcept { return rows_; }
    const std::vector<size_t>& pivots() const noexcept { return pivots_; }

    /* reduces x modulo the subspace; the result is zero iff x lies in the subspace */
    TernaryVector reduce(TernaryVector x) const {
        if (x.size() != ncols_) throw Error(ErrorKind::LengthMismatch, "vector length differs from subspace ambient length");
        for (size_t i = 0; i < rows_.size(); ++i) axpy(x, -x[pivots_[i]], rows_[i]);
        return x;
    }

    bool contains(const TernaryVector& x) const { return is_zero_vector(reduce(x)); }

    /* adds x to the spanning set; returns true iff the rank grew */
    bool insert(const TernaryVector& x) {
        auto r = reduce(x);
        size_t p = 0;
        while (p < ncols_ && r[p].is_zero()) ++p;
        if (p == ncols_) return false;
        const Trit s = r[p].inverse();
        for (auto& t : r) t *= s;
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

    bool contains(const Subspace& other) const {
        for (const auto& row : other.rows_)
            if (!contains(row)) return false;
        return true;
    }

    bool operator==(const Subspace& rhs) const {
        return ncols_ == rhs.ncols_ && rank() == rhs.rank() && contains(rhs);
    }

   private:
    size_t ncols_;
    TernaryMatrix rows_;
    std::vector<size_t> pivots_;
};

/* section: matrix operations */

/* reduced row echelon form; returns (rows, pivot columns) */
inline std::pair<TernaryMatrix, std::vector<size_t>> rref(TernaryMatrix m, size_t ncols) {
    std::vector<size_t> pivots;
    size_t rk = 0;
    for (size_t c = 0; c < ncols && rk < m.size(); ++c) {
        size_t piv = rk;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rk], m[piv]);
        const Trit s = m[rk][c].inverse();
        for (auto& t : m[rk]) t *= s;
        for (size_t i = 0; i < m.size(); ++i)
            if (i != rk) axpy(m[i], -m[i][c], m[rk]);
        pivots.push_back(c);
        ++rk;
    }
    m.resize(rk);
    return {m, pivots};
}

inline size_t rank(const TernaryMatrix& m, size_t ncols) { return rref(m, ncols).first.size(); }

/* basis of {x in GF(3)^ncols : m x = 0} */
inline TernaryMatrix nullspace(const TernaryMatrix& m, size_t ncols) {
    const auto [r, pivots] = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    TernaryMatrix basis;
    for (size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        TernaryVector x(ncols);
        x[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r[i][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

/* true iff every pair of rows (including a row with itself) has zero dot product */
inline bool is_self_orthogonal(const TernaryMatrix& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i; j < m.size(); ++j)
            if (!dot(m[i], m[j]).is_zero()) return false;
    return true;
}

}  // namespace rcodes

#endif
