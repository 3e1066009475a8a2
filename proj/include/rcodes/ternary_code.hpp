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

#ifndef RCODES_TERNARY_CODE_HPP
#define RCODES_TERNARY_CODE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace rcodes {

/*
    TernaryPolyCode: the cyclic (x^n - 1) or negacyclic (x^n + 1) code <g> of length n over GF(3);
    g is monic and divides the modulus
*/
class TernaryPolyCode {
   public:
    /* constructors */
    TernaryPolyCode() = default;
    TernaryPolyCode(size_t n, ModulusSign sign, const Z3Poly& g) : n_(n), sign_(sign), g_(g) {
        if (n == 0) throw Error(ErrorKind::LengthMismatch, "code length must be at least 1");
        if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "generator polynomial is zero");
        g_ = monic(g);
        if (!divides(g_, modulus(n_, sign_)))
            throw Error(ErrorKind::NotADivisor, to_string(g_) + " does not divide " + to_string(modulus(n_, sign_)));
    }

    /* getters */
    size_t n() const noexcept { return n_; }
    ModulusSign sign() const noexcept { return sign_; }
    const Z3Poly& generator() const noexcept { return g_; }
    size_t k() const noexcept { return n_ - size_t(g_.degree()); }
    Z3Poly modulus_poly() const { return modulus(n_, sign_); }

    /* rows x^i g, 0 <= i < k */
    TernaryMatrix generator_matrix() const {
        TernaryMatrix m;
        for (size_t i = 0; i < k(); ++i) m.push_back((Z3Poly::monomial(i) * g_).to_vector(n_));
        return m;
    }

    bool operator==(const TernaryPolyCode& rhs) const noexcept = default;

   private:
    size_t n_ = 1;
    ModulusSign sign_ = ModulusSign::plus;
    Z3Poly g_ = Z3Poly::constant(1);
};

inline TernaryPolyCode make_code(size_t n, ModulusSign sign, const Z3Poly& g) { return TernaryPolyCode(n, sign, g); }

/* the zero code: generator equal to the modulus */
inline TernaryPolyCode zero_code(size_t n, ModulusSign sign) { return TernaryPolyCode(n, sign, modulus(n, sign)); }

/* dual code: generated by the monic normalization of the reciprocal of h = modulus / g */
inline TernaryPolyCode dual(const TernaryPolyCode& c) {
    const Z3Poly h = c.modulus_poly() / c.generator();
    return TernaryPolyCode(c.n(), c.sign(), monic(reciprocal(h)));
}

/* polynomial dual-containment criterion: modulus = 0 mod g g* */
inline bool contains_dual(const TernaryPolyCode& c) {
    return divides(c.generator() * reciprocal(c.generator()), c.modulus_poly());
}

/* word is a codeword iff its polynomial is divisible by g */
inline bool membership(const TernaryPolyCode& c, const TernaryVector& word) {
    if (word.size() != c.n())
        throw Error(ErrorKind::LengthMismatch,
                    "word of length " + std::to_string(word.size()) + " for code of length " + std::to_string(c.n()));
    return divides(c.generator(), Z3Poly(word));
}

/* explicit subset check: every generator row of the dual code is a codeword */
inline bool dual_subset_check(const TernaryPolyCode& c) {
    for (const auto& row : dual(c).generator_matrix())
        if (!membership(c, row)) return false;
    return true;
}

/* (consta)cyclic shift of a ternary word with the modulus' wrap multiplier */
inline TernaryVector shift(const TernaryVector& word, ModulusSign sign) {
    if (word.empty()) return word;
    TernaryVector r(word.size());
    r[0] = wrap_multiplier(sign) * word.back();
    for (size_t i = 1; i < word.size(); ++i) r[i] = word[i - 1];
    return r;
}

/* section: minimum distance */

/* codewords are enumerated in full up to this dimension */
inline constexpr size_t enumeration_threshold = 14;

/* exhaustive: all 3^k codewords, base-3 counter adding one generator row per digit change */
inline size_t min_distance_enumerate(const TernaryPolyCode& c) {
    if (c.k() == 0) throw Error(ErrorKind::ZeroCode, "minimum distance of the zero code");
    const size_t n = c.n(), k = c.k();
    std::vector<std::vector<uint8_t>> rows;
    for (const auto& r : c.generator_matrix()) {
        std::vector<uint8_t> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = r[i].value();
        rows.push_back(std::move(v));
    }
    std::vector<uint8_t> word(n, 0), digit(k, 0);
    size_t best = std::numeric_limits<size_t>::max();
    while (true) {
        size_t j = 0;
        while (j < k) {
            for (size_t i = 0; i < n; ++i) {
                const uint8_t s = word[i] + rows[j][i];
                word[i] = s >= 3 ? s - 3 : s;
            }
            if (++digit[j] < 3) break;
            digit[j] = 0;
            ++j;
        }
        if (j == k) break;  // counter wrapped: back at the zero word
        size_t w = 0;
        for (size_t i = 0; i < n; ++i) w += word[i] != 0;
        if (w < best && w > 0) best = w;
    }
    return best;
}

/*
    low-weight search: for w = 1, 2, ... test every word of support size w (first nonzero entry 1)
    for divisibility by g, using precomputed residues x^i mod g; exact at the first hit
*/
inline size_t min_distance_search(const TernaryPolyCode& c, unsigned threads = 1) {
    if (c.k() == 0) throw Error(ErrorKind::ZeroCode, "minimum distance of the zero code");
    const size_t n = c.n();
    const size_t dg = size_t(c.generator().degree());
    if (dg == 0) return 1;
    std::vector<std::vector<uint8_t>> res(n, std::vector<uint8_t>(dg));
    for (size_t i = 0; i < n; ++i) {
        const auto r = (Z3Poly::monomial(i) % c.generator()).to_vector(dg);
        for (size_t j = 0; j < dg; ++j) res[i][j] = r[j].value();
    }
    if (threads == 0) threads = 1;
    for (size_t w = 1; w <= n; ++w) {
        std::atomic<bool> found{false};
        /* worker handles supports whose first position p satisfies p % threads == id */
        auto worker = [&](unsigned id) {
            std::vector<size_t> supp(w);
            std::vector<uint8_t> coef(w), acc(dg);
            for (size_t p = id; p + w <= n && !found.load(); p += threads) {
                supp[0] = p;
                for (size_t i = 1; i < w; ++i) supp[i] = p + i;
                while (true) {
                    /* all coefficient patterns with coef[0] = 1 */
                    std::fill(coef.begin(), coef.end(), 1);
                    while (true) {
                        std::fill(acc.begin(), acc.end(), 0);
                        for (size_t i = 0; i < w; ++i)
                            for (size_t j = 0; j < dg; ++j) acc[j] = uint8_t((acc[j] + coef[i] * res[supp[i]][j]) % 3);
                        if (std::all_of(acc.begin(), acc.end(), [](uint8_t x) { return x == 0; })) {
                            found.store(true);
                            return;
                        }
                        size_t i = 1;
                        while (i < w && coef[i] == 2) coef[i++] = 1;
                        if (i >= w) break;
                        coef[i] = 2;
                    }
                    /* next combination with fixed first element */
                    if (w == 1) break;
                    size_t i = w - 1;
                    while (i >= 1 && supp[i] == n - w + i) --i;
                    if (i == 0) break;
                    ++supp[i];
                    for (size_t t = i + 1; t < w; ++t) supp[t] = supp[t - 1] + 1;
                }
            }
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
            for (auto& t : pool) t.join();
        }
        if (found.load()) return w;
    }
    return n;  // unreachable for k >= 1
}

/* exact minimum Hamming distance: enumeration for k <= threshold, low-weight search above */
inline size_t min_distance(const TernaryPolyCode& c, unsigned threads = 1) {
    if (c.k() == 0) throw Error(ErrorKind::ZeroCode, "minimum distance of the zero code");
    return c.k() <= enumeration_threshold ? min_distance_enumerate(c) : min_distance_search(c, threads);
}

}  // namespace rcodes

#endif
