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

#ifndef RCODES_POLY_HPP
#define RCODES_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "ring.hpp"

namespace rcodes {

/* cyclic codes live modulo x^n - 1 (plus), negacyclic ones modulo x^n + 1 (minus) */
enum class ModulusSign { plus, minus };

inline const char* to_string(ModulusSign sign) noexcept { return sign == ModulusSign::plus ? "plus" : "minus"; }

/* the wrap multiplier of the shift: x^n = 1 (plus) or x^n = -1 = 2 (minus) */
inline Trit wrap_multiplier(ModulusSign sign) noexcept { return sign == ModulusSign::plus ? Trit(1) : Trit(2); }

inline ModulusSign sign_of_multiplier(Trit t) {
    if (t.is_zero()) throw Error(ErrorKind::NotAUnit, "wrap multiplier must be 1 or 2");
    return t.value() == 1 ? ModulusSign::plus : ModulusSign::minus;
}

/*
    Z3Poly: dense polynomial over GF(3), ascending coefficients, no trailing zeros
*/
class Z3Poly {
   public:
    /* constructors */
    Z3Poly() noexcept = default;
    explicit Z3Poly(std::vector<Trit> coeffs) : c(std::move(coeffs)) { trim(); }
    Z3Poly(std::initializer_list<int> coeffs) {
        for (int x : coeffs) c.emplace_back(x);
        trim();
    }
    static Z3Poly constant(Trit t) { return Z3Poly(std::vector<Trit>{t}); }
    static Z3Poly monomial(size_t k, Trit t = 1) {
        std::vector<Trit> v(k + 1);
        v[k] = t;
        return Z3Poly(std::move(v));
    }

    /* getters */
    long degree() const noexcept { return long(c.size()) - 1; }
    bool is_zero() const noexcept { return c.empty(); }
    bool is_one() const noexcept { return c.size() == 1 && c[0].value() == 1; }
    bool is_monic() const noexcept { return !c.empty() && c.back().value() == 1; }
    Trit lead() const noexcept { return c.empty() ? Trit(0) : c.back(); }
    Trit operator[](size_t i) const noexcept { return i < c.size() ? c[i] : Trit(0); }
    const std::vector<Trit>& coeffs() const noexcept { return c; }
    size_t weight() const noexcept { return hamming_weight(c); }

    /* coefficient vector padded with zeros to length n */
    TernaryVector to_vector(size_t n) const {
        TernaryVector v(n);
        for (size_t i = 0; i < c.size() && i < n; ++i) v[i] = c[i];
        return v;
    }

    Trit evaluate(Trit x) const noexcept {
        Trit acc;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    /* ring operations */
    Z3Poly operator+(const Z3Poly& rhs) const {
        std::vector<Trit> r(std::max(c.size(), rhs.c.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + rhs[i];
        return Z3Poly(std::move(r));
    }
    Z3Poly operator-(const Z3Poly& rhs) const {
        std::vector<Trit> r(std::max(c.size(), rhs.c.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] - rhs[i];
        return Z3Poly(std::move(r));
    }
    Z3Poly operator-() const { return Z3Poly() - *this; }
    Z3Poly operator*(const Z3Poly& rhs) const {
        if (is_zero() || rhs.is_zero()) return Z3Poly();
        std::vector<Trit> r(c.size() + rhs.c.size() - 1);
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            for (size_t j = 0; j < rhs.c.size(); ++j) r[i + j] += c[i] * rhs.c[j];
        }
        return Z3Poly(std::move(r));
    }
    Z3Poly operator*(Trit s) const {
        std::vector<Trit> r(c);
        for (auto& t : r) t *= s;
        return Z3Poly(std::move(r));
    }
    Z3Poly& operator+=(const Z3Poly& rhs) { return *this = *this + rhs; }
    Z3Poly& operator-=(const Z3Poly& rhs) { return *this = *this - rhs; }
    Z3Poly& operator*=(const Z3Poly& rhs) { return *this = *this * rhs; }

    bool operator==(const Z3Poly& rhs) const noexcept = default;

   private:
    std::vector<Trit> c;

    void trim() noexcept {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

/* canonical order: by degree, then lexicographic on coefficients from the leading one down */
inline bool canonical_less(const Z3Poly& f, const Z3Poly& g) noexcept {
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    for (long i = f.degree(); i >= 0; --i)
        if (f[i] != g[i]) return f[i] < g[i];
    return false;
}

/* section: text */

/* descending-degree display, e.g. "x^4+x^3+2x+1"; "0" for the zero polynomial */
inline std::string to_string(const Z3Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (long i = f.degree(); i >= 0; --i) {
        const Trit t = f[i];
        if (t.is_zero()) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || t.value() == 2) s += std::to_string(t.value());
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Z3Poly& f) { return os << to_string(f); }

inline std::vector<int> to_ints(const Z3Poly& f) {
    std::vector<int> v;
    for (auto t : f.coeffs()) v.push_back(t.value());
    return v;
}

/*
    grammar: terms "c", "x", "cx", "cx^k" joined by "+" or "-" (e.g. "x^4+2x^3+x+1", "x^6-2x^3+1"),
    or an ascending coefficient vector "[1,1,0,2,1]"
*/
inline Z3Poly parse_z3poly(const std::string& text) {
    const std::string s = detail::compact(text);
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<Trit> coeffs;
    auto add_term = [&](size_t k, Trit t) {
        if (k > 100000) throw ParseError("degree too large in '" + text + "'");
        if (coeffs.size() <= k) coeffs.resize(k + 1);
        coeffs[k] += t;
    };
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated coefficient vector '" + text + "'");
        size_t pos = 1, k = 0;
        if (s.size() == 2) return Z3Poly();
        while (pos < s.size() - 1) {
            bool negate = false;
            if (s[pos] == '-') {
                negate = true;
                ++pos;
            }
            const long d = detail::read_number(s, pos);
            if (d < 0) throw ParseError("bad coefficient vector '" + text + "'");
            add_term(k++, negate ? -Trit(int(d % 3)) : Trit(int(d % 3)));
            if (s[pos] == ',')
                ++pos;
            else if (pos != s.size() - 1)
                throw ParseError("bad coefficient vector '" + text + "'");
        }
        return Z3Poly(std::move(coeffs));
    }
    size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        bool negate = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negate = (s[pos] == '-');
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in polynomial '" + text + "'");
        }
        const long d = detail::read_number(s, pos);
        if (pos < s.size() && s[pos] == '*') ++pos;
        size_t k = 0;
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            k = size_t(detail::read_exponent(s, pos));
        } else if (d < 0) {
            throw ParseError("bad polynomial term in '" + text + "'");
        }
        const Trit t = (d < 0) ? Trit(1) : Trit(int(d % 3));
        add_term(k, negate ? -t : t);
        first = false;
    }
    return Z3Poly(std::move(coeffs));
}

/* section: division and gcd */

/* f = q g + r with deg r < deg g */
inline std::pair<Z3Poly, Z3Poly> poly_divmod(const Z3Poly& f, const Z3Poly& g) {
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
    if (f.degree() < g.degree()) return {Z3Poly(), f};
    std::vector<Trit> r(f.coeffs());
    std::vector<Trit> q(size_t(f.degree() - g.degree() + 1));
    const Trit inv = g.lead().inverse();
    const size_t dg = size_t(g.degree());
    for (size_t i = r.size(); i-- > dg;) {
        if (r[i].is_zero()) continue;
        const Trit t = r[i] * inv;
        q[i - dg] = t;
        for (size_t j = 0; j <= dg; ++j) r[i - dg + j] -= t * g[j];
    }
    r.resize(dg);
    return {Z3Poly(std::move(q)), Z3Poly(std::move(r))};
}

inline Z3Poly operator/(const Z3Poly& f, const Z3Poly& g) { return poly_divmod(f, g).first; }
inline Z3Poly operator%(const Z3Poly& f, const Z3Poly& g) { return poly_divmod(f, g).second; }

inline bool divides(const Z3Poly& g, const Z3Poly& f) { return (f % g).is_zero(); }

inline Z3Poly monic(const Z3Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no monic normalization");
    return f * f.lead().inverse();
}

/* monic greatest common divisor */
inline Z3Poly poly_gcd(Z3Poly f, Z3Poly g) {
    if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
    while (!g.is_zero()) {
        Z3Poly r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return monic(f);
}

/* x^{deg f} f(1/x): coefficients reversed, then trimmed */
inline Z3Poly reciprocal(const Z3Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "reciprocal of the zero polynomial");
    std::vector<Trit> r(f.coeffs().rbegin(), f.coeffs().rend());
    return Z3Poly(std::move(r));
}

inline Z3Poly derivative(const Z3Poly& f) {
    std::vector<Trit> r;
    for (long i = 1; i <= f.degree(); ++i) r.push_back(Trit(int(i % 3)) * f[size_t(i)]);
    return Z3Poly(std::move(r));
}

/* x^n - 1 or x^n + 1 */
inline Z3Poly modulus(size_t n, ModulusSign sign) {
    std::vector<Trit> v(n + 1);
    v[n] = 1;
    v[0] += -wrap_multiplier(sign);
    return Z3Poly(std::move(v));
}

/* "x^n-1" or "x^n+1" */
inline std::string modulus_string(size_t n, ModulusSign sign) {
    return (n == 1 ? std::string("x") : "x^" + std::to_string(n)) + (sign == ModulusSign::plus ? "-1" : "+1");
}

/* section: factorization */

struct Factorization {
    Trit unit = 1;
    std::vector<std::pair<Z3Poly, int>> factors;

    Z3Poly product() const {
        Z3Poly p = Z3Poly::constant(unit);
        for (const auto& [f, m] : factors)
            for (int i = 0; i < m; ++i) p *= f;
        return p;
    }
};

/* "(x+1)^3(x+2)^3", prefixed by the unit when it is not 1 */
inline std::string to_string(const Factorization& fac) {
    std::string s = (fac.unit.value() == 1) ? "" : std::to_string(fac.unit.value());
    for (const auto& [f, m] : fac.factors) {
        s += "(" + to_string(f) + ")";
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s.empty() ? "1" : s;
}

namespace detail {

/* g(x^3) = g(x)^3 over GF(3): keep every third coefficient */
inline Z3Poly cube_root(const Z3Poly& f) {
    std::vector<Trit> r;
    for (long i = 0; i <= f.degree(); i += 3) r.push_back(f[size_t(i)]);
    return Z3Poly(std::move(r));
}

/* squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity) */
inline void squarefree_parts(const Z3Poly& f, int mult, std::vector<std::pair<Z3Poly, int>>& out) {
    if (f.degree() <= 0) return;
    const Z3Poly fp = derivative(f);
    if (fp.is_zero()) {
        squarefree_parts(cube_root(f), 3 * mult, out);
        return;
    }
    Z3Poly c = poly_gcd(f, fp);
    Z3Poly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        const Z3Poly y = poly_gcd(w, c);
        const Z3Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i * mult);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) squarefree_parts(cube_root(c), 3 * mult, out);
}

/* Berlekamp splitting of a monic squarefree polynomial (deterministic for GF(3)) */
inline std::vector<Z3Poly> berlekamp(const Z3Poly& f) {
    const size_t d = size_t(f.degree());
    if (d <= 1) return {f};
    /* Q[i] = x^{3i} mod f */
    TernaryMatrix q;
    const Z3Poly x3 = Z3Poly::monomial(3) % f;
    Z3Poly cur = Z3Poly::constant(1);
    for (size_t i = 0; i < d; ++i) {
        q.push_back(cur.to_vector(d));
        cur = (cur * x3) % f;
    }
    /* solve sum_i h_i Q[i] - h = 0 */
    TernaryMatrix a(d, TernaryVector(d));
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < d; ++i) a[j][i] = q[i][j] - Trit(i == j ? 1 : 0);
    const TernaryMatrix basis = nullspace(a, d);
    const size_t r = basis.size();
    std::vector<Z3Poly> parts{f};
    for (const auto& hv : basis) {
        if (parts.size() == r) break;
        const Z3Poly h(hv);
        if (h.degree() <= 0) continue;
        std::vector<Z3Poly> next;
        for (const auto& g : parts) {
            if (g.degree() <= 1) {
                next.push_back(g);
                continue;
            }
            for (int s = 0; s < 3; ++s) {
                const Z3Poly t = poly_gcd(g, h - Z3Poly::constant(s));
                if (t.degree() > 0) next.push_back(t);
            }
        }
        parts = std::move(next);
    }
    return parts;
}

}  // namespace detail

/* canonical factorization into monic irreducibles times a unit */
inline Factorization factor(const Z3Poly& f) {
    if (f.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "cannot factor a constant polynomial");
    Factorization fac;
    fac.unit = f.lead();
    std::vector<std::pair<Z3Poly, int>> parts;
    detail::squarefree_parts(monic(f), 1, parts);
    for (const auto& [part, m] : parts) {
        for (const auto& p : detail::berlekamp(part)) {
            auto it = std::find_if(fac.factors.begin(), fac.factors.end(), [&](const auto& e) { return e.first == p; });
            if (it == fac.factors.end())
                fac.factors.emplace_back(p, m);
            else
                it->second += m;
        }
    }
    std::sort(fac.factors.begin(), fac.factors.end(),
              [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    return fac;
}

/* all monic polynomials of degree d in canonical order */
inline std::vector<Z3Poly> monic_polynomials(size_t d) {
    std::vector<Z3Poly> res;
    size_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= 3;
    for (size_t idx = 0; idx < count; ++idx) {
        std::vector<Trit> v(d + 1);
        v[d] = 1;
        size_t t = idx;
        for (size_t i = d; i-- > 0;) {
            v[i] = Trit(int(t % 3));
            t /= 3;
        }
        res.emplace_back(std::move(v));
    }
    return res;
}

/* sieve: monic irreducibles of degree exactly d (no monic irreducible factor of degree <= d/2) */
inline std::vector<Z3Poly> irreducibles_of_degree(size_t d) {
    std::vector<Z3Poly> small;
    for (size_t e = 1; 2 * e <= d; ++e) {
        const auto ie = irreducibles_of_degree(e);
        small.insert(small.end(), ie.begin(), ie.end());
    }
    std::vector<Z3Poly> res;
    for (const auto& f : monic_polynomials(d)) {
        bool irreducible = true;
        for (const auto& p : small)
            if (divides(p, f)) {
                irreducible = false;
                break;
            }
        if (irreducible) res.push_back(f);
    }
    return res;
}

inline bool is_irreducible(const Z3Poly& f) {
    if (f.degree() < 1) return false;
    const auto fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

/* all monic divisors prod p_i^{t_i}, 0 <= t_i <= s_i, of x^n -/+ 1, canonically sorted */
inline std::vector<Z3Poly> divisors_of_modulus(size_t n, ModulusSign sign) {
    const auto fac = factor(modulus(n, sign));
    std::vector<Z3Poly> res{Z3Poly::constant(1)};
    for (const auto& [p, m] : fac.factors) {
        std::vector<Z3Poly> next;
        for (const auto& d : res) {
            Z3Poly cur = d;
            for (int t = 0; t <= m; ++t) {
                next.push_back(cur);
                cur *= p;
            }
        }
        res = std::move(next);
    }
    std::sort(res.begin(), res.end(), canonical_less);
    return res;
}

}  // namespace rcodes

#endif
