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

#ifndef RCODES_RCODE_HPP
#define RCODES_RCODE_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "ring.hpp"
#include "ternary_code.hpp"

namespace rcodes {

/* section: polynomial text over R (shared by commutative and skew polynomials) */

namespace detail {

inline void trim_ring_coeffs(std::vector<RingElement>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

/* descending display, e.g. "(2v+2v^2)x^2+(1+2v+2v^2)x+1", "v^2x^4+vx^3" */
inline std::string render_ring_poly(const std::vector<RingElement>& c) {
    if (c.empty()) return "0";
    std::string s;
    for (size_t i = c.size(); i-- > 0;) {
        const RingElement& r = c[i];
        if (r.is_zero()) continue;
        if (!s.empty()) s += "+";
        const int terms = int(!r.a().is_zero()) + int(!r.b().is_zero()) + int(!r.c().is_zero());
        if (terms > 1)
            s += "(" + to_string(r) + ")";
        else if (i == 0 || r != RingElement(1))
            s += to_string(r);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

/* splits at top-level separators (outside parentheses) */
inline std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

/*
    grammar: terms "[coef][x[^k]]" joined by "+"/"-", where coef is "(element)" or a ring monomial
    ("2", "v", "2v^2"); or an ascending vector of elements "[1, 1+2v, v^2]"
*/
inline std::vector<RingElement> parse_ring_poly(const std::string& text) {
    const std::string s = compact(text);
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<RingElement> coeffs;
    auto add_term = [&](size_t k, const RingElement& r) {
        if (k > 100000) throw ParseError("degree too large in '" + text + "'");
        if (coeffs.size() <= k) coeffs.resize(k + 1);
        coeffs[k] += r;
    };
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated coefficient vector '" + text + "'");
        const std::string inner = s.substr(1, s.size() - 2);
        if (inner.empty()) return {};
        size_t k = 0;
        for (const auto& part : split_top(inner, ',')) add_term(k++, parse_element(part));
        trim_ring_coeffs(coeffs);
        return coeffs;
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
        RingElement coef(1);
        bool have_coef = false;
        if (pos < s.size() && s[pos] == '(') {
            const size_t close = s.find(')', pos);
            if (close == std::string::npos) throw ParseError("unbalanced parenthesis in '" + text + "'");
            coef = parse_element(s.substr(pos + 1, close - pos - 1));
            pos = close + 1;
            have_coef = true;
        } else {
            have_coef = read_ring_monomial(s, pos, coef);
            if (!have_coef) coef = RingElement(1);
        }
        if (pos < s.size() && s[pos] == '*') ++pos;
        size_t k = 0;
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            k = size_t(read_exponent(s, pos));
        } else if (!have_coef) {
            throw ParseError("bad polynomial term in '" + text + "'");
        }
        add_term(k, negate ? -coef : coef);
        first = false;
    }
    trim_ring_coeffs(coeffs);
    return coeffs;
}

}  // namespace detail

/*
    RPoly: polynomial over the commutative ring R, ascending coefficients, no trailing zeros
*/
class RPoly {
   public:
    /* constructors */
    RPoly() = default;
    explicit RPoly(std::vector<RingElement> coeffs) : c(std::move(coeffs)) { detail::trim_ring_coeffs(c); }
    RPoly(std::initializer_list<RingElement> coeffs) : c(coeffs) { detail::trim_ring_coeffs(c); }
    explicit RPoly(const Z3Poly& f) {
        for (auto t : f.coeffs()) c.emplace_back(t);
    }

    /* getters */
    long degree() const noexcept { return long(c.size()) - 1; }
    bool is_zero() const noexcept { return c.empty(); }
    RingElement lead() const noexcept { return c.empty() ? RingElement() : c.back(); }
    RingElement operator[](size_t i) const noexcept { return i < c.size() ? c[i] : RingElement(); }
    const std::vector<RingElement>& coeffs() const noexcept { return c; }

    /* the polynomial over GF(3) formed by the i-th Gray coordinate of every coefficient */
    Z3Poly gray_component(size_t i) const {
        std::vector<Trit> v;
        for (const auto& r : c) v.push_back(gray(r)[i]);
        return Z3Poly(std::move(v));
    }

    /* ring operations */
    RPoly operator+(const RPoly& rhs) const {
        std::vector<RingElement> r(std::max(c.size(), rhs.c.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + rhs[i];
        return RPoly(std::move(r));
    }
    RPoly operator-(const RPoly& rhs) const {
        std::vector<RingElement> r(std::max(c.size(), rhs.c.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] - rhs[i];
        return RPoly(std::move(r));
    }
    RPoly operator*(const RPoly& rhs) const {
        if (is_zero() || rhs.is_zero()) return RPoly();
        std::vector<RingElement> r(c.size() + rhs.c.size() - 1);
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < rhs.c.size(); ++j) r[i + j] += c[i] * rhs.c[j];
        return RPoly(std::move(r));
    }

    bool operator==(const RPoly& rhs) const noexcept = default;

   private:
    std::vector<RingElement> c;
};

inline std::string to_string(const RPoly& f) { return detail::render_ring_poly(f.coeffs()); }
inline std::ostream& operator<<(std::ostream& os, const RPoly& f) { return os << to_string(f); }
inline RPoly parse_rpoly(const std::string& text) { return RPoly(detail::parse_ring_poly(text)); }

/* per-coefficient inverse Gray map: e1 f1 + e2 f2 + e3 f3 */
inline RPoly combine_components(const Z3Poly& f1, const Z3Poly& f2, const Z3Poly& f3) {
    const size_t len = size_t(std::max({f1.degree(), f2.degree(), f3.degree()}) + 1);
    std::vector<RingElement> c(len);
    for (size_t i = 0; i < len; ++i) c[i] = gray_inverse({f1[i], f2[i], f3[i]});
    return RPoly(std::move(c));
}

/* section: vectors over R */

using RVector = std::vector<RingElement>;

/* Gray image of length 3n laid out block-wise: all first, then all second, then all third coordinates */
inline TernaryVector gray_vector(const RVector& x) {
    const size_t n = x.size();
    TernaryVector r(3 * n);
    for (size_t j = 0; j < n; ++j) {
        const auto t = gray(x[j]);
        for (size_t i = 0; i < 3; ++i) r[i * n + j] = t[i];
    }
    return r;
}

inline RVector gray_vector_inverse(const TernaryVector& y) {
    if (y.size() % 3 != 0) throw Error(ErrorKind::LengthMismatch, "Gray vector length must be a multiple of 3");
    const size_t n = y.size() / 3;
    RVector x(n);
    for (size_t j = 0; j < n; ++j) x[j] = gray_inverse({y[j], y[n + j], y[2 * n + j]});
    return x;
}

inline size_t lee_weight(const RVector& x) {
    size_t w = 0;
    for (const auto& r : x) w += size_t(lee_weight(r));
    return w;
}

inline RingElement inner_product(const RVector& x, const RVector& y) {
    if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "inner product of vectors of different length");
    RingElement acc;
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

inline RVector scale(const RingElement& r, const RVector& x) {
    RVector y(x);
    for (auto& e : y) e = r * e;
    return y;
}

inline std::string to_string(const RVector& x) {
    std::string s = "(";
    for (size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + to_string(x[i]);
    return s + ")";
}

/*
    UnitConstant: a unit lambda of R; every unit satisfies lambda^2 = 1
*/
class UnitConstant {
   public:
    UnitConstant() noexcept : lambda_(1) {}
    UnitConstant(const RingElement& lambda) : lambda_(lambda) {
        if (!is_unit(lambda)) throw Error(ErrorKind::NotAUnit, to_string(lambda) + " is not a unit");
    }
    const RingElement& value() const noexcept { return lambda_; }
    operator const RingElement&() const noexcept { return lambda_; }
    /* Gray coordinates, each 1 or 2 */
    TritTriple multipliers() const noexcept { return gray(lambda_); }
    bool is_theta_invariant() const noexcept { return theta(lambda_) == lambda_; }
    bool operator==(const UnitConstant& rhs) const noexcept = default;

   private:
    RingElement lambda_;
};

/* section: shift operators on R^n */

/* nu_lambda(c) = (lambda c_{n-1}, c_0, ..., c_{n-2}) */
inline RVector nu(const RVector& c, const RingElement& lambda) {
    if (c.empty()) return c;
    RVector r(c.size());
    r[0] = lambda * c.back();
    for (size_t i = 1; i < c.size(); ++i) r[i] = c[i - 1];
    return r;
}

inline RVector sigma(const RVector& c) { return nu(c, RingElement(1)); }
inline RVector eta(const RVector& c) { return nu(c, RingElement(2)); }

inline void check_sections(size_t n, size_t s, size_t l) {
    if (s == 0 || l == 0 || s * l != n)
        throw Error(ErrorKind::BadFactorization,
                    "length " + std::to_string(n) + " is not s*l = " + std::to_string(s) + "*" + std::to_string(l));
}

/* nabla_{lambda,l}: rotates the s sections of l symbols, multiplying the wrapped section by lambda */
inline RVector nabla(const RVector& c, const RingElement& lambda, size_t s, size_t l) {
    check_sections(c.size(), s, l);
    RVector r(c.size());
    for (size_t j = 0; j < l; ++j) r[j] = lambda * c[(s - 1) * l + j];
    for (size_t i = l; i < c.size(); ++i) r[i] = c[i - l];
    return r;
}

inline RVector tau(const RVector& c, size_t s, size_t l) { return nabla(c, RingElement(1), s, l); }

/* section: operators on Gray vectors Z3^{3n} */

namespace detail {

/* applies a shift to each of the three blocks with the block's own wrap multiplier */
inline TernaryVector blockwise_section_shift(const TernaryVector& y, const TritTriple& mult, size_t l) {
    const size_t n = y.size() / 3;
    TernaryVector r(y.size());
    for (size_t b = 0; b < 3; ++b) {
        const size_t off = b * n;
        for (size_t j = 0; j < l; ++j) r[off + j] = mult[b] * y[off + n - l + j];
        for (size_t i = l; i < n; ++i) r[off + i] = y[off + i - l];
    }
    return r;
}

}  // namespace detail

/* Phi: three parallel cyclic shifts */
inline TernaryVector gray_phi(const TernaryVector& y) { return detail::blockwise_section_shift(y, {1, 1, 1}, 1); }

/* Gamma: three parallel l-section shifts */
inline TernaryVector gray_gamma(const TernaryVector& y, size_t s, size_t l) {
    check_sections(y.size() / 3, s, l);
    return detail::blockwise_section_shift(y, {1, 1, 1}, l);
}

/* blockwise constacyclic shift with the Gray coordinates of lambda as multipliers */
inline TernaryVector gray_nu(const TernaryVector& y, const RingElement& lambda) {
    return detail::blockwise_section_shift(y, gray(lambda), 1);
}

/* blockwise quasi-constacyclic shift with the Gray coordinates of lambda as multipliers */
inline TernaryVector gray_nabla(const TernaryVector& y, const RingElement& lambda, size_t s, size_t l) {
    check_sections(y.size() / 3, s, l);
    return detail::blockwise_section_shift(y, gray(lambda), l);
}

/* rho(x, y, z) = (x, z, y) on the three blocks */
inline TernaryVector gray_rho(const TernaryVector& y) {
    const size_t n = y.size() / 3;
    TernaryVector r(y);
    for (size_t j = 0; j < n; ++j) std::swap(r[n + j], r[2 * n + j]);
    return r;
}

/* multiplication by v in Gray coordinates: gray(v) = (0, 1, 2) */
inline TernaryVector gray_v_multiply(const TernaryVector& y) {
    const size_t n = y.size() / 3;
    TernaryVector r(y);
    for (size_t j = 0; j < n; ++j) {
        r[j] = 0;
        r[2 * n + j] = Trit(2) * y[2 * n + j];
    }
    return r;
}

/* section: generic Gray-coordinate submodules */

using GrayOperator = std::function<TernaryVector(const TernaryVector&)>;

/*
    GrayModule: a subspace of Z3^{3n}; built as the smallest subspace containing the generators and
    closed under v-multiplication and the given linear operators
*/
class GrayModule {
   public:
    /* constructors */
    explicit GrayModule(size_t n = 0) : n_(n), space_(3 * n) {}
    GrayModule(size_t n, const TernaryMatrix& gens, const std::vector<GrayOperator>& ops = {}) : n_(n), space_(3 * n) {
        std::vector<GrayOperator> all{gray_v_multiply};
        all.insert(all.end(), ops.begin(), ops.end());
        for (const auto& g : gens) add(g, all);
    }
    static GrayModule from_rvectors(size_t n, const std::vector<RVector>& gens, const std::vector<GrayOperator>& ops = {}) {
        TernaryMatrix g;
        for (const auto& x : gens) {
            if (x.size() != n) throw Error(ErrorKind::LengthMismatch, "generator length differs from module length");
            g.push_back(gray_vector(x));
        }
        return GrayModule(n, g, ops);
    }

    /* getters */
    size_t n() const noexcept { return n_; }
    size_t dim() const noexcept { return space_.rank(); }
    const TernaryMatrix& basis() const noexcept { return space_.basis(); }
    const Subspace& subspace() const noexcept { return space_; }

    bool contains(const TernaryVector& y) const { return space_.contains(y); }
    bool contains(const RVector& x) const { return space_.contains(gray_vector(x)); }

    /* closure witness: the subspace is invariant under op */
    bool is_closed_under(const GrayOperator& op) const {
        for (const auto& row : space_.basis())
            if (!space_.contains(op(row))) return false;
        return true;
    }
    bool is_r_submodule() const { return is_closed_under(gray_v_multiply); }

    /* ranks of the three block projections; they add up to dim() for an R-submodule */
    std::array<size_t, 3> component_ranks() const {
        std::array<size_t, 3> r{};
        for (size_t b = 0; b < 3; ++b) {
            TernaryMatrix m;
            for (const auto& row : space_.basis()) m.emplace_back(row.begin() + long(b * n_), row.begin() + long((b + 1) * n_));
            r[b] = rank(m, n_);
        }
        return r;
    }

    bool operator==(const GrayModule& rhs) const { return n_ == rhs.n_ && space_ == rhs.space_; }

   private:
    size_t n_;
    Subspace space_;

    void add(const TernaryVector& g, const std::vector<GrayOperator>& ops) {
        if (g.size() != 3 * n_) throw Error(ErrorKind::LengthMismatch, "Gray vector length differs from 3n");
        std::vector<TernaryVector> queue{g};
        while (!queue.empty()) {
            TernaryVector y = std::move(queue.back());
            queue.pop_back();
            if (!space_.insert(y)) continue;
            for (const auto& op : ops) queue.push_back(op(y));
        }
    }
};

/* section: codes over R as component triples */

enum class RCodeKind { cyclic, negacyclic, constacyclic };

inline const char* to_string(RCodeKind k) noexcept {
    switch (k) {
        case RCodeKind::cyclic:
            return "cyclic";
        case RCodeKind::negacyclic:
            return "negacyclic";
        default:
            return "constacyclic";
    }
}

/*
    RCode: C = e1 C1 + e2 C2 + e3 C3 with each Ci a cyclic or negacyclic ternary code of length n;
    the component signs determine the unit lambda with x^n = lambda (cyclic: 1, negacyclic: 2)
*/
class RCode {
   public:
    /* constructors */
    explicit RCode(const std::array<TernaryPolyCode, 3>& comps) : c(comps) {
        if (c[0].n() != c[1].n() || c[0].n() != c[2].n())
            throw Error(ErrorKind::LengthMismatch, "components have different lengths");
    }

    /* getters */
    size_t n() const noexcept { return c[0].n(); }
    const TernaryPolyCode& component(size_t i) const noexcept { return c[i]; }
    const std::array<TernaryPolyCode, 3>& components() const noexcept { return c; }
    std::array<size_t, 3> k() const noexcept { return {c[0].k(), c[1].k(), c[2].k()}; }
    size_t cardinality_log3() const noexcept { return c[0].k() + c[1].k() + c[2].k(); }
    UnitConstant lambda() const {
        return UnitConstant(gray_inverse(
            {wrap_multiplier(c[0].sign()), wrap_multiplier(c[1].sign()), wrap_multiplier(c[2].sign())}));
    }
    RCodeKind kind() const {
        const auto l = lambda().value();
        if (l == RingElement(1)) return RCodeKind::cyclic;
        if (l == RingElement(2)) return RCodeKind::negacyclic;
        return RCodeKind::constacyclic;
    }
    /* the common modulus sign; MixedModuli for a genuinely constacyclic code */
    ModulusSign sign() const {
        if (c[0].sign() != c[1].sign() || c[0].sign() != c[2].sign())
            throw Error(ErrorKind::MixedModuli, "components use different moduli");
        return c[0].sign();
    }
    bool is_zero() const noexcept { return cardinality_log3() == 0; }

    /* membership: each Gray block of x lies in its component */
    bool contains(const RVector& x) const {
        if (x.size() != n()) throw Error(ErrorKind::LengthMismatch, "vector length differs from code length");
        const auto y = gray_vector(x);
        for (size_t b = 0; b < 3; ++b)
            if (!membership(c[b], TernaryVector(y.begin() + long(b * n()), y.begin() + long((b + 1) * n()))))
                return false;
        return true;
    }

    bool operator==(const RCode& rhs) const noexcept = default;

   private:
    std::array<TernaryPolyCode, 3> c;
};

inline RCode make_rcode(size_t n, ModulusSign sign, const Z3Poly& f1, const Z3Poly& f2, const Z3Poly& f3) {
    return RCode({make_code(n, sign, f1), make_code(n, sign, f2), make_code(n, sign, f3)});
}

/* lambda-constacyclic: component i lives modulo x^n - gray(lambda)_i */
inline RCode make_rcode(size_t n, const UnitConstant& lambda, const Z3Poly& f1, const Z3Poly& f2, const Z3Poly& f3) {
    const auto m = lambda.multipliers();
    return RCode({make_code(n, sign_of_multiplier(m[0]), f1), make_code(n, sign_of_multiplier(m[1]), f2),
                  make_code(n, sign_of_multiplier(m[2]), f3)});
}

inline RCode full_rcode(size_t n, ModulusSign sign) {
    const auto one = Z3Poly::constant(1);
    return make_rcode(n, sign, one, one, one);
}

/* components generated by gcd(f_i, x^n - gray(lambda)_i), f_i the i-th Gray coordinate polynomial of f */
inline RCode decompose_generator(const RPoly& f, size_t n, const UnitConstant& lambda) {
    if (n == 0) throw Error(ErrorKind::LengthMismatch, "code length must be at least 1");
    if (f.degree() > long(n)) throw Error(ErrorKind::LengthMismatch, "generator degree exceeds n");
    const auto m = lambda.multipliers();
    std::array<TernaryPolyCode, 3> comps;
    for (size_t i = 0; i < 3; ++i) {
        const auto sign = sign_of_multiplier(m[i]);
        const auto mod = modulus(n, sign);
        const auto fi = f.gray_component(i);
        comps[i] = make_code(n, sign, fi.is_zero() ? mod : poly_gcd(fi, mod));
    }
    return RCode(comps);
}

inline RCode decompose_generator(const RPoly& f, size_t n, ModulusSign sign) {
    return decompose_generator(f, n, UnitConstant(gray_inverse({wrap_multiplier(sign), wrap_multiplier(sign), wrap_multiplier(sign)})));
}

/* single generator (1+2v^2) f1 + (2v+2v^2) f2 + (v+2v^2) f3 of a cyclic or negacyclic code */
inline RPoly combined_generator(const RCode& c) {
    (void)c.sign();  // MixedModuli for mixed component moduli
    return combine_components(c.component(0).generator(), c.component(1).generator(), c.component(2).generator());
}

/* block-diagonal ternary generator matrix of the Gray image (3n columns) */
inline TernaryMatrix gray_image(const RCode& c) {
    const size_t n = c.n();
    TernaryMatrix m;
    for (size_t b = 0; b < 3; ++b)
        for (const auto& row : c.component(b).generator_matrix()) {
            TernaryVector r(3 * n);
            std::copy(row.begin(), row.end(), r.begin() + long(b * n));
            m.push_back(std::move(r));
        }
    return m;
}

inline GrayModule to_gray_module(const RCode& c) { return GrayModule(c.n(), gray_image(c)); }

/* generator rows over R: e_i times the rows of the i-th component */
inline std::vector<RVector> r_generator_rows(const RCode& c) {
    std::vector<RVector> rows;
    for (size_t b = 0; b < 3; ++b)
        for (const auto& row : c.component(b).generator_matrix()) {
            RVector x(c.n());
            for (size_t j = 0; j < c.n(); ++j) {
                TritTriple t{};
                t[b] = row[j];
                x[j] = gray_inverse(t);
            }
            rows.push_back(std::move(x));
        }
    return rows;
}

/* d_L = min over nonzero components of the component Hamming distance */
inline size_t lee_distance(const RCode& c, unsigned threads = 1) {
    if (c.is_zero()) throw Error(ErrorKind::ZeroCode, "Lee distance of the zero code");
    size_t d = std::numeric_limits<size_t>::max();
    for (const auto& comp : c.components())
        if (comp.k() > 0) d = std::min(d, min_distance(comp, threads));
    return d;
}

inline RCode dual(const RCode& c) { return RCode({dual(c.component(0)), dual(c.component(1)), dual(c.component(2))}); }

/* every pair of generators (including each with itself) has zero R-inner product */
inline bool is_self_orthogonal(const std::vector<RVector>& gens) {
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j)
            if (!inner_product(gens[i], gens[j]).is_zero()) return false;
    return true;
}

inline bool is_self_orthogonal(const RCode& c) { return is_self_orthogonal(r_generator_rows(c)); }

/* section: constacyclic structure */

enum class ComponentTag { cyclic, negacyclic };

inline const char* to_string(ComponentTag t) noexcept { return t == ComponentTag::cyclic ? "cyclic" : "negacyclic"; }

/* component i of a lambda-constacyclic code is cyclic if gray(lambda)_i = 1, negacyclic if it is 2 */
inline std::array<ComponentTag, 3> classify_constacyclic(const RCode& c, const UnitConstant& lambda) {
    (void)c;
    const auto m = lambda.multipliers();
    std::array<ComponentTag, 3> tags{};
    for (size_t i = 0; i < 3; ++i) tags[i] = m[i].value() == 1 ? ComponentTag::cyclic : ComponentTag::negacyclic;
    return tags;
}

/* closure of the code under nu_lambda, checked on the R-generator rows (the shift is R-linear) */
inline bool is_closed_under_nu(const RCode& c, const RingElement& lambda) {
    for (const auto& row : r_generator_rows(c))
        if (!c.contains(nu(row, lambda))) return false;
    return true;
}

/* closure of every component under the ternary shift with multiplier given by its tag */
inline bool components_closed_under_tags(const RCode& c, const std::array<ComponentTag, 3>& tags) {
    for (size_t b = 0; b < 3; ++b) {
        const auto sign = tags[b] == ComponentTag::cyclic ? ModulusSign::plus : ModulusSign::minus;
        for (const auto& row : c.component(b).generator_matrix())
            if (!membership(c.component(b), shift(row, sign))) return false;
    }
    return true;
}

/* (a_0, lambda a_1, lambda^2 a_2, ...) with lambda^2 = 1 */
inline RVector constacyclic_map(const RVector& a, const UnitConstant& lambda) {
    RVector r(a);
    for (size_t i = 1; i < r.size(); i += 2) r[i] = lambda.value() * r[i];
    return r;
}

/*
    image of a code under the coordinate map above: component j generated by g_j(l_j x), l_j = gray(lambda)_j,
    with its wrap multiplier multiplied by l_j; an involution, so applying it twice recovers the code
*/
inline RCode constacyclic_transport(const RCode& c, const UnitConstant& lambda) {
    if (c.n() % 2 == 0) throw Error(ErrorKind::EvenLength, "constacyclic transport needs odd length");
    const auto m = lambda.multipliers();
    std::array<TernaryPolyCode, 3> comps;
    for (size_t j = 0; j < 3; ++j) {
        const auto& g = c.component(j).generator();
        std::vector<Trit> v(g.coeffs());
        for (size_t i = 1; i < v.size(); i += 2) v[i] *= m[j];
        const auto sign = sign_of_multiplier(wrap_multiplier(c.component(j).sign()) * m[j]);
        comps[j] = make_code(c.n(), sign, monic(Z3Poly(std::move(v))));
    }
    return RCode(comps);
}

}  // namespace rcodes

#endif
