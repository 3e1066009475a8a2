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

#ifndef RCODES_SKEW_HPP
#define RCODES_SKEW_HPP

#include <algorithm>
#include <array>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "rcode.hpp"
#include "ring.hpp"

namespace rcodes {

/*
    SkewPoly: element of R[x, theta] with (a x^i)(b x^j) = a theta^i(b) x^{i+j}
*/
class SkewPoly {
   public:
    /* constructors */
    SkewPoly() = default;
    explicit SkewPoly(std::vector<RingElement> coeffs) : c(std::move(coeffs)) { detail::trim_ring_coeffs(c); }
    SkewPoly(std::initializer_list<RingElement> coeffs) : c(coeffs) { detail::trim_ring_coeffs(c); }
    static SkewPoly monomial(size_t k, const RingElement& r = RingElement(1)) {
        std::vector<RingElement> v(k + 1);
        v[k] = r;
        return SkewPoly(std::move(v));
    }

    /* getters */
    long degree() const noexcept { return long(c.size()) - 1; }
    bool is_zero() const noexcept { return c.empty(); }
    bool is_monic() const noexcept { return !c.empty() && c.back() == RingElement(1); }
    RingElement lead() const noexcept { return c.empty() ? RingElement() : c.back(); }
    RingElement operator[](size_t i) const noexcept { return i < c.size() ? c[i] : RingElement(); }
    const std::vector<RingElement>& coeffs() const noexcept { return c; }

    /* additive operations */
    SkewPoly operator+(const SkewPoly& rhs) const {
        std::vector<RingElement> r(std::max(c.size(), rhs.c.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + rhs[i];
        return SkewPoly(std::move(r));
    }
    SkewPoly operator-(const SkewPoly& rhs) const {
        std::vector<RingElement> r(std::max(c.size(), rhs.c.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] - rhs[i];
        return SkewPoly(std::move(r));
    }

    bool operator==(const SkewPoly& rhs) const noexcept = default;

   private:
    std::vector<RingElement> c;
};

inline std::string to_string(const SkewPoly& f) { return detail::render_ring_poly(f.coeffs()); }
inline std::ostream& operator<<(std::ostream& os, const SkewPoly& f) { return os << to_string(f); }
inline SkewPoly parse_skew_poly(const std::string& text) { return SkewPoly(detail::parse_ring_poly(text)); }

/* section: arithmetic */

/* twisted convolution */
inline SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() || g.is_zero()) return SkewPoly();
    std::vector<RingElement> r(size_t(f.degree() + g.degree() + 1));
    for (size_t i = 0; i <= size_t(f.degree()); ++i) {
        if (f[i].is_zero()) continue;
        for (size_t j = 0; j <= size_t(g.degree()); ++j) r[i + j] += f[i] * theta_pow(g[j], long(i));
    }
    return SkewPoly(std::move(r));
}

inline SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) { return skew_mul(f, g); }

/* scalar on the left: r f */
inline SkewPoly left_scale(const RingElement& r, const SkewPoly& f) {
    std::vector<RingElement> v(f.coeffs());
    for (auto& e : v) e = r * e;
    return SkewPoly(std::move(v));
}

inline void require_unit_lead(const SkewPoly& g) {
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero skew polynomial");
    if (!is_unit(g.lead()))
        throw Error(ErrorKind::NonUnitLeadingCoefficient, "leading coefficient " + to_string(g.lead()) + " is not a unit");
}

/* right division: f = q g + r, deg r < deg g */
inline std::pair<SkewPoly, SkewPoly> skew_right_divmod(const SkewPoly& f, const SkewPoly& g) {
    require_unit_lead(g);
    const long dg = g.degree();
    SkewPoly q, r = f;
    while (!r.is_zero() && r.degree() >= dg) {
        const long d = r.degree() - dg;
        const RingElement t = r.lead() * theta_pow(unit_inverse(g.lead()), d);
        const SkewPoly term = SkewPoly::monomial(size_t(d), t);
        q = q + term;
        r = r - skew_mul(term, g);
    }
    return {q, r};
}

/* left division: f = g q + r, deg r < deg g */
inline std::pair<SkewPoly, SkewPoly> skew_left_divmod(const SkewPoly& f, const SkewPoly& g) {
    require_unit_lead(g);
    const long dg = g.degree();
    SkewPoly q, r = f;
    while (!r.is_zero() && r.degree() >= dg) {
        const long d = r.degree() - dg;
        const RingElement t = theta_pow(unit_inverse(g.lead()) * r.lead(), dg);
        const SkewPoly term = SkewPoly::monomial(size_t(d), t);
        q = q + term;
        r = r - skew_mul(g, term);
    }
    return {q, r};
}

/* x^n - lambda */
inline SkewPoly skew_modulus(size_t n, const RingElement& lambda) {
    return SkewPoly::monomial(n) - SkewPoly{lambda};
}

inline bool is_right_divisor(const SkewPoly& f, size_t n, const UnitConstant& lambda) {
    return skew_right_divmod(skew_modulus(n, lambda), f).second.is_zero();
}

namespace detail {

/* the idx-th monic skew polynomial of degree d (coefficients enumerated by ring-element index) */
inline SkewPoly monic_skew_poly(size_t d, size_t idx) {
    std::vector<RingElement> v(d + 1);
    v[d] = RingElement(1);
    for (size_t i = 0; i < d; ++i) {
        v[i] = RingElement::from_index(int(idx % 27));
        idx /= 27;
    }
    return SkewPoly(std::move(v));
}

inline size_t pow27(size_t d) {
    size_t r = 1;
    for (size_t i = 0; i < d; ++i) r *= 27;
    return r;
}

inline bool coefficient_index_less(const SkewPoly& f, const SkewPoly& g) {
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    for (long i = f.degree(); i >= 0; --i)
        if (f[size_t(i)] != g[size_t(i)]) return f[size_t(i)].index() < g[size_t(i)].index();
    return false;
}

}  // namespace detail

/*
    all monic right divisors of x^n - lambda by exhaustive search; for degree d > n/2 the monic
    cofactor q of degree n - d is enumerated instead and f recovered by left division
*/
inline std::vector<SkewPoly> right_divisors(size_t n, const UnitConstant& lambda) {
    const SkewPoly m = skew_modulus(n, lambda);
    std::vector<SkewPoly> res;
    for (size_t d = 0; d <= n; ++d) {
        if (d <= n - d) {
            for (size_t idx = 0; idx < detail::pow27(d); ++idx) {
                const auto f = detail::monic_skew_poly(d, idx);
                if (skew_right_divmod(m, f).second.is_zero()) res.push_back(f);
            }
        } else {
            for (size_t idx = 0; idx < detail::pow27(n - d); ++idx) {
                const auto q = detail::monic_skew_poly(n - d, idx);
                const auto [f, r] = skew_left_divmod(m, q);
                if (r.is_zero() && f.degree() == long(d) && f.is_monic()) res.push_back(f);
            }
        }
    }
    std::sort(res.begin(), res.end(), detail::coefficient_index_less);
    return res;
}

/*
    greatest common left divisor by the right-division Euclidean chain; the monic result right-divides
    every input; a chain that meets a non-unit leading coefficient is rejected
*/
inline SkewPoly gcld(const std::vector<SkewPoly>& polys) {
    std::vector<SkewPoly> nz;
    for (const auto& p : polys)
        if (!p.is_zero()) nz.push_back(p);
    if (nz.empty()) throw Error(ErrorKind::ZeroPolynomial, "gcld of zero polynomials");
    SkewPoly a = nz[0];
    for (size_t i = 1; i < nz.size(); ++i) {
        SkewPoly b = nz[i];
        while (!b.is_zero()) {
            require_unit_lead(b);
            SkewPoly r = skew_right_divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
    }
    require_unit_lead(a);
    return left_scale(unit_inverse(a.lead()), a);
}

inline SkewPoly gcld(const std::vector<SkewPoly>& polys, size_t s, const UnitConstant& lambda) {
    std::vector<SkewPoly> all(polys);
    all.push_back(skew_modulus(s, lambda));
    return gcld(all);
}

/* section: skew shifts on R^n */

/* sigma_{theta,lambda}(c) = (theta(lambda c_{n-1}), theta(c_0), ..., theta(c_{n-2})) */
inline RVector sigma_theta_lambda(const RVector& c, const RingElement& lambda) {
    RVector r = nu(c, lambda);
    for (auto& e : r) e = theta(e);
    return r;
}

inline RVector sigma_theta(const RVector& c) { return sigma_theta_lambda(c, RingElement(1)); }

/* nabla_{theta,lambda,l}: theta applied entrywise after the quasi-constacyclic section shift */
inline RVector nabla_theta(const RVector& c, const RingElement& lambda, size_t s, size_t l) {
    RVector r = nabla(c, lambda, s, l);
    for (auto& e : r) e = theta(e);
    return r;
}

inline RVector tau_theta(const RVector& c, size_t s, size_t l) { return nabla_theta(c, RingElement(1), s, l); }

/*
    left multiplication by x in the left module R[x,theta] / R[x,theta](x^s - lambda), written on
    section vectors: the wrapped section becomes theta(e) lambda (equal to nabla_theta when
    theta(lambda) = lambda)
*/
inline RVector left_x_action(const RVector& c, const RingElement& lambda, size_t s, size_t l) {
    check_sections(c.size(), s, l);
    RVector r(c.size());
    for (size_t j = 0; j < l; ++j) r[j] = theta(c[(s - 1) * l + j]) * lambda;
    for (size_t i = l; i < c.size(); ++i) r[i] = theta(c[i - l]);
    return r;
}

/* lifts an operator on R^n to Gray coordinates */
inline GrayOperator gray_lift(std::function<RVector(const RVector&)> op) {
    return [op](const TernaryVector& y) { return gray_vector(op(gray_vector_inverse(y))); };
}

/* section: module vectors */

/* e -> (e_0(x), ..., e_{l-1}(x)) with e_j(x) = sum_i e_{i,j} x^i */
inline std::vector<SkewPoly> to_module_vector(const RVector& e, size_t s, size_t l) {
    check_sections(e.size(), s, l);
    std::vector<SkewPoly> res;
    for (size_t j = 0; j < l; ++j) {
        std::vector<RingElement> v(s);
        for (size_t i = 0; i < s; ++i) v[i] = e[i * l + j];
        res.emplace_back(std::move(v));
    }
    return res;
}

inline RVector from_module_vector(const std::vector<SkewPoly>& polys, size_t s) {
    const size_t l = polys.size();
    RVector e(s * l);
    for (size_t j = 0; j < l; ++j) {
        if (polys[j].degree() >= long(s)) throw Error(ErrorKind::LengthMismatch, "module coordinate has degree >= s");
        for (size_t i = 0; i < s; ++i) e[i * l + j] = polys[j][i];
    }
    return e;
}

/* section: Hermitian form */

/*
    sum_j a_j(x) Omega(b_j(x)) in R[x,theta] / (x^s - lambda) with the conjugation Omega(c x^m) = theta^m(c) x^{s-m};
    a product term a_i x^i theta^m(c_m) x^{s-m} lands at E = i + s - m and is folded as:
      E < s : a_i theta^i(theta^m(c_m)) x^E
      E = s : a_i theta^i(theta^m(c_m))
      E > s : a_i theta^i(theta^m(c_m) theta(lambda)) x^{E-s}
    the form vanishes iff nabla_{theta,lambda,l}^k(e) . c = 0 for every k = 0, ..., s-1
*/
inline SkewPoly hermitian_inner_product(const std::vector<SkewPoly>& a, const std::vector<SkewPoly>& b, size_t s,
                                        const UnitConstant& lambda) {
    if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "module vectors of different length");
    if (s % 2 != 0) throw Error(ErrorKind::OddS, "the Hermitian form needs an even number of sections");
    const RingElement tl = theta(lambda.value());
    std::vector<RingElement> res(s);
    for (size_t j = 0; j < a.size(); ++j) {
        if (a[j].degree() >= long(s) || b[j].degree() >= long(s))
            throw Error(ErrorKind::LengthMismatch, "module coordinate has degree >= s");
        for (size_t i = 0; i < s; ++i) {
            if (a[j][i].is_zero()) continue;
            for (size_t m = 0; m < s; ++m) {
                const RingElement cm = theta_pow(b[j][m], long(m));
                if (cm.is_zero()) continue;
                const size_t e = i + s - m;
                if (e < s)
                    res[e] += a[j][i] * theta_pow(cm, long(i));
                else if (e == s)
                    res[0] += a[j][i] * theta_pow(cm, long(i));
                else
                    res[e - s] += a[j][i] * theta_pow(cm * tl, long(i));
            }
        }
    }
    return SkewPoly(std::move(res));
}

/* the arbiter: nabla_{theta,lambda,l}^k(e) . c = 0 for k = 0, ..., s-1 */
inline bool all_shift_orthogonal(const RVector& e, const RVector& c, const UnitConstant& lambda, size_t s, size_t l) {
    RVector cur = e;
    for (size_t k = 0; k < s; ++k) {
        if (!inner_product(cur, c).is_zero()) return false;
        cur = nabla_theta(cur, lambda.value(), s, l);
    }
    return true;
}

/* section: skew codes */

/*
    SkewModuleCode: a submodule of R^n closed under R-scalars and sigma_{theta,lambda}, held as a GrayModule
*/
class SkewModuleCode {
   public:
    SkewModuleCode(size_t n, const UnitConstant& lambda, std::vector<SkewPoly> generators, GrayModule module)
        : n_(n), lambda_(lambda), generators_(std::move(generators)), module_(std::move(module)) {}

    size_t n() const noexcept { return n_; }
    const UnitConstant& lambda() const noexcept { return lambda_; }
    const std::vector<SkewPoly>& generators() const noexcept { return generators_; }
    const GrayModule& module() const noexcept { return module_; }
    size_t gray_dim() const noexcept { return module_.dim(); }

    /* R-free rank when the three Gray components have equal dimension */
    std::optional<size_t> free_rank() const {
        const auto r = module_.component_ranks();
        if (r[0] == r[1] && r[1] == r[2] && r[0] + r[1] + r[2] == module_.dim()) return r[0];
        return std::nullopt;
    }

    bool is_sigma_theta_closed() const {
        const RingElement l = lambda_.value();
        return module_.is_closed_under(gray_lift([l](const RVector& x) { return sigma_theta_lambda(x, l); }));
    }
    bool is_sigma_closed() const { return module_.is_closed_under(gray_phi); }

   private:
    size_t n_;
    UnitConstant lambda_;
    std::vector<SkewPoly> generators_;
    GrayModule module_;
};

/* the R-span of the generators closed under sigma_{theta,lambda} */
inline SkewModuleCode skew_module_from_vectors(size_t n, const UnitConstant& lambda, const std::vector<RVector>& gens) {
    const RingElement l = lambda.value();
    return SkewModuleCode(n, lambda, {},
                          GrayModule::from_rvectors(n, gens, {gray_lift([l](const RVector& x) { return sigma_theta_lambda(x, l); })}));
}

/* a GrayModule taken as is (no shift closure imposed); used for witnesses */
inline SkewModuleCode skew_module_from_gray(const GrayModule& m, const UnitConstant& lambda = UnitConstant()) {
    return SkewModuleCode(m.n(), lambda, {}, m);
}

/* code generated by a monic right divisor f of x^n - lambda: basis f, x f, ..., x^{n - deg f - 1} f */
inline SkewModuleCode skew_cyclic_code(const SkewPoly& f, size_t n, const UnitConstant& lambda = UnitConstant()) {
    if (f.is_zero() || !f.is_monic() || f.degree() > long(n) || !is_right_divisor(f, n, lambda))
        throw Error(ErrorKind::NotRightDivisor, to_string(f) + " is not a monic right divisor of x^" + std::to_string(n) + "-" +
                                                    to_string(lambda.value()));
    std::vector<RVector> gens;
    for (size_t i = 0; i + size_t(f.degree()) < n; ++i) {
        const SkewPoly g = skew_mul(SkewPoly::monomial(i), f);
        RVector x(n);
        for (size_t j = 0; j < n; ++j) x[j] = g[j];
        gens.push_back(std::move(x));
    }
    const RingElement l = lambda.value();
    const auto op = gray_lift([l, n](const RVector& x) { return left_x_action(x, l, n, 1); });
    return SkewModuleCode(n, lambda, {f}, GrayModule::from_rvectors(n, gens, {op}));
}

/* prod (s_i + 1)^3 over the irreducible factorization x^n - 1 = prod p_i^{s_i}, n odd */
inline boost::multiprecision::cpp_int count_skew_cyclic_formula(size_t n) {
    boost::multiprecision::cpp_int count = 1;
    for (const auto& [p, m] : factor(modulus(n, ModulusSign::plus)).factors) {
        const boost::multiprecision::cpp_int t = m + 1;
        count *= t * t * t;
    }
    return count;
}

inline boost::multiprecision::cpp_int count_skew_cyclic(size_t n) {
    if (n % 2 == 0) throw Error(ErrorKind::EvenLength, "the skew cyclic count is stated for odd length");
    return count_skew_cyclic_formula(n);
}

/* a sigma_theta-closed module of odd length is also closed under the plain cyclic shift */
inline bool odd_equivalence_check(const SkewModuleCode& code) { return code.is_sigma_closed(); }

/*
    SkewQCModule: the left submodule of (R[x,theta]/(x^s - lambda))^l generated by one vector f
*/
class SkewQCModule {
   public:
    SkewQCModule(size_t s, size_t l, const UnitConstant& lambda, std::vector<SkewPoly> f, GrayModule module,
                 std::optional<SkewPoly> g)
        : s_(s), l_(l), lambda_(lambda), f_(std::move(f)), module_(std::move(module)), gcld_(std::move(g)) {}

    size_t s() const noexcept { return s_; }
    size_t l() const noexcept { return l_; }
    const UnitConstant& lambda() const noexcept { return lambda_; }
    const std::vector<SkewPoly>& generator() const noexcept { return f_; }
    const GrayModule& module() const noexcept { return module_; }
    size_t gray_dim() const noexcept { return module_.dim(); }

    /* gcld(f_1, ..., f_l, x^s - lambda), absent when the Euclidean chain meets a non-unit */
    const std::optional<SkewPoly>& gcld_poly() const noexcept { return gcld_; }
    std::optional<size_t> predicted_gray_dim() const {
        if (!gcld_) return std::nullopt;
        return 3 * (s_ - size_t(gcld_->degree()));
    }

    bool is_nabla_closed() const {
        const RingElement lam = lambda_.value();
        const size_t s = s_, l = l_;
        return module_.is_closed_under(gray_lift([lam, s, l](const RVector& x) { return nabla_theta(x, lam, s, l); }));
    }

   private:
    size_t s_, l_;
    UnitConstant lambda_;
    std::vector<SkewPoly> f_;
    GrayModule module_;
    std::optional<SkewPoly> gcld_;
};

inline SkewQCModule one_generator_sqc(const std::vector<SkewPoly>& f, size_t s, size_t l, const UnitConstant& lambda) {
    if (s % 2 != 0) throw Error(ErrorKind::OddS, "skew quasi-constacyclic modules need even s");
    if (f.size() != l) throw Error(ErrorKind::LengthMismatch, "generator vector must have l entries");
    const SkewPoly m = skew_modulus(s, lambda);
    std::vector<SkewPoly> reduced;
    for (const auto& fi : f) {
        if (fi.is_zero() || !fi.is_monic() || fi.degree() > long(s) || !skew_right_divmod(m, fi).second.is_zero())
            throw Error(ErrorKind::NotRightDivisor,
                        to_string(fi) + " is not a monic right divisor of x^" + std::to_string(s) + "-" + to_string(lambda.value()));
        reduced.push_back(skew_right_divmod(fi, m).second);
    }
    const RingElement lam = lambda.value();
    const auto op = gray_lift([lam, s, l](const RVector& x) { return left_x_action(x, lam, s, l); });
    GrayModule module = GrayModule::from_rvectors(s * l, {from_module_vector(reduced, s)}, {op});
    std::optional<SkewPoly> g;
    try {
        g = gcld(f, s, lambda);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonUnitLeadingCoefficient) throw;
    }
    return SkewQCModule(s, l, lambda, f, std::move(module), std::move(g));
}

}  // namespace rcodes

#endif
