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

#ifndef RCODES_RING_HPP
#define RCODES_RING_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "error.hpp"

namespace rcodes {

/*
    Trit: an element of GF(3) = {0, 1, 2}
*/
class Trit {
   public:
    /* constructors */
    constexpr Trit() noexcept : v(0) {}
    constexpr Trit(int x) noexcept : v(static_cast<uint8_t>(((x % 3) + 3) % 3)) {}

    /* getters */
    constexpr uint8_t value() const noexcept { return v; }
    constexpr bool is_zero() const noexcept { return v == 0; }
    constexpr explicit operator int() const noexcept { return v; }

    /* field operations */
    constexpr Trit operator+(Trit rhs) const noexcept { return Trit(v + rhs.v); }
    constexpr Trit operator-(Trit rhs) const noexcept { return Trit(v + 3 - rhs.v); }
    constexpr Trit operator-() const noexcept { return Trit(3 - v); }
    constexpr Trit operator*(Trit rhs) const noexcept { return Trit(v * rhs.v); }
    constexpr Trit& operator+=(Trit rhs) noexcept { return *this = *this + rhs; }
    constexpr Trit& operator-=(Trit rhs) noexcept { return *this = *this - rhs; }
    constexpr Trit& operator*=(Trit rhs) noexcept { return *this = *this * rhs; }

    /* 1 and 2 are their own inverses */
    Trit inverse() const {
        if (v == 0) throw Error(ErrorKind::NotAUnit, "0 has no inverse in GF(3)");
        return *this;
    }

    constexpr bool operator==(const Trit& rhs) const noexcept = default;
    constexpr auto operator<=>(const Trit& rhs) const noexcept = default;

   private:
    uint8_t v;
};

inline std::ostream& operator<<(std::ostream& os, Trit t) { return os << int(t.value()); }

using TritTriple = std::array<Trit, 3>;

/*
    RingElement: a + v b + v^2 c in R = Z3 + v Z3 + v^2 Z3 with v^3 = v
*/
class RingElement {
   public:
    /* constructors */
    constexpr RingElement() noexcept = default;
    constexpr RingElement(Trit a, Trit b = 0, Trit c = 0) noexcept : a_(a), b_(b), c_(c) {}
    constexpr RingElement(int a) noexcept : a_(a) {}

    /* getters */
    constexpr Trit a() const noexcept { return a_; }
    constexpr Trit b() const noexcept { return b_; }
    constexpr Trit c() const noexcept { return c_; }
    constexpr bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero() && c_.is_zero(); }

    /* index in 0..26 (a + 3b + 9c), used for enumeration and tables */
    constexpr int index() const noexcept { return a_.value() + 3 * b_.value() + 9 * c_.value(); }
    static constexpr RingElement from_index(int i) noexcept { return RingElement(i % 3, (i / 3) % 3, (i / 9) % 3); }

    /* ring operations */
    constexpr RingElement operator+(const RingElement& y) const noexcept {
        return RingElement(a_ + y.a_, b_ + y.b_, c_ + y.c_);
    }
    constexpr RingElement operator-(const RingElement& y) const noexcept {
        return RingElement(a_ - y.a_, b_ - y.b_, c_ - y.c_);
    }
    constexpr RingElement operator-() const noexcept { return RingElement(-a_, -b_, -c_); }
    /* x.y = a1a2 + v(a1b2+b1a2+b1c2+c1b2) + v^2(a1c2+b1b2+c1a2+c1c2) */
    constexpr RingElement operator*(const RingElement& y) const noexcept {
        return RingElement(a_ * y.a_, a_ * y.b_ + b_ * y.a_ + b_ * y.c_ + c_ * y.b_,
                           a_ * y.c_ + b_ * y.b_ + c_ * y.a_ + c_ * y.c_);
    }
    constexpr RingElement& operator+=(const RingElement& y) noexcept { return *this = *this + y; }
    constexpr RingElement& operator-=(const RingElement& y) noexcept { return *this = *this - y; }
    constexpr RingElement& operator*=(const RingElement& y) noexcept { return *this = *this * y; }

    constexpr bool operator==(const RingElement& rhs) const noexcept = default;
    constexpr auto operator<=>(const RingElement& rhs) const noexcept = default;

   private:
    Trit a_, b_, c_;
};

/* section: distinguished elements */

inline constexpr RingElement ring_v() noexcept { return RingElement(0, 1, 0); }
inline constexpr RingElement ring_v2() noexcept { return RingElement(0, 0, 1); }

/* orthogonal idempotents 1+2v^2, 2v+2v^2, v+2v^2 */
inline constexpr RingElement idempotent(int i) noexcept {
    switch (i) {
        case 0:
            return RingElement(1, 0, 2);
        case 1:
            return RingElement(0, 2, 2);
        default:
            return RingElement(0, 1, 2);
    }
}

/* section: Gray / CRT coordinates */

/* gray(a+vb+v^2c) = (a, a+b+c, a+2b+c) */
inline constexpr TritTriple gray(const RingElement& x) noexcept {
    return TritTriple{x.a(), x.a() + x.b() + x.c(), x.a() + Trit(2) * x.b() + x.c()};
}

/* inverse of the linear bijection above: b = t2 - t1, c = 2 t1 - t0 - t2 */
inline constexpr RingElement gray_inverse(const TritTriple& t) noexcept {
    return RingElement(t[0], t[2] - t[1], Trit(2) * t[1] - t[0] - t[2]);
}

/* the order-2 automorphism a+vb+v^2c -> a+2vb+v^2c */
inline constexpr RingElement theta(const RingElement& x) noexcept { return RingElement(x.a(), -x.b(), x.c()); }

/* theta^k, theta has order 2 */
inline constexpr RingElement theta_pow(const RingElement& x, long k) noexcept { return (k % 2 == 0) ? x : theta(x); }

/* Lee weight := Hamming weight of the Gray image */
inline constexpr int lee_weight(const RingElement& x) noexcept {
    const auto t = gray(x);
    return int(!t[0].is_zero()) + int(!t[1].is_zero()) + int(!t[2].is_zero());
}

inline constexpr bool is_unit(const RingElement& x) noexcept { return lee_weight(x) == 3; }

inline RingElement unit_inverse(const RingElement& x) {
    if (!is_unit(x)) throw Error(ErrorKind::NotAUnit, "element has a zero Gray coordinate");
    const auto t = gray(x);
    return gray_inverse({t[0].inverse(), t[1].inverse(), t[2].inverse()});
}

/* section: enumeration */

inline std::vector<RingElement> all_elements() {
    std::vector<RingElement> res;
    res.reserve(27);
    for (int i = 0; i < 27; ++i) res.push_back(RingElement::from_index(i));
    return res;
}

inline std::vector<RingElement> units() {
    std::vector<RingElement> res;
    for (const auto& x : all_elements())
        if (is_unit(x)) res.push_back(x);
    return res;
}

/*
    all ideals of R: every additive subgroup of R is a GF(3)-subspace spanned by at most three
    elements; enumerate them all and keep those closed under multiplication by R
*/
inline std::vector<std::vector<RingElement>> ideals() {
    const auto elems = all_elements();
    auto additive_span = [&](const std::vector<RingElement>& gens) {
        std::vector<bool> in(27, false);
        in[0] = true;
        std::vector<RingElement> set{RingElement()};
        for (size_t i = 0; i < set.size(); ++i) {
            for (const auto& g : gens) {
                const auto y = set[i] + g;
                if (!in[y.index()]) {
                    in[y.index()] = true;
                    set.push_back(y);
                }
            }
        }
        return in;
    };
    std::vector<std::vector<bool>> subgroups;
    for (int i = 0; i < 27; ++i)
        for (int j = i; j < 27; ++j)
            for (int k = j; k < 27; ++k) {
                const auto in = additive_span({elems[i], elems[j], elems[k]});
                if (std::find(subgroups.begin(), subgroups.end(), in) == subgroups.end()) subgroups.push_back(in);
            }
    std::vector<std::vector<RingElement>> res;
    for (const auto& in : subgroups) {
        bool closed = true;
        for (int i = 0; i < 27 && closed; ++i)
            if (in[i])
                for (const auto& r : elems) closed = closed && in[(r * elems[i]).index()];
        if (!closed) continue;
        std::vector<RingElement> ideal;
        for (int i = 0; i < 27; ++i)
            if (in[i]) ideal.push_back(elems[i]);
        res.push_back(ideal);
    }
    std::sort(res.begin(), res.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return res;
}

/* section: text */

/* renders as "1+2v+2v^2", omitting zero terms; "0" for zero */
inline std::string to_string(const RingElement& x) {
    if (x.is_zero()) return "0";
    std::string s;
    auto append = [&](Trit c, const char* mono) {
        if (c.is_zero()) return;
        if (!s.empty()) s += "+";
        if (c.value() == 2 || mono[0] == '\0') s += std::to_string(c.value());
        s += mono;
    };
    append(x.a(), "");
    append(x.b(), "v");
    append(x.c(), "v^2");
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << to_string(x); }

namespace detail {

/* strips all whitespace */
inline std::string compact(const std::string& text) {
    std::string res;
    for (char ch : text)
        if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') res += ch;
    return res;
}

inline bool is_digit(char ch) noexcept { return ch >= '0' && ch <= '9'; }

/* reads a decimal integer at pos; returns -1 if there is none */
inline long read_number(const std::string& s, size_t& pos) {
    if (pos >= s.size() || !is_digit(s[pos])) return -1;
    long val = 0;
    while (pos < s.size() && is_digit(s[pos])) {
        val = val * 10 + (s[pos] - '0');
        if (val > 1000000) throw ParseError("number too large in '" + s + "'");
        ++pos;
    }
    return val;
}

/* reads an exponent after '^' (or the superscript two); default 1 */
inline long read_exponent(const std::string& s, size_t& pos) {
    if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const long e = read_number(s, pos);
        if (e < 0) throw ParseError("missing exponent in '" + s + "'");
        return e;
    }
    if (s.compare(pos, 2, "\xC2\xB2") == 0) {  // UTF-8 superscript two
        pos += 2;
        return 2;
    }
    return 1;
}

/*
    reads one ring monomial "d", "dv", "dv^k" (coefficient may be omitted before v) at pos;
    returns false if nothing could be read
*/
inline bool read_ring_monomial(const std::string& s, size_t& pos, RingElement& out) {
    const size_t start = pos;
    const long d = read_number(s, pos);
    if (pos < s.size() && s[pos] == 'v') {
        ++pos;
        const long k = read_exponent(s, pos);
        const Trit coeff = (d < 0) ? Trit(1) : Trit(int(d % 3));
        if (k == 0)
            out = RingElement(coeff);
        else if (k % 2 == 1)  // v^odd = v
            out = RingElement(0, coeff, 0);
        else  // v^even = v^2
            out = RingElement(0, 0, coeff);
        return true;
    }
    if (d < 0) {
        pos = start;
        return false;
    }
    out = RingElement(Trit(int(d % 3)));
    return true;
}

}  // namespace detail

/* grammar: term ("+" term)* with term in {d, dv, dv^2}; a leading or inner "-" negates a term */
inline RingElement parse_element(const std::string& text) {
    const std::string s = detail::compact(text);
    if (s.empty()) throw ParseError("empty ring element");
    RingElement acc;
    size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        bool negate = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negate = (s[pos] == '-');
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in ring element '" + text + "'");
        }
        RingElement term;
        if (!detail::read_ring_monomial(s, pos, term)) throw ParseError("bad ring element '" + text + "'");
        acc += negate ? -term : term;
        first = false;
    }
    return acc;
}

}  // namespace rcodes

#endif
