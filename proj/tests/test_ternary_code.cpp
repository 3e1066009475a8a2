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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <rcodes/ternary_code.hpp>

using namespace rcodes;

namespace {

Z3Poly P(const char* s) { return parse_z3poly(s); }

constexpr auto plus = ModulusSign::plus;
constexpr auto minus = ModulusSign::minus;

std::vector<TernaryPolyCode> all_small_codes(size_t max_n) {
    std::vector<TernaryPolyCode> res;
    for (size_t n = 1; n <= max_n; ++n)
        for (auto sign : {plus, minus})
            for (const auto& g : divisors_of_modulus(n, sign)) res.emplace_back(n, sign, g);
    return res;
}

/* oracle: brute-force every combination of generator rows */
std::vector<TernaryVector> all_codewords(const TernaryPolyCode& c) {
    std::vector<TernaryVector> words{TernaryVector(c.n())};
    for (const auto& row : c.generator_matrix()) {
        std::vector<TernaryVector> next;
        for (const auto& w : words)
            for (int s = 0; s < 3; ++s) {
                auto x = w;
                axpy(x, s, row);
                next.push_back(x);
            }
        words = std::move(next);
    }
    return words;
}

}  // namespace

/* section: examples */

TEST(MakeCode, Examples) {
    EXPECT_EQ(make_code(6, plus, P("x^2+2")).k(), 4u);
    EXPECT_EQ(make_code(3, minus, P("x+1")).k(), 2u);
    EXPECT_EQ(make_code(3, minus, P("2x+2")).generator(), P("x+1"));
    try {
        make_code(4, plus, P("x^2+x+1"));
        FAIL() << "expected NotADivisor";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotADivisor);
    }
}

TEST(Dual, Examples) {
    const auto d10 = dual(make_code(10, minus, P("x^2+1")));
    EXPECT_EQ(d10.generator(), P("x^8+2x^6+x^4+2x^2+1"));
    EXPECT_EQ(d10.k(), 2u);
    const auto d3 = dual(make_code(3, minus, P("x+1")));
    EXPECT_EQ(d3.generator(), P("x^2+2x+1"));
    EXPECT_EQ(d3.k(), 1u);
    const auto d_full = dual(make_code(5, plus, P("1")));
    EXPECT_EQ(d_full.k(), 0u);
    EXPECT_EQ(d_full, zero_code(5, plus));
}

TEST(ContainsDual, Examples) {
    EXPECT_TRUE(contains_dual(make_code(6, plus, P("x^2+2"))));
    EXPECT_TRUE(contains_dual(make_code(10, minus, P("x^4+x^3+2x+1"))));
    EXPECT_FALSE(contains_dual(make_code(8, plus, P("x^2+1"))));
}

TEST(MinDistance, Examples) {
    EXPECT_EQ(min_distance(make_code(6, plus, P("x^2+2"))), 2u);
    EXPECT_EQ(min_distance(make_code(10, minus, P("x^4+x^3+2x+1"))), 4u);
    EXPECT_EQ(min_distance(make_code(7, minus, P("1"))), 1u);
    try {
        min_distance(zero_code(4, plus));
        FAIL() << "expected ZeroCode";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroCode);
    }
}

TEST(MinDistance, LargeDimensionUsesSearch) {
    /* k = 26 lies beyond the enumeration threshold */
    const auto c = make_code(30, minus, P("x^4+x^3+2x+1"));
    ASSERT_GT(c.k(), enumeration_threshold);
    EXPECT_EQ(min_distance(c, 4), min_distance_search(c, 1));
    EXPECT_EQ(min_distance(c, 1), 2u);
}

TEST(Membership, Examples) {
    const auto c = make_code(6, plus, P("x^2+2"));
    EXPECT_TRUE(membership(c, P("x^2+2").to_vector(6)));
    EXPECT_FALSE(membership(c, TernaryVector{1, 0, 0, 0, 0, 0}));
    EXPECT_TRUE(membership(c, shift(P("x^5+2x^3").to_vector(6), plus)));
    try {
        membership(c, TernaryVector{1, 0});
        FAIL() << "expected LengthMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
    }
}

/* section: properties */

TEST(TernaryCodeProperty, DualDimensionsAndOrthogonality) {
    for (const auto& c : all_small_codes(12)) {
        const auto d = dual(c);
        EXPECT_EQ(c.k() + d.k(), c.n());
        EXPECT_EQ(d.sign(), c.sign());
        for (const auto& r : c.generator_matrix())
            for (const auto& s : d.generator_matrix()) EXPECT_TRUE(dot(r, s).is_zero());
        EXPECT_EQ(rank(c.generator_matrix(), c.n()), c.k());
    }
}

TEST(TernaryCodeProperty, ContainsDualMatchesSubsetCheck) {
    for (const auto& c : all_small_codes(12))
        EXPECT_EQ(contains_dual(c), dual_subset_check(c)) << c.n() << " " << to_string(c.generator());
}

TEST(TernaryCodeProperty, EnumerationAgreesWithSearch) {
    for (const auto& c : all_small_codes(12)) {
        if (c.k() == 0 || c.k() > 8) continue;
        const auto d = min_distance_enumerate(c);
        EXPECT_EQ(d, min_distance_search(c, 1)) << c.n() << " " << to_string(c.generator());
        EXPECT_EQ(d, min_distance_search(c, 3));
        size_t brute = c.n();
        for (const auto& w : all_codewords(c))
            if (!is_zero_vector(w)) brute = std::min(brute, hamming_weight(w));
        EXPECT_EQ(d, brute);
    }
}

TEST(TernaryCodeProperty, ShiftClosure) {
    std::mt19937 rng(5);
    for (const auto& c : all_small_codes(12)) {
        const auto gm = c.generator_matrix();
        for (const auto& r : gm) EXPECT_TRUE(membership(c, shift(r, c.sign())));
        for (int trial = 0; trial < 5 && !gm.empty(); ++trial) {
            TernaryVector w(c.n());
            for (const auto& r : gm) axpy(w, int(rng() % 3), r);
            ASSERT_TRUE(membership(c, w));
            EXPECT_TRUE(membership(c, shift(w, c.sign())));
        }
    }
}

TEST(TernaryCodeProperty, MembershipMatchesSpan) {
    for (const auto& c : all_small_codes(6)) {
        const Subspace span(c.n(), c.generator_matrix());
        for (size_t idx = 0, total = size_t(std::pow(3, c.n())); idx < total; ++idx) {
            TernaryVector w(c.n());
            for (size_t i = 0, t = idx; i < c.n(); ++i, t /= 3) w[i] = int(t % 3);
            EXPECT_EQ(membership(c, w), span.contains(w));
        }
    }
}
