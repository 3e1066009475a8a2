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

#include <algorithm>
#include <cmath>

#include <rcodes/quantum.hpp>

using namespace rcodes;

namespace {

Z3Poly P(const char* s) { return parse_z3poly(s); }

constexpr auto plus = ModulusSign::plus;
constexpr auto minus = ModulusSign::minus;

bool scan_contains(const std::vector<ScanRow>& rows, const std::array<Z3Poly, 3>& f, const QuantumParams& q) {
    return std::any_of(rows.begin(), rows.end(), [&](const ScanRow& r) { return r.f == f && r.params == q; });
}

/* brute-force distance of a subspace given by generator rows (oracle; small dimension only) */
size_t brute_distance(const TernaryMatrix& gens, size_t ncols) {
    std::vector<TernaryVector> words{TernaryVector(ncols)};
    size_t best = ncols;
    for (const auto& row : gens) {
        std::vector<TernaryVector> next;
        for (const auto& w : words)
            for (int s = 0; s < 3; ++s) {
                auto x = w;
                axpy(x, s, row);
                if (!is_zero_vector(x)) best = std::min(best, hamming_weight(x));
                next.push_back(x);
            }
        words = std::move(next);
    }
    return best;
}

}  // namespace

TEST(CssParams, Examples) {
    EXPECT_EQ(to_string(css_params(make_rcode(6, plus, P("x^2+2"), P("x^2+2"), monic(P("2x^2+1"))))), "[[18,6,2]]");
    EXPECT_EQ(to_string(css_params(make_rcode(10, minus, P("x^4+x^3+2x+1"), P("x^4+2x^3+x+1"), P("x^4+2x^3+x+1")))),
              "[[30,6,4]]");
    try {
        css_params(make_rcode(8, plus, P("x^2+1"), P("x^2+1"), P("x^2+1")));
        FAIL() << "expected NotDualContaining";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotDualContaining);
        EXPECT_NE(std::string(e.what()).find("1, 2, 3"), std::string::npos);
    }
    /* with the check disabled the arithmetic still runs */
    EXPECT_EQ(css_params(make_rcode(8, plus, P("x^2+1"), P("x^2+1"), P("x^2+1")), false).K, 12);
}

TEST(Scan, Examples) {
    const auto neg3 = scan_dual_containing(3, minus);
    EXPECT_TRUE(scan_contains(neg3, {P("x+1"), P("x+1"), P("x+1")}, {9, 3, 2}));
    const auto cyc12 = scan_dual_containing(12, plus, 4);
    EXPECT_TRUE(scan_contains(cyc12, {P("x^3+x^2+x+1"), P("x^3+x^2+x+1"), P("x^3+x^2+x+1")}, {36, 18, 2}));
    const auto cyc1 = scan_dual_containing(1, plus);
    ASSERT_FALSE(cyc1.empty());
    EXPECT_TRUE(scan_contains(cyc1, {P("1"), P("1"), P("1")}, {3, 3, 1}));
}

TEST(Scan, SortedAndDeterministic) {
    const auto a = scan_dual_containing(12, plus, 1), b = scan_dual_containing(12, plus, 3);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].f, b[i].f);
        EXPECT_EQ(a[i].params, b[i].params);
        if (i > 0) {
            EXPECT_TRUE(a[i - 1].params.K > a[i].params.K ||
                        (a[i - 1].params.K == a[i].params.K && a[i - 1].params.d >= a[i].params.d));
        }
    }
}

TEST(Scan, RowsAreDualContainingAndConsistent) {
    for (size_t n = 1; n <= 12; ++n)
        for (auto sign : {plus, minus})
            for (const auto& row : scan_dual_containing(n, sign)) {
                const auto c = make_rcode(n, sign, row.f[0], row.f[1], row.f[2]);
                EXPECT_TRUE(non_dual_containing_components(c).empty());
                EXPECT_EQ(css_params(c), row.params);
                /* K = log3 |C| - log3 |C^perp| */
                EXPECT_EQ(row.params.K, long(c.cardinality_log3()) - long(dual(c).cardinality_log3()));
                EXPECT_EQ(row.params.N, 3 * n);
                if (c.cardinality_log3() <= 10) {
                    EXPECT_EQ(row.params.d, brute_distance(gray_image(c), 3 * n));
                }
            }
}

TEST(ReferenceTable, ReproducesAndFlags) {
    const auto results = verify_reference_table(2);
    ASSERT_EQ(results.size(), 8u);
    size_t pass = 0, flag = 0;
    for (const auto& r : results) {
        if (r.status == TableStatus::pass) {
            ++pass;
            ASSERT_TRUE(r.computed.has_value());
            EXPECT_EQ(*r.computed, r.entry.claimed) << r.entry.label;
        } else if (r.status == TableStatus::flag) {
            ++flag;
            EXPECT_EQ(r.entry.n, 8u);
            EXPECT_FALSE(r.dual_containing);
            EXPECT_EQ(r.failing_components, (std::vector<size_t>{1, 2, 3}));
            EXPECT_NE(r.note.find("x^8-1"), std::string::npos);
        } else {
            ADD_FAILURE() << r.entry.label << ": " << r.note;
        }
    }
    EXPECT_EQ(pass, 7u);
    EXPECT_EQ(flag, 1u);
}
