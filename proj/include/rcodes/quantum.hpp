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

#ifndef RCODES_QUANTUM_HPP
#define RCODES_QUANTUM_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "poly.hpp"
#include "rcode.hpp"
#include "ternary_code.hpp"

namespace rcodes {

/*
    QuantumParams: [[N, K, d]] with N = 3n, K = 2(k1+k2+k3) - 3n and d the Lee distance of the classical code
*/
struct QuantumParams {
    size_t N = 0;
    long K = 0;
    size_t d = 0;
    bool operator==(const QuantumParams& rhs) const noexcept = default;
};

inline std::string to_string(const QuantumParams& q) {
    return "[[" + std::to_string(q.N) + "," + std::to_string(q.K) + "," + std::to_string(q.d) + "]]";
}

/* indices (1-based) of the components that do not contain their dual */
inline std::vector<size_t> non_dual_containing_components(const RCode& c) {
    std::vector<size_t> bad;
    for (size_t i = 0; i < 3; ++i)
        if (!contains_dual(c.component(i))) bad.push_back(i + 1);
    return bad;
}

/* CSS parameters of a dual-containing code; with check = false the containment test is skipped */
inline QuantumParams css_params(const RCode& c, bool check = true, unsigned threads = 1) {
    if (check) {
        const auto bad = non_dual_containing_components(c);
        if (!bad.empty()) {
            std::string which;
            for (auto i : bad) which += (which.empty() ? "" : ", ") + std::to_string(i);
            throw Error(ErrorKind::NotDualContaining, "component(s) " + which + " do not contain their dual");
        }
    }
    QuantumParams q;
    q.N = 3 * c.n();
    q.K = 2 * long(c.cardinality_log3()) - long(q.N);
    q.d = lee_distance(c, threads);
    return q;
}

/* section: scans */

struct ScanRow {
    std::array<Z3Poly, 3> f;
    std::array<size_t, 3> k;
    QuantumParams params;
};

/*
    every triple (up to ordering) of dual-containing divisors of the modulus, with its parameters;
    sorted by K descending, then d descending, then by divisor order
*/
inline std::vector<ScanRow> scan_dual_containing(size_t n, ModulusSign sign, unsigned threads = 1) {
    std::vector<TernaryPolyCode> good;
    for (const auto& g : divisors_of_modulus(n, sign)) {
        const auto c = make_code(n, sign, g);
        if (contains_dual(c)) good.push_back(c);
    }
    /* component distances, computed in parallel over the candidate list */
    std::vector<size_t> dist(good.size());
    if (threads <= 1) {
        for (size_t i = 0; i < good.size(); ++i) dist[i] = min_distance(good[i]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < threads; ++id)
            pool.emplace_back([&, id]() {
                for (size_t i = id; i < good.size(); i += threads) dist[i] = min_distance(good[i]);
            });
        for (auto& t : pool) t.join();
    }
    struct Keyed {
        ScanRow row;
        std::array<size_t, 3> idx;
    };
    std::vector<Keyed> rows;
    for (size_t a = 0; a < good.size(); ++a)
        for (size_t b = a; b < good.size(); ++b)
            for (size_t c = b; c < good.size(); ++c) {
                ScanRow r;
                r.f = {good[a].generator(), good[b].generator(), good[c].generator()};
                r.k = {good[a].k(), good[b].k(), good[c].k()};
                r.params.N = 3 * n;
                r.params.K = 2 * long(r.k[0] + r.k[1] + r.k[2]) - long(3 * n);
                r.params.d = std::min({dist[a], dist[b], dist[c]});
                rows.push_back({r, {a, b, c}});
            }
    std::stable_sort(rows.begin(), rows.end(), [](const Keyed& x, const Keyed& y) {
        if (x.row.params.K != y.row.params.K) return x.row.params.K > y.row.params.K;
        if (x.row.params.d != y.row.params.d) return x.row.params.d > y.row.params.d;
        return x.idx < y.idx;
    });
    std::vector<ScanRow> res;
    for (auto& r : rows) res.push_back(std::move(r.row));
    return res;
}

/* section: reference table */

enum class TableStatus { pass, flag, fail };

inline const char* to_string(TableStatus s) noexcept {
    switch (s) {
        case TableStatus::pass:
            return "pass";
        case TableStatus::flag:
            return "flag";
        default:
            return "fail";
    }
}

struct TableEntry {
    std::string label;
    size_t n;
    ModulusSign sign;
    std::array<Z3Poly, 3> f;
    QuantumParams claimed;
    bool expect_dual_containing;
};

struct TableResult {
    TableEntry entry;
    std::optional<QuantumParams> computed;
    bool dual_containing = false;
    std::vector<size_t> failing_components;
    TableStatus status = TableStatus::fail;
    std::string note;
};

/* the eight published quantum codes (seven reproducible, one failing the dual-containment criterion) */
inline std::vector<TableEntry> reference_table() {
    const auto p = [](const char* s) { return parse_z3poly(s); };
    const auto plus = ModulusSign::plus, minus = ModulusSign::minus;
    return {
        {"cyclic n=6", 6, plus, {p("x^2+2"), p("x^2+2"), monic(p("2x^2+1"))}, {18, 6, 2}, true},
        {"cyclic n=12", 12, plus, {p("x^3+x^2+x+1"), p("x^3+x^2+x+1"), p("x^3+x^2+x+1")}, {36, 18, 2}, true},
        {"cyclic n=27", 27, plus, {p("x^6-2x^3+1"), p("x^6-2x^3+1"), p("x^6-2x^3+1")}, {81, 45, 2}, true},
        {"cyclic n=30", 30, plus, {p("x^4+x^3+x^2+x+1"), p("x^4+2x^3+x^2+2x+1"), p("x^4+x^3+x^2+x+1")}, {90, 66, 2}, true},
        {"negacyclic n=3", 3, minus, {p("x+1"), p("x+1"), p("x+1")}, {9, 3, 2}, true},
        {"negacyclic n=10", 10, minus, {p("x^4+x^3+2x+1"), p("x^4+2x^3+x+1"), p("x^4+2x^3+x+1")}, {30, 6, 4}, true},
        {"negacyclic n=12", 12, minus, {p("x^2+x+2"), monic(p("2x^2+x+1")), p("x^2+2x+2")}, {36, 24, 2}, true},
        {"cyclic n=8", 8, plus, {p("x^2+1"), p("x^2+1"), p("x^2+1")}, {24, 12, 2}, false},
    };
}

/* evaluates every reference entry; an expected containment failure is a flag, any other mismatch a fail */
inline std::vector<TableResult> verify_reference_table(unsigned threads = 1) {
    std::vector<TableResult> out;
    for (const auto& e : reference_table()) {
        TableResult r;
        r.entry = e;
        const RCode c = make_rcode(e.n, e.sign, e.f[0], e.f[1], e.f[2]);
        r.failing_components = non_dual_containing_components(c);
        r.dual_containing = r.failing_components.empty();
        r.computed = css_params(c, false, threads);
        if (r.dual_containing) {
            r.status = (*r.computed == e.claimed && e.expect_dual_containing) ? TableStatus::pass : TableStatus::fail;
            if (r.status == TableStatus::fail) r.note = "computed " + to_string(*r.computed) + " differs from " + to_string(e.claimed);
        } else {
            r.status = e.expect_dual_containing ? TableStatus::fail : TableStatus::flag;
            r.note = "NotDualContaining: f f* does not divide " + modulus_string(e.n, e.sign) + "; claimed " +
                     to_string(e.claimed) + " is not a valid CSS code";
            r.computed.reset();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace rcodes

#endif
