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

/*
    rcodes: command-line front end of the library

    exit status: 0 success (including known, documented discrepancies), 1 domain error, 2 usage error
*/

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <rcodes/rcodes.hpp>

using namespace rcodes;
using json = nlohmann::ordered_json;

namespace {

/* section: plumbing */

/* invalid combination of command-line arguments detected after parsing */
class UsageError : public std::invalid_argument {
   public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

struct CommandResult {
    std::string status = "ok";  // ok | flag | error
    json payload = json::object();
    std::vector<std::string> notes;
    std::vector<std::string> text;  // human-readable view of the payload

    void flag(const std::string& note) {
        status = "flag";
        notes.push_back(note);
    }
};

struct Globals {
    bool json_output = false;
    unsigned long seed = 1;
    unsigned threads = 1;
};

void emit(const CommandResult& r, const Globals& g) {
    if (g.json_output) {
        json out;
        out["status"] = r.status;
        out["payload"] = r.payload;
        out["notes"] = r.notes;
        std::cout << out.dump(2) << "\n";
        return;
    }
    for (const auto& line : r.text) std::cout << line << "\n";
    for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
    if (r.status != "ok") std::cout << "status: " << r.status << "\n";
}

const std::vector<std::string> sign_words{"pos", "neg", "plus", "minus", "cyclic", "negacyclic"};

ModulusSign parse_sign(const std::string& s) {
    if (s == "pos" || s == "plus" || s == "cyclic") return ModulusSign::plus;
    if (s == "neg" || s == "minus" || s == "negacyclic") return ModulusSign::minus;
    throw UsageError("unknown sign '" + s + "'");
}

const char* sign_word(ModulusSign s) { return s == ModulusSign::plus ? "pos" : "neg"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::string trits(const TernaryVector& v) {
    std::string s;
    for (auto t : v) s += char('0' + t.value());
    return s;
}

/* section: code arguments shared by several commands */

struct CodeArgs {
    size_t n = 0;
    std::string sign = "pos";
    std::string lambda;
    std::string f, f1, f2, f3;

    void attach(CLI::App* sub, bool allow_rpoly = true) {
        sub->add_option("--n", n, "code length")->required()->check(CLI::PositiveNumber);
        sub->add_option("--sign", sign, "pos (x^n-1) or neg (x^n+1)")->check(CLI::IsMember(sign_words));
        sub->add_option("--lambda", lambda, "unit lambda for a constacyclic code, e.g. 1+v^2");
        if (allow_rpoly) sub->add_option("--f", f, "generator polynomial over R, e.g. \"(2v+2v^2)x^2+x+1\"");
        sub->add_option("--f1", f1, "generator of the first component (over GF(3))");
        sub->add_option("--f2", f2, "generator of the second component");
        sub->add_option("--f3", f3, "generator of the third component");
    }

    UnitConstant unit() const {
        if (!lambda.empty()) return UnitConstant(parse_element(lambda));
        const Trit m = wrap_multiplier(parse_sign(sign));
        return UnitConstant(gray_inverse({m, m, m}));
    }

    RCode build() const {
        const UnitConstant lam = unit();
        if (!f.empty()) {
            if (!f1.empty() || !f2.empty() || !f3.empty()) throw UsageError("give either --f or --f1/--f2/--f3, not both");
            return decompose_generator(parse_rpoly(f), n, lam);
        }
        if (f1.empty() || f2.empty() || f3.empty()) throw UsageError("a code needs --f or all of --f1, --f2, --f3");
        return make_rcode(n, lam, parse_z3poly(f1), parse_z3poly(f2), parse_z3poly(f3));
    }
};

json code_json(const RCode& c, unsigned threads) {
    json j;
    j["n"] = c.n();
    j["lambda"] = to_string(c.lambda().value());
    j["kind"] = to_string(c.kind());
    j["f1"] = to_string(c.component(0).generator());
    j["f2"] = to_string(c.component(1).generator());
    j["f3"] = to_string(c.component(2).generator());
    j["k"] = c.k();
    j["cardinality_log3"] = c.cardinality_log3();
    if (c.kind() != RCodeKind::constacyclic) {
        j["sign"] = sign_word(c.sign());
        j["generator"] = to_string(combined_generator(c));
    }
    j["d_lee"] = c.is_zero() ? json(nullptr) : json(lee_distance(c, threads));
    return j;
}

std::vector<std::string> code_text(const json& j) {
    std::vector<std::string> t;
    t.push_back("length " + std::to_string(j["n"].get<size_t>()) + ", " + j["kind"].get<std::string>() + " (lambda = " +
                j["lambda"].get<std::string>() + ")");
    t.push_back("components: f1 = " + j["f1"].get<std::string>() + ", f2 = " + j["f2"].get<std::string>() +
                ", f3 = " + j["f3"].get<std::string>());
    const auto k = j["k"];
    t.push_back("dimensions: k = (" + std::to_string(k[0].get<size_t>()) + ", " + std::to_string(k[1].get<size_t>()) + ", " +
                std::to_string(k[2].get<size_t>()) + "), |C| = 3^" + std::to_string(j["cardinality_log3"].get<size_t>()));
    if (j.contains("generator")) t.push_back("generator over R: " + j["generator"].get<std::string>());
    t.push_back("Lee distance: " + (j["d_lee"].is_null() ? std::string("undefined (zero code)") : j["d_lee"].dump()));
    return t;
}

/* section: factor */

CommandResult cmd_factor(size_t n, const std::string& sign_text, const std::string& poly) {
    CommandResult r;
    Z3Poly f;
    std::string name;
    const ModulusSign sign = parse_sign(sign_text);
    if (!poly.empty()) {
        f = parse_z3poly(poly);
        name = to_string(f);
    } else {
        if (n == 0) throw UsageError("factor needs --n or --poly");
        f = modulus(n, sign);
        name = modulus_string(n, sign);
    }
    const auto fac = factor(f);
    json factors = json::array();
    for (const auto& [p, m] : fac.factors) factors.push_back({{"factor", to_string(p)}, {"multiplicity", m}});
    r.payload["polynomial"] = name;
    if (poly.empty()) {
        r.payload["n"] = n;
        r.payload["sign"] = sign_word(sign);
    }
    r.payload["unit"] = fac.unit.value();
    r.payload["factors"] = factors;
    r.payload["factorization"] = to_string(fac);
    r.payload["divisor_count"] = [&] {
        size_t c = 1;
        for (const auto& [p, m] : fac.factors) c *= size_t(m + 1);
        return c;
    }();
    r.text.push_back(name + " = " + to_string(fac));
    if (poly.empty() && n == 6 && sign == ModulusSign::plus) {
        const auto shown = parse_z3poly("2x^2+2") * parse_z3poly("x^2+2") * parse_z3poly("2x^2+1");
        r.flag("known display discrepancy: the product (2x^2+2)(x^2+2)(2x^2+1) equals " + to_string(shown) +
               ", not x^6-1; the canonical factorization is reported");
    }
    return r;
}

/* section: code */

CommandResult cmd_code_build(const CodeArgs& a, unsigned threads) {
    CommandResult r;
    r.payload = code_json(a.build(), threads);
    r.text = code_text(r.payload);
    return r;
}

CommandResult cmd_code_dual(const CodeArgs& a, unsigned threads) {
    CommandResult r;
    const auto c = a.build();
    const auto d = dual(c);
    r.payload = code_json(d, threads);
    r.text.push_back("dual code:");
    for (const auto& line : code_text(r.payload)) r.text.push_back("  " + line);
    return r;
}

CommandResult cmd_code_gray(const CodeArgs& a) {
    CommandResult r;
    const auto c = a.build();
    const auto m = gray_image(c);
    json rows = json::array();
    for (const auto& row : m) rows.push_back(trits(row));
    r.payload["n"] = c.n();
    r.payload["columns"] = 3 * c.n();
    r.payload["rank"] = rank(m, 3 * c.n());
    r.payload["rows"] = rows;
    r.text.push_back("Gray image: [" + std::to_string(3 * c.n()) + ", " + std::to_string(rank(m, 3 * c.n())) +
                     "] ternary code, block-diagonal generator matrix:");
    for (const auto& row : m) r.text.push_back("  " + trits(row));
    return r;
}

CommandResult cmd_code_distance(const CodeArgs& a, unsigned threads) {
    CommandResult r;
    const auto c = a.build();
    json comps = json::array();
    for (const auto& comp : c.components()) comps.push_back(comp.k() ? json(min_distance(comp, threads)) : json(nullptr));
    r.payload["n"] = c.n();
    r.payload["component_distances"] = comps;
    r.payload["d_lee"] = lee_distance(c, threads);
    r.text.push_back("component Hamming distances: " + comps.dump());
    r.text.push_back("Lee distance: " + std::to_string(r.payload["d_lee"].get<size_t>()));
    return r;
}

CommandResult cmd_code_check_dc(const CodeArgs& a) {
    CommandResult r;
    const auto c = a.build();
    json comps = json::array();
    bool all = true;
    for (size_t i = 0; i < 3; ++i) {
        const auto& comp = c.component(i);
        const bool poly = contains_dual(comp), subset = dual_subset_check(comp);
        all = all && poly;
        comps.push_back({{"f", to_string(comp.generator())},
                         {"modulus", modulus_string(comp.n(), comp.sign())},
                         {"dual_generator", to_string(dual(comp).generator())},
                         {"contains_dual", poly},
                         {"subset_check", subset}});
        r.text.push_back("C" + std::to_string(i + 1) + " = <" + to_string(comp.generator()) + ">: " +
                         (poly ? "contains its dual" : "does not contain its dual") + " (subset check " +
                         (subset == poly ? "agrees" : "DISAGREES") + ")");
    }
    r.payload["n"] = c.n();
    r.payload["components"] = comps;
    r.payload["dual_containing"] = all;
    r.text.push_back(all ? "the code contains its dual" : "the code does not contain its dual");
    return r;
}

/* section: constacyclic */

CommandResult cmd_transport(const CodeArgs& a, unsigned threads) {
    CommandResult r;
    if (a.lambda.empty()) throw UsageError("transport needs --lambda");
    CodeArgs src = a;
    src.lambda.clear();
    const auto c = src.build();
    const UnitConstant lam = a.unit();
    const auto t = constacyclic_transport(c, lam);
    r.payload["source"] = code_json(c, threads);
    r.payload["lambda"] = to_string(lam.value());
    r.payload["image"] = code_json(t, threads);
    r.payload["closed_under_nu"] = is_closed_under_nu(t, lam.value());
    r.payload["inverse_recovers_source"] = constacyclic_transport(t, lam) == c;
    r.text.push_back("image under the map (a_0, lambda a_1, lambda^2 a_2, ...), lambda = " + to_string(lam.value()) + ":");
    for (const auto& line : code_text(r.payload["image"])) r.text.push_back("  " + line);
    r.text.push_back(std::string("closed under nu_lambda: ") + (r.payload["closed_under_nu"].get<bool>() ? "yes" : "no"));
    return r;
}

CommandResult cmd_classify(const CodeArgs& a) {
    CommandResult r;
    if (a.lambda.empty()) throw UsageError("classify needs --lambda");
    const UnitConstant lam = a.unit();
    const auto g = gray(lam.value());
    json tags = json::array();
    std::array<ComponentTag, 3> t{};
    for (size_t i = 0; i < 3; ++i) {
        t[i] = g[i].value() == 1 ? ComponentTag::cyclic : ComponentTag::negacyclic;
        tags.push_back(to_string(t[i]));
    }
    r.payload["lambda"] = to_string(lam.value());
    r.payload["gray_lambda"] = {g[0].value(), g[1].value(), g[2].value()};
    r.payload["tags"] = tags;
    r.text.push_back("lambda = " + to_string(lam.value()) + ", Gray coordinates (" + std::to_string(g[0].value()) + "," +
                     std::to_string(g[1].value()) + "," + std::to_string(g[2].value()) + "): components " +
                     join({tags[0], tags[1], tags[2]}, ", "));
    if (!a.f.empty() || !a.f1.empty()) {
        CodeArgs src = a;
        src.lambda.clear();
        if (!a.f.empty()) src.lambda = a.lambda;
        const auto c = src.build();
        const bool closed = is_closed_under_nu(c, lam.value());
        const bool tagged = components_closed_under_tags(c, t);
        r.payload["closed_under_nu"] = closed;
        r.payload["components_closed_under_tags"] = tagged;
        r.text.push_back(std::string("given code closed under nu_lambda: ") + (closed ? "yes" : "no") +
                         "; components closed under their tagged shifts: " + (tagged ? "yes" : "no"));
    }
    return r;
}

/* section: skew */

CommandResult cmd_skew_count(size_t n) {
    CommandResult r;
    const auto fac = factor(modulus(n, ModulusSign::plus));
    const auto value = count_skew_cyclic_formula(n);
    std::string exps;
    for (const auto& [p, m] : fac.factors) exps += (exps.empty() ? "" : "*") + std::to_string(m + 1) + "^3";
    r.payload["n"] = n;
    r.payload["factorization"] = to_string(fac);
    r.payload["count"] = value.str();
    r.payload["formula"] = exps;
    r.text.push_back("x^" + std::to_string(n) + "-1 = " + to_string(fac));
    r.text.push_back("skew cyclic codes of length " + std::to_string(n) + ": " + exps + " = " + value.str());
    if (n % 2 == 0) {
        r.flag("the counting formula is established for odd length only; value shown for the canonical factorization");
        if (n == 12)
            r.flag("a published count of 4^6 for length 12 uses the reducible factor x^3+x^2+x+1; the irreducible "
                   "factorization (x+1)^3(x+2)^3(x^2+1)^3 gives 4^9 = 262144");
    }
    return r;
}

CommandResult cmd_skew_divisors(size_t s, const std::string& lambda_text) {
    CommandResult r;
    const UnitConstant lam(parse_element(lambda_text));
    const auto divs = right_divisors(s, lam);
    json list = json::array();
    for (const auto& d : divs) list.push_back(to_string(d));
    r.payload["s"] = s;
    r.payload["lambda"] = to_string(lam.value());
    r.payload["count"] = divs.size();
    r.payload["divisors"] = list;
    r.text.push_back(std::to_string(divs.size()) + " monic right divisors of " +
                     to_string(skew_modulus(s, lam.value())) + ":");
    for (const auto& d : divs) r.text.push_back("  " + to_string(d));
    return r;
}

CommandResult cmd_skew_gcld(size_t s, const std::string& lambda_text, const std::vector<std::string>& polys) {
    CommandResult r;
    std::vector<SkewPoly> f;
    for (const auto& p : polys) f.push_back(parse_skew_poly(p));
    SkewPoly g;
    json inputs = json::array();
    for (const auto& p : f) inputs.push_back(to_string(p));
    if (s > 0) {
        const UnitConstant lam(parse_element(lambda_text));
        g = gcld(f, s, lam);
        r.payload["s"] = s;
        r.payload["lambda"] = to_string(lam.value());
        inputs.push_back(to_string(skew_modulus(s, lam.value())));
    } else {
        g = gcld(f);
    }
    r.payload["inputs"] = inputs;
    r.payload["gcld"] = to_string(g);
    r.text.push_back("gcld(" + join(inputs.get<std::vector<std::string>>(), ", ") + ") = " + to_string(g));
    return r;
}

CommandResult cmd_skew_code(size_t n, const std::string& lambda_text, const std::string& poly) {
    CommandResult r;
    const UnitConstant lam(parse_element(lambda_text));
    const auto f = parse_skew_poly(poly);
    const auto code = skew_cyclic_code(f, n, lam);
    r.payload["n"] = n;
    r.payload["lambda"] = to_string(lam.value());
    r.payload["f"] = to_string(f);
    r.payload["gray_dim"] = code.gray_dim();
    r.payload["free_rank"] = code.free_rank() ? json(*code.free_rank()) : json(nullptr);
    r.payload["expected_rank"] = n - size_t(f.degree());
    r.payload["sigma_theta_closed"] = code.is_sigma_theta_closed();
    r.text.push_back("skew code of length " + std::to_string(n) + " generated by " + to_string(f));
    r.text.push_back("Gray dimension " + std::to_string(code.gray_dim()) + ", free rank " +
                     (code.free_rank() ? std::to_string(*code.free_rank()) : std::string("none")) + " (n - deg f = " +
                     std::to_string(n - size_t(f.degree())) + ")");
    r.text.push_back(std::string("closed under sigma_theta_lambda: ") + (code.is_sigma_theta_closed() ? "yes" : "no"));
    return r;
}

/* section: quantum */

json scan_row_json(size_t n, ModulusSign sign, const std::array<Z3Poly, 3>& f, const std::array<size_t, 3>& k,
                   const QuantumParams& q, bool dc) {
    json j;
    j["n"] = n;
    j["sign"] = sign_word(sign);
    j["f"] = {to_string(f[0]), to_string(f[1]), to_string(f[2])};
    j["k"] = k;
    j["N"] = q.N;
    j["K"] = q.K;
    j["d"] = q.d;
    j["dual_containing"] = dc;
    j["flags"] = json::array();
    return j;
}

CommandResult cmd_quantum_params(const CodeArgs& a, unsigned threads) {
    CommandResult r;
    const auto c = a.build();
    const auto q = css_params(c, true, threads);
    r.payload = scan_row_json(c.n(), c.sign(),
                              {c.component(0).generator(), c.component(1).generator(), c.component(2).generator()}, c.k(), q,
                              true);
    r.text.push_back(to_string(q) + "  (N = 3n, K = 2(k1+k2+k3) - 3n, d = Lee distance)");
    return r;
}

CommandResult cmd_quantum_scan(size_t n, const std::string& sign_text, size_t limit, unsigned threads) {
    CommandResult r;
    const auto sign = parse_sign(sign_text);
    const auto rows = scan_dual_containing(n, sign, threads);
    json list = json::array();
    r.text.push_back(std::to_string(rows.size()) + " dual-containing component triples for " + modulus_string(n, sign));
    for (size_t i = 0; i < rows.size() && (limit == 0 || i < limit); ++i) {
        const auto& row = rows[i];
        list.push_back(scan_row_json(n, sign, row.f, row.k, row.params, true));
        r.text.push_back("  " + to_string(row.params) + "  f = (" + to_string(row.f[0]) + ", " + to_string(row.f[1]) + ", " +
                         to_string(row.f[2]) + ")");
    }
    r.payload["n"] = n;
    r.payload["sign"] = sign_word(sign);
    r.payload["total"] = rows.size();
    r.payload["rows"] = list;
    return r;
}

/*
    the printed exponent 3k1+2k2+k3-3n agrees with 2(k1+k2+k3)-3n exactly when k1 = k3, which holds for every
    reference entry; the note names a dual-containing code where the two disagree
*/
std::string exponent_formula_note(const std::vector<TableResult>& results) {
    size_t agree = 0, considered = 0;
    for (const auto& t : results) {
        if (!t.dual_containing) continue;
        ++considered;
        const auto k = make_rcode(t.entry.n, t.entry.sign, t.entry.f[0], t.entry.f[1], t.entry.f[2]).k();
        agree += 3 * long(k[0]) + 2 * long(k[1]) + long(k[2]) - 3 * long(t.entry.n) == t.entry.claimed.K;
    }
    std::string note = "K = 2(k1+k2+k3) - 3n is used; the printed variant 3k1+2k2+k3-3n agrees on " + std::to_string(agree) +
                       " of " + std::to_string(considered) + " entries only because k1 = k3 in each";
    for (const auto& row : scan_dual_containing(6, ModulusSign::plus)) {
        if (row.k[0] == row.k[2]) continue;
        const long alt = 3 * long(row.k[0]) + 2 * long(row.k[1]) + long(row.k[2]) - 18;
        note += "; e.g. n=6, f = (" + to_string(row.f[0]) + ", " + to_string(row.f[1]) + ", " + to_string(row.f[2]) +
                ") has K = " + std::to_string(row.params.K) + " but the variant gives " + std::to_string(alt);
        break;
    }
    return note;
}

CommandResult cmd_quantum_verify(unsigned threads) {
    CommandResult r;
    const auto results = verify_reference_table(threads);
    json entries = json::array();
    bool failed = false;
    for (const auto& t : results) {
        json j = scan_row_json(t.entry.n, t.entry.sign, t.entry.f,
                               make_rcode(t.entry.n, t.entry.sign, t.entry.f[0], t.entry.f[1], t.entry.f[2]).k(),
                               t.computed.value_or(QuantumParams{}), t.dual_containing);
        j["label"] = t.entry.label;
        j["claimed"] = to_string(t.entry.claimed);
        j["computed"] = t.computed ? json(to_string(*t.computed)) : json(nullptr);
        j["status"] = to_string(t.status);
        if (!t.computed) {
            j.erase("N");
            j.erase("K");
            j.erase("d");
        }
        if (t.status == TableStatus::flag) j["flags"].push_back("NotDualContaining");
        if (!t.note.empty()) j["note"] = t.note;
        entries.push_back(j);
        failed = failed || t.status == TableStatus::fail;
        r.text.push_back(std::string(to_string(t.status)) + "  " + t.entry.label + ": " +
                         (t.computed ? to_string(*t.computed) : std::string("NotDualContaining")) + " (claimed " +
                         to_string(t.entry.claimed) + ")");
        if (t.status == TableStatus::flag) r.notes.push_back(t.entry.label + ": " + t.note);
    }
    r.payload["entries"] = entries;
    r.payload["exponent_formula"] = "K = 2(k1+k2+k3) - 3n";
    r.status = failed ? "error" : "flag";
    r.notes.push_back("exponent formula: " + exponent_formula_note(results));
    return r;
}

/* section: selftest */

struct SelfTest {
    CommandResult r;
    size_t pass = 0, flag = 0, fail = 0;
    json lines = json::array();

    void line(const std::string& status, const std::string& label, const std::string& detail) {
        lines.push_back({{"status", status}, {"check", label}, {"detail", detail}});
        r.text.push_back(status + std::string(status.size() < 4 ? 5 - status.size() : 1, ' ') + " " + label + ": " + detail);
        if (status == "pass") ++pass;
        if (status == "flag") ++flag;
        if (status == "fail") ++fail;
    }
    void check(bool ok, const std::string& label, const std::string& detail) { line(ok ? "pass" : "fail", label, detail); }
};

RVector random_rvector(std::mt19937_64& rng, size_t n) {
    RVector x(n);
    for (auto& e : x) e = RingElement::from_index(int(rng() % 27));
    return x;
}

CommandResult cmd_selftest(const Globals& g) {
    SelfTest st;
    const auto plus = ModulusSign::plus, minus = ModulusSign::minus;

    /* cardinalities and the dual generator */
    const auto a = decompose_generator(parse_rpoly("(2v+2v^2)x^2+(1+2v+2v^2)x+1"), 3, minus);
    st.check(a.cardinality_log3() == 5, "cardinality, negacyclic n=3", "|C| = 3^" + std::to_string(a.cardinality_log3()));
    const auto b = decompose_generator(parse_rpoly("v^2x^4+vx^3+(1+2v^2)x^2+2vx+1"), 10, minus);
    st.check(b.cardinality_log3() == 20, "cardinality, negacyclic n=10", "|C| = 3^" + std::to_string(b.cardinality_log3()));
    const auto dg = combined_generator(dual(b));
    st.check(dg == parse_rpoly("(1+2v^2)x^8+(2+2v^2)x^6+vx^5+x^4+(2+2v^2)x^2+2vx+1"), "dual generator, negacyclic n=10",
             to_string(dg));

    /* factorizations */
    st.check(to_string(factor(modulus(10, minus))) == "(x^2+1)(x^4+x^3+2x+1)(x^4+2x^3+x+1)", "factorization x^10+1",
             to_string(factor(modulus(10, minus))));
    st.check(to_string(factor(modulus(8, plus))) == "(x+1)(x+2)(x^2+1)(x^2+x+2)(x^2+2x+2)", "factorization x^8-1",
             to_string(factor(modulus(8, plus))));
    st.line("flag", "factorization x^6-1",
            to_string(factor(modulus(6, plus))) + "; the displayed product (2x^2+2)(x^2+2)(2x^2+1) is not x^6-1");

    /* quantum table */
    const auto results = verify_reference_table(g.threads);
    for (const auto& t : results) {
        if (t.status == TableStatus::flag)
            st.line("flag", "quantum " + t.entry.label, t.note);
        else
            st.check(t.status == TableStatus::pass, "quantum " + t.entry.label,
                     t.computed ? to_string(*t.computed) : std::string("no parameters"));
    }
    st.line("flag", "quantum exponent formula", exponent_formula_note(results));

    /* skew counts */
    st.check(count_skew_cyclic(1) == 8 && ideals().size() == 8, "skew cyclic count n=1", "8, equal to the number of ideals of R");
    st.check(count_skew_cyclic(3) == 64, "skew cyclic count n=3", count_skew_cyclic(3).str());
    st.check(count_skew_cyclic(5) == 64, "skew cyclic count n=5", count_skew_cyclic(5).str());
    st.line("flag", "skew cyclic count n=12",
            count_skew_cyclic_formula(12).str() + " = 4^9 from (x+1)^3(x+2)^3(x^2+1)^3; the published 4^6 uses a reducible factor");
    st.check(is_right_divisor(parse_skew_poly("x^3+x^2+x+1"), 12, UnitConstant()) &&
                 skew_cyclic_code(parse_skew_poly("x^3+x^2+x+1"), 12).free_rank() == std::optional<size_t>(9),
             "skew cyclic code n=12, f = x^3+x^2+x+1", "right divisor, free rank 9");

    /* property suites at reduced trial counts */
    std::mt19937_64 rng(g.seed);
    const auto us = units();
    size_t bad = 0, checks = 0;
    for (size_t t = 0; t < 500; ++t) {
        const size_t n = 1 + t % 16;
        const auto x = random_rvector(rng, n);
        const auto y = gray_vector(x);
        const auto u = us[rng() % 8];
        bad += gray_vector_inverse(y) != x;
        bad += lee_weight(x) != hamming_weight(y);
        bad += gray_vector(sigma(x)) != gray_phi(y);
        bad += gray_vector(nu(x, u)) != gray_nu(y, u);
        bad += gray_vector(sigma_theta(x)) != gray_rho(gray_phi(y));
        bad += gray_vector(sigma_theta_lambda(x, u)) != gray_rho(gray_nu(y, u));
        checks += 6;
        for (size_t l = 1; l <= n; ++l) {
            if (n % l) continue;
            bad += gray_vector(tau(x, n / l, l)) != gray_gamma(y, n / l, l);
            bad += gray_vector(nabla(x, u, n / l, l)) != gray_nabla(y, u, n / l, l);
            bad += gray_vector(nabla_theta(x, u, n / l, l)) != gray_rho(gray_nabla(y, u, n / l, l));
            checks += 3;
        }
    }
    st.check(bad == 0, "Gray-map commuting diagrams", std::to_string(checks) + " checks on 500 random vectors");

    size_t hbad = 0;
    for (size_t t = 0; t < 400; ++t) {
        const size_t s = (t % 2) ? 4 : 2, l = 1 + (t / 2) % 2;
        const UnitConstant lam(us[rng() % 8]);
        const auto e = random_rvector(rng, s * l), c = random_rvector(rng, s * l);
        hbad += hermitian_inner_product(to_module_vector(e, s, l), to_module_vector(c, s, l), s, lam).is_zero() !=
                all_shift_orthogonal(e, c, lam, s, l);
    }
    st.check(hbad == 0, "Hermitian form vs all-shift orthogonality", "400 random pairs, s in {2,4}");

    size_t dbad = 0, dcount = 0;
    for (size_t n : {3u, 4u, 6u, 8u, 10u, 12u})
        for (auto sign : {plus, minus})
            for (const auto& gpoly : divisors_of_modulus(n, sign)) {
                const auto c = make_code(n, sign, gpoly);
                dbad += contains_dual(c) != dual_subset_check(c);
                ++dcount;
            }
    st.check(dbad == 0, "dual-containment criterion vs subset check", std::to_string(dcount) + " divisors");

    size_t rbad = 0, rcount = 0;
    for (size_t n = 1; n <= 4; ++n)
        for (const auto& f : right_divisors(n, UnitConstant())) {
            rbad += skew_cyclic_code(f, n).gray_dim() != 3 * (n - size_t(f.degree()));
            ++rcount;
        }
    st.check(rbad == 0, "skew cyclic code ranks", std::to_string(rcount) + " monic right divisors of x^n-1, n <= 4");

    st.r.text.push_back("summary: " + std::to_string(st.pass) + " pass, " + std::to_string(st.flag) + " flag (expected), " +
                        std::to_string(st.fail) + " fail");
    st.r.payload["checks"] = st.lines;
    st.r.payload["pass"] = st.pass;
    st.r.payload["flag"] = st.flag;
    st.r.payload["fail"] = st.fail;
    st.r.status = st.fail ? "error" : "flag";
    if (st.fail == 0) st.r.notes.push_back("all flags are documented discrepancies (see README)");
    return st.r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rcodes: codes over Z3+vZ3+v^2Z3 (v^3 = v), their Gray images, skew codes and CSS quantum codes"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    Globals g;
    app.add_flag("--json", g.json_output, "machine-readable JSON output");
    app.add_option("--seed", g.seed, "seed for randomized property trials");
    app.add_option("--threads", g.threads, "worker threads for distance computations")->check(CLI::Range(1u, 256u));

    /* factor */
    size_t factor_n = 0;
    std::string factor_sign = "pos", factor_poly;
    auto* factor_cmd = app.add_subcommand("factor", "canonical factorization of x^n-1 / x^n+1 (or --poly) over GF(3)");
    factor_cmd->add_option("--n", factor_n, "exponent n")->check(CLI::PositiveNumber);
    factor_cmd->add_option("--sign", factor_sign, "pos (x^n-1) or neg (x^n+1)")->check(CLI::IsMember(sign_words));
    factor_cmd->add_option("--poly", factor_poly, "factor an arbitrary polynomial instead");

    /* code */
    auto* code_cmd = app.add_subcommand("code", "linear codes over R as component triples");
    code_cmd->require_subcommand(1);
    CodeArgs build_args, dual_args, gray_args, dist_args, dc_args;
    build_args.attach(code_cmd->add_subcommand("build", "construct a code and report its parameters"));
    dual_args.attach(code_cmd->add_subcommand("dual", "Euclidean dual code"));
    gray_args.attach(code_cmd->add_subcommand("gray", "Gray image generator matrix"));
    dist_args.attach(code_cmd->add_subcommand("distance", "Lee distance"));
    dc_args.attach(code_cmd->add_subcommand("check-dc", "dual-containment check per component"));

    /* constacyclic */
    auto* consta_cmd = app.add_subcommand("constacyclic", "constacyclic structure");
    consta_cmd->require_subcommand(1);
    CodeArgs transport_args, classify_args;
    auto* transport_cmd = consta_cmd->add_subcommand("transport", "map a cyclic code of odd length to a lambda-constacyclic code");
    transport_args.attach(transport_cmd);
    auto* classify_cmd = consta_cmd->add_subcommand("classify", "component types of a lambda-constacyclic code");
    classify_cmd->add_option("--n", classify_args.n, "code length (with a code)")->check(CLI::PositiveNumber);
    classify_cmd->add_option("--lambda", classify_args.lambda, "unit lambda")->required();
    classify_cmd->add_option("--f", classify_args.f, "optional generator over R to check");
    classify_cmd->add_option("--f1", classify_args.f1, "optional component generator");
    classify_cmd->add_option("--f2", classify_args.f2, "optional component generator");
    classify_cmd->add_option("--f3", classify_args.f3, "optional component generator");

    /* skew */
    auto* skew_cmd = app.add_subcommand("skew", "skew polynomial ring R[x,theta] and skew codes");
    skew_cmd->require_subcommand(1);
    size_t count_n = 0, div_s = 0, gcld_s = 0, scode_n = 0;
    std::string div_lambda = "1", gcld_lambda = "1", scode_lambda = "1", scode_f;
    std::vector<std::string> gcld_f;
    auto* count_cmd = skew_cmd->add_subcommand("count", "number of skew cyclic codes of length n");
    count_cmd->add_option("--n", count_n, "length")->required()->check(CLI::PositiveNumber);
    auto* div_cmd = skew_cmd->add_subcommand("divisors", "monic right divisors of x^s - lambda");
    div_cmd->add_option("--s,--n", div_s, "degree s")->required()->check(CLI::PositiveNumber);
    div_cmd->add_option("--lambda", div_lambda, "unit lambda");
    auto* gcld_cmd = skew_cmd->add_subcommand("gcld", "greatest common left divisor (with x^s - lambda when --s is given)");
    gcld_cmd->add_option("--f", gcld_f, "skew polynomial (repeatable)")->required();
    gcld_cmd->add_option("--s", gcld_s, "include x^s - lambda");
    gcld_cmd->add_option("--lambda", gcld_lambda, "unit lambda");
    auto* scode_cmd = skew_cmd->add_subcommand("code", "skew (constacyclic) code generated by a monic right divisor");
    scode_cmd->add_option("--n", scode_n, "length")->required()->check(CLI::PositiveNumber);
    scode_cmd->add_option("--f", scode_f, "monic right divisor of x^n - lambda")->required();
    scode_cmd->add_option("--lambda", scode_lambda, "unit lambda");

    /* quantum */
    auto* q_cmd = app.add_subcommand("quantum", "CSS quantum codes from dual-containing codes");
    q_cmd->require_subcommand(1);
    CodeArgs params_args;
    params_args.attach(q_cmd->add_subcommand("params", "[[3n, 2(k1+k2+k3)-3n, d]] of a dual-containing code"), false);
    size_t scan_n = 0, scan_limit = 0;
    std::string scan_sign = "pos";
    auto* scan_cmd = q_cmd->add_subcommand("scan", "all dual-containing component triples of a length");
    scan_cmd->add_option("--n", scan_n, "length")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--sign", scan_sign, "pos or neg")->check(CLI::IsMember(sign_words));
    scan_cmd->add_option("--limit", scan_limit, "print at most this many rows (0 = all)");
    auto* verify_cmd = q_cmd->add_subcommand("verify-paper", "reproduce the reference table of quantum codes");

    /* selftest */
    auto* self_cmd = app.add_subcommand("selftest", "self-tests");
    self_cmd->require_subcommand(1);
    auto* self_paper = self_cmd->add_subcommand("paper", "reference examples and property suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CommandResult r;
        if (factor_cmd->parsed()) {
            r = cmd_factor(factor_n, factor_sign, factor_poly);
        } else if (code_cmd->parsed()) {
            if (code_cmd->get_subcommand("build")->parsed()) r = cmd_code_build(build_args, g.threads);
            if (code_cmd->get_subcommand("dual")->parsed()) r = cmd_code_dual(dual_args, g.threads);
            if (code_cmd->get_subcommand("gray")->parsed()) r = cmd_code_gray(gray_args);
            if (code_cmd->get_subcommand("distance")->parsed()) r = cmd_code_distance(dist_args, g.threads);
            if (code_cmd->get_subcommand("check-dc")->parsed()) r = cmd_code_check_dc(dc_args);
        } else if (consta_cmd->parsed()) {
            if (transport_cmd->parsed()) r = cmd_transport(transport_args, g.threads);
            if (classify_cmd->parsed()) r = cmd_classify(classify_args);
        } else if (skew_cmd->parsed()) {
            if (count_cmd->parsed()) r = cmd_skew_count(count_n);
            if (div_cmd->parsed()) r = cmd_skew_divisors(div_s, div_lambda);
            if (gcld_cmd->parsed()) r = cmd_skew_gcld(gcld_s, gcld_lambda, gcld_f);
            if (scode_cmd->parsed()) r = cmd_skew_code(scode_n, scode_lambda, scode_f);
        } else if (q_cmd->parsed()) {
            if (q_cmd->get_subcommand("params")->parsed()) r = cmd_quantum_params(params_args, g.threads);
            if (scan_cmd->parsed()) r = cmd_quantum_scan(scan_n, scan_sign, scan_limit, g.threads);
            if (verify_cmd->parsed()) r = cmd_quantum_verify(g.threads);
        } else if (self_paper->parsed()) {
            r = cmd_selftest(g);
        }
        emit(r, g);
        return r.status == "error" ? 1 : 0;
    } catch (const Error& e) {
        if (g.json_output) {
            json out;
            out["status"] = "error";
            out["payload"] = {{"error", e.name()}, {"message", e.what()}};
            out["notes"] = json::array();
            std::cout << out.dump(2) << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
}
