// Acceptance checks. Each criterion prints one PASS/FAIL line. Criteria that
// are known not to hold carry the exact failure signature we expect; the
// binary exits nonzero on any other failure and also when a known failure
// starts passing, so the record has to be updated deliberately.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "golden_support.hpp"
#include "properties.hpp"
#include "zmlp/graph.hpp"
#include "zmlp/toric.hpp"
#include "zmlp/zmlp.hpp"

using namespace zmlp;
using zmlp::testing::golden;
using zmlp::testing::multiplicities;
using zmlp::testing::partition_of;

namespace {

struct Outcome {
    bool passed = true;
    std::vector<std::string> problems;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            problems.push_back(what);
        }
    }
};

struct Criterion {
    std::string id;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> run;
    // Sorted problem list this criterion is known to produce; empty if it must pass.
    std::vector<std::string> known_failure = {};
    std::string known_reason = {};
};

std::string join(const std::vector<std::string>& v, const std::string& sep = "; ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string int_str(Int v) { return std::to_string(v); }

const LaurentPoly kTom = LaurentPoly::parse("(1+x)^3+2*y*(1+x)+y^2");
const LaurentPoly kJerry = LaurentPoly::parse("(1+y)^2+3*x*(1+y)+3*x^2+x^3");

Outcome ac1() {
    Outcome o;
    Json g = golden("tom_jerry.json");
    for (const auto& entry : g["polynomials"]) {
        const std::string name = entry["name"].get<std::string>();
        const std::string array = entry["array"].get<std::string>();
        DualPair pair = parse_dual_pair(entry["pair"].get<std::string>());
        auto rebuilt = reconstruct_from_reqdiv(standard_triangle(2, 3), reqdiv_from_pair(pair));
        o.check(rebuilt && coefficient_array(*rebuilt) == array, name + ": reconstruction differs from " + array);
        LaurentPoly direct = LaurentPoly::parse(entry["poly"].get<std::string>());
        o.check(coefficient_array(direct) == array, name + ": direct construction differs from " + array);
    }
    Json chains = golden("tom_jerry_chains.json");
    for (const auto& chain : chains["chains"]) {
        const std::string name = chain["name"].get<std::string>();
        LaurentPoly f = LaurentPoly::parse(chain["start"].get<std::string>());
        std::size_t k = 0;
        for (const auto& step : chain["steps"]) {
            ++k;
            MutationSpec s{AffineFunctional{point_from_json(step["normal"]), step["constant"].get<Int>()},
                           LaurentPoly::parse(step["h"].get<std::string>())};
            try {
                f = mutate(f, s);
            } catch (const std::exception& e) {
                o.check(false, name + " step " + std::to_string(k) + ": " + e.what());
                break;
            }
            o.check(f == LaurentPoly::parse(step["result"].get<std::string>()),
                    name + " step " + std::to_string(k) + " gives " + f.to_string());
        }
        o.check(f == LaurentPoly::parse("1"), name + " chain does not end at 1");
    }
    return o;
}

Outcome ac2() {
    Outcome o;
    Json g = golden("tom_jerry.json");
    for (const auto& entry : g["polynomials"]) {
        const std::string name = entry["name"].get<std::string>();
        LaurentPoly f = LaurentPoly::parse(entry["poly"].get<std::string>());
        auto edges = f.newton_polygon().edges();
        auto req = reqdiv_tuples(f);
        o.check(div_tuple(f, edges[0]).values == multiplicities(entry["div"]["bottom"]), name + " bottom div");
        o.check(div_tuple(f, edges[2]).values == multiplicities(entry["div"]["left"]), name + " left div");
        for (std::size_t i = 0; i < edges.size(); ++i)
            o.check(zmlp::testing::agree_on_occupied_levels(f, edges[i], req.tuples[i], div_tuple(f, edges[i])),
                    name + " reqdiv differs from div on edge " + std::to_string(i));
        o.check(divstep(f, edges[0]) == partition_of(entry["divstep"]["bottom"]), name + " bottom divstep");
        o.check(divstep(f, edges[2]) == partition_of(entry["divstep"]["left"]), name + " left divstep");
        o.check(divstep(f, edges[1]) == partition_of(entry["divstep"]["hypotenuse"]), name + " hypotenuse divstep");
    }

    Json r = golden("reqdiv_below_div.json");
    auto f = zmlp_from_pair(parse_dual_pair(r["pair"].get<std::string>()));
    o.check(f.has_value(), "(5,7) example not realizable");
    if (f) {
        auto edges = f->newton_polygon().edges();
        auto req = reqdiv_tuples(*f);
        o.check(coefficient_array(*f) == r["array"].get<std::string>(), "(5,7) coefficient array");
        o.check(div_tuple(*f, edges[0]).values == multiplicities(r["div"]["bottom"]), "(5,7) bottom div");
        o.check(req.tuples[0].values == multiplicities(r["reqdiv"]["bottom"]), "(5,7) bottom reqdiv");
        o.check(req.tuples[2].values == multiplicities(r["reqdiv"]["left"]), "(5,7) left reqdiv");
        o.check(req.tuples[0] != div_tuple(*f, edges[0]), "(5,7) reqdiv should differ from div");
    }

    Json inf = golden("infinite_div.json");
    LaurentPoly h = LaurentPoly::parse(inf["poly"].get<std::string>());
    auto bottom = h.newton_polygon().edge(0);
    o.check(div_tuple(h, bottom).values == multiplicities(inf["div"]["bottom"]), "infinite example div");
    o.check(reqdiv_tuple(h, bottom).values == multiplicities(inf["reqdiv"]["bottom"]), "infinite example reqdiv");
    return o;
}

Outcome ac3() {
    Outcome o;
    auto expect = [&](Int a, Int b, std::size_t n) {
        std::size_t got = enumerate_comb(a, b).size();
        o.check(got == n, "(" + int_str(a) + "," + int_str(b) + "): expected " + std::to_string(n) + ", got " +
                              std::to_string(got));
    };
    for (Int k = 2; 1 + k <= 25; ++k) expect(1, k, 1);
    for (Int k = 3; 2 + k <= 25; k += 2) expect(2, k, 2);
    for (Int k = 4; 3 + k <= 25; ++k) {
        if (k % 3 == 0) continue;
        if (k >= 7) expect(3, k, 4);
    }
    expect(3, 5, 3);
    for (Int k = 3; 2 * k + 1 <= 25; ++k) expect(k, k + 1, 3);
    return o;
}

Outcome ac4() {
    Outcome o;
    Json g = golden("table2.json");
    for (const auto& row : g["left"]) {
        Int a = row["a"].get<Int>();
        for (const auto& c : table2_left(a, 50)) {
            std::string key = std::to_string(c.residue);
            std::uint64_t want = row["counts"].contains(key) ? row["counts"][key].get<std::uint64_t>() : 0;
            o.check(c.stable && c.count == want, "left a=" + int_str(a) + " r=" + key + ": expected " +
                                                     std::to_string(want) + ", got " + std::to_string(c.count));
        }
    }
    for (const auto& row : g["right"]) {
        Int k = row["k"].get<Int>();
        std::uint64_t want = row["count"].get<std::uint64_t>();
        std::set<std::uint64_t> counts;
        bool stable = true;
        for (const auto& c : table2_right(k, 50)) {
            counts.insert(c.count);
            stable = stable && c.stable;
        }
        std::ostringstream got;
        for (auto c : counts) got << (got.tellp() ? "/" : "") << c;
        o.check(stable && counts == std::set<std::uint64_t>{want},
                "right k=" + int_str(k) + ": expected " + std::to_string(want) + ", got " + got.str());
    }
    return o;
}

Outcome ac5() {
    Outcome o;
    SmallReport rep = verify_small(11);
    for (const auto& p : rep.pairs)
        o.check(p.status == PairStatus::Triangular, "(" + int_str(p.a) + "," + int_str(p.b) + ") " + to_string(p.pair) +
                                                        ": " + to_string(p.status));
    o.check(!rep.pairs.empty(), "no pairs enumerated");
    return o;
}

Outcome ac6() {
    Outcome o;
    Json g = golden("nontriangular.json");
    DualPair pair = parse_dual_pair(g["pair"].get<std::string>());
    o.check(!triangular_reduce(pair), "triangular reduction unexpectedly succeeds");
    auto f = zmlp_from_pair(pair);
    if (!f) {
        o.check(false, "pair not realizable");
        return o;
    }
    auto cert = verify_zmlp(*f);
    if (!cert) {
        o.check(false, "search found no certificate");
        return o;
    }
    auto replayed = replay(*cert);
    o.check(replayed.ok, "replay: " + replayed.message);
    o.check(cert->mutation_count() == g["mutations"].get<std::size_t>(),
            "expected " + std::to_string(g["mutations"].get<std::size_t>()) + " mutations, got " +
                std::to_string(cert->mutation_count()));
    std::vector<LatticePolygon> expected, got{canonical_form(f->newton_polygon())};
    for (const auto& step : g["sequence"]) {
        std::vector<Point> pts;
        for (const auto& p : step["polygon"]) pts.push_back(point_from_json(p));
        expected.push_back(canonical_form(LatticePolygon::hull(pts)));
    }
    for (const auto& s : cert->steps)
        if (s.spec) got.push_back(canonical_form(s.result.newton_polygon()));
    o.check(got == expected, "intermediate Newton polygons differ from the recorded sequence");
    return o;
}

Outcome ac7() {
    Outcome o;
    for (Int a = 1; a <= 12; ++a)
        for (Int b = 1; b <= 12; ++b) {
            auto s = singularity_type(Cone3({{1, 0, 0}, {0, 1, 0}, {1, -b, a}}));
            auto want = make_type(a, {1, -1, b});
            o.check(s.r == want.r && s.normalized() == want.normalized(),
                    "a=" + int_str(a) + " b=" + int_str(b) + ": " + to_string(s));
        }
    // The cone of the (1,2,2) subdivision of the conifold cone that contains
    // the new ray with the facet through (0,0,1) and (1,0,1).
    Fan3 blown = star_subdivision(Fan3{{Cone3({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}})}}, {1, 2, 2});
    bool half_found = false;
    for (const auto& c : blown.cones)
        if (c.has_ray({0, 0, 1}) && c.has_ray({1, 0, 1})) {
            auto half = singularity_type(c);
            half_found = half.r == 2 && half.normalized() == parse_type("1/2(1,1,1)").normalized();
        }
    o.check(half_found, "no 1/2(1,1,1) cone after the (1,2,2) subdivision");
    for (Int m = 0; m <= 10; ++m) {
        auto s = singularity_type(Cone3({{1, 0, 0}, {0, 1, 0}, {1, 1, m + 1}}));
        auto want = make_type(m + 1, {1, -1, -1});
        o.check(s.r == want.r && s.normalized() == want.normalized(), "m=" + int_str(m) + ": " + to_string(s));
    }
    return o;
}

Outcome ac8() {
    Outcome o;
    std::size_t certified = 0, absent = 0;
    for (Int a = 1; a <= 14; ++a)
        for (Int b = a + 1; a + b <= 15; ++b) {
            if (gcd_int(a, b) != 1) continue;
            for (const auto& row : family_rows(a, b)) {
                auto res = extraction_certificate(row.pair, a, b);
                std::string where = to_string(row.label) + " " + to_string(row.pair) + " on (" + int_str(a) + "," +
                                    int_str(b) + ")";
                if (row.label == FamilyLabel::Spike) {
                    o.check(!res.certificate && res.reason.find("Spike") != std::string::npos,
                            where + ": expected absent with the open-family reason");
                    ++absent;
                    continue;
                }
                if (!res.certificate) {
                    o.check(false, where + ": " + res.reason);
                    continue;
                }
                const auto& c = *res.certificate;
                bool in_class = sing_equivalent(c.type, make_type(a, {1, -1, b})) ||
                                sing_equivalent(c.type, make_type(b, {1, -1, a}));
                o.check(in_class, where + ": type " + to_string(c.type));
                o.check(!c.base_case.empty(), where + ": no base case");
                ++certified;
            }
        }
    o.check(certified > 0 && absent > 0, "nothing checked");
    return o;
}

Outcome ac9() {
    Outcome o;
    for (const auto& r : zmlp::testing::run_all_properties(20240517, zmlp::testing::kDefaultCases)) {
        o.check(r.cases >= zmlp::testing::kDefaultCases, r.name + ": only " + std::to_string(r.cases) + " cases");
        o.check(r.failures == 0, r.name + ": " + std::to_string(r.failures) + " failures, first: " + r.first_failure);
    }
    // The counting identity on every polynomial certified by the small suite.
    for (const auto& p : verify_small(11).pairs) {
        if (p.status != PairStatus::Triangular && p.status != PairStatus::NonTriangular) continue;
        auto f = zmlp_from_pair(p.pair);
        if (!f) continue;
        auto tp = dual_pair(*f);
        o.check(tp.pair.a_part.sum_of_squares() + tp.pair.b_part.sum_of_squares() == tp.a * tp.b + 1,
                "sum of squares fails for " + to_string(p.pair));
    }
    return o;
}

Outcome graph_check() {
    Outcome o;
    auto g = build_mutation_graph({3, 0, false});
    auto tom = g.find(kTom), jerry = g.find(kJerry);
    o.check(tom.has_value(), "Tom missing");
    o.check(jerry.has_value(), "Jerry missing");
    auto reach = g.reachable_from_one();
    o.check(std::all_of(reach.begin(), reach.end(), [](bool b) { return b; }), "graph not connected to 1");
    return o;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"AC1", "Tom/Jerry arrays and mutation chains", 1.0, ac1},
        {"AC2", "divisibility golden values", 5.0, ac2},
        {"AC3", "classification counts, a + b <= 25", 10.0, ac3},
        {"AC4", "stabilized comb counts, scan to a + 50", 60.0, ac4, {"right k=4: expected 15, got 12"},
         "the comb conditions give 12 pairs on (a, a+4) for all large a"},
        {"AC5", "a + b <= 11 triangular certificates", 120.0, ac5,
         {"(4,7) (3,1),(3,3,1): unrealizable"},
         "the pair passes the counting test but no polynomial carries its divisibility data"},
        {"AC6", "non-triangular example", 60.0, ac6},
        {"AC7", "quotient singularity types", 5.0, ac7},
        {"AC8", "extraction certificates, a + b <= 15", 10.0, ac8},
        {"AC9", "property suites, 1000 cases each", 300.0, ac9},
        {"AC-graph", "size <= 3 mutation graph", 120.0, graph_check},
    };

    int unexpected = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.check(secs <= c.budget_seconds, "took " + std::to_string(secs) + " s");

        std::vector<std::string> problems = o.problems;
        std::sort(problems.begin(), problems.end());
        std::ostringstream line;
        line << c.id << ' ';
        if (o.passed && c.known_failure.empty()) {
            line << "PASS";
        } else if (!o.passed && !c.known_failure.empty() && problems == c.known_failure) {
            line << "FAIL (known: " << c.known_reason << ")";
        } else if (o.passed) {
            line << "UNEXPECTED PASS (recorded failure no longer occurs)";
            ++unexpected;
        } else {
            line << "FAIL";
            ++unexpected;
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, " [%.2f s / %.0f s]", secs, c.budget_seconds);
        line << "  " << c.title << buf;
        if (!problems.empty()) line << "\n    " << join(problems, "\n    ");
        std::cout << line.str() << std::endl;
    }
    std::cout << (unexpected ? "acceptance: unexpected results\n" : "acceptance: all results as recorded\n");
    return unexpected ? 1 : 0;
}
