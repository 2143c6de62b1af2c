#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include <tbb/global_control.h>

#include "CLI11.hpp"
#include "golden.hpp"
#include "zmlp/graph.hpp"
#include "zmlp/io.hpp"
#include "zmlp/toric.hpp"
#include "zmlp/zmlp.hpp"

#ifndef ZMLP_GOLDEN_DIR
#define ZMLP_GOLDEN_DIR "data/golden"
#endif

using namespace zmlp;
using zmlp::cli::GoldenReport;

namespace {

struct Options {
    int jobs = 0;
    bool json = false;
    std::string out;
    std::string golden = ZMLP_GOLDEN_DIR;
};

// Writes the primary output to --out or stdout.
void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw std::runtime_error("cannot write " + opt.out);
    f << text;
}

void emit(const Options& opt, const Json& j, const std::string& text) { emit(opt, opt.json ? dump(j) : text); }

LaurentPoly load_poly(const std::string& path, const std::string& expr) {
    if (!expr.empty()) return LaurentPoly::parse(expr);
    if (path.empty()) throw std::invalid_argument("give --poly FILE or --expr TEXT");
    Json j = read_json_file(path);
    if (j.is_object() && j.contains("poly")) return poly_from_json(j.at("poly"));
    return poly_from_json(j);
}

void require_positive(Int v, const char* name) {
    if (v < 1) throw std::invalid_argument(std::string(name) + " must be positive");
}

std::string report_text(const GoldenReport& rep) {
    std::ostringstream os;
    for (const auto& c : rep.items) {
        os << (c.ok ? "  ok   " : "  FAIL ") << c.what;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    os << (rep.ok() ? "golden: all comparisons pass\n" : "golden: mismatch\n");
    return os.str();
}

// ------------------------------------------------------------- commands

int cmd_enum(const Options& opt, Int a, Int b) {
    require_positive(a, "--a");
    require_positive(b, "--b");
    auto pairs = enumerate_comb(a, b);
    Json arr = Json::array();
    std::ostringstream os;
    os << "(" << a << "," << b << "): " << pairs.size() << " pair" << (pairs.size() == 1 ? "" : "s") << "\n";
    for (const auto& p : pairs) {
        std::string label = a < b ? to_string(classify_family(p, a, b)) : "Unnamed";
        arr.push_back(Json{{"pair", to_string(p)}, {"family", label}});
        os << "  " << to_string(p) << (label == "Unnamed" ? "" : "  " + label) << "\n";
    }
    emit(opt, Json{{"a", a}, {"b", b}, {"count", pairs.size()}, {"pairs", arr}}, os.str());
    return 0;
}

int cmd_classify(const Options& opt, Int a, Int b) {
    require_positive(a, "--a");
    if (b <= a) throw std::invalid_argument("classify needs --a < --b");
    auto rows = family_rows(a, b);
    auto all = enumerate_comb(a, b);
    GoldenReport rep;
    Json table1 = read_json_file(cli::golden_path(opt.golden, "table1.json"));
    auto golden = cli::golden_table1_rows(table1, a, b);
    std::set<std::pair<std::string, std::string>> computed;
    for (const auto& r : rows) {
        computed.insert({to_string(r.label), to_string(r.pair)});
        bool in_comb = std::find(all.begin(), all.end(), r.pair) != all.end();
        rep.add(to_string(r.label) + " " + to_string(r.pair) + " is a comb pair", in_comb);
    }
    if (!golden.empty()) {
        std::set<std::pair<std::string, std::string>> expected(golden.begin(), golden.end());
        std::string detail;
        for (const auto& [f, p] : expected)
            if (!computed.count({f, p})) detail += "missing " + f + " " + p + "; ";
        for (const auto& [f, p] : computed)
            if (!expected.count({f, p})) detail += "extra " + f + " " + p + "; ";
        rep.add("named rows match the fixture", detail.empty(), detail);
    }
    std::ostringstream os;
    os << "(" << a << "," << b << "): " << all.size() << " comb pairs, " << rows.size() << " named\n";
    Json named = Json::array();
    for (const auto& r : rows) {
        os << "  " << to_string(r.label) << "  " << to_string(r.pair) << "\n";
        named.push_back(Json{{"family", to_string(r.label)}, {"pair", to_string(r.pair)}});
    }
    os << report_text(rep);
    emit(opt, Json{{"a", a}, {"b", b}, {"comb_count", all.size()}, {"named", named}, {"golden", rep.to_json()}},
         os.str());
    return rep.ok() ? 0 : 1;
}

int cmd_verify(const Options& opt, const std::string& path, const std::string& expr, const std::string& cert_path,
               const SearchBounds& bounds) {
    if (!cert_path.empty()) {
        auto cert = certificate_from_json(read_json_file(cert_path));
        auto res = replay(cert);
        emit(opt, Json{{"replay", res.ok}, {"message", res.message}},
             std::string(res.ok ? "replay ok" : "replay FAILED") + (res.message.empty() ? "" : ": " + res.message) + "\n");
        return res.ok ? 0 : 1;
    }
    LaurentPoly f = load_poly(path, expr);
    std::optional<MutationCertificate> cert;
    std::string method;
    if (classify_rectangular(f.newton_polygon())) {
        if (auto tri = triangular_reduce(f)) {
            cert = tri->certificate;
            method = "triangular";
        }
    }
    SearchStats stats;
    if (!cert) {
        cert = verify_zmlp(f, bounds, &stats);
        method = "search";
    }
    std::ostringstream os;
    Json j{{"poly", f.to_string()}};
    if (!cert) {
        os << f.to_string() << ": no certificate within depth " << bounds.depth << " and " << bounds.nodes << " nodes\n";
        j["found"] = false;
        j["expanded"] = stats.expanded;
        emit(opt, j, os.str());
        return 1;
    }
    auto res = replay(*cert);
    os << f.to_string() << ": " << method << " certificate, " << cert->mutation_count() << " mutations, replay "
       << (res.ok ? "ok" : "FAILED " + res.message) << "\n";
    for (const auto& s : cert->steps) {
        os << "  " << s.label;
        if (s.spec)
            os << "  phi=<" << to_string(s.spec->phi.normal) << ",m>" << (s.spec->phi.constant < 0 ? "" : "+")
               << s.spec->phi.constant << "  h=" << s.spec->h.to_string();
        os << "  -> " << s.result.to_string() << "\n";
    }
    j["found"] = true;
    j["method"] = method;
    j["replay"] = res.ok;
    j["certificate"] = to_json(*cert);
    emit(opt, j, os.str());
    return res.ok ? 0 : 1;
}

int cmd_graph(const Options& opt, const GraphOptions& gopt, const std::string& dot_path) {
    auto g = build_mutation_graph(gopt);
    auto reach = g.reachable_from_one();
    bool connected = std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
    GoldenReport rep;
    if (gopt.max_size >= 3) {
        auto tom = g.find(LaurentPoly::parse("(1+x)^3+2*y*(1+x)+y^2"));
        auto jerry = g.find(LaurentPoly::parse("(1+y)^2+3*x*(1+y)+3*x^2+x^3"));
        rep.add("Tom is a node", tom.has_value());
        rep.add("Jerry is a node", jerry.has_value());
    }
    rep.add("every node is connected to 1", connected);
    if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) throw std::runtime_error("cannot write " + dot_path);
        f << to_dot(g);
    }
    std::ostringstream os;
    os << "size <= " << gopt.max_size << ": " << g.nodes.size() << " nodes, " << g.edges.size() << " edges\n";
    os << report_text(rep);
    Json j = to_json(g);
    j["golden"] = rep.to_json();
    if (opt.json || !opt.out.empty() || dot_path.empty())
        emit(opt, j, os.str());
    else
        std::cout << os.str();
    return rep.ok() ? 0 : 1;
}

std::vector<std::pair<Int, Int>> table1_triangles(Int k) {
    std::vector<std::pair<Int, Int>> out;
    auto push = [&](Int a, Int b) {
        if (a >= 1 && a < b && gcd_int(a, b) == 1 && std::find(out.begin(), out.end(), std::pair{a, b}) == out.end())
            out.emplace_back(a, b);
    };
    push(1, k);
    push(2, k);
    push(3, k);
    push(k, k + 1);
    return out;
}

int cmd_table1(const Options& opt, const std::vector<Int>& ks) {
    Json table1 = read_json_file(cli::golden_path(opt.golden, "table1.json"));
    GoldenReport rep;
    std::ostringstream os;
    Json rows_out = Json::array();
    for (Int k : ks) {
        require_positive(k, "k");
        for (auto [a, b] : table1_triangles(k)) {
            auto rows = family_rows(a, b);
            auto all = enumerate_comb(a, b);
            std::set<std::pair<std::string, std::string>> computed;
            for (const auto& r : rows) {
                computed.insert({to_string(r.label), to_string(r.pair)});
                rows_out.push_back(Json{{"k", k}, {"a", a}, {"b", b}, {"family", to_string(r.label)}, {"pair", to_string(r.pair)}});
                os << "k=" << k << "  (" << a << "," << b << ")  " << to_string(r.label) << "  " << to_string(r.pair) << "\n";
                bool in_comb = std::find(all.begin(), all.end(), r.pair) != all.end();
                if (!in_comb) rep.add("(" + std::to_string(a) + "," + std::to_string(b) + ") " + to_string(r.pair) + " is a comb pair", false);
            }
            auto golden = cli::golden_table1_rows(table1, a, b);
            if (golden.empty()) continue;
            std::set<std::pair<std::string, std::string>> expected(golden.begin(), golden.end());
            std::string detail;
            for (const auto& [f, p] : expected)
                if (!computed.count({f, p})) detail += "missing " + f + " " + p + "; ";
            for (const auto& [f, p] : computed)
                if (!expected.count({f, p})) detail += "extra " + f + " " + p + "; ";
            rep.add("(" + std::to_string(a) + "," + std::to_string(b) + ") rows", detail.empty(), detail);
        }
    }
    os << report_text(rep);
    emit(opt, Json{{"rows", rows_out}, {"golden", rep.to_json()}}, os.str());
    return rep.ok() ? 0 : 1;
}

int cmd_table2(const Options& opt, Int a_max, Int k_max, Int window) {
    if (a_max < 1 || a_max > 7) throw std::invalid_argument("--a-max must lie in 1..7");
    if (k_max < 0 || k_max > 4) throw std::invalid_argument("--k-max must lie in 0..4");
    require_positive(window, "--window");
    Json golden = read_json_file(cli::golden_path(opt.golden, "table2.json"));
    GoldenReport rep;
    std::ostringstream os;
    Json left = Json::array(), right = Json::array();
    for (Int a = 1; a <= a_max; ++a) {
        auto counts = table2_left(a, window);
        Json expected;
        for (const auto& row : golden.at("left"))
            if (row.at("a").get<Int>() == a) expected = row.at("counts");
        os << "a=" << a << ":";
        Json jrow = Json::array();
        for (const auto& c : counts) {
            os << "  b=" << c.residue << " mod " << a << " -> " << c.count << (c.stable ? "" : " (not stable)");
            jrow.push_back(to_json(c));
            if (!expected.is_null()) {
                std::string key = std::to_string(c.residue);
                bool has = expected.contains(key);
                std::uint64_t want = has ? expected.at(key).get<std::uint64_t>() : 0;
                rep.add("a=" + std::to_string(a) + " b=" + key + " mod " + std::to_string(a), has && c.stable && want == c.count,
                        has ? "expected " + std::to_string(want) + ", got " + std::to_string(c.count) : "no fixture value");
            }
        }
        os << "\n";
        left.push_back(Json{{"a", a}, {"counts", jrow}});
    }
    for (Int k = 1; k <= k_max; ++k) {
        auto counts = table2_right(k, window);
        Json expected;
        for (const auto& row : golden.at("right"))
            if (row.at("k").get<Int>() == k) expected = row.at("count");
        os << "k=" << k << ":";
        Json jrow = Json::array();
        for (const auto& c : counts) {
            os << "  a=" << c.residue << " mod " << k << " -> " << c.count << (c.stable ? "" : " (not stable)");
            jrow.push_back(to_json(c));
            if (!expected.is_null()) {
                auto want = expected.get<std::uint64_t>();
                rep.add("k=" + std::to_string(k) + " a=" + std::to_string(c.residue) + " mod " + std::to_string(k),
                        c.stable && want == c.count, "expected " + std::to_string(want) + ", got " + std::to_string(c.count));
            }
        }
        os << "\n";
        right.push_back(Json{{"k", k}, {"counts", jrow}});
    }
    for (auto& c : rep.items)
        if (c.ok) c.detail.clear();
    os << report_text(rep);
    emit(opt, Json{{"window", window}, {"left", left}, {"right", right}, {"golden", rep.to_json()}}, os.str());
    return rep.ok() ? 0 : 1;
}

int cmd_verify_small(const Options& opt, Int limit, const SearchBounds& bounds) {
    if (limit < 2 || limit > 13) throw std::invalid_argument("--limit must lie in 2..13");
    auto rep = verify_small(limit, bounds);
    std::ostringstream os;
    std::map<PairStatus, int> tally;
    for (const auto& p : rep.pairs) {
        ++tally[p.status];
        os << "(" << p.a << "," << p.b << ")  " << to_string(p.pair) << "  " << to_string(p.label) << "  "
           << to_string(p.status);
        if (p.steps) os << "  " << p.steps << " steps";
        os << "\n";
    }
    os << rep.pairs.size() << " pairs:";
    for (auto [s, n] : tally) os << "  " << to_string(s) << "=" << n;
    os << "\n" << (rep.all_pass() ? "all pairs certified" : "not every pair is certified") << "\n";
    emit(opt, to_json(rep), os.str());
    return rep.no_failures() ? 0 : 1;
}

int cmd_toric(const Options& opt, Int a, Int b) {
    require_positive(a, "--a");
    require_positive(b, "--b");
    auto deg = toric_degeneration(standard_triangle(a, b));
    deg.fan.validate();
    GoldenReport rep;
    std::ostringstream os;
    os << "sigma      " << to_string(deg.sigma) << "\n";
    os << "dual       " << to_string(deg.dual) << "\n";
    Json cones = Json::array();
    for (std::size_t i = 0; i < deg.fan.cones.size(); ++i) {
        const auto& c = deg.fan.cones[i];
        auto t = singularity_type(c);
        Int m = c.multiplicity();
        rep.add("cone " + std::to_string(i + 1) + " has multiplicity in {1,a,b}", m == 1 || m == a || m == b);
        os << "sigma_" << i + 1 << "    " << to_string(c) << "  " << to_string(t) << "\n";
        Json jc = to_json(c);
        jc["type"] = to_json(t);
        cones.push_back(jc);
    }
    os << report_text(rep);
    emit(opt,
         Json{{"a", a}, {"b", b}, {"sigma", to_json(deg.sigma)}, {"dual", to_json(deg.dual)}, {"cones", cones},
              {"golden", rep.to_json()}},
         os.str());
    return rep.ok() ? 0 : 1;
}

int cmd_sing(const Options& opt, const std::string& cone_text, const std::string& expect) {
    Cone3 cone(parse_vectors(cone_text));
    if (!cone.simplicial()) throw std::invalid_argument("cone " + to_string(cone) + " is not simplicial");
    auto t = singularity_type(cone);
    Json j{{"cone", to_json(cone)}, {"type", to_json(t)}};
    std::string text = to_string(cone) + "  " + to_string(t) + "\n";
    int code = 0;
    if (!expect.empty()) {
        bool same = sing_equivalent(t, parse_type(expect));
        j["expected"] = expect;
        j["matches"] = same;
        text += std::string(same ? "matches " : "does not match ") + expect + "\n";
        code = same ? 0 : 1;
    }
    emit(opt, j, text);
    return code;
}

int cmd_walls(const Options& opt, const std::string& path, const std::string& expr, Int a, Int b,
              const std::string& pair_text, bool preset) {
    auto policy = preset ? LambdaPolicy::Preset : LambdaPolicy::Symbolic;
    WallReport rep;
    if (!pair_text.empty()) {
        DualPair pair = parse_dual_pair(pair_text);
        if (pair.a() != a || pair.b() != b) throw std::invalid_argument("pair degrees differ from --a/--b");
        rep = wall_functions(standard_triangle(a, b), {pair.b_part, Partition{1}, pair.a_part}, policy);
    } else {
        rep = wall_functions(load_poly(path, expr), policy);
    }
    std::ostringstream os;
    for (const auto& w : rep.walls) os << w.name << " = " << to_string(w) << "\n";
    os << "closing sum " << to_string(rep.closing_sum) << (rep.closes() ? "  closes" : "  DOES NOT CLOSE") << "\n";
    emit(opt, to_json(rep), os.str());
    return rep.closes() && rep.labels_distinct ? 0 : 1;
}

int cmd_extract(const Options& opt, Int a, Int b, const std::string& pair_text) {
    DualPair pair = parse_dual_pair(pair_text);
    auto res = extraction_certificate(pair, a, b);
    std::ostringstream os;
    if (res.certificate) {
        const auto& c = *res.certificate;
        os << to_string(pair) << ": variant " << c.variant << ", base " << c.base_case << " (" << to_string(c.base_type)
           << "), type " << to_string(c.type) << "\n";
        for (std::size_t i = 0; i < c.moves.size(); ++i)
            os << "  " << to_string(c.chain[i]) << "  --" << c.moves[i] << "-->  " << to_string(c.chain[i + 1]) << "\n";
    } else {
        os << to_string(pair) << ": no certificate (" << res.reason << ")\n";
    }
    emit(opt, to_json(res), os.str());
    return 0;
}

int jobs_from_env(int flag) {
    if (const char* env = std::getenv("ZMLP_JOBS"); env && *env) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument(std::string("ZMLP_JOBS must be a positive integer, got '") + env + "'");
    }
    return flag;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero mutable Laurent polynomials on lattice polygons"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("-j,--jobs", opt.jobs, "Worker threads (0: all cores); ZMLP_JOBS overrides")->check(CLI::NonNegativeNumber);
    app.add_flag("--json", opt.json, "Emit JSON instead of text");
    app.add_option("-o,--out", opt.out, "Write the primary output to a file");
    app.add_option("--golden", opt.golden, "Directory with golden fixtures");

    Int a = 0, b = 0;
    auto add_ab = [&](CLI::App* sub, bool required) {
        auto* oa = sub->add_option("--a", a, "Vertical leg");
        auto* ob = sub->add_option("--b", b, "Horizontal leg");
        if (required) {
            oa->required();
            ob->required();
        }
    };

    auto* enum_cmd = app.add_subcommand("enum", "List the comb pairs on a triangle");
    add_ab(enum_cmd, true);

    auto* classify_cmd = app.add_subcommand("classify", "Named families on a triangle, checked against the fixture");
    add_ab(classify_cmd, true);

    std::string poly_path, expr, cert_path;
    SearchBounds bounds;
    auto* verify_cmd = app.add_subcommand("verify", "Find and replay a mutation certificate to 1");
    verify_cmd->add_option("--poly", poly_path, "Polynomial JSON file");
    verify_cmd->add_option("--expr", expr, "Polynomial expression");
    verify_cmd->add_option("--certificate", cert_path, "Replay a certificate JSON file instead");
    verify_cmd->add_option("--depth", bounds.depth, "Search depth")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--nodes", bounds.nodes, "Search node budget")->check(CLI::PositiveNumber);

    GraphOptions gopt;
    std::string dot_path;
    auto* graph_cmd = app.add_subcommand("graph", "Mutation graph of small zero mutable polynomials");
    graph_cmd->add_option("--max-size", gopt.max_size, "Size bound")->check(CLI::NonNegativeNumber);
    graph_cmd->add_option("--max-direction", gopt.max_direction, "Bound on mutation directions");
    graph_cmd->add_flag("--products", gopt.include_products, "Close under products as well");
    graph_cmd->add_option("--dot", dot_path, "Write the graph in DOT format");

    std::vector<Int> ks{2, 3, 4, 5, 7, 8};
    auto* table1_cmd = app.add_subcommand("table1", "Regenerate the named family rows and compare");
    table1_cmd->add_option("--k", ks, "Family parameters")->delimiter(',');

    Int a_max = 7, k_max = 4, window = 50;
    auto* table2_cmd = app.add_subcommand("table2", "Stabilized comb counts for large triangles");
    table2_cmd->add_option("--a-max", a_max, "Largest vertical leg");
    table2_cmd->add_option("--k-max", k_max, "Largest offset k in (a, a+k)");
    table2_cmd->add_option("--window", window, "Scan length");

    Int limit = 11;
    auto* small_cmd = app.add_subcommand("verify-small", "Certify every comb pair with a + b <= limit");
    small_cmd->add_option("--limit", limit, "Bound on a + b");
    small_cmd->add_option("--depth", bounds.depth, "Fallback search depth")->check(CLI::PositiveNumber);
    small_cmd->add_option("--nodes", bounds.nodes, "Fallback node budget")->check(CLI::PositiveNumber);

    auto* toric_cmd = app.add_subcommand("toric", "Cone, dual cone and central subdivision of a triangle");
    add_ab(toric_cmd, true);

    std::string cone_text, expect;
    auto* sing_cmd = app.add_subcommand("sing", "Quotient singularity of a simplicial cone");
    sing_cmd->add_option("--cone", cone_text, "Rays as \"x,y,z;x,y,z;x,y,z\"")->required();
    sing_cmd->add_option("--expect", expect, "Compare with a type such as 1/5(1,-1,2)");

    std::string pair_text;
    bool preset = false;
    auto* walls_cmd = app.add_subcommand("walls", "Wall functions of a polynomial or a dual pair");
    walls_cmd->add_option("--poly", poly_path, "Polynomial JSON file");
    walls_cmd->add_option("--expr", expr, "Polynomial expression");
    add_ab(walls_cmd, false);
    walls_cmd->add_option("--pair", pair_text, "Dual pair \"a-part|b-part\"");
    walls_cmd->add_flag("--preset", preset, "Use the sample values 0, -1, 1, ... for the parameters");

    auto* extract_cmd = app.add_subcommand("extract", "Divisorial extraction certificate for a dual pair");
    add_ab(extract_cmd, true);
    extract_cmd->add_option("--pair", pair_text, "Dual pair \"a-part|b-part\"")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        int jobs = jobs_from_env(opt.jobs);
        std::unique_ptr<tbb::global_control> limit_threads;
        if (jobs > 0)
            limit_threads = std::make_unique<tbb::global_control>(tbb::global_control::max_allowed_parallelism,
                                                                  static_cast<std::size_t>(jobs));

        if (*enum_cmd) return cmd_enum(opt, a, b);
        if (*classify_cmd) return cmd_classify(opt, a, b);
        if (*verify_cmd) return cmd_verify(opt, poly_path, expr, cert_path, bounds);
        if (*graph_cmd) return cmd_graph(opt, gopt, dot_path);
        if (*table1_cmd) return cmd_table1(opt, ks);
        if (*table2_cmd) return cmd_table2(opt, a_max, k_max, window);
        if (*small_cmd) return cmd_verify_small(opt, limit, bounds);
        if (*toric_cmd) return cmd_toric(opt, a, b);
        if (*sing_cmd) return cmd_sing(opt, cone_text, expect);
        if (*walls_cmd) return cmd_walls(opt, poly_path, expr, a, b, pair_text, preset);
        if (*extract_cmd) return cmd_extract(opt, a, b, pair_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
