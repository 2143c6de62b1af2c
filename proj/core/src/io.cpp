#include "zmlp/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace zmlp {

namespace {

Json big(const BigInt& c) {
    if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
    return c.get_str();
}

BigInt big_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        BigInt c;
        if (c.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer '" + j.get<std::string>() + "'");
        return c;
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

Int int_from_json(const Json& j) {
    if (!j.is_number_integer()) throw std::invalid_argument("expected an integer, got " + j.dump());
    return j.get<Int>();
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json to_json(Point p) { return Json::array({p.x, p.y}); }

Json to_json(const LatticePolygon& poly) {
    Json v = Json::array();
    for (auto p : poly.vertices()) v.push_back(to_json(p));
    return Json{{"vertices", v}};
}

Json to_json(const LaurentPoly& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"exp", to_json(e)}, {"coeff", big(c)}});
    return Json{{"terms", terms}};
}

Json to_json(const AffineFunctional& phi) { return Json{{"normal", to_json(phi.normal)}, {"constant", phi.constant}}; }

Json to_json(const UnimodularAffineMap& g) {
    const auto& m = g.matrix();
    return Json{{"matrix", Json::array({Json::array({m[0], m[1]}), Json::array({m[2], m[3]})})},
                {"translation", to_json(g.translation())}};
}

Json to_json(const MutationSpec& spec) { return Json{{"phi", to_json(spec.phi)}, {"h", to_json(spec.h)}}; }

Json to_json(const MutationCertificate& cert) {
    Json steps = Json::array();
    for (const auto& s : cert.steps) {
        Json step{{"label", s.label}};
        step["spec"] = s.spec ? to_json(*s.spec) : Json(nullptr);
        step["frame"] = to_json(s.frame);
        step["result"] = to_json(s.result);
        step["result_text"] = s.result.to_string();
        steps.push_back(step);
    }
    return Json{{"start", to_json(cert.start)}, {"start_text", cert.start.to_string()}, {"mutations", cert.mutation_count()},
                {"steps", steps}};
}

Json to_json(const Multiplicity& m) { return m.is_infinite() ? Json("inf") : Json(m.value()); }

Json to_json(const DivTuple& t) {
    Json values = Json::array();
    for (const auto& m : t.values) values.push_back(to_json(m));
    return Json{{"edge", t.edge}, {"levels", Json::array({t.k_min, t.k_max})}, {"values", values}};
}

Json to_json(const Partition& p) { return Json(p.parts); }

Json to_json(const DualPair& p) { return Json{{"a", to_json(p.a_part)}, {"b", to_json(p.b_part)}, {"text", to_string(p)}}; }

Json to_json(const TriangularCertificate& cert) {
    Json moves = Json::array();
    for (auto m : cert.moves) moves.push_back(to_string(m));
    return Json{{"pair", to_json(cert.pair)}, {"moves", moves}, {"certificate", to_json(cert.certificate)}};
}

Json to_json(const PairReport& r) {
    return Json{{"a", r.a},
                {"b", r.b},
                {"pair", to_string(r.pair)},
                {"family", to_string(r.label)},
                {"status", to_string(r.status)},
                {"steps", r.steps}};
}

Json to_json(const SmallReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs) pairs.push_back(to_json(p));
    return Json{{"limit", r.limit}, {"all_pass", r.all_pass()}, {"no_failures", r.no_failures()}, {"pairs", pairs}};
}

Json to_json(const ResidueCount& c) {
    return Json{{"residue", c.residue}, {"count", c.count}, {"stable", c.stable}, {"from", c.from}};
}

Json to_json(const MutationGraph& g) {
    Json nodes = Json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        nodes.push_back(Json{{"id", i},
                             {"poly", g.nodes[i].to_string()},
                             {"array", coefficient_array(g.nodes[i])},
                             {"polygon", to_json(g.nodes[i].newton_polygon())}});
    Json edges = Json::array();
    for (auto [i, j] : g.edges) edges.push_back(Json::array({i, j}));
    return Json{{"nodes", nodes}, {"edges", edges}};
}

Json to_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json to_json(const Cone3& c) {
    Json rays = Json::array();
    for (const auto& r : c.rays()) rays.push_back(to_json(r));
    return Json{{"rays", rays}};
}

Json to_json(const Fan3& f) {
    Json cones = Json::array();
    for (const auto& c : f.cones) cones.push_back(to_json(c));
    return Json{{"cones", cones}};
}

Json to_json(const QuotientSingularity& s) {
    Json j{{"type", to_string(s)}, {"cyclic", s.cyclic}, {"order", s.r}, {"invariants", s.invariants}};
    if (s.cyclic) {
        j["weights"] = Json::array({s.weights[0], s.weights[1], s.weights[2]});
        auto n = s.normalized();
        j["normalized"] = Json::array({n[0], n[1], n[2]});
    }
    return j;
}

Json to_json(const WallFunction& w) {
    Json values = Json::array();
    for (const auto& v : w.values) values.push_back(v ? Json(*v) : Json(nullptr));
    return Json{{"name", w.name},    {"edge", w.edge},     {"exponents", to_json(w.exponents)},
                {"labels", w.labels}, {"values", values}, {"text", to_string(w)}};
}

Json to_json(const WallReport& r) {
    Json walls = Json::array();
    for (const auto& w : r.walls) walls.push_back(to_json(w));
    return Json{{"walls", walls},
                {"closing_sum", to_json(r.closing_sum)},
                {"closes", r.closes()},
                {"labels_distinct", r.labels_distinct}};
}

Json to_json(const ExtractionResult& r) {
    if (!r.certificate) return Json{{"found", false}, {"reason", r.reason}};
    const auto& c = *r.certificate;
    Json chain = Json::array();
    for (const auto& p : c.chain) chain.push_back(to_string(p));
    return Json{{"found", true},
                {"variant", c.variant},
                {"moves", c.moves},
                {"chain", chain},
                {"base_case", c.base_case},
                {"base_type", to_json(c.base_type)},
                {"type", to_json(c.type)}};
}

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected a point [x, y], got " + j.dump());
    return {int_from_json(j[0]), int_from_json(j[1])};
}

LatticePolygon polygon_from_json(const Json& j) {
    const Json& v = field(j, "vertices");
    if (!v.is_array() || v.empty()) throw std::invalid_argument("polygon needs a nonempty vertex list");
    std::vector<Point> pts;
    for (const auto& p : v) pts.push_back(point_from_json(p));
    return LatticePolygon::hull(pts);
}

LaurentPoly poly_from_json(const Json& j) {
    if (j.is_string()) return LaurentPoly::parse(j.get<std::string>());
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw std::invalid_argument("terms must be an array");
    LaurentPoly::Terms t;
    for (const auto& term : terms) {
        const Json& e = field(term, "exp");
        Point p;
        if (e.is_array() && e.size() == 1)
            p = {int_from_json(e[0]), 0};
        else
            p = point_from_json(e);
        BigInt c = big_from_json(field(term, "coeff"));
        if (t.count(p)) throw std::invalid_argument("repeated exponent " + to_string(p));
        t[p] = c;
    }
    return LaurentPoly::from_terms(t);
}

MutationSpec spec_from_json(const Json& j) {
    const Json& phi = field(j, "phi");
    MutationSpec s{AffineFunctional{point_from_json(field(phi, "normal")), int_from_json(field(phi, "constant"))},
                   poly_from_json(field(j, "h"))};
    s.validate();
    return s;
}

UnimodularAffineMap map_from_json(const Json& j) {
    const Json& m = field(j, "matrix");
    if (!m.is_array() || m.size() != 2) throw std::invalid_argument("matrix must be 2x2");
    Point r0 = point_from_json(m[0]), r1 = point_from_json(m[1]);
    return UnimodularAffineMap({r0.x, r0.y, r1.x, r1.y}, point_from_json(field(j, "translation")));
}

MutationCertificate certificate_from_json(const Json& j) {
    MutationCertificate cert;
    cert.start = poly_from_json(field(j, "start"));
    for (const auto& s : field(j, "steps")) {
        CertificateStep step;
        step.label = field(s, "label").get<std::string>();
        const Json& spec = field(s, "spec");
        if (!spec.is_null()) step.spec = spec_from_json(spec);
        step.frame = map_from_json(field(s, "frame"));
        step.result = poly_from_json(field(s, "result"));
        cert.steps.push_back(std::move(step));
    }
    return cert;
}

Partition partition_from_json(const Json& j) {
    if (j.is_string()) return parse_partition(j.get<std::string>());
    if (!j.is_array()) throw std::invalid_argument("expected a partition, got " + j.dump());
    std::vector<Int> parts;
    for (const auto& x : j) parts.push_back(int_from_json(x));
    return Partition::normalized(parts);
}

DualPair pair_from_json(const Json& j) {
    if (j.is_string()) return parse_dual_pair(j.get<std::string>());
    return {partition_from_json(field(j, "a")), partition_from_json(field(j, "b"))};
}

DivTuple div_tuple_from_json(const Json& j) {
    DivTuple t;
    t.edge = field(j, "edge").get<std::size_t>();
    const Json& lv = field(j, "levels");
    if (!lv.is_array() || lv.size() != 2) throw std::invalid_argument("levels must be [k_min, k_max]");
    t.k_min = int_from_json(lv[0]);
    t.k_max = int_from_json(lv[1]);
    for (const auto& v : field(j, "values")) {
        if (v.is_string() && v.get<std::string>() == "inf")
            t.values.push_back(Multiplicity::infinite());
        else
            t.values.push_back(Multiplicity::finite(int_from_json(v)));
    }
    if (static_cast<Int>(t.values.size()) != t.k_max - t.k_min + 1)
        throw std::invalid_argument("number of values does not match the level range");
    return t;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return Json::parse(in, nullptr, true, true);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << dump(j);
}

}  // namespace zmlp
