#include "zmlp/toric.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zmlp {

Vec3 cross3(const Vec3& u, const Vec3& v) {
    return {checked_sub(checked_mul(u[1], v[2]), checked_mul(u[2], v[1])),
            checked_sub(checked_mul(u[2], v[0]), checked_mul(u[0], v[2])),
            checked_sub(checked_mul(u[0], v[1]), checked_mul(u[1], v[0]))};
}

Int dot3(const Vec3& u, const Vec3& v) {
    return checked_add(checked_add(checked_mul(u[0], v[0]), checked_mul(u[1], v[1])), checked_mul(u[2], v[2]));
}

Int det3(const Vec3& u, const Vec3& v, const Vec3& w) { return dot3(u, cross3(v, w)); }

Vec3 primitive3(const Vec3& v) {
    Int g = gcd_int(gcd_int(v[0], v[1]), v[2]);
    if (g == 0) return v;
    return {v[0] / g, v[1] / g, v[2] / g};
}

std::string to_string(const Vec3& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

std::vector<Vec3> parse_vectors(const std::string& text) {
    std::vector<Vec3> out;
    std::string cleaned;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != ' ') cleaned += ch;
    std::stringstream rows(cleaned);
    std::string row;
    while (std::getline(rows, row, ';')) {
        if (row.empty()) continue;
        std::stringstream cols(row);
        std::string item;
        std::vector<Int> xs;
        while (std::getline(cols, item, ',')) {
            try {
                std::size_t used = 0;
                xs.push_back(std::stoll(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad vector entry '" + item + "'");
            }
        }
        if (xs.size() != 3) throw std::invalid_argument("expected three coordinates in '" + row + "'");
        out.push_back({xs[0], xs[1], xs[2]});
    }
    return out;
}

// ------------------------------------------------------------------ cones

namespace {

Vec3 negated(const Vec3& v) { return {-v[0], -v[1], -v[2]}; }

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

// Primitive normals n with n.g >= 0 for all generators and at least two
// independent generators on n = 0.
std::vector<Vec3> supporting_normals(const std::vector<Vec3>& gens) {
    std::set<Vec3> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Vec3 n = primitive3(cross3(gens[i], gens[j]));
            if (is_zero(n)) continue;
            bool pos = true, neg = true;
            for (const auto& g : gens) {
                Int s = dot3(n, g);
                if (s < 0) pos = false;
                if (s > 0) neg = false;
            }
            if (pos && !neg) out.insert(n);
            if (neg && !pos) out.insert(negated(n));
        }
    return {out.begin(), out.end()};
}

}  // namespace

Cone3::Cone3(std::vector<Vec3> generators) {
    std::vector<Vec3> gens;
    for (auto g : generators) {
        if (is_zero(g)) continue;
        g = primitive3(g);
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
    bool full = false;
    for (std::size_t i = 0; i < gens.size() && !full; ++i)
        for (std::size_t j = i + 1; j < gens.size() && !full; ++j)
            for (std::size_t k = j + 1; k < gens.size() && !full; ++k)
                full = det3(gens[i], gens[j], gens[k]) != 0;
    if (!full) throw std::invalid_argument("cone generators do not span the lattice");
    auto normals = supporting_normals(gens);
    if (normals.size() < 3) throw std::invalid_argument("cone is not pointed");

    std::vector<Vec3> extremal;
    for (const auto& g : gens) {
        int on = 0;
        for (const auto& n : normals) on += dot3(n, g) == 0;
        if (on >= 2) extremal.push_back(g);
    }
    if (extremal.size() != normals.size()) throw std::invalid_argument("cone is not pointed");

    Vec3 w{0, 0, 0};
    for (const auto& g : extremal)
        for (int c = 0; c < 3; ++c) w[c] = checked_add(w[c], g[c]);

    rays_.push_back(extremal.front());
    while (rays_.size() < extremal.size()) {
        const Vec3& cur = rays_.back();
        bool advanced = false;
        for (const auto& n : normals) {
            if (dot3(n, cur) != 0) continue;
            for (const auto& r : extremal)
                if (r != cur && dot3(n, r) == 0 && det3(cur, r, w) > 0) {
                    rays_.push_back(r);
                    advanced = true;
                    break;
                }
            if (advanced) break;
        }
        if (!advanced) throw std::logic_error("failed to order the rays of a cone");
    }
}

std::vector<Vec3> Cone3::facet_normals() const {
    std::vector<Vec3> out;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        const Vec3& u = rays_[i];
        const Vec3& v = rays_[(i + 1) % rays_.size()];
        out.push_back(primitive3(cross3(u, v)));
    }
    return out;
}

bool Cone3::contains(const Vec3& v) const {
    for (const auto& n : facet_normals())
        if (dot3(n, v) < 0) return false;
    return true;
}

bool Cone3::interior(const Vec3& v) const {
    for (const auto& n : facet_normals())
        if (dot3(n, v) <= 0) return false;
    return true;
}

bool Cone3::has_ray(const Vec3& v) const {
    Vec3 p = primitive3(v);
    return std::find(rays_.begin(), rays_.end(), p) != rays_.end();
}

Int Cone3::multiplicity() const {
    if (!simplicial()) throw std::invalid_argument("multiplicity needs a simplicial cone");
    return abs_int(det3(rays_[0], rays_[1], rays_[2]));
}

std::string to_string(const Cone3& c) {
    std::string s = "<";
    for (std::size_t i = 0; i < c.rays().size(); ++i) s += (i ? "," : "") + to_string(c.rays()[i]);
    return s + ">";
}

namespace {

// Extremal rays of the intersection of two cones.
std::vector<Vec3> intersection_rays(const Cone3& a, const Cone3& b) {
    std::vector<Vec3> normals = a.facet_normals();
    for (const auto& n : b.facet_normals()) normals.push_back(n);
    std::set<Vec3> out;
    for (std::size_t i = 0; i < normals.size(); ++i)
        for (std::size_t j = i + 1; j < normals.size(); ++j) {
            Vec3 d = primitive3(cross3(normals[i], normals[j]));
            if (is_zero(d)) continue;
            for (const Vec3& cand : {d, negated(d)})
                if (a.contains(cand) && b.contains(cand)) out.insert(cand);
        }
    return {out.begin(), out.end()};
}

// Whether the cone spanned by `inter` (a subset of a and of other) is a face of a.
bool is_face(const Cone3& a, const std::vector<Vec3>& inter, const Cone3& other) {
    std::vector<Vec3> vanishing;
    for (const auto& n : a.facet_normals()) {
        bool all = true;
        for (const auto& d : inter) all = all && dot3(n, d) == 0;
        if (all) vanishing.push_back(n);
    }
    for (const auto& r : a.rays()) {
        bool in_face = true;
        for (const auto& n : vanishing) in_face = in_face && dot3(n, r) == 0;
        if (in_face && !other.contains(r)) return false;
    }
    return true;
}

}  // namespace

void Fan3::validate() const {
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            auto inter = intersection_rays(cones[i], cones[j]);
            if (cones[i].contains(cones[j].rays().front()) && cones[j].rays().size() == cones[i].rays().size() &&
                std::all_of(cones[j].rays().begin(), cones[j].rays().end(), [&](const Vec3& r) { return cones[i].has_ray(r); }))
                throw std::invalid_argument("cone " + to_string(cones[i]) + " appears twice");
            if (!is_face(cones[i], inter, cones[j]) || !is_face(cones[j], inter, cones[i]))
                throw std::invalid_argument("cones " + to_string(cones[i]) + " and " + to_string(cones[j]) +
                                            " do not meet in a common face");
        }
}

bool Fan3::contains(const Vec3& v) const {
    return std::any_of(cones.begin(), cones.end(), [&](const Cone3& c) { return c.contains(v); });
}

Cone3 cone_over(const LatticePolygon& poly) {
    if (poly.dim() != 2) throw std::invalid_argument("cone over a polygon needs a two-dimensional polygon");
    std::vector<Vec3> gens;
    for (auto p : poly.vertices()) gens.push_back({p.x, p.y, 1});
    return Cone3(gens);
}

Cone3 dual_cone(const Cone3& c) { return Cone3(c.facet_normals()); }

Fan3 central_subdivision(const Cone3& dual, const Vec3& rho0) {
    if (!dual.interior(rho0)) throw std::invalid_argument("central ray " + to_string(rho0) + " is not interior");
    Fan3 fan;
    const auto& r = dual.rays();
    for (std::size_t i = 0; i < r.size(); ++i) fan.cones.emplace_back(std::vector<Vec3>{r[i], r[(i + 1) % r.size()], rho0});
    return fan;
}

ToricDegeneration toric_degeneration(const LatticePolygon& poly) {
    ToricDegeneration out;
    out.sigma = cone_over(poly);
    out.dual = dual_cone(out.sigma);
    Fan3 central = central_subdivision(out.dual);
    for (auto p : poly.vertices()) {
        Vec3 v{p.x, p.y, 1};
        for (const auto& c : central.cones) {
            int zeros = 0;
            for (const auto& r : c.rays()) zeros += r != Vec3{0, 0, 1} && dot3(r, v) == 0;
            if (zeros == 2) {
                out.fan.cones.push_back(c);
                break;
            }
        }
    }
    if (out.fan.cones.size() != central.cones.size()) throw std::logic_error("unmatched cone in the central subdivision");
    return out;
}

// ---------------------------------------------------------- singularities

namespace {

using Mat3 = std::array<std::array<Int, 3>, 3>;

// Smith form D = P * M * Q; returns D and Q.
std::pair<Mat3, Mat3> smith(Mat3 a) {
    Mat3 q{};
    for (int i = 0; i < 3; ++i) q[i][i] = 1;
    auto swap_rows = [&](int i, int j) { std::swap(a[i], a[j]); };
    auto swap_cols = [&](int i, int j) {
        for (int k = 0; k < 3; ++k) {
            std::swap(a[k][i], a[k][j]);
            std::swap(q[k][i], q[k][j]);
        }
    };
    auto add_row = [&](int dst, int src, Int m) {
        for (int k = 0; k < 3; ++k) a[dst][k] = checked_add(a[dst][k], checked_mul(m, a[src][k]));
    };
    auto add_col = [&](int dst, int src, Int m) {
        for (int k = 0; k < 3; ++k) {
            a[k][dst] = checked_add(a[k][dst], checked_mul(m, a[k][src]));
            q[k][dst] = checked_add(q[k][dst], checked_mul(m, q[k][src]));
        }
    };
    for (int t = 0; t < 3; ++t) {
        while (true) {
            int bi = -1, bj = -1;
            for (int i = t; i < 3; ++i)
                for (int j = t; j < 3; ++j)
                    if (a[i][j] != 0 && (bi < 0 || abs_int(a[i][j]) < abs_int(a[bi][bj]))) bi = i, bj = j;
            if (bi < 0) return {a, q};
            swap_rows(t, bi);
            swap_cols(t, bj);
            bool clean = true;
            for (int i = t + 1; i < 3; ++i) {
                add_row(i, t, -(a[i][t] / a[t][t]));
                clean = clean && a[i][t] == 0;
            }
            for (int j = t + 1; j < 3; ++j) {
                add_col(j, t, -(a[t][j] / a[t][t]));
                clean = clean && a[t][j] == 0;
            }
            if (!clean) continue;
            for (int i = t + 1; i < 3 && clean; ++i)
                for (int j = t + 1; j < 3 && clean; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, 1);
                        clean = false;
                    }
            if (clean) break;
        }
        if (a[t][t] < 0)
            for (int k = 0; k < 3; ++k) a[t][k] = -a[t][k];
    }
    return {a, q};
}

}  // namespace

std::array<Int, 3> QuotientSingularity::normalized() const {
    if (!cyclic) throw std::domain_error("non-cyclic quotient has no weight normal form");
    if (r == 1) return {0, 0, 0};
    std::array<Int, 3> best{r, r, r};
    for (Int u = 1; u < r; ++u) {
        if (gcd_int(u, r) != 1) continue;
        std::array<Int, 3> w;
        for (int i = 0; i < 3; ++i) w[i] = mod_floor(checked_mul(u, weights[i]), r);
        std::sort(w.begin(), w.end());
        best = std::min(best, w);
    }
    return best;
}

std::string to_string(const QuotientSingularity& s) {
    if (!s.cyclic) {
        std::string out = "non-cyclic ";
        for (std::size_t i = 0; i < s.invariants.size(); ++i)
            out += (i ? "+Z/" : "Z/") + std::to_string(s.invariants[i]);
        return out;
    }
    if (s.r == 1) return "smooth";
    std::string out = "1/" + std::to_string(s.r) + "(";
    for (int i = 0; i < 3; ++i) {
        Int w = s.weights[i];
        if (2 * w > s.r) w -= s.r;
        out += (i ? "," : "") + std::to_string(w);
    }
    return out + ")";
}

QuotientSingularity make_type(Int r, std::array<Int, 3> weights) {
    if (r < 1) throw std::invalid_argument("quotient order must be positive");
    QuotientSingularity s;
    s.r = r;
    for (int i = 0; i < 3; ++i) s.weights[i] = r == 1 ? 0 : mod_floor(weights[i], r);
    if (r > 1) s.invariants = {r};
    return s;
}

QuotientSingularity parse_type(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (ch != ' ') t += ch;
    if (t == "smooth") return make_type(1, {0, 0, 0});
    auto slash = t.find('/'), open = t.find('('), close = t.find(')');
    if (t.rfind("1/", 0) != 0 || open == std::string::npos || close != t.size() - 1 || slash > open)
        throw std::invalid_argument("expected a type like 1/r(w1,w2,w3), got '" + text + "'");
    Int r = std::stoll(t.substr(slash + 1, open - slash - 1));
    std::vector<Int> w;
    std::stringstream ss(t.substr(open + 1, close - open - 1));
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(std::stoll(item));
    if (w.size() != 3) throw std::invalid_argument("expected three weights in '" + text + "'");
    return make_type(r, {w[0], w[1], w[2]});
}

QuotientSingularity singularity_type(const Cone3& cone) {
    if (!cone.simplicial()) throw std::invalid_argument("singularity type needs a simplicial cone");
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = cone.rays()[j][i];
    auto [d, q] = smith(m);
    std::vector<Int> inv;
    for (int i = 0; i < 3; ++i)
        if (d[i][i] > 1) inv.push_back(d[i][i]);
    if (inv.size() > 1) {
        QuotientSingularity s;
        s.cyclic = false;
        s.r = 1;
        for (auto x : inv) s.r = checked_mul(s.r, x);
        s.invariants = inv;
        return s;
    }
    Int r = d[2][2];
    return make_type(r, {q[0][2], q[1][2], q[2][2]});
}

bool sing_equivalent(const QuotientSingularity& s, const QuotientSingularity& t, const SingEquivalence& eq) {
    if (s.cyclic != t.cyclic) return false;
    if (!s.cyclic) return s.invariants == t.invariants;
    if (s.r != t.r) return false;
    if (s.r == 1) return true;
    auto target = t.weights;
    if (eq.permutations) std::sort(target.begin(), target.end());
    for (Int u = 1; u < s.r; ++u) {
        if (gcd_int(u, s.r) != 1 || (!eq.units && u != 1)) continue;
        std::array<Int, 3> w;
        for (int i = 0; i < 3; ++i) w[i] = mod_floor(checked_mul(u, s.weights[i]), s.r);
        if (eq.permutations) std::sort(w.begin(), w.end());
        if (w == target) return true;
    }
    return false;
}

Fan3 star_subdivision(const Fan3& fan, const Vec3& ray) {
    if (is_zero(ray)) throw std::invalid_argument("cannot subdivide along the zero vector");
    Vec3 w = primitive3(ray);
    if (!fan.contains(w)) throw std::invalid_argument("ray " + to_string(w) + " is outside the fan");
    Fan3 out;
    for (const auto& c : fan.cones) {
        if (!c.contains(w) || c.has_ray(w)) {
            out.cones.push_back(c);
            continue;
        }
        auto normals = c.facet_normals();
        const auto& r = c.rays();
        for (std::size_t i = 0; i < r.size(); ++i)
            if (dot3(normals[i], w) > 0) out.cones.emplace_back(std::vector<Vec3>{w, r[i], r[(i + 1) % r.size()]});
    }
    return out;
}

// ------------------------------------------------------------------ walls

namespace {

Int preset_value(std::size_t i) {
    // 0, -1, 1, -2, 2, ...
    Int k = static_cast<Int>((i + 1) / 2);
    return i % 2 == 1 ? -k : k;
}

std::string term(Int d) { return d == 1 ? "u" : "u^" + std::to_string(d); }

}  // namespace

std::string to_string(const WallFunction& w) {
    std::string out;
    for (std::size_t i = 0; i < w.exponents.parts.size(); ++i) {
        std::string u = term(w.exponents.parts[i]);
        if (i < w.values.size() && w.values[i]) {
            Int v = *w.values[i];
            if (v == 0)
                out += u;
            else if (v == 1)
                out += "(" + u + "-z)";
            else if (v == -1)
                out += "(" + u + "+z)";
            else
                out += "(" + u + (v > 0 ? "-" : "+") + std::to_string(abs_int(v)) + "*z)";
        } else {
            out += "(" + u + "-" + w.labels[i] + "*z)";
        }
        if (i + 1 < w.exponents.parts.size()) out += "*";
    }
    return out;
}

WallReport wall_functions(const LatticePolygon& poly, const std::vector<Partition>& dual_partitions, LambdaPolicy policy) {
    if (poly.dim() != 2) throw std::invalid_argument("wall functions need a two-dimensional polygon");
    auto edges = poly.edges();
    if (dual_partitions.size() != edges.size())
        throw std::invalid_argument("expected one partition per edge, got " + std::to_string(dual_partitions.size()));
    const std::size_t n = edges.size();
    WallReport rep;
    rep.closing_sum = {0, 0};
    for (std::size_t e = 0; e < n; ++e) {
        const Partition& p = dual_partitions[e];
        if (p.degree() != edges[e].length)
            throw std::invalid_argument("partition " + to_string(p) + " does not match edge length " +
                                        std::to_string(edges[e].length));
        WallFunction w;
        w.edge = e;
        std::size_t i = e + 1, j = (e + 1) % n + 1;
        if (i > j) std::swap(i, j);
        w.name = n <= 9 ? "f" + std::to_string(i) + std::to_string(j) : "f" + std::to_string(i) + "_" + std::to_string(j);
        w.exponents = p;
        for (std::size_t k = 0; k < p.parts.size(); ++k) {
            std::string label;
            if (n == 3) {
                std::size_t opposite = (e + 2) % 3;  // vertex not on the edge
                label = std::string(1, static_cast<char>('a' + opposite)) + std::to_string(k + 1);
            } else {
                label = "l" + std::to_string(e + 1) + "_" + std::to_string(k + 1);
            }
            w.labels.push_back(label);
            if (policy == LambdaPolicy::Preset)
                w.values.emplace_back(preset_value(k));
            else
                w.values.emplace_back(std::nullopt);
        }
        if (policy == LambdaPolicy::Preset) {
            std::set<Int> seen;
            for (const auto& v : w.values) rep.labels_distinct = rep.labels_distinct && seen.insert(*v).second;
        }
        rep.closing_sum = rep.closing_sum + w.degree() * edges[e].tangent;
        rep.walls.push_back(std::move(w));
    }
    return rep;
}

WallReport wall_functions(const LaurentPoly& f, LambdaPolicy policy) {
    LatticePolygon poly = f.newton_polygon();
    if (poly.dim() != 2) throw std::invalid_argument("wall functions need a two-dimensional Newton polygon");
    auto req = reqdiv_tuples(f);
    std::vector<Partition> parts;
    for (const auto& t : req.tuples) parts.push_back(conjugate(steps_of(t)));
    return wall_functions(poly, parts, policy);
}

// ------------------------------------------------------------- extraction

DucatData ducat_sequence(Int m, Int k) {
    if (m < 0 || k < 1) throw std::invalid_argument("ducat sequence needs m >= 0 and k >= 1");
    DucatData d;
    d.q = {0, 1};
    while (static_cast<Int>(d.q.size()) < k + 2) {
        std::size_t j = d.q.size() - 1;
        d.q.push_back(checked_sub(checked_mul(m, d.q[j]), d.q[j - 1]));
    }
    d.a = checked_add(d.q[k], d.q[k - 1]);
    d.r = checked_add(d.q[k], d.q[k + 1]);
    if (d.r < 1) throw std::domain_error("ducat sequence gives a non-positive order");
    d.type = make_type(d.r, {1, -1, d.a});
    return d;
}

namespace {

struct Base {
    std::string name;
    QuotientSingularity type;
};

bool all_equal(const Partition& p, Int v) {
    return std::all_of(p.parts.begin(), p.parts.end(), [&](Int x) { return x == v; });
}

// Base cases for the orientation in which the first partition stays fixed.
std::optional<Base> base_case(const DualPair& p) {
    const Int a = p.a(), b = p.b();
    if (p.a_part == Partition{1} && all_equal(p.b_part, 1)) return Base{"A_n", make_type(1, {0, 0, 0})};
    if (p.b_part == Partition{1} && all_equal(p.a_part, 1)) return Base{"dual A_n", make_type(a, {1, -1, -1})};
    if (p == DualPair{Partition{3}, Partition{2, 1, 1, 1}}) return Base{"(3),(2,1,1,1)", make_type(3, {1, -1, -1})};
    if (p.a_part.length() == 1 && p.b_part.length() >= 2 && all_equal(p.b_part, p.b_part.max_part())) {
        const Int q = p.b_part.max_part();
        const Int m = static_cast<Int>(p.b_part.length()) - 2;
        auto probe = ducat_sequence(m, 1);
        for (Int k = 1; k <= b + 2; ++k) {
            probe = ducat_sequence(m, k);
            if (probe.q[k] > q || probe.q[k] <= 0) break;
            if (probe.q[k] == q && probe.r == a) return Base{"ducat m=" + std::to_string(m) + " k=" + std::to_string(k), probe.type};
        }
    }
    return std::nullopt;
}

struct Step {
    std::string move;
    DualPair pair;
};

std::vector<Step> inverse_moves(const DualPair& p) {
    std::vector<Step> out;
    const auto& bp = p.b_part.parts;
    if (bp.size() > 1 && bp.front() == p.a()) {
        std::vector<Int> rest(bp.begin() + 1, bp.end());
        out.push_back({"alpha^-1", {p.a_part, Partition(rest)}});
    }
    if (bp.front() < p.a()) {
        DualPair q = beta_pair(p);
        if (q.b() < p.b()) out.push_back({"beta", q});
    }
    return out;
}

std::optional<ExtractionCertificate> search(const DualPair& start) {
    std::map<DualPair, Step> parent;
    std::deque<DualPair> queue{start};
    parent[start] = {"", start};
    while (!queue.empty()) {
        DualPair p = queue.front();
        queue.pop_front();
        if (auto base = base_case(p)) {
            ExtractionCertificate cert;
            cert.base_case = base->name;
            cert.base_type = base->type;
            for (DualPair cur = p; cur != start; cur = parent[cur].pair) {
                cert.chain.push_back(cur);
                cert.moves.push_back(parent[cur].move);
            }
            cert.chain.push_back(start);
            std::reverse(cert.chain.begin(), cert.chain.end());
            std::reverse(cert.moves.begin(), cert.moves.end());
            return cert;
        }
        for (auto& s : inverse_moves(p))
            if (parent.emplace(s.pair, Step{s.move, p}).second) queue.push_back(s.pair);
    }
    return std::nullopt;
}

}  // namespace

ExtractionResult extraction_certificate(const DualPair& pair) {
    if (pair.a_part.empty() || pair.b_part.empty()) throw std::invalid_argument("dual pair has an empty partition");
    if (gcd_int(pair.a(), pair.b()) != 1) throw std::invalid_argument("extraction needs coprime degrees");
    ExtractionResult res;
    for (int variant = 1; variant <= 2; ++variant) {
        DualPair start = variant == 1 ? pair : tau_pair(pair);
        auto cert = search(start);
        if (!cert) continue;
        const DualPair& last = cert->chain.back();
        // moves keep the first degree and change the second up to sign modulo it
        if (!sing_equivalent(cert->base_type, make_type(last.a(), {1, -1, last.b()})))
            throw std::logic_error("base case type disagrees with its degrees");
        cert->variant = variant;
        cert->type = make_type(start.a(), {1, -1, start.b()});
        if (variant == 2)
            for (auto& p : cert->chain) p = tau_pair(p);
        res.certificate = std::move(cert);
        return res;
    }
    res.reason = "no chain of inverse moves reaches a proved base case; the Spike family is open";
    return res;
}

ExtractionResult extraction_certificate(const DualPair& pair, Int a, Int b) {
    if (pair.a() != a || pair.b() != b)
        throw std::invalid_argument("pair " + to_string(pair) + " does not have degrees (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
    return extraction_certificate(pair);
}

}  // namespace zmlp
