#include "zmlp/divisibility.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "zmlp/linalg.hpp"
#include "zmlp/mutation.hpp"

namespace zmlp {

// ---------------------------------------------------------------- partitions

Partition::Partition(std::initializer_list<Int> p) : Partition(std::vector<Int>(p)) {}

Partition::Partition(std::vector<Int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be decreasing");
    }
}

Partition Partition::normalized(std::vector<Int> p) {
    for (Int v : p)
        if (v < 0) throw std::invalid_argument("negative partition part");
    p.erase(std::remove(p.begin(), p.end(), Int{0}), p.end());
    std::sort(p.begin(), p.end(), std::greater<>());
    return Partition(std::move(p));
}

Int Partition::degree() const { return std::accumulate(parts.begin(), parts.end(), Int{0}); }

Int Partition::sum_of_squares() const {
    Int s = 0;
    for (Int v : parts) s = checked_add(s, checked_mul(v, v));
    return s;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.parts.size(); ++i) os << (i ? "," : "") << p.parts[i];
    os << ")";
    return os.str();
}

Partition conjugate(const Partition& p) {
    std::vector<Int> out;
    for (Int k = 1; k <= p.max_part(); ++k) {
        Int c = 0;
        for (Int v : p.parts)
            if (v >= k) ++c;
        out.push_back(c);
    }
    return Partition(std::move(out));
}

namespace {

std::vector<Int> parse_ints(const std::string& s) {
    std::vector<Int> out;
    std::string cur;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            cur += c;
        } else if (c == ',' || c == ' ' || c == '(' || c == ')') {
            if (!cur.empty()) out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in partition");
        }
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    return out;
}

}  // namespace

Partition parse_partition(const std::string& text) { return Partition(parse_ints(text)); }

std::string to_string(const DualPair& p) { return to_string(p.a_part) + "," + to_string(p.b_part); }

DualPair alpha_pair(const DualPair& p) {
    std::vector<Int> parts = p.b_part.parts;
    parts.insert(parts.begin(), p.a());
    return {p.a_part, Partition::normalized(parts)};
}

DualPair beta_pair(const DualPair& p) {
    const Int a = p.a();
    std::vector<Int> parts;
    for (Int x : p.b_part.parts) {
        if (x >= a) throw std::domain_error("beta: pair " + to_string(p) + " is not in domain");
        parts.push_back(a - x);
    }
    return {p.a_part, Partition::normalized(parts)};
}

DualPair tau_pair(const DualPair& p) { return {p.b_part, p.a_part}; }

DualPair parse_dual_pair(const std::string& text) {
    auto bar = text.find('|');
    if (bar != std::string::npos)
        return {parse_partition(text.substr(0, bar)), parse_partition(text.substr(bar + 1))};
    // "(..),(..)": split at the closing parenthesis of the first group
    auto close = text.find(')');
    if (close == std::string::npos) throw std::invalid_argument("dual pair must look like (a..),(b..) or a..|b..");
    auto open2 = text.find('(', close);
    if (open2 == std::string::npos) throw std::invalid_argument("dual pair is missing its second partition");
    return {parse_partition(text.substr(0, close + 1)), parse_partition(text.substr(open2))};
}

// ---------------------------------------------------------------- tuples

Multiplicity DivTuple::at(Int k) const {
    if (k < k_min || k > k_max) throw std::out_of_range("level outside the tuple");
    return values[static_cast<std::size_t>(k - k_min)];
}

std::string to_string(const DivTuple& t) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.values.size(); ++i) os << (i ? "," : "") << to_string(t.values[i]);
    os << ")";
    return os.str();
}

std::vector<std::vector<Point>> edge_levels(const LatticePolygon& poly, const Edge& e) {
    std::map<Int, std::vector<Point>> by;
    Int kmax = 0;
    for (auto p : poly.lattice_points()) {
        Int k = e.level(p);
        by[k].push_back(p);
        kmax = std::max(kmax, k);
    }
    std::vector<std::vector<Point>> out(static_cast<std::size_t>(kmax + 1));
    for (auto& [k, pts] : by) {
        std::sort(pts.begin(), pts.end(), [&](Point a, Point b) { return dot(a, e.tangent) < dot(b, e.tangent); });
        out[static_cast<std::size_t>(k)] = std::move(pts);
    }
    return out;
}

DivTuple div_tuple(const LaurentPoly& f, const Edge& e) {
    AffineFunctional phi{e.inner_normal, -dot(e.inner_normal, e.start)};
    LatticePolygon poly = f.newton_polygon();
    auto levels = edge_levels(poly, e);
    DivTuple t;
    t.edge = e.index;
    t.k_min = 0;
    t.k_max = static_cast<Int>(levels.size()) - 1;
    std::map<Int, LaurentPoly> sl;
    for (auto& s : slices(f, phi)) sl.emplace(s.level, std::move(s.poly));
    for (Int k = 0; k <= t.k_max; ++k) {
        auto it = sl.find(k);
        t.values.push_back(it == sl.end() ? Multiplicity::infinite() : binomial_multiplicity(it->second, e.tangent));
    }
    return t;
}

// ---------------------------------------------------------------- reqdiv

namespace {

class DivisibilitySystem {
public:
    explicit DivisibilitySystem(const LatticePolygon& poly) : poly_(poly), edges_(poly.edges()) {
        points_ = poly.lattice_points();
        for (std::size_t i = 0; i < points_.size(); ++i) index_[points_[i]] = i;
        for (const auto& e : edges_) levels_.push_back(edge_levels(poly, e));
    }

    std::size_t n() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t level_count(std::size_t e) const { return levels_[e].size(); }
    Int slice_size(std::size_t e, std::size_t k) const { return static_cast<Int>(levels_[e][k].size()); }

    // j-th derivative functional of slice k of edge e, evaluated at t = -1 up to sign.
    RationalVector functional(std::size_t e, std::size_t k, Int j) const {
        RationalVector v(n(), Rational(0));
        const auto& pts = levels_[e][k];
        for (std::size_t i = 0; i < pts.size(); ++i) {
            BigInt c = binomial(static_cast<Int>(i), j);
            if (i % 2 == 1) c = -c;
            v[index_.at(pts[i])] = c;
        }
        return v;
    }

    using Orders = std::vector<std::vector<Int>>;  // [edge][level]

    std::vector<RationalVector> solution_space(const Orders& d) const {
        RationalMatrix rows;
        for (std::size_t e = 0; e < edges_.size(); ++e)
            for (std::size_t k = 0; k < levels_[e].size(); ++k)
                for (Int j = 0; j < std::min(d[e][k], slice_size(e, k)); ++j) rows.push_back(functional(e, k, j));
        return nullspace(std::move(rows), n());
    }

    // Multiplicity attained by a generic element of the span of `basis`;
    // slice_size means the slice vanishes identically.
    Int generic_order(const std::vector<RationalVector>& basis, std::size_t e, std::size_t k, Int from) const {
        for (Int j = from; j < slice_size(e, k); ++j) {
            RationalVector f = functional(e, k, j);
            for (const auto& b : basis)
                if (dot(f, b) != 0) return j;
        }
        return slice_size(e, k);
    }

    bool admissible(const Orders& d, const Orders& target) const {
        auto basis = solution_space(d);
        if (basis.empty()) return false;
        for (auto v : poly_.vertices()) {
            std::size_t i = index_.at(v);
            if (std::none_of(basis.begin(), basis.end(), [&](const RationalVector& b) { return b[i] != 0; }))
                return false;
        }
        for (std::size_t e = 0; e < edges_.size(); ++e)
            for (std::size_t k = 0; k < levels_[e].size(); ++k) {
                Int from = std::min(d[e][k], slice_size(e, k));
                if (generic_order(basis, e, k, from) != target[e][k]) return false;
            }
        return true;
    }

    std::size_t index_of(Point p) const { return index_.at(p); }
    const std::vector<std::vector<Point>>& levels(std::size_t e) const { return levels_[e]; }

private:
    LatticePolygon poly_;
    std::vector<Edge> edges_;
    std::vector<Point> points_;
    std::map<Point, std::size_t> index_;
    std::vector<std::vector<std::vector<Point>>> levels_;
};

DivisibilitySystem::Orders capped_div(const LaurentPoly& f, const DivisibilitySystem& sys) {
    DivisibilitySystem::Orders d;
    for (std::size_t e = 0; e < sys.edges().size(); ++e) {
        DivTuple t = div_tuple(f, sys.edges()[e]);
        std::vector<Int> row;
        for (std::size_t k = 0; k < t.values.size(); ++k)
            row.push_back(std::min(t.values[k].value_or(sys.slice_size(e, k)), sys.slice_size(e, k)));
        d.push_back(std::move(row));
    }
    return d;
}

std::vector<std::size_t> short_edges_first(const DivisibilitySystem& sys) {
    std::vector<std::size_t> idx(sys.edges().size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return sys.edges()[a].length < sys.edges()[b].length; });
    return idx;
}

DivisibilitySystem::Orders descend(const DivisibilitySystem& sys, const DivisibilitySystem::Orders& target,
                                   const std::vector<std::size_t>& edges, bool high_levels_first) {
    DivisibilitySystem::Orders d = target;
    for (std::size_t e : edges) {
        std::size_t nk = d[e].size();
        for (std::size_t step = 0; step < nk; ++step) {
            std::size_t k = high_levels_first ? nk - 1 - step : step;
            Int cur = d[e][k];
            for (Int v = 0; v < cur; ++v) {
                auto trial = d;
                trial[e][k] = v;
                if (sys.admissible(trial, target)) {
                    d = std::move(trial);
                    break;
                }
            }
        }
    }
    return d;
}

bool leq(const DivisibilitySystem::Orders& x, const DivisibilitySystem::Orders& y) {
    for (std::size_t e = 0; e < x.size(); ++e)
        for (std::size_t k = 0; k < x[e].size(); ++k)
            if (x[e][k] > y[e][k]) return false;
    return true;
}

struct Minorant {
    std::vector<Int> values;
    Int total = -1;
    int ties = 0;
};

// Suffix sums of decreasing step sequences that stay below cap and reach zero.
void search_minorant(const std::vector<Int>& cap, std::vector<Int>& cur, Int remaining, Int max_step, Minorant& best) {
    std::size_t k = cur.size();
    if (remaining == 0) {
        std::vector<Int> v = cur;
        v.resize(cap.size(), 0);
        Int total = std::accumulate(v.begin(), v.end(), Int{0});
        if (total > best.total) {
            best = {v, total, 0};
        } else if (total == best.total) {
            if (v > best.values) best.values = v;
            ++best.ties;
        }
        return;
    }
    if (k >= cap.size() || remaining > cap[k]) return;
    cur.push_back(remaining);
    for (Int s = std::min(max_step, remaining); s >= 1; --s) search_minorant(cap, cur, remaining - s, s, best);
    cur.pop_back();
}

std::vector<DivTuple> to_tuples(const DivisibilitySystem::Orders& d) {
    std::vector<DivTuple> out;
    for (std::size_t e = 0; e < d.size(); ++e) {
        DivTuple t;
        t.edge = e;
        t.k_min = 0;
        t.k_max = static_cast<Int>(d[e].size()) - 1;
        for (Int v : d[e]) t.values.push_back(Multiplicity::finite(v));
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

ReqdivResult reqdiv_tuples(const LaurentPoly& f, ReqdivMethod method) {
    LatticePolygon poly = f.newton_polygon();
    if (poly.dim() != 2) throw std::invalid_argument("required divisibility needs a 2-dimensional Newton polygon");
    DivisibilitySystem sys(poly);
    auto target = capped_div(f, sys);
    ReqdivResult r;
    if (method == ReqdivMethod::GreedyDescent) {
        auto order = short_edges_first(sys);
        auto primary = descend(sys, target, order, true);
        std::reverse(order.begin(), order.end());
        auto alternative = descend(sys, target, order, false);
        r.tuples = to_tuples(primary);
        r.unique = primary == alternative || leq(primary, alternative);
        return r;
    }
    DivisibilitySystem::Orders d;
    for (const auto& cap0 : target) {
        Int content = *std::min_element(cap0.begin(), cap0.end());
        std::vector<Int> cap = cap0;
        for (auto& c : cap) c -= content;
        Minorant best;
        std::vector<Int> cur;
        search_minorant(cap, cur, cap.front(), cap.front(), best);
        if (best.total < 0) best.values.assign(cap.size(), 0);
        if (best.ties > 0) r.unique = false;
        for (auto& v : best.values) v += content;
        d.push_back(std::move(best.values));
    }
    r.tuples = to_tuples(d);
    r.forcing = sys.admissible(d, target);
    return r;
}

DivTuple reqdiv_tuple(const LaurentPoly& f, const Edge& e) { return reqdiv_tuples(f).tuples.at(e.index); }

Partition steps_of(const DivTuple& t) {
    std::vector<Int> s;
    for (std::size_t k = 0; k < t.values.size(); ++k) {
        if (t.values[k].is_infinite() || (k + 1 < t.values.size() && t.values[k + 1].is_infinite()))
            throw std::invalid_argument("steps need finite entries up to the first zero, got " + to_string(t));
        Int dk = t.values[k].value();
        if (dk == 0) break;
        Int next = k + 1 < t.values.size() ? t.values[k + 1].value() : 0;
        s.push_back(dk - next);
    }
    return Partition::normalized(std::move(s));
}

namespace {

std::optional<Edge> edge_with_normal(const LatticePolygon& poly, Point normal) {
    for (const auto& e : poly.edges())
        if (e.inner_normal == normal) return e;
    return std::nullopt;
}

// (1+z^m)-content of f along the slices parallel to e.
Int binomial_content(const LaurentPoly& f, const Edge& e) {
    DivTuple t = div_tuple(f, e);
    std::optional<Int> r;
    for (const auto& v : t.values)
        if (v.is_finite()) r = r ? std::min(*r, v.value()) : v.value();
    return r.value_or(0);
}

Partition factor_steps(const LaurentPoly& g, const Edge& e) {
    LatticePolygon p = g.newton_polygon();
    if (p.dim() == 2) {
        auto ge = edge_with_normal(p, e.inner_normal);
        return ge ? divstep(g, *ge) : Partition{};
    }
    if (p.dim() == 1) {
        Point d = p.vertices()[1] - p.vertices()[0];
        if (cross(d, e.tangent) != 0) return {};
        auto bp = as_binomial_power(g.scaled(1));
        Int r = bp ? bp->exponent : lattice_length(p.vertices()[0], p.vertices()[1]);
        return Partition(std::vector<Int>(static_cast<std::size_t>(r), 1));
    }
    return {};
}

}  // namespace

Partition divstep(const LaurentPoly& f, const Edge& e, const std::vector<LaurentPoly>* factors) {
    if (factors && !factors->empty()) {
        LaurentPoly prod(1);
        for (const auto& g : *factors) prod = prod * g;
        if (!(prod == f)) throw std::invalid_argument("supplied factors do not multiply to the polynomial");
        std::vector<Int> all;
        for (const auto& g : *factors) {
            Partition s = factor_steps(g, e);
            all.insert(all.end(), s.parts.begin(), s.parts.end());
        }
        return Partition::normalized(std::move(all));
    }
    Int r = binomial_content(f, e);
    if (r > 0) {
        auto g = exact_divide(f, LaurentPoly::binomial(e.tangent).pow(r));
        if (!g) throw std::logic_error("binomial content does not divide");
        Partition s = factor_steps(*g, e);
        std::vector<Int> all = s.parts;
        all.insert(all.end(), static_cast<std::size_t>(r), 1);
        return Partition::normalized(std::move(all));
    }
    Partition s = steps_of(reqdiv_tuple(f, e));
    if (s.degree() != e.length) throw std::invalid_argument("reducible input, factorization required");
    return s;
}

Partition reqdivstep(const LaurentPoly& f, const Edge& e) {
    Int r = binomial_content(f, e);
    if (r == 0) return steps_of(reqdiv_tuple(f, e));
    auto g = exact_divide(f, LaurentPoly::binomial(e.tangent).pow(r));
    if (!g) throw std::logic_error("binomial content does not divide");
    LatticePolygon p = g->newton_polygon();
    if (p.dim() != 2) return {};
    auto ge = edge_with_normal(p, e.inner_normal);
    return ge ? steps_of(reqdiv_tuple(*g, *ge)) : Partition{};
}

TrianglePair dual_pair(const LaurentPoly& f0) {
    LaurentPoly f = standardize(f0);
    auto pos = standard_position(f);
    LatticePolygon poly = f.newton_polygon();
    auto req = reqdiv_tuples(f);
    Edge bottom = poly.edge(0), left = poly.edge(2);
    Partition sb = steps_of(req.tuples[0]);
    Partition sa = steps_of(req.tuples[2]);
    if (sb.degree() != bottom.length || sa.degree() != left.length)
        throw std::invalid_argument("divisibility steps do not partition the edge lengths");
    return {pos->a, pos->b, {conjugate(sa), conjugate(sb)}};
}

// ---------------------------------------------------------------- reports

bool ZeromutReport::all_convex() const { return std::all_of(convex.begin(), convex.end(), [](bool b) { return b; }); }

bool is_convex_tuple(const DivTuple& t) {
    for (std::size_t k = 1; k + 1 < t.values.size(); ++k) {
        Int a = t.values[k - 1].value(), b = t.values[k].value(), c = t.values[k + 1].value();
        if (b - a > c - b) return false;
    }
    return true;
}

namespace {

Int total_of(const LatticePolygon& poly, const std::vector<DivTuple>& tuples) {
    Int total = 0;
    auto edges = poly.edges();
    for (const auto& t : tuples) {
        const Edge& e = edges.at(t.edge);
        bool duplicate = false;
        for (const auto& o : tuples)
            if (o.edge < t.edge && edges.at(o.edge).tangent == -e.tangent) duplicate = true;
        if (duplicate) continue;
        for (const auto& v : t.values) total += v.value();
    }
    return total;
}

}  // namespace

Int reqdiv_total(const LaurentPoly& f) { return total_of(f.newton_polygon(), reqdiv_tuples(f).tuples); }

ZeromutReport verify_zeromut_props(const LaurentPoly& f) {
    LatticePolygon poly = f.newton_polygon();
    auto req = reqdiv_tuples(f).tuples;
    ZeromutReport r;
    for (const auto& t : req) r.convex.push_back(is_convex_tuple(t));
    r.reqdiv_total = total_of(poly, req);
    r.lattice_points = static_cast<Int>(poly.lattice_point_count());
    return r;
}

// ---------------------------------------------------------------- reconstruction

std::optional<LaurentPoly> reconstruct_from_reqdiv(const LatticePolygon& poly, const std::vector<DivTuple>& tuples) {
    if (poly.dim() != 2) return std::nullopt;
    DivisibilitySystem sys(poly);
    RationalMatrix rows;
    for (const auto& t : tuples) {
        if (t.edge >= sys.edges().size()) return std::nullopt;
        for (Int k = t.k_min; k <= t.k_max; ++k) {
            if (k < 0 || static_cast<std::size_t>(k) >= sys.level_count(t.edge)) continue;
            Int d = std::min(t.at(k).value_or(sys.slice_size(t.edge, static_cast<std::size_t>(k))),
                             sys.slice_size(t.edge, static_cast<std::size_t>(k)));
            for (Int j = 0; j < d; ++j) rows.push_back(sys.functional(t.edge, static_cast<std::size_t>(k), j));
        }
    }
    const std::size_t n = sys.n();
    auto basis = nullspace(rows, n);
    RationalVector sol;
    if (basis.size() == 1) {
        std::size_t v0 = sys.index_of(poly.vertices()[0]);
        if (basis[0][v0] == 0) return std::nullopt;
        Rational s = 1 / basis[0][v0];
        sol = basis[0];
        for (auto& x : sol) x *= s;
    } else if (basis.size() > 1) {
        // pin boundary coefficients to binomials along every edge
        RationalVector rhs(rows.size(), Rational(0));
        for (const auto& e : sys.edges()) {
            for (Int i = 0; i <= e.length; ++i) {
                RationalVector r(n, Rational(0));
                r[sys.index_of(e.start + i * e.tangent)] = 1;
                rows.push_back(std::move(r));
                rhs.push_back(Rational(binomial(e.length, i)));
            }
        }
        auto x = solve_unique(rows, rhs, n);
        if (!x) return std::nullopt;
        sol = *x;
    } else {
        return std::nullopt;
    }
    LaurentPoly::Terms terms;
    for (std::size_t i = 0; i < n; ++i) {
        if (sol[i] == 0) continue;
        if (sol[i].get_den() != 1) return std::nullopt;
        terms.emplace(sys.points()[i], sol[i].get_num());
    }
    LaurentPoly f = LaurentPoly::from_terms(terms);
    if (!(f.newton_polygon() == poly)) return std::nullopt;
    return f;
}

namespace {

DivTuple suffix_tuple(std::size_t edge, const Partition& steps, std::size_t levels) {
    DivTuple t;
    t.edge = edge;
    t.k_min = 0;
    t.k_max = static_cast<Int>(levels) - 1;
    for (std::size_t k = 0; k < levels; ++k) {
        Int s = 0;
        for (std::size_t l = k; l < steps.parts.size(); ++l) s += steps.parts[l];
        t.values.push_back(Multiplicity::finite(s));
    }
    return t;
}

}  // namespace

std::vector<DivTuple> reqdiv_from_pair(const DualPair& pair) {
    Int a = pair.a(), b = pair.b();
    LatticePolygon tri = standard_triangle(a, b);
    auto edges = tri.edges();
    Int g = gcd_int(a, b);
    std::vector<DivTuple> out;
    out.push_back(suffix_tuple(0, conjugate(pair.b_part), edge_levels(tri, edges[0]).size()));
    out.push_back(suffix_tuple(1, Partition{g}, edge_levels(tri, edges[1]).size()));
    out.push_back(suffix_tuple(2, conjugate(pair.a_part), edge_levels(tri, edges[2]).size()));
    return out;
}

std::optional<LaurentPoly> zmlp_from_pair(const DualPair& pair) {
    if (pair.a_part.empty() || pair.b_part.empty()) return std::nullopt;
    return reconstruct_from_reqdiv(standard_triangle(pair.a(), pair.b()), reqdiv_from_pair(pair));
}

}  // namespace zmlp
