#include "zmlp/mutation.hpp"

#include <algorithm>

#include "zmlp/divisibility.hpp"

namespace zmlp {

void MutationSpec::validate() const {
    for (const auto& [e, c] : h.terms())
        if (dot(phi.normal, e) != 0) throw std::invalid_argument("mutation factor is not supported in ker(phi)");
    auto bp = as_binomial_power(h);
    if (!bp) throw std::invalid_argument("mutation factor is not of the form z^c (1+z^m)^k");
    if (bp->exponent == 0 && bp->offset == Point{0, 0}) throw std::invalid_argument("mutation factor is constant");
}

BinomialPower MutationSpec::factor() const {
    validate();
    return *as_binomial_power(h);
}

namespace {

bool collinear_with(const LaurentPoly& g, Point m) {
    if (m == Point{0, 0}) return g.terms().size() <= 1;
    Point q = g.terms().begin()->first;
    for (const auto& kv : g.terms())
        if (cross(kv.first - q, m) != 0) return false;
    return true;
}

// Whether h^k divides g for k > 0.
bool power_divides(const LaurentPoly& g, const BinomialPower& bp, const LaurentPoly& h, Int k) {
    if (bp.exponent == 0) return true;  // h is a unit
    if (collinear_with(g, bp.direction)) {
        Multiplicity d = binomial_multiplicity(g, bp.direction);
        return d.is_infinite() || d.value() >= checked_mul(k, bp.exponent);
    }
    return exact_divide(g, h.pow(k)).has_value();
}

}  // namespace

bool is_mutable(const LaurentPoly& f, const MutationSpec& spec) {
    BinomialPower bp = spec.factor();
    if (f.is_zero()) return true;
    for (const auto& s : slices(f, spec.phi)) {
        if (s.level >= 0) break;
        if (!power_divides(s.poly, bp, spec.h, -s.level)) return false;
    }
    return true;
}

LaurentPoly mutate(const LaurentPoly& f, const MutationSpec& spec) {
    BinomialPower bp = spec.factor();
    if (f.is_zero()) return f;
    LaurentPoly out;
    for (const auto& s : slices(f, spec.phi)) {
        if (s.level == 0) {
            out += s.poly;
        } else if (s.level > 0) {
            out += s.poly * spec.h.pow(s.level);
        } else {
            LaurentPoly hk = spec.h.pow(-s.level);
            std::optional<LaurentPoly> q;
            if (bp.exponent == 0 || power_divides(s.poly, bp, spec.h, -s.level)) q = exact_divide(s.poly, hk);
            if (!q) throw NotMutableError(s.level, "slice at level " + std::to_string(s.level) + " is not divisible");
            out += *q;
        }
    }
    return out;
}

// ------------------------------------------------------------ polytope level

namespace {

struct SliceGeometry {
    Point lo_offset;  // offset of the low end of Newt(h) along its direction
    Point hi_offset;
    Int h_length = 0;
    Point m;
};

SliceGeometry geometry(const MutationSpec& spec) {
    BinomialPower bp = spec.factor();
    SliceGeometry g;
    g.m = bp.direction;
    g.h_length = bp.exponent;
    g.lo_offset = bp.offset;
    g.hi_offset = bp.offset + bp.exponent * bp.direction;
    return g;
}

// Whether the polygon extends from v in direction w.
bool extends(const LatticePolygon& poly, Point v, Point w) {
    if (poly.dim() == 0) return false;
    if (poly.dim() == 1) {
        Point a = poly.vertices()[0], b = poly.vertices()[1];
        Point other = v == a ? b : a;
        Point d = other - v;
        return cross(d, w) == 0 && dot(d, w) > 0;
    }
    const auto& vs = poly.vertices();
    const std::size_t n = vs.size();
    std::size_t i = static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin());
    if (i == n) throw std::invalid_argument("point is not a vertex of the polygon");
    Point next = vs[(i + 1) % n] - v, prev = vs[(i + n - 1) % n] - v;
    return cross(next, w) >= 0 && cross(w, prev) >= 0;
}

// Real length (in units of m) of the slice of poly through v along m.
Rational slice_length_through(const LatticePolygon& poly, Point v, Point m) {
    // Maximal t with v + t m in poly and minimal t; each edge constraint is linear in t.
    Rational tmax = 0, tmin = 0;
    bool up_bounded = false, down_bounded = false;
    auto consider = [&](Point normal, Int rhs_at_v) {
        // normal . (v + t m) >= const  <=>  rhs_at_v + t * (normal . m) >= 0
        Int nm = dot(normal, m);
        if (nm < 0) {
            Rational t(rhs_at_v, -nm);
            t.canonicalize();
            if (!up_bounded || t < tmax) tmax = t;
            up_bounded = true;
        } else if (nm > 0) {
            Rational t(-rhs_at_v, nm);
            t.canonicalize();
            if (!down_bounded || t > tmin) tmin = t;
            down_bounded = true;
        }
    };
    if (poly.dim() == 2) {
        for (const auto& e : poly.edges()) consider(e.inner_normal, e.level(v));
        return tmax - tmin;
    }
    if (poly.dim() == 1) {
        Point a = poly.vertices()[0], b = poly.vertices()[1];
        if (cross(b - a, m) != 0) return 0;
        return Rational(lattice_length(a, b));
    }
    return 0;
}

void check_polygon_spec(const LatticePolygon& poly, const MutationSpec& spec) {
    spec.validate();
    if (poly.dim() < 0) throw std::invalid_argument("empty polygon");
}

}  // namespace

VertexImage mutate_vertex(Point v, const LatticePolygon& poly, const MutationSpec& spec) {
    check_polygon_spec(poly, spec);
    SliceGeometry g = geometry(spec);
    Int k = spec.phi(v);
    if (k == 0 || g.h_length == 0) {
        if (g.h_length == 0) return v + k * g.lo_offset;
        return v;
    }
    if (spec.phi.is_constant())
        throw std::invalid_argument("vertex images for constant phi depend on the whole polygon");
    bool lo_end = !extends(poly, v, -g.m);
    bool hi_end = !extends(poly, v, g.m);
    if (k < 0) {
        Rational len = slice_length_through(poly, v, g.m);
        if (len < Rational(checked_mul(-k, g.h_length)))
            throw NotMutableError(k, "slice through vertex " + to_string(v) + " is too short");
    }
    if (lo_end && hi_end) {
        if (k < 0) throw NotMutableError(k, "vertex " + to_string(v) + " is alone on a negative level");
        return Segment{v + k * g.lo_offset, v + k * g.hi_offset};
    }
    if (lo_end) return v + k * g.lo_offset;
    return v + k * g.hi_offset;
}

namespace {

Point endpoint_image(const VertexImage& img, bool lo_side) {
    if (std::holds_alternative<Point>(img)) return std::get<Point>(img);
    const auto& s = std::get<Segment>(img);
    return lo_side ? s.from : s.to;
}

}  // namespace

VertexImage mutate_edge(std::size_t edge_index, const LatticePolygon& poly, const MutationSpec& spec) {
    check_polygon_spec(poly, spec);
    Edge e = poly.edge(edge_index);
    SliceGeometry g = geometry(spec);
    Int k0 = spec.phi(e.start), k1 = spec.phi(e.end);
    if (g.h_length == 0) return Segment{e.start + k0 * g.lo_offset, e.end + k1 * g.lo_offset};
    if (k0 == k1) {
        // The edge is a level set: slice image of length len + k * deg(h).
        Int k = k0;
        Point lo = e.start, hi = e.end;
        if (dot(hi - lo, g.m) < 0) std::swap(lo, hi);
        if (k < 0 && checked_mul(-k, g.h_length) > e.length) throw NotMutableError(k, "edge slice is too short");
        Point a = lo + k * g.lo_offset, b = hi + k * g.hi_offset;
        if (a == b) return a;
        return Segment{a, b};
    }
    bool lo_side = dot(e.inner_normal, g.m) > 0;
    Point a = endpoint_image(mutate_vertex(e.start, poly, spec), lo_side);
    Point b = endpoint_image(mutate_vertex(e.end, poly, spec), lo_side);
    if (a == b) return a;
    return Segment{a, b};
}

LatticePolygon mutate_polytope(const LatticePolygon& poly, const MutationSpec& spec) {
    check_polygon_spec(poly, spec);
    SliceGeometry g = geometry(spec);
    std::vector<Point> pts;
    if (spec.phi.is_constant() && g.h_length > 0) {
        Int k = spec.phi.constant;
        if (k >= 0) {
            for (auto v : poly.vertices()) {
                pts.push_back(v + k * g.lo_offset);
                pts.push_back(v + k * g.hi_offset);
            }
        } else {
            // Minkowski difference by |k| Newt(h), read off on lattice points.
            Point lo = -k * g.lo_offset, hi = -k * g.hi_offset;
            for (auto p : poly.lattice_points()) {
                Point q = p - lo;
                if (poly.contains(q + hi)) pts.push_back(q);
            }
            if (pts.empty()) throw NotMutableError(k, "polygon is too small for the Minkowski difference");
        }
        return LatticePolygon::hull(pts);
    }
    for (auto v : poly.vertices()) {
        VertexImage img = mutate_vertex(v, poly, spec);
        if (std::holds_alternative<Point>(img)) {
            pts.push_back(std::get<Point>(img));
        } else {
            pts.push_back(std::get<Segment>(img).from);
            pts.push_back(std::get<Segment>(img).to);
        }
    }
    return LatticePolygon::hull(pts);
}

// ---------------------------------------------------------------- triangles

std::optional<TrianglePosition> standard_position(const LaurentPoly& f) {
    if (f.is_zero()) return std::nullopt;
    LatticePolygon p = f.newton_polygon();
    if (p.dim() != 2 || p.vertices().size() != 3) return std::nullopt;
    const auto& v = p.vertices();
    // hull order starts at (0,0) and runs counterclockwise: (0,0), (b,0), (0,a)
    if (v[0] != Point{0, 0} || v[1].y != 0 || v[2].x != 0 || v[1].x <= 0 || v[2].y <= 0) return std::nullopt;
    return TrianglePosition{v[2].y, v[1].x};
}

LaurentPoly standardize(const LaurentPoly& f) {
    if (standard_position(f)) return f;
    auto rt = classify_rectangular(f.newton_polygon());
    if (!rt) throw std::invalid_argument("Newton polygon is not a rectangular triangle");
    // classify_rectangular gives Conv{(0,0),(a,0),(0,b)}; swap to Conv{(0,0),(b,0),(0,a)}.
    return f.transformed(UnimodularAffineMap::swap_xy().compose(rt->map));
}

namespace {

TrianglePosition require_standard(const LaurentPoly& f) {
    auto pos = standard_position(f);
    if (!pos) throw std::invalid_argument("support is not a triangle in standard position");
    return *pos;
}

}  // namespace

MutationSpec alpha_spec(Int a) { return {{{0, -1}, a}, LaurentPoly::binomial({1, 0})}; }
MutationSpec alpha_inv_spec(Int a) { return {{{0, 1}, -a}, LaurentPoly::binomial({1, 0})}; }
MutationSpec beta_spec(Int b, Int slope) { return {{{0, slope}, -b}, LaurentPoly::binomial({1, 0})}; }
UnimodularAffineMap beta_reframe(Int a) { return UnimodularAffineMap({1, 0, 0, -1}, {0, a}); }

LaurentPoly tau(const LaurentPoly& f) { return f.swapped(); }

LaurentPoly alpha(const LaurentPoly& f) {
    TrianglePosition t = require_standard(f);
    return mutate(f, alpha_spec(t.a));
}

std::optional<LaurentPoly> alpha_inv(const LaurentPoly& f) {
    TrianglePosition t = require_standard(f);
    MutationSpec s = alpha_inv_spec(t.a);
    if (!is_mutable(f, s)) return std::nullopt;
    LaurentPoly g = mutate(f, s);
    if (!standard_position(g)) return std::nullopt;
    return g;
}

LaurentPoly beta(const LaurentPoly& f, Int slope) {
    TrianglePosition t = require_standard(f);
    LaurentPoly g = mutate(f, beta_spec(t.b, slope));
    return g.transformed(beta_reframe(t.a));
}

LaurentPoly beta(const LaurentPoly& f) {
    require_standard(f);
    Edge bottom = f.newton_polygon().edge(0);
    Partition steps = divstep(f, bottom);
    if (steps.parts.empty()) throw std::invalid_argument("horizontal edge has no divisibility steps");
    return beta(f, steps.parts.front());
}

}  // namespace zmlp
