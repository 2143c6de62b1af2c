#include "zmlp/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zmlp {

Point primitive(Point v) {
    Int g = gcd_int(v.x, v.y);
    if (g == 0) return v;
    return {v.x / g, v.y / g};
}

Int lattice_length(Point a, Point b) {
    Point d = b - a;
    return gcd_int(d.x, d.y);
}

std::string to_string(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

UnimodularAffineMap::UnimodularAffineMap(std::array<Int, 4> matrix, Point translation)
    : m_(matrix), t_(translation) {
    Int d = det();
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
}

Int UnimodularAffineMap::det() const { return checked_sub(checked_mul(m_[0], m_[3]), checked_mul(m_[1], m_[2])); }

Point UnimodularAffineMap::apply_linear(Point v) const {
    return {checked_add(checked_mul(m_[0], v.x), checked_mul(m_[1], v.y)),
            checked_add(checked_mul(m_[2], v.x), checked_mul(m_[3], v.y))};
}

Point UnimodularAffineMap::apply(Point p) const { return apply_linear(p) + t_; }

AffineFunctional UnimodularAffineMap::pullback(const AffineFunctional& phi) const {
    // <n, M p + t> + c = <M^T n, p> + <n, t> + c
    Point n = phi.normal;
    Point nt{checked_add(checked_mul(m_[0], n.x), checked_mul(m_[2], n.y)),
             checked_add(checked_mul(m_[1], n.x), checked_mul(m_[3], n.y))};
    return {nt, checked_add(dot(n, t_), phi.constant)};
}

UnimodularAffineMap UnimodularAffineMap::inverse() const {
    Int d = det();
    std::array<Int, 4> inv{m_[3] * d, -m_[1] * d, -m_[2] * d, m_[0] * d};
    UnimodularAffineMap r(inv, {0, 0});
    Point t = r.apply_linear(t_);
    r.t_ = -t;
    return r;
}

UnimodularAffineMap UnimodularAffineMap::compose(const UnimodularAffineMap& o) const {
    const auto& a = m_;
    const auto& b = o.m_;
    std::array<Int, 4> m{checked_add(checked_mul(a[0], b[0]), checked_mul(a[1], b[2])),
                         checked_add(checked_mul(a[0], b[1]), checked_mul(a[1], b[3])),
                         checked_add(checked_mul(a[2], b[0]), checked_mul(a[3], b[2])),
                         checked_add(checked_mul(a[2], b[1]), checked_mul(a[3], b[3]))};
    return UnimodularAffineMap(m, apply(o.t_));
}

LatticePolygon LatticePolygon::hull(std::vector<Point> pts) {
    if (pts.empty()) throw std::invalid_argument("convex hull of an empty point set");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    LatticePolygon out;
    if (pts.size() <= 2) {
        out.vertices_ = pts;
        return out;
    }
    // Andrew's monotone chain, dropping collinear points.
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 2 || (h.size() == 1)) {
        // all points collinear: keep the extreme pair
        out.vertices_ = {pts.front(), pts.back()};
        return out;
    }
    out.vertices_ = std::move(h);
    return out;
}

int LatticePolygon::dim() const {
    if (vertices_.empty()) return -1;
    if (vertices_.size() == 1) return 0;
    if (vertices_.size() == 2) return 1;
    return 2;
}

Edge LatticePolygon::edge(std::size_t i) const {
    if (dim() != 2) throw std::invalid_argument("edges requested on a polytope of dimension < 2");
    const std::size_t n = vertices_.size();
    Edge e;
    e.index = i;
    e.start = vertices_[i % n];
    e.end = vertices_[(i + 1) % n];
    Point d = e.end - e.start;
    e.length = gcd_int(d.x, d.y);
    e.tangent = primitive(d);
    e.inner_normal = {-e.tangent.y, e.tangent.x};
    return e;
}

std::vector<Edge> LatticePolygon::edges() const {
    std::vector<Edge> out;
    if (dim() != 2) return out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(edge(i));
    return out;
}

bool LatticePolygon::contains(Point p) const {
    switch (dim()) {
        case 0:
            return p == vertices_[0];
        case 1: {
            Point a = vertices_[0], b = vertices_[1];
            if (cross(b - a, p - a) != 0) return false;
            return dot(p - a, b - a) >= 0 && dot(p - b, a - b) >= 0;
        }
        case 2:
            for (const auto& e : edges())
                if (e.level(p) < 0) return false;
            return true;
        default:
            return false;
    }
}

std::pair<Point, Point> LatticePolygon::bounding_box() const {
    Point lo = vertices_.at(0), hi = vertices_.at(0);
    for (auto v : vertices_) {
        lo.x = std::min(lo.x, v.x);
        lo.y = std::min(lo.y, v.y);
        hi.x = std::max(hi.x, v.x);
        hi.y = std::max(hi.y, v.y);
    }
    return {lo, hi};
}

std::vector<Point> LatticePolygon::lattice_points() const {
    std::vector<Point> out;
    if (dim() < 0) return out;
    if (dim() == 0) return vertices_;
    if (dim() == 1) {
        Point a = vertices_[0], b = vertices_[1];
        Int len = lattice_length(a, b);
        Point u = primitive(b - a);
        for (Int i = 0; i <= len; ++i) out.push_back(a + i * u);
        return out;
    }
    auto [lo, hi] = bounding_box();
    for (Int x = lo.x; x <= hi.x; ++x)
        for (Int y = lo.y; y <= hi.y; ++y)
            if (contains({x, y})) out.push_back({x, y});
    return out;
}

LatticePolygon LatticePolygon::transformed(const UnimodularAffineMap& g) const {
    std::vector<Point> pts;
    pts.reserve(vertices_.size());
    for (auto v : vertices_) pts.push_back(g.apply(v));
    return hull(std::move(pts));
}

Int LatticePolygon::twice_area() const {
    if (dim() != 2) return 0;
    Int s = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        s = checked_add(s, cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]));
    return s;
}

std::string to_string(const LatticePolygon& p) {
    std::ostringstream os;
    os << "Conv{";
    for (std::size_t i = 0; i < p.vertices().size(); ++i) os << (i ? "," : "") << to_string(p.vertices()[i]);
    os << "}";
    return os.str();
}

LatticePolygon standard_triangle(Int a, Int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("triangle legs must be positive");
    return LatticePolygon::hull({{0, 0}, {b, 0}, {0, a}});
}

std::optional<RectangularTriangle> classify_rectangular(const LatticePolygon& poly) {
    if (poly.dim() != 2 || poly.vertices().size() != 3) return std::nullopt;
    const auto& v = poly.vertices();
    std::optional<RectangularTriangle> best;
    for (std::size_t i = 0; i < 3; ++i) {
        Point p = v[i];
        Point d1 = v[(i + 1) % 3] - p, d2 = v[(i + 2) % 3] - p;
        Point u1 = primitive(d1), u2 = primitive(d2);
        Int det = cross(u1, u2);
        if (det != 1 && det != -1) continue;
        Int l1 = gcd_int(d1.x, d1.y), l2 = gcd_int(d2.x, d2.y);
        if (l1 > l2) {
            std::swap(u1, u2);
            std::swap(l1, l2);
            det = -det;
        }
        // A = [u1 u2]^{-1} sends u1 -> (1,0), u2 -> (0,1).
        std::array<Int, 4> inv{u2.y * det, -u2.x * det, -u1.y * det, u1.x * det};
        UnimodularAffineMap lin(inv, {0, 0});
        UnimodularAffineMap g = UnimodularAffineMap::translation(-lin.apply(p)).compose(lin);
        RectangularTriangle r{l1, l2, g};
        if (!best || std::tie(r.a, r.b) < std::tie(best->a, best->b)) best = r;
    }
    return best;
}

namespace {

// Frame that sends v to the origin, the edge v -> w onto the positive x-axis,
// the polygon into the upper half plane, and reduces the shear using p, the
// vertex preceding v in the chosen orientation.
UnimodularAffineMap frame_for(Point v, Point w, Point p, bool ccw) {
    Point u = primitive(w - v);
    Point n = ccw ? Point{-u.y, u.x} : Point{u.y, -u.x};
    Int s, t;
    ext_gcd(u.x, u.y, s, t);
    Point r{s, t};
    Point q = p - v;
    Int yq = dot(n, q);
    Int xq = dot(r, q);
    // shear r -> r + k n moves xq by k * yq
    Int k = floor_div(xq, yq);
    r = r - k * n;
    UnimodularAffineMap lin({r.x, r.y, n.x, n.y}, {0, 0});
    return UnimodularAffineMap::translation(-lin.apply(v)).compose(lin);
}

}  // namespace

std::vector<UnimodularAffineMap> normalizing_frames(const LatticePolygon& poly) {
    std::vector<UnimodularAffineMap> out;
    const auto& v = poly.vertices();
    switch (poly.dim()) {
        case 0:
            out.push_back(UnimodularAffineMap::translation(-v[0]));
            break;
        case 1: {
            for (int dir = 0; dir < 2; ++dir) {
                Point a = dir == 0 ? v[0] : v[1];
                Point b = dir == 0 ? v[1] : v[0];
                Point u = primitive(b - a);
                Int s, t;
                ext_gcd(u.x, u.y, s, t);
                UnimodularAffineMap lin({s, t, -u.y, u.x}, {0, 0});
                out.push_back(UnimodularAffineMap::translation(-lin.apply(a)).compose(lin));
            }
            break;
        }
        case 2: {
            const std::size_t n = v.size();
            for (std::size_t i = 0; i < n; ++i) {
                out.push_back(frame_for(v[i], v[(i + 1) % n], v[(i + n - 1) % n], true));
                out.push_back(frame_for(v[i], v[(i + n - 1) % n], v[(i + 1) % n], false));
            }
            break;
        }
        default:
            break;
    }
    return out;
}

LatticePolygon canonical_form(const LatticePolygon& poly) {
    std::optional<LatticePolygon> best;
    for (const auto& g : normalizing_frames(poly)) {
        LatticePolygon img = poly.transformed(g);
        if (!best || img < *best) best = std::move(img);
    }
    return best ? *best : poly;
}

Int polygon_size(const LatticePolygon& poly) {
    Int best = -1;
    for (const auto& g : normalizing_frames(poly)) {
        auto [lo, hi] = poly.transformed(g).bounding_box();
        Int s = std::max(hi.x - lo.x, hi.y - lo.y);
        if (best < 0 || s < best) best = s;
    }
    return best;
}

Point closing_sum(const LatticePolygon& poly) {
    Point s{0, 0};
    for (const auto& e : poly.edges()) s = s + e.length * e.tangent;
    return s;
}

}  // namespace zmlp
