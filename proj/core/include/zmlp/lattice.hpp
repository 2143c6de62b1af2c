#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "zmlp/arith.hpp"

namespace zmlp {

struct Point {
    Int x = 0;
    Int y = 0;

    auto operator<=>(const Point&) const = default;
};

inline Point operator+(Point a, Point b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }
inline Point operator-(Point a, Point b) { return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)}; }
inline Point operator-(Point a) { return {checked_sub(0, a.x), checked_sub(0, a.y)}; }
inline Point operator*(Int k, Point a) { return {checked_mul(k, a.x), checked_mul(k, a.y)}; }
inline Int dot(Point a, Point b) { return checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y)); }
inline Int cross(Point a, Point b) { return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x)); }

// Divides out the content; the zero vector is returned unchanged.
Point primitive(Point v);
Int lattice_length(Point a, Point b);
std::string to_string(Point p);

// phi(m) = <normal, m> + constant
struct AffineFunctional {
    Point normal;
    Int constant = 0;

    Int operator()(Point m) const { return checked_add(dot(normal, m), constant); }
    bool is_constant() const { return normal.x == 0 && normal.y == 0; }
    AffineFunctional negated() const { return {-normal, checked_sub(0, constant)}; }
    bool operator==(const AffineFunctional&) const = default;
};

// p |-> matrix * p + translation, with |det(matrix)| = 1.
class UnimodularAffineMap {
public:
    UnimodularAffineMap() = default;
    UnimodularAffineMap(std::array<Int, 4> matrix, Point translation);

    static UnimodularAffineMap identity() { return {}; }
    static UnimodularAffineMap translation(Point t) { return {{1, 0, 0, 1}, t}; }
    static UnimodularAffineMap swap_xy() { return {{0, 1, 1, 0}, {0, 0}}; }

    Point apply(Point p) const;
    Point apply_linear(Point v) const;
    // Pullback of a functional: (phi o this)(p) = phi(apply(p)).
    AffineFunctional pullback(const AffineFunctional& phi) const;
    UnimodularAffineMap inverse() const;
    // (this * other)(p) = this(other(p))
    UnimodularAffineMap compose(const UnimodularAffineMap& other) const;
    Int det() const;

    const std::array<Int, 4>& matrix() const { return m_; }
    Point translation() const { return t_; }
    bool operator==(const UnimodularAffineMap&) const = default;

private:
    std::array<Int, 4> m_{1, 0, 0, 1};
    Point t_{};
};

struct Edge {
    std::size_t index = 0;
    Point start;
    Point end;
    Point tangent;       // primitive, counterclockwise orientation
    Point inner_normal;  // primitive, <inner_normal, p - start> >= 0 on the polygon
    Int length = 0;      // lattice length

    Int level(Point p) const { return dot(inner_normal, p - start); }
};

// Convex lattice polytope in the plane of dimension 0, 1 or 2.
// Vertices are stored counterclockwise; a segment stores its two endpoints in
// lexicographic order and a point stores one vertex.
class LatticePolygon {
public:
    LatticePolygon() = default;
    static LatticePolygon hull(std::vector<Point> points);

    int dim() const;
    bool empty() const { return vertices_.empty(); }
    const std::vector<Point>& vertices() const { return vertices_; }
    // Edges of a 2-dimensional polygon; empty for points and segments.
    std::vector<Edge> edges() const;
    Edge edge(std::size_t i) const;

    bool contains(Point p) const;
    std::vector<Point> lattice_points() const;
    std::size_t lattice_point_count() const { return lattice_points().size(); }
    // Smallest axis-aligned box [lo, hi].
    std::pair<Point, Point> bounding_box() const;
    LatticePolygon transformed(const UnimodularAffineMap& g) const;
    // Twice the Euclidean area.
    Int twice_area() const;

    bool operator==(const LatticePolygon& o) const { return vertices_ == o.vertices_; }
    auto operator<=>(const LatticePolygon& o) const { return vertices_ <=> o.vertices_; }

private:
    std::vector<Point> vertices_;
};

std::string to_string(const LatticePolygon& p);

inline LatticePolygon convex_hull(std::vector<Point> points) { return LatticePolygon::hull(std::move(points)); }

// Conv{(0,0),(b,0),(0,a)}: the triangle with vertical leg a and horizontal leg b.
LatticePolygon standard_triangle(Int a, Int b);

struct RectangularTriangle {
    Int a = 0;
    Int b = 0;
    UnimodularAffineMap map;  // sends the input to Conv{(0,0),(a,0),(0,b)}
};

// Detects triangles unimodularly equivalent to Conv{(0,0),(a,0),(0,b)}, a <= b.
std::optional<RectangularTriangle> classify_rectangular(const LatticePolygon& poly);

// Frames that put a polytope in normal position: one per (vertex, orientation)
// for polygons. The set of images is an invariant of the unimodular orbit.
std::vector<UnimodularAffineMap> normalizing_frames(const LatticePolygon& poly);

LatticePolygon canonical_form(const LatticePolygon& poly);

// Smallest bounding-box side length over the normalizing frames.
Int polygon_size(const LatticePolygon& poly);

// Sum of length(e) * tangent(e) over the boundary; zero for every closed polygon.
Point closing_sum(const LatticePolygon& poly);

}  // namespace zmlp
