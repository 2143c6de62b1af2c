#pragma once

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "zmlp/laurent.hpp"
#include "zmlp/lattice.hpp"

namespace zmlp {

struct MutationSpec {
    AffineFunctional phi;
    LaurentPoly h;

    // Throws std::invalid_argument unless h is a nonconstant power of a
    // primitive binomial times a monomial, supported in ker(phi.normal).
    void validate() const;
    BinomialPower factor() const;
    MutationSpec inverse() const { return {phi.negated(), h}; }
    bool operator==(const MutationSpec&) const = default;
};

class NotMutableError : public std::domain_error {
public:
    NotMutableError(Int level, const std::string& what) : std::domain_error(what), level_(level) {}
    Int level() const { return level_; }

private:
    Int level_;
};

bool is_mutable(const LaurentPoly& f, const MutationSpec& spec);
// sum_k h^k f_k; throws NotMutableError carrying the first offending level.
LaurentPoly mutate(const LaurentPoly& f, const MutationSpec& spec);

struct Segment {
    Point from;
    Point to;
    bool operator==(const Segment&) const = default;
};
using VertexImage = std::variant<Point, Segment>;

// Image of a vertex of poly; a point or a segment.
VertexImage mutate_vertex(Point v, const LatticePolygon& poly, const MutationSpec& spec);
// Image of edge i of poly; a segment, or a point when the edge collapses.
VertexImage mutate_edge(std::size_t edge_index, const LatticePolygon& poly, const MutationSpec& spec);
// Newton polygon of the mutation of any f with Newt(f) = poly.
LatticePolygon mutate_polytope(const LatticePolygon& poly, const MutationSpec& spec);

// ----------------------------------------------------------------- triangles
//
// The elementary moves act on polynomials whose Newton polygon is exactly the
// standard triangle Conv{(0,0),(b,0),(0,a)} and return polynomials in the same
// normal position.

struct TrianglePosition {
    Int a = 0;  // vertical leg
    Int b = 0;  // horizontal leg
};

// The legs if Newt(f) is Conv{(0,0),(b,0),(0,a)}, otherwise absent.
std::optional<TrianglePosition> standard_position(const LaurentPoly& f);
// f itself when already in standard position; otherwise its image under a
// unimodular map into standard position with a <= b.
LaurentPoly standardize(const LaurentPoly& f);

LaurentPoly tau(const LaurentPoly& f);
LaurentPoly alpha(const LaurentPoly& f);
std::optional<LaurentPoly> alpha_inv(const LaurentPoly& f);
// beta with slope the number of parts of the dual partition of the horizontal edge.
LaurentPoly beta(const LaurentPoly& f);
LaurentPoly beta(const LaurentPoly& f, Int slope);

MutationSpec alpha_spec(Int a);
MutationSpec alpha_inv_spec(Int a);
MutationSpec beta_spec(Int b, Int slope);
// (x, y) |-> (x, a - y), bringing the image of beta back to standard position.
UnimodularAffineMap beta_reframe(Int a);

}  // namespace zmlp
