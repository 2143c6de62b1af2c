#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "zmlp/divisibility.hpp"
#include "zmlp/lattice.hpp"
#include "zmlp/laurent.hpp"

namespace zmlp {

using Vec3 = std::array<Int, 3>;

Vec3 cross3(const Vec3& u, const Vec3& v);
Int dot3(const Vec3& u, const Vec3& v);
Int det3(const Vec3& u, const Vec3& v, const Vec3& w);
Vec3 primitive3(const Vec3& v);
std::string to_string(const Vec3& v);
// "1,0,0;0,1,0;1,-2,3"
std::vector<Vec3> parse_vectors(const std::string& text);

// Full-dimensional pointed cone in Z^3. Rays are primitive, extremal and in
// cyclic order, starting from the first extremal generator supplied.
class Cone3 {
public:
    Cone3() = default;
    explicit Cone3(std::vector<Vec3> generators);

    const std::vector<Vec3>& rays() const { return rays_; }
    bool simplicial() const { return rays_.size() == 3; }
    // Inner facet normals; facet i is spanned by rays i and i+1.
    std::vector<Vec3> facet_normals() const;
    bool contains(const Vec3& v) const;
    bool interior(const Vec3& v) const;
    bool has_ray(const Vec3& v) const;
    // |det| of a simplicial cone.
    Int multiplicity() const;

    bool operator==(const Cone3&) const = default;

private:
    std::vector<Vec3> rays_;
};

std::string to_string(const Cone3& c);

struct Fan3 {
    std::vector<Cone3> cones;

    // Throws std::invalid_argument unless any two cones meet in a common face.
    void validate() const;
    bool contains(const Vec3& v) const;
};

Cone3 cone_over(const LatticePolygon& poly);
Cone3 dual_cone(const Cone3& c);

// One cone per facet of `dual`, spanned by the facet and rho0, in facet order.
Fan3 central_subdivision(const Cone3& dual, const Vec3& rho0 = {0, 0, 1});

// Cone over the polygon, its dual and the central subdivision with cones
// ordered like the vertices of the polygon (the cone of vertex v is the one
// whose facet is orthogonal to (v, 1)).
struct ToricDegeneration {
    Cone3 sigma;
    Cone3 dual;
    Fan3 fan;
};
ToricDegeneration toric_degeneration(const LatticePolygon& poly);

struct QuotientSingularity {
    Int r = 1;
    std::array<Int, 3> weights{0, 0, 0};  // residues in [0, r)
    bool cyclic = true;
    std::vector<Int> invariants;  // elementary divisors of the quotient group, each > 1

    bool smooth() const { return cyclic && r == 1; }
    // Lexicographically least sorted weight triple over all unit multiples.
    std::array<Int, 3> normalized() const;
};

std::string to_string(const QuotientSingularity& s);
QuotientSingularity make_type(Int r, std::array<Int, 3> weights);
// "1/5(1,-1,2)"
QuotientSingularity parse_type(const std::string& text);

// Type of the simplicial cone: Z^3 modulo its rays, read off the Smith form.
QuotientSingularity singularity_type(const Cone3& cone);

struct SingEquivalence {
    bool permutations = true;  // reorder the weights
    bool units = true;         // multiply all weights by a unit mod r
};

bool sing_equivalent(const QuotientSingularity& s, const QuotientSingularity& t, const SingEquivalence& eq = {});

// Replaces every cone containing the ray by the cones over its facets that
// miss the ray; cones already having the ray are kept.
Fan3 star_subdivision(const Fan3& fan, const Vec3& ray);

// ------------------------------------------------------------- walls

enum class LambdaPolicy { Symbolic, Preset };

struct WallFunction {
    std::size_t edge = 0;
    std::string name;                      // e.g. "f12"
    Partition exponents;                   // degree equals the edge length
    std::vector<std::string> labels;       // one per factor
    std::vector<std::optional<Int>> values;  // preset values, if any

    Int degree() const { return exponents.degree(); }
};

std::string to_string(const WallFunction& w);

struct WallReport {
    std::vector<WallFunction> walls;
    Point closing_sum;
    bool closes() const { return closing_sum == Point{0, 0}; }
    bool labels_distinct = true;
};

// Wall functions from explicit dual partitions, one per edge of poly.
WallReport wall_functions(const LatticePolygon& poly, const std::vector<Partition>& dual_partitions,
                          LambdaPolicy policy = LambdaPolicy::Symbolic);
// Wall functions of a polynomial: the dual partitions are conjugates of its
// divisibility steps.
WallReport wall_functions(const LaurentPoly& f, LambdaPolicy policy = LambdaPolicy::Symbolic);

// ------------------------------------------------------------ extraction

struct DucatData {
    std::vector<Int> q;  // Q_0 .. Q_{k+1}
    Int a = 0;           // Q_k + Q_{k-1}
    Int r = 0;           // Q_k + Q_{k+1}
    QuotientSingularity type;  // 1/r(1,-1,a)
};

DucatData ducat_sequence(Int m, Int k);

struct ExtractionCertificate {
    int variant = 1;  // 1: moves on the second partition, 2: the transposed moves
    std::vector<std::string> moves;
    std::vector<DualPair> chain;  // pairs visited, starting with the input
    std::string base_case;
    QuotientSingularity base_type;
    QuotientSingularity type;  // of the input
};

struct ExtractionResult {
    std::optional<ExtractionCertificate> certificate;
    std::string reason;  // why no certificate was found
};

// Breadth-first search over alpha^-1 and beta acting on the second partition
// (variant 1), then on the first (variant 2). Degrees must be coprime.
ExtractionResult extraction_certificate(const DualPair& pair);
// Same, checking that the partitions have degrees a and b.
ExtractionResult extraction_certificate(const DualPair& pair, Int a, Int b);

}  // namespace zmlp
