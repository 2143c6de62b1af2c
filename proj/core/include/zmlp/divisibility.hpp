#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zmlp/laurent.hpp"
#include "zmlp/lattice.hpp"

namespace zmlp {

struct Partition {
    std::vector<Int> parts;  // weakly decreasing, positive

    Partition() = default;
    Partition(std::initializer_list<Int> p);
    explicit Partition(std::vector<Int> p);
    // Sorts decreasingly and drops zero parts; throws on negative parts.
    static Partition normalized(std::vector<Int> p);

    Int degree() const;
    std::size_t length() const { return parts.size(); }
    Int max_part() const { return parts.empty() ? 0 : parts.front(); }
    Int sum_of_squares() const;
    bool empty() const { return parts.empty(); }

    auto operator<=>(const Partition&) const = default;
};

std::string to_string(const Partition& p);
Partition conjugate(const Partition& p);
// "(2,1)" or "2,1"
Partition parse_partition(const std::string& text);

struct DualPair {
    Partition a_part;
    Partition b_part;

    Int a() const { return a_part.degree(); }
    Int b() const { return b_part.degree(); }
    auto operator<=>(const DualPair&) const = default;
};

std::string to_string(const DualPair& p);

// Moves on dual pairs: alpha prepends a to the second partition, beta replaces
// each b_i by a - b_i, tau swaps. beta throws std::domain_error when some
// b_i >= a, since the result would have a non-positive part.
DualPair alpha_pair(const DualPair& p);
DualPair beta_pair(const DualPair& p);
DualPair tau_pair(const DualPair& p);
// "(1,1),(2,1)" or "1,1|2,1"
DualPair parse_dual_pair(const std::string& text);

struct DivTuple {
    std::size_t edge = 0;
    Int k_min = 0;
    Int k_max = 0;
    std::vector<Multiplicity> values;  // values[i] belongs to level k_min + i

    Multiplicity at(Int k) const;
    bool operator==(const DivTuple&) const = default;
};

std::string to_string(const DivTuple& t);

// Lattice points of poly on the level sets of an edge's inner normal, each
// level ordered along the edge tangent.
std::vector<std::vector<Point>> edge_levels(const LatticePolygon& poly, const Edge& e);

DivTuple div_tuple(const LaurentPoly& f, const Edge& e);

enum class ReqdivMethod {
    // Per edge, the largest convex tuple below the (capped) divisibility tuple
    // that reaches zero; the collection is then checked to force div(f).
    ConvexMinorant,
    // Componentwise descent from div(f), keeping the forcing property,
    // levels high to low and short edges first.
    GreedyDescent,
};

struct ReqdivResult {
    std::vector<DivTuple> tuples;  // one per edge of Newt(f), in edge order
    bool unique = true;            // false if an equally good incomparable choice exists
    bool forcing = true;           // the tuples force the divisibility profile of f
};

ReqdivResult reqdiv_tuples(const LaurentPoly& f, ReqdivMethod method = ReqdivMethod::ConvexMinorant);
DivTuple reqdiv_tuple(const LaurentPoly& f, const Edge& e);

// Steps of a finite tuple: d_k - d_{k+1} up to the first zero entry.
Partition steps_of(const DivTuple& reqdiv);

// Divisibility steps of f along e, a partition of the edge length. Factors of
// the form (1+z^m)^r along e are split off automatically; other reducible
// inputs need their irreducible factors supplied.
Partition divstep(const LaurentPoly& f, const Edge& e, const std::vector<LaurentPoly>* factors = nullptr);

// Steps of the required divisibility after removing the (1+z^m)-content along e.
Partition reqdivstep(const LaurentPoly& f, const Edge& e);

struct TrianglePair {
    Int a = 0;
    Int b = 0;
    DualPair pair;
};

// Conjugates of the divisibility steps of the vertical (a) and horizontal (b)
// edges of f in standard position.
TrianglePair dual_pair(const LaurentPoly& f);

struct ZeromutReport {
    std::vector<bool> convex;  // per edge
    Int reqdiv_total = 0;
    Int lattice_points = 0;
    bool counts_match() const { return reqdiv_total == lattice_points; }
    bool all_convex() const;
};

bool is_convex_tuple(const DivTuple& t);
Int reqdiv_total(const LaurentPoly& f);
ZeromutReport verify_zeromut_props(const LaurentPoly& f);

// The unique polynomial with Newton polygon `poly` whose slices satisfy the
// given divisibility orders, normalised to coefficient 1 at a vertex.
std::optional<LaurentPoly> reconstruct_from_reqdiv(const LatticePolygon& poly, const std::vector<DivTuple>& tuples);

// Required divisibility tuples on Conv{(0,0),(b,0),(0,a)} determined by a dual pair.
std::vector<DivTuple> reqdiv_from_pair(const DualPair& pair);
std::optional<LaurentPoly> zmlp_from_pair(const DualPair& pair);

}  // namespace zmlp
