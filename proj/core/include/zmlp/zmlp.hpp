#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zmlp/divisibility.hpp"
#include "zmlp/laurent.hpp"
#include "zmlp/mutation.hpp"

namespace zmlp {

// ------------------------------------------------------------ enumeration

// All dual pairs (a_part, b_part) with a_part of degree a, b_part of degree b,
// sum of squares ab + 1, max(a_part) <= b, max(b_part) <= a and
// max(a_part) + max(b_part) <= max(a, b). Sorted increasingly.
std::vector<DualPair> enumerate_comb(Int a, Int b);

// Same count as enumerate_comb(a, b).size(), computed by a generating table.
std::uint64_t count_comb(Int a, Int b);

bool satisfies_comb(const DualPair& pair, Int a, Int b);

// ---------------------------------------------------------- classification

enum class FamilyLabel { Tom, Jerry, Spike, Tyke, Unnamed };

std::string to_string(FamilyLabel label);

struct FamilyRow {
    FamilyLabel label = FamilyLabel::Unnamed;
    DualPair pair;
};

// The named rows for the triangle with vertical leg a and horizontal leg b,
// a < b; empty when no named family covers (a, b).
std::vector<FamilyRow> family_rows(Int a, Int b);

// Label of a pair on (a, b). Pairs given in the transposed orientation
// (first partition of degree b) are swapped first.
FamilyLabel classify_family(const DualPair& pair, Int a, Int b);

// ------------------------------------------------------------ certificates

// One step: optionally a mutation, then a unimodular change of coordinates.
struct CertificateStep {
    std::string label;
    std::optional<MutationSpec> spec;
    UnimodularAffineMap frame;
    LaurentPoly result;
};

struct MutationCertificate {
    LaurentPoly start;
    std::vector<CertificateStep> steps;

    std::size_t mutation_count() const;
};

struct ReplayResult {
    bool ok = false;
    std::string message;
};

// Re-executes every step, checking intermediate results, the form of each h
// and that the final polynomial is a monomial with coefficient 1.
ReplayResult replay(const MutationCertificate& cert);

// ------------------------------------------------------ triangular search

enum class TriangularMove { Tau, AlphaInv, Beta };

std::string to_string(TriangularMove m);

struct TriangularCertificate {
    DualPair pair;
    std::vector<TriangularMove> moves;  // up to the base triangle of leg 1
    MutationCertificate certificate;    // full replayable chain down to 1
};

// Depth-first search over beta, alpha^-1 and their tau-conjugates, with a + b
// strictly decreasing. Absent when every branch is exhausted.
std::optional<TriangularCertificate> triangular_reduce(const DualPair& pair);
std::optional<TriangularCertificate> triangular_reduce(const LaurentPoly& f);

// -------------------------------------------------------- general search

struct SearchBounds {
    std::size_t depth = 8;
    std::size_t nodes = 20000;
};

struct SearchStats {
    std::size_t expanded = 0;
    std::size_t generated = 0;
};

// Mutations proposed by verify_zmlp for f: for each edge direction m,
// h = 1 + z^m and phi = t * n + c with n normal to m, t = 1..max edge length,
// c the smallest admissible constant; plus the removal of binomial content.
std::vector<MutationSpec> candidate_mutations(const LaurentPoly& f);

// Best-first search for a chain of mutations from f to 1. Absent means the
// bounds ran out, not that f fails to be zero mutable.
std::optional<MutationCertificate> verify_zmlp(const LaurentPoly& f, const SearchBounds& bounds = {},
                                               SearchStats* stats = nullptr);

// Representative of the unimodular orbit of f (affine maps of the exponents).
LaurentPoly canonical_poly(const LaurentPoly& f);

// ------------------------------------------------------ small verification

// Unrealizable: no polynomial on the triangle carries the divisibility data of
// the pair, so it lies outside ZMLP(a, b) although it passes the counting test.
enum class PairStatus { Triangular, NonTriangular, Unverified, Unrealizable, ReplayFailed };

std::string to_string(PairStatus s);

struct PairReport {
    Int a = 0;
    Int b = 0;
    DualPair pair;
    FamilyLabel label = FamilyLabel::Unnamed;
    PairStatus status = PairStatus::Unverified;
    std::size_t steps = 0;
};

struct SmallReport {
    Int limit = 0;
    std::vector<PairReport> pairs;
    bool all_pass() const;
    // No certificate failed to replay and nothing ran out of search bounds.
    bool no_failures() const;
};

// Every coprime (a, b) with a + b <= limit: enumerate, reconstruct, reduce,
// replay. Pairs without a triangular reduction fall back to verify_zmlp.
SmallReport verify_small(Int limit, const SearchBounds& fallback = {});

// ------------------------------------------------------------------ table 2

struct ResidueCount {
    Int residue = 0;
    std::uint64_t count = 0;
    bool stable = false;
    Int from = 0;  // first parameter from which the count stays constant
};

// Counts on (a, b) with b ≡ r mod a for each residue r coprime to a,
// scanning b up to a + window.
std::vector<ResidueCount> table2_left(Int a, Int window = 50);

// Counts on (a, a + k) for a ≡ r mod k, scanning a up to window.
std::vector<ResidueCount> table2_right(Int k, Int window = 50);

}  // namespace zmlp
