#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zmlp/laurent.hpp"
#include "zmlp/lattice.hpp"

namespace zmlp::testing {

struct PropertyResult {
    explicit PropertyResult(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0 && cases > 0; }
    void fail(const std::string& what);
};

using Rng = std::mt19937_64;

constexpr std::size_t kDefaultCases = 1000;

// C(n, i) for any integer n and i >= 0.
BigInt generalized_binomial(Int n, Int i);

UnimodularAffineMap random_unimodular(Rng& rng, Int bound = 10);
LatticePolygon random_polygon(Rng& rng, Int box = 6, int points = 6);

// A zero mutable polynomial in standard position, reached from 1 + x + y by a
// random walk of alpha, beta and tau moves with a + b <= max_sum.
LaurentPoly random_zmlp(Rng& rng, Int max_sum = 24);

PropertyResult prop_derivative_divisibility(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_sum_of_squares(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_edge_binomials(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_involutions(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_dual_pair_commutes(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_canonical_form_invariant(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_closing_condition(std::uint64_t seed, std::size_t cases = kDefaultCases);

std::vector<PropertyResult> run_all_properties(std::uint64_t seed, std::size_t cases = kDefaultCases);

}  // namespace zmlp::testing
