#include <gtest/gtest.h>

#include "properties.hpp"

using namespace zmlp::testing;

namespace {
constexpr std::uint64_t kSeed = 20240517;

void expect_clean(const PropertyResult& r) {
    EXPECT_GE(r.cases, kDefaultCases);
    EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.first_failure;
}
}  // namespace

TEST(Properties, DerivativeDivisibility) { expect_clean(prop_derivative_divisibility(kSeed)); }
TEST(Properties, SumOfSquares) { expect_clean(prop_sum_of_squares(kSeed)); }
TEST(Properties, EdgeBinomials) { expect_clean(prop_edge_binomials(kSeed)); }
TEST(Properties, Involutions) { expect_clean(prop_involutions(kSeed)); }
TEST(Properties, DualPairCommutes) { expect_clean(prop_dual_pair_commutes(kSeed)); }
TEST(Properties, CanonicalFormInvariant) { expect_clean(prop_canonical_form_invariant(kSeed)); }
TEST(Properties, ClosingCondition) { expect_clean(prop_closing_condition(kSeed)); }

TEST(Properties, GeneralizedBinomial) {
    EXPECT_EQ(generalized_binomial(5, 2), 10);
    EXPECT_EQ(generalized_binomial(-1, 3), -1);
    EXPECT_EQ(generalized_binomial(-3, 2), 6);
    EXPECT_EQ(generalized_binomial(2, 5), 0);
    EXPECT_EQ(generalized_binomial(7, 0), 1);
}

TEST(Properties, HarnessDetectsFailures) {
    PropertyResult r{"demo"};
    r.cases = 3;
    r.fail("first");
    r.fail("second");
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.failures, 2u);
    EXPECT_EQ(r.first_failure, "first");
}
