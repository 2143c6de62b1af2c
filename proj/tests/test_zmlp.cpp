#include <gtest/gtest.h>

#include "properties.hpp"
#include "zmlp/zmlp.hpp"

using namespace zmlp;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
const LaurentPoly kTom = LaurentPoly::parse("(1+x)^3+2*y*(1+x)+y^2");
bool coprime(Int a, Int b) { return gcd_int(a, b) == 1; }
}  // namespace

TEST(Enumerate, TwoThree) {
    auto pairs = enumerate_comb(2, 3);
    ASSERT_EQ(pairs.size(), 2u);
    EXPECT_NE(std::find(pairs.begin(), pairs.end(), parse_dual_pair("(1,1),(2,1)")), pairs.end());
    EXPECT_NE(std::find(pairs.begin(), pairs.end(), parse_dual_pair("(2),(1,1,1)")), pairs.end());
}

TEST(Enumerate, OneByK) {
    for (Int k = 1; k <= 12; ++k) {
        auto pairs = enumerate_comb(1, k);
        ASSERT_EQ(pairs.size(), 1u) << k;
        EXPECT_EQ(pairs[0].a_part, (Partition{1}));
    }
}

TEST(Enumerate, LargeTriangle) { EXPECT_EQ(enumerate_comb(5, 101).size(), 11u); }

TEST(Enumerate, SortedAndSatisfying) {
    for (Int a = 1; a <= 6; ++a)
        for (Int b = a; b <= 14; ++b) {
            if (!coprime(a, b)) continue;
            auto pairs = enumerate_comb(a, b);
            EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end()));
            for (const auto& p : pairs) EXPECT_TRUE(satisfies_comb(p, a, b)) << to_string(p);
            EXPECT_EQ(count_comb(a, b), pairs.size()) << a << "," << b;
        }
}

TEST(Enumerate, BadLegs) {
    EXPECT_THROW(enumerate_comb(0, 3), std::invalid_argument);
    EXPECT_THROW(count_comb(-1, 3), std::invalid_argument);
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify_family(parse_dual_pair("(1,1,1),(2)"), 2, 3), FamilyLabel::Jerry);
    EXPECT_EQ(classify_family(parse_dual_pair("(2,1),(1,1)"), 2, 3), FamilyLabel::Tom);
    EXPECT_EQ(classify_family(parse_dual_pair("(3,2),(3,3)"), 5, 6), FamilyLabel::Spike);
    EXPECT_EQ(classify_family(parse_dual_pair("(4,1),(3,3,1)"), 5, 7), FamilyLabel::Unnamed);
}

TEST(Classify, FamilyRows) {
    EXPECT_EQ(family_rows(2, 5).size(), 2u);
    EXPECT_EQ(family_rows(4, 5).size(), 3u);
    EXPECT_EQ(family_rows(3, 7).size(), 4u);
    EXPECT_EQ(family_rows(3, 5).size(), 3u);
    for (Int k = 3; k <= 12; ++k)
        for (const auto& row : family_rows(k, k + 1)) EXPECT_TRUE(satisfies_comb(row.pair, k, k + 1));
}

TEST(Triangular, BaseCaseIsEmpty) {
    auto c = triangular_reduce(parse_dual_pair("(1),(1)"));
    ASSERT_TRUE(c);
    EXPECT_TRUE(c->moves.empty());
    EXPECT_TRUE(replay(c->certificate).ok);
}

TEST(Triangular, Tom) {
    auto c = triangular_reduce(kTom);
    ASSERT_TRUE(c);
    EXPECT_FALSE(c->moves.empty());
    auto r = replay(c->certificate);
    EXPECT_TRUE(r.ok) << r.message;
}

TEST(Triangular, NonTriangularExample) {
    EXPECT_FALSE(triangular_reduce(parse_dual_pair("(4,1),(3,3,1)")));
}

TEST(Replay, DetectsTampering) {
    auto c = triangular_reduce(kTom);
    ASSERT_TRUE(c);
    MutationCertificate bad = c->certificate;
    bad.steps.back().result = P("2");
    EXPECT_FALSE(replay(bad).ok);
    MutationCertificate wrong_start = c->certificate;
    wrong_start.start = P("1+x+y");
    EXPECT_FALSE(replay(wrong_start).ok);
}

TEST(Search, OneIsTrivial) {
    auto c = verify_zmlp(P("1"));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->mutation_count(), 0u);
}

TEST(Search, TomCertificate) {
    auto c = verify_zmlp(kTom);
    ASSERT_TRUE(c);
    EXPECT_TRUE(replay(*c).ok);
    EXPECT_LE(c->mutation_count(), 3u);
}

TEST(Search, NonZmlpRunsOut) {
    SearchBounds b{4, 2000};
    EXPECT_FALSE(verify_zmlp(P("1+2*x+y"), b));
}

TEST(Search, Candidates) {
    auto cands = candidate_mutations(kTom);
    EXPECT_FALSE(cands.empty());
    for (const auto& s : cands) EXPECT_NO_THROW(s.validate());
}

TEST(CanonicalPoly, OrbitInvariant) {
    zmlp::testing::Rng rng(23);
    for (int c = 0; c < 200; ++c) {
        LaurentPoly f = zmlp::testing::random_zmlp(rng, 14);
        auto g = zmlp::testing::random_unimodular(rng, 6);
        ASSERT_EQ(canonical_poly(f), canonical_poly(f.transformed(g))) << f.to_string();
    }
    EXPECT_NE(canonical_poly(kTom), canonical_poly(P("(1+x)^3+3*y*(1+x)+y^2")));
}

TEST(Small, LimitFive) {
    auto r = verify_small(5);
    EXPECT_TRUE(r.all_pass());
    EXPECT_TRUE(r.no_failures());
    EXPECT_FALSE(r.pairs.empty());
}

TEST(Table2, SmallRows) {
    auto one = table2_left(1, 20);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].count, 1u);
    EXPECT_TRUE(one[0].stable);
    auto three = table2_left(3, 30);
    for (const auto& r : three) EXPECT_EQ(r.count, 4u);
    auto k1 = table2_right(1, 30);
    for (const auto& r : k1) EXPECT_EQ(r.count, 3u);
}
