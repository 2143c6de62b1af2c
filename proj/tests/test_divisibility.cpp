#include <gtest/gtest.h>

#include "properties.hpp"
#include "zmlp/divisibility.hpp"
#include "zmlp/zmlp.hpp"

using namespace zmlp;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
const LaurentPoly kTom = LaurentPoly::parse("(1+x)^3+2*y*(1+x)+y^2");
const LaurentPoly kJerry = LaurentPoly::parse("(1+y)^2+3*x*(1+y)+3*x^2+x^3");
std::vector<Multiplicity> fin(std::initializer_list<Int> v) {
    std::vector<Multiplicity> out;
    for (Int x : v) out.push_back(Multiplicity::finite(x));
    return out;
}
}  // namespace

TEST(Partition, NormalizeAndConjugate) {
    EXPECT_EQ(Partition::normalized({1, 0, 3, 2}), (Partition{3, 2, 1}));
    EXPECT_THROW(Partition::normalized({2, -1}), std::invalid_argument);
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_EQ(conjugate(Partition{2, 1}), (Partition{2, 1}));
    EXPECT_EQ(conjugate(Partition{3}), (Partition{1, 1, 1}));
    EXPECT_EQ(conjugate(Partition{4, 2, 2, 1}), (Partition{4, 3, 1, 1}));
    EXPECT_EQ((Partition{3, 3, 1}).sum_of_squares(), 19);
}

TEST(Partition, ConjugateIsInvolution) {
    zmlp::testing::Rng rng(5);
    for (int c = 0; c < 1000; ++c) {
        std::vector<Int> parts;
        int n = static_cast<int>(rng() % 8);
        for (int i = 0; i < n; ++i) parts.push_back(static_cast<Int>(rng() % 9));
        Partition p = Partition::normalized(parts);
        ASSERT_EQ(conjugate(conjugate(p)), p);
        ASSERT_EQ(conjugate(p).degree(), p.degree());
    }
}

TEST(Partition, Parsing) {
    EXPECT_EQ(parse_partition("(2,1)"), (Partition{2, 1}));
    EXPECT_EQ(parse_partition("3,1,1"), (Partition{3, 1, 1}));
    EXPECT_EQ(parse_dual_pair("(1,1),(2,1)"), (DualPair{{1, 1}, {2, 1}}));
    EXPECT_EQ(parse_dual_pair("1,1|2,1"), (DualPair{{1, 1}, {2, 1}}));
    EXPECT_EQ(to_string(DualPair{{2, 1}, {1, 1}}), "(2,1),(1,1)");
    EXPECT_THROW(parse_partition("(2,x)"), std::invalid_argument);
}

TEST(PairMoves, Examples) {
    EXPECT_EQ(alpha_pair(parse_dual_pair("(1,1),(1)")), parse_dual_pair("(1,1),(2,1)"));
    EXPECT_EQ(beta_pair(parse_dual_pair("(1,1,1),(2)")), parse_dual_pair("(1,1,1),(1)"));
    EXPECT_EQ(tau_pair(parse_dual_pair("(2,1),(1,1)")), parse_dual_pair("(1,1),(2,1)"));
}

TEST(PairMoves, BetaOutsideDomain) {
    EXPECT_THROW(beta_pair(parse_dual_pair("(2),(2,1,1,1)")), std::domain_error);
    EXPECT_THROW(beta_pair(parse_dual_pair("(1),(1)")), std::domain_error);
}

TEST(DivTuple, TomEdges) {
    auto edges = kTom.newton_polygon().edges();
    auto bottom = div_tuple(kTom, edges[0]);
    EXPECT_EQ(bottom.values, fin({3, 1, 0}));
    EXPECT_EQ(div_tuple(kTom, edges[2]).values, fin({2, 0, 0, 0}));
}

TEST(DivTuple, JerryEdges) {
    auto edges = kJerry.newton_polygon().edges();
    EXPECT_EQ(div_tuple(kJerry, edges[0]).values, fin({3, 0, 0}));
    EXPECT_EQ(div_tuple(kJerry, edges[2]).values, fin({2, 1, 0, 0}));
}

TEST(DivTuple, InfiniteEntry) {
    auto f = P("(1+x)^2+x*y^2");
    auto t = div_tuple(f, f.newton_polygon().edge(0));
    ASSERT_EQ(t.values.size(), 3u);
    EXPECT_EQ(t.values[0], Multiplicity::finite(2));
    EXPECT_TRUE(t.values[1].is_infinite());
    EXPECT_EQ(t.values[2], Multiplicity::finite(0));
    auto r = reqdiv_tuple(f, f.newton_polygon().edge(0));
    EXPECT_EQ(r.values, fin({2, 1, 0}));
}

TEST(Reqdiv, EqualsDivForTom) {
    auto res = reqdiv_tuples(kTom);
    EXPECT_TRUE(res.forcing);
    auto edges = kTom.newton_polygon().edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto d = div_tuple(kTom, edges[i]);
        auto levels = edge_levels(kTom.newton_polygon(), edges[i]);
        for (Int k = 0; k <= d.k_max; ++k) {
            if (levels[static_cast<std::size_t>(k)].empty())
                EXPECT_TRUE(d.at(k).is_infinite());
            else
                EXPECT_EQ(res.tuples[i].at(k), d.at(k)) << i << " " << k;
        }
    }
}

TEST(Reqdiv, BelowDivComponentwise) {
    zmlp::testing::Rng rng(17);
    for (int c = 0; c < 100; ++c) {
        LaurentPoly f = zmlp::testing::random_zmlp(rng, 16);
        auto edges = f.newton_polygon().edges();
        auto res = reqdiv_tuples(f);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto d = div_tuple(f, edges[i]);
            for (Int k = d.k_min; k <= d.k_max; ++k) {
                if (!d.at(k).is_infinite()) {
                    ASSERT_LE(res.tuples[i].at(k).value(), d.at(k).value()) << f.to_string();
                }
            }
        }
    }
}

TEST(Divstep, TomAndJerry) {
    auto te = kTom.newton_polygon().edges();
    EXPECT_EQ(divstep(kTom, te[0]), (Partition{2, 1}));
    EXPECT_EQ(divstep(kTom, te[2]), (Partition{2}));
    EXPECT_EQ(divstep(kTom, te[1]), (Partition{1}));
    auto je = kJerry.newton_polygon().edges();
    EXPECT_EQ(divstep(kJerry, je[0]), (Partition{3}));
    EXPECT_EQ(divstep(kJerry, je[2]), (Partition{1, 1}));
    EXPECT_EQ(divstep(kJerry, je[1]), (Partition{1}));
}

TEST(Divstep, StepsOfTuple) {
    DivTuple t{0, 0, 5, fin({7, 4, 2, 0, 0, 0})};
    EXPECT_EQ(steps_of(t), (Partition{3, 2, 2}));
    DivTuple bad{0, 0, 2, {Multiplicity::finite(1), Multiplicity::infinite(), Multiplicity::finite(0)}};
    EXPECT_THROW(steps_of(bad), std::invalid_argument);
}

TEST(DualPair, TomAndJerry) {
    auto t = dual_pair(kTom);
    EXPECT_EQ(t.a, 2);
    EXPECT_EQ(t.b, 3);
    EXPECT_EQ(t.pair, parse_dual_pair("(1,1),(2,1)"));
    EXPECT_EQ(dual_pair(kJerry).pair, parse_dual_pair("(2),(1,1,1)"));
}

TEST(DualPair, OneByK) {
    for (Int k = 1; k <= 8; ++k) {
        auto f = P("(1+x)").pow(k) + P("y");
        auto t = dual_pair(f);
        EXPECT_EQ(t.pair.a_part, (Partition{1}));
        EXPECT_EQ(t.pair.b_part, Partition(std::vector<Int>(static_cast<std::size_t>(k), 1)));
    }
}

TEST(DualPair, NonTriangleRejected) { EXPECT_THROW(dual_pair(P("1+x+y+x*y")), std::invalid_argument); }

TEST(Zeromut, CountsMatch) {
    EXPECT_EQ(reqdiv_total(kTom), 7);
    auto r = verify_zeromut_props(kTom);
    EXPECT_TRUE(r.counts_match());
    EXPECT_TRUE(r.all_convex());
    auto f = zmlp_from_pair(parse_dual_pair("(4,1),(3,3,1)"));
    ASSERT_TRUE(f);
    EXPECT_EQ(reqdiv_total(*f), 25);
}

TEST(Zeromut, ConvexityNegativeControl) {
    EXPECT_TRUE(is_convex_tuple(DivTuple{0, 0, 3, fin({3, 1, 0, 0})}));
    EXPECT_FALSE(is_convex_tuple(DivTuple{0, 0, 3, fin({3, 2, 0, 0})}));
}

TEST(Reconstruct, TomAndJerry) {
    auto tom = reconstruct_from_reqdiv(standard_triangle(2, 3), reqdiv_tuples(kTom).tuples);
    ASSERT_TRUE(tom);
    EXPECT_EQ(*tom, kTom);
    auto jerry = zmlp_from_pair(parse_dual_pair("(2),(1,1,1)"));
    ASSERT_TRUE(jerry);
    EXPECT_EQ(*jerry, kJerry);
}

TEST(Reconstruct, UnrealizablePair) {
    EXPECT_FALSE(zmlp_from_pair(parse_dual_pair("(3,1),(3,3,1)")));
}
