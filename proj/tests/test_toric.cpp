#include <gtest/gtest.h>

#include <random>

#include "zmlp/toric.hpp"

using namespace zmlp;

namespace {
QuotientSingularity T(const char* s) { return parse_type(s); }

bool same_type(const QuotientSingularity& s, const char* expected) { return sing_equivalent(s, T(expected)); }

std::vector<Vec3> ray_set(const Cone3& c) {
    auto r = c.rays();
    std::sort(r.begin(), r.end());
    return r;
}

bool has_cone(const Fan3& fan, const Cone3& c) {
    return std::any_of(fan.cones.begin(), fan.cones.end(), [&](const Cone3& d) { return ray_set(d) == ray_set(c); });
}

std::array<Int, 9> random_gl3(std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> d(-3, 3);
    for (;;) {
        std::array<Int, 9> m;
        for (auto& x : m) x = d(rng);
        Int det = det3({m[0], m[1], m[2]}, {m[3], m[4], m[5]}, {m[6], m[7], m[8]});
        if (det == 1 || det == -1) return m;
    }
}

Vec3 act(const std::array<Int, 9>& m, const Vec3& v) {
    return {m[0] * v[0] + m[1] * v[1] + m[2] * v[2], m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
            m[6] * v[0] + m[7] * v[1] + m[8] * v[2]};
}
}  // namespace

TEST(Vec3, Basics) {
    EXPECT_EQ(cross3({1, 0, 0}, {0, 1, 0}), (Vec3{0, 0, 1}));
    EXPECT_EQ(det3({1, 0, 0}, {0, 1, 0}, {1, -2, 3}), 3);
    EXPECT_EQ(primitive3({2, -4, 6}), (Vec3{1, -2, 3}));
    auto v = parse_vectors("1,0,0;0,1,0;1,-2,3");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[2], (Vec3{1, -2, 3}));
    EXPECT_THROW(parse_vectors("1,0;0,1,0"), std::invalid_argument);
}

TEST(Cone, RejectsDegenerate) {
    EXPECT_THROW(Cone3({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), std::invalid_argument);
    EXPECT_THROW(Cone3({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), std::invalid_argument);
}

TEST(Cone, DropsRedundantGenerators) {
    Cone3 c({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {2, 0, 0}});
    EXPECT_TRUE(c.simplicial());
    EXPECT_EQ(c.multiplicity(), 1);
    EXPECT_TRUE(c.interior({1, 1, 1}));
    EXPECT_FALSE(c.interior({1, 1, 0}));
    EXPECT_TRUE(c.contains({1, 1, 0}));
    EXPECT_FALSE(c.contains({-1, 1, 0}));
}

TEST(Toric, ConeAndDual) {
    for (auto [a, b] : {std::pair<Int, Int>{2, 3}, {3, 5}, {1, 1}}) {
        Cone3 sigma = cone_over(standard_triangle(a, b));
        EXPECT_EQ(sigma, Cone3({{0, 0, 1}, {b, 0, 1}, {0, a, 1}}));
        Cone3 dual = dual_cone(sigma);
        EXPECT_TRUE(dual.has_ray({1, 0, 0}));
        EXPECT_TRUE(dual.has_ray({0, 1, 0}));
        EXPECT_TRUE(dual.has_ray({-a, -b, a * b}));
        EXPECT_EQ(ray_set(dual_cone(dual)), ray_set(sigma));
    }
}

TEST(Toric, PolarOfTwoThree) {
    Cone3 dual = dual_cone(cone_over(standard_triangle(2, 3)));
    std::vector<Vec3> sorted = dual.rays();
    std::sort(sorted.begin(), sorted.end());
    std::vector<Vec3> expect{{-2, -3, 6}, {0, 1, 0}, {1, 0, 0}};
    EXPECT_EQ(sorted, expect);
}

TEST(Toric, DegenerationCones) {
    const Int a = 3, b = 5;
    auto deg = toric_degeneration(standard_triangle(a, b));
    ASSERT_EQ(deg.fan.cones.size(), 3u);
    EXPECT_NO_THROW(deg.fan.validate());
    EXPECT_EQ(deg.fan.cones[0], Cone3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    EXPECT_EQ(deg.fan.cones[1], Cone3({{0, 1, 0}, {-a, -b, a * b}, {0, 0, 1}}));
    EXPECT_EQ(deg.fan.cones[2], Cone3({{-a, -b, a * b}, {1, 0, 0}, {0, 0, 1}}));
    EXPECT_TRUE(singularity_type(deg.fan.cones[0]).smooth());
    EXPECT_TRUE(sing_equivalent(singularity_type(deg.fan.cones[2]), make_type(b, {1, a, 0})));
    EXPECT_TRUE(sing_equivalent(singularity_type(deg.fan.cones[1]), make_type(a, {1, b, 0})));
}

TEST(Toric, DegenerationMultiplicities) {
    for (Int a = 1; a <= 7; ++a)
        for (Int b = a; b <= 9; ++b) {
            if (gcd_int(a, b) != 1) continue;
            auto deg = toric_degeneration(standard_triangle(a, b));
            for (const auto& c : deg.fan.cones) {
                Int m = c.multiplicity();
                EXPECT_TRUE(m == 1 || m == a || m == b) << a << "," << b << ": " << m;
            }
        }
}

TEST(Toric, UnitTriangleSmooth) {
    auto deg = toric_degeneration(standard_triangle(1, 1));
    for (const auto& c : deg.fan.cones) EXPECT_TRUE(singularity_type(c).smooth());
}

TEST(Toric, NonInteriorCentre) {
    Cone3 dual = dual_cone(cone_over(standard_triangle(2, 3)));
    EXPECT_THROW(central_subdivision(dual, {1, 0, 0}), std::invalid_argument);
}

TEST(Singularity, QuotientCones) {
    for (Int a = 1; a <= 12; ++a)
        for (Int b = 1; b <= 12; ++b) {
            auto s = singularity_type(Cone3({{1, 0, 0}, {0, 1, 0}, {1, -b, a}}));
            EXPECT_TRUE(sing_equivalent(s, make_type(a, {1, -1, b}))) << a << "," << b << ": " << to_string(s);
        }
    EXPECT_TRUE(same_type(singularity_type(Cone3({{1, 2, 2}, {0, 0, 1}, {1, 0, 1}})), "1/2(1,1,1)"));
    // With these rays the quotient fixes a coordinate axis.
    EXPECT_TRUE(same_type(singularity_type(Cone3({{0, 0, 1}, {1, 0, 0}, {0, 2, 1}})), "1/2(1,0,1)"));
    for (Int m = 0; m <= 10; ++m)
        EXPECT_TRUE(sing_equivalent(singularity_type(Cone3({{1, 0, 0}, {0, 1, 0}, {1, 1, m + 1}})),
                                    make_type(m + 1, {1, -1, -1})));
}

TEST(Singularity, NonCyclic) {
    auto s = singularity_type(Cone3({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}}));
    EXPECT_FALSE(s.cyclic);
    EXPECT_EQ(s.invariants, (std::vector<Int>{2, 2}));
}

TEST(Singularity, ParseAndPrint) {
    EXPECT_TRUE(T("smooth").smooth());
    EXPECT_EQ(to_string(T("1/5(1,-1,2)")), "1/5(1,-1,2)");
    EXPECT_THROW(T("1/0(1,1,1)"), std::invalid_argument);
    EXPECT_THROW(T("garbage"), std::invalid_argument);
}

TEST(Singularity, EquivalenceOptions) {
    auto s = T("1/5(1,2,3)");
    EXPECT_TRUE(sing_equivalent(s, T("1/5(3,1,2)")));
    EXPECT_FALSE(sing_equivalent(s, T("1/5(3,1,2)"), {false, false}));
    EXPECT_TRUE(sing_equivalent(s, T("1/5(2,4,1)")));  // times 2
    EXPECT_FALSE(sing_equivalent(s, T("1/5(2,4,1)"), {false, false}));
    EXPECT_FALSE(sing_equivalent(s, T("1/5(1,1,3)")));
    EXPECT_TRUE(sing_equivalent(T("1/7(1,-1,1)"), T("1/7(1,-1,-1)")));
}

TEST(Singularity, GL3Invariance) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<Int> d(-4, 4);
    int tested = 0;
    while (tested < 1000) {
        Vec3 u{d(rng), d(rng), d(rng)}, v{d(rng), d(rng), d(rng)}, w{d(rng), d(rng), d(rng)};
        if (det3(u, v, w) == 0) continue;
        Cone3 c({u, v, w});
        auto g = random_gl3(rng);
        Cone3 gc({act(g, u), act(g, v), act(g, w)});
        auto s = singularity_type(c), t = singularity_type(gc);
        ASSERT_EQ(s.r, t.r);
        ASSERT_TRUE(sing_equivalent(s, t)) << to_string(c);
        ASSERT_EQ(s.r, c.multiplicity());
        ++tested;
    }
}

TEST(Singularity, EquivalenceRelation) {
    std::mt19937_64 rng(4);
    std::vector<QuotientSingularity> types;
    for (int i = 0; i < 60; ++i) {
        Int r = 2 + static_cast<Int>(rng() % 6);
        types.push_back(make_type(r, {static_cast<Int>(rng() % r), static_cast<Int>(rng() % r), static_cast<Int>(rng() % r)}));
    }
    for (const auto& s : types) {
        EXPECT_TRUE(sing_equivalent(s, s));
        for (const auto& t : types) {
            ASSERT_EQ(sing_equivalent(s, t), sing_equivalent(t, s));
            ASSERT_EQ(sing_equivalent(s, t), s.r == t.r && s.normalized() == t.normalized());
        }
    }
}

TEST(Star, AddsQuotientCone) {
    const Int a = 5, b = 2;
    Cone3 start({{1, 0, 0}, {0, 1, 0}, {0, -b, a}});
    EXPECT_TRUE(sing_equivalent(singularity_type(start), make_type(a, {1, b, 0})));
    Fan3 sub = star_subdivision(Fan3{{start}}, {1, -b, a});
    EXPECT_NO_THROW(sub.validate());
    EXPECT_TRUE(has_cone(sub, Cone3({{1, 0, 0}, {0, 1, 0}, {1, -b, a}})));
}

TEST(Star, ExistingRayIsIdentity) {
    Fan3 fan{{Cone3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}};
    Fan3 same = star_subdivision(fan, {1, 0, 0});
    EXPECT_EQ(same.cones, fan.cones);
}

TEST(Star, OutsideSupport) {
    Fan3 fan{{Cone3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}};
    EXPECT_THROW(star_subdivision(fan, {-1, 0, 0}), std::invalid_argument);
}

TEST(Star, Conifold) {
    Fan3 fan{{Cone3({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}})}};
    Fan3 sub = star_subdivision(fan, {1, 2, 2});
    EXPECT_NO_THROW(sub.validate());
    int half = 0;
    for (const auto& c : sub.cones) {
        EXPECT_TRUE(c.has_ray({1, 2, 2}));
        if (same_type(singularity_type(c), "1/2(1,1,1)")) ++half;
    }
    EXPECT_EQ(half, 1);
}

TEST(Star, SupportPreservedAndMultiplicitiesAdd) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> d(-3, 3);
    int tested = 0;
    while (tested < 300) {
        Vec3 u{d(rng), d(rng), d(rng)}, v{d(rng), d(rng), d(rng)}, w{d(rng), d(rng), d(rng)};
        if (det3(u, v, w) == 0) continue;
        Cone3 c({u, v, w});
        Vec3 ray{0, 0, 0};
        for (const auto& r : c.rays()) {
            const Int k = 1 + static_cast<Int>(rng() % 3);
            for (int i = 0; i < 3; ++i) ray[i] += k * r[i];
        }
        Fan3 sub = star_subdivision(Fan3{{c}}, ray);
        ASSERT_NO_THROW(sub.validate());
        for (int t = 0; t < 20; ++t) {
            Vec3 p{d(rng), d(rng), d(rng)};
            ASSERT_EQ(c.contains(p), sub.contains(p));
        }
        // With ray = sum c_i r_i, the cone replacing r_i has |det| = c_i |det c|.
        const auto& r = c.rays();
        Vec3 pr = primitive3(ray);
        Int expected = abs_int(det3(pr, r[1], r[2]) + det3(r[0], pr, r[2]) + det3(r[0], r[1], pr));
        Int total = 0;
        for (const auto& s : sub.cones) total += s.multiplicity();
        ASSERT_EQ(total, expected);
        ++tested;
    }
}

TEST(Walls, TomSymbolic) {
    auto rep = wall_functions(LaurentPoly::parse("(1+x)^3+2*y*(1+x)+y^2"));
    ASSERT_EQ(rep.walls.size(), 3u);
    EXPECT_TRUE(rep.closes());
    EXPECT_TRUE(rep.labels_distinct);
    Int total = 0;
    for (const auto& w : rep.walls) total += w.degree();
    EXPECT_EQ(total, 6);
    std::vector<Int> lengths;
    for (const auto& w : rep.walls) lengths.push_back(w.degree());
    EXPECT_EQ(lengths, (std::vector<Int>{3, 1, 2}));
    EXPECT_EQ(rep.walls[0].exponents, (Partition{2, 1}));
    EXPECT_EQ(rep.walls[2].exponents, (Partition{1, 1}));
}

TEST(Walls, JerryShapes) {
    auto rep = wall_functions(LaurentPoly::parse("(1+y)^2+3*x*(1+y)+3*x^2+x^3"));
    EXPECT_EQ(rep.walls[0].exponents, (Partition{1, 1, 1}));
    EXPECT_EQ(rep.walls[2].exponents, (Partition{2}));
}

TEST(Walls, PresetValues) {
    auto rep = wall_functions(LaurentPoly::parse("(1+x)^3+2*y*(1+x)+y^2"), LambdaPolicy::Preset);
    for (const auto& w : rep.walls)
        for (const auto& v : w.values) EXPECT_TRUE(v.has_value());
    EXPECT_EQ(to_string(rep.walls[0]), "u^2*(u+z)");
}

TEST(Walls, DegreeMismatch) {
    EXPECT_THROW(wall_functions(standard_triangle(2, 3), {{2}, {1}, {1, 1}}), std::invalid_argument);
    EXPECT_THROW(wall_functions(standard_triangle(2, 3), {{2, 1}, {1}}), std::invalid_argument);
}

TEST(Walls, DegreeSumIsPerimeter) {
    std::mt19937_64 rng(21);
    for (int c = 0; c < 200; ++c) {
        std::vector<Point> pts;
        for (int i = 0; i < 6; ++i) pts.push_back({static_cast<Int>(rng() % 7), static_cast<Int>(rng() % 7)});
        auto poly = LatticePolygon::hull(pts);
        if (poly.dim() != 2) continue;
        std::vector<Partition> parts;
        Int perimeter = 0;
        for (const auto& e : poly.edges()) {
            parts.push_back(Partition(std::vector<Int>(static_cast<std::size_t>(e.length), 1)));
            perimeter += e.length;
        }
        auto rep = wall_functions(poly, parts);
        Int total = 0;
        for (const auto& w : rep.walls) total += w.degree();
        EXPECT_EQ(total, perimeter);
        EXPECT_TRUE(rep.closes());
        EXPECT_TRUE(rep.labels_distinct);
    }
}

TEST(Ducat, Sequences) {
    auto d11 = ducat_sequence(1, 1);
    EXPECT_EQ(d11.q, (std::vector<Int>{0, 1, 1}));
    EXPECT_EQ(d11.a, 1);
    EXPECT_EQ(d11.r, 2);
    auto d21 = ducat_sequence(2, 1);
    EXPECT_EQ(d21.a, 1);
    EXPECT_EQ(d21.r, 3);
    EXPECT_TRUE(sing_equivalent(d21.type, T("1/3(1,-1,-1)")));
    auto d12 = ducat_sequence(1, 2);
    EXPECT_EQ(d12.q, (std::vector<Int>{0, 1, 1, 0}));
    EXPECT_EQ(d12.a, 2);
    EXPECT_EQ(d12.r, 1);
    EXPECT_TRUE(d12.type.smooth());
}

TEST(Extraction, TomTwoThree) {
    auto r = extraction_certificate(parse_dual_pair("(1,1),(2,1)"), 2, 3);
    ASSERT_TRUE(r.certificate) << r.reason;
    EXPECT_EQ(r.certificate->variant, 1);
    EXPECT_TRUE(sing_equivalent(r.certificate->type, T("1/2(1,-1,3)")));
    EXPECT_EQ(r.certificate->chain.front(), parse_dual_pair("(1,1),(2,1)"));
}

TEST(Extraction, SpikeAbsent) {
    auto r = extraction_certificate(parse_dual_pair("(3,2),(3,3)"), 5, 6);
    EXPECT_FALSE(r.certificate);
    EXPECT_NE(r.reason.find("Spike"), std::string::npos);
}

TEST(Extraction, Errors) {
    EXPECT_THROW(extraction_certificate(parse_dual_pair("(1,1),(2,1)"), 2, 4), std::invalid_argument);
    EXPECT_THROW(extraction_certificate(parse_dual_pair("(2),(1,1)")), std::invalid_argument);
}
