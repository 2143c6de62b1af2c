#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "zmlp/io.hpp"
#include "zmlp/zmlp.hpp"

using namespace zmlp;

TEST(Io, PolynomialRoundTrip) {
    LaurentPoly f = LaurentPoly::parse("(1+x)^3+2*y*(1+x)+y^2-5*x^-2*y");
    EXPECT_EQ(poly_from_json(to_json(f)), f);
    EXPECT_EQ(poly_from_json(Json("1+x+y")), LaurentPoly::parse("1+x+y"));
    LaurentPoly huge = LaurentPoly::parse("(1+x)^80");
    EXPECT_EQ(poly_from_json(Json::parse(to_json(huge).dump())), huge);
}

TEST(Io, PolygonAndMap) {
    auto t = standard_triangle(2, 3);
    EXPECT_EQ(polygon_from_json(to_json(t)), t);
    UnimodularAffineMap g({2, 1, 1, 1}, {3, -4});
    EXPECT_EQ(map_from_json(to_json(g)), g);
}

TEST(Io, PairsAndTuples) {
    DualPair p = parse_dual_pair("(4,1),(3,3,1)");
    EXPECT_EQ(pair_from_json(to_json(p)), p);
    EXPECT_EQ(pair_from_json(Json("(4,1),(3,3,1)")), p);
    DivTuple t{0, 0, 2, {Multiplicity::finite(2), Multiplicity::infinite(), Multiplicity::finite(0)}};
    EXPECT_EQ(div_tuple_from_json(to_json(t)), t);
}

TEST(Io, CertificateRoundTrip) {
    auto c = triangular_reduce(LaurentPoly::parse("(1+x)^3+2*y*(1+x)+y^2"));
    ASSERT_TRUE(c);
    Json j = Json::parse(dump(to_json(c->certificate)));
    MutationCertificate back = certificate_from_json(j);
    EXPECT_TRUE(replay(back).ok);
    EXPECT_EQ(back.steps.size(), c->certificate.steps.size());
    EXPECT_EQ(dump(to_json(back)), dump(to_json(c->certificate)));
}

TEST(Io, Errors) {
    EXPECT_THROW(poly_from_json(Json::parse(R"({"terms":[{"exp":[0,0],"coeff":1},{"exp":[0,0],"coeff":2}]})")),
                 std::invalid_argument);
    EXPECT_THROW(point_from_json(Json::parse("[1]")), std::invalid_argument);
    EXPECT_THROW(spec_from_json(Json::parse(R"({"phi":{"normal":[1,0],"constant":0},"h":"1+x"})")),
                 std::invalid_argument);
    EXPECT_THROW(read_json_file("/nonexistent/file.json"), std::runtime_error);
}

TEST(Io, FileRoundTripWithComments) {
    auto path = std::filesystem::temp_directory_path() / "zmlp_io_test.json";
    {
        std::FILE* fp = std::fopen(path.c_str(), "w");
        ASSERT_NE(fp, nullptr);
        std::fputs("// note\n{\"vertices\": [[0,0],[3,0],[0,2]]}\n", fp);
        std::fclose(fp);
    }
    EXPECT_EQ(polygon_from_json(read_json_file(path.string())), standard_triangle(2, 3));
    write_json_file(path.string(), to_json(standard_triangle(1, 4)));
    EXPECT_EQ(polygon_from_json(read_json_file(path.string())), standard_triangle(1, 4));
    std::filesystem::remove(path);
}
