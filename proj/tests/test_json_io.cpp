#include "lltlab/json_io.hpp"

#include <gtest/gtest.h>

#include <string>

#include "lltlab/errors.hpp"
#include "lltlab/shapes.hpp"
#include "lltlab/theorem.hpp"

using namespace lltlab;

TEST(JsonQPoly, RoundTripsWithDecimalStrings) {
    QPoly p = QPoly::from_coeffs({-3, 0, 7});
    ojson j = qpoly_to_json(p);
    EXPECT_EQ(j.dump(), R"(["-3","0","7"])");
    EXPECT_EQ(qpoly_from_json(j), p);
    EXPECT_EQ(qpoly_to_json(QPoly()).dump(), "[]");
    EXPECT_EQ(qpoly_from_json(nlohmann::json::parse("[]")), QPoly());
}

TEST(JsonQPoly, SurvivesHugeCoefficients) {
    mpz_class big = mpz_class(1) << 100;
    QPoly p = QPoly::monomial(big, 2);
    ojson j = qpoly_to_json(p);
    EXPECT_EQ(j[2].get<std::string>(), big.get_str());
    EXPECT_EQ(qpoly_from_json(j), p);
}

TEST(JsonQPoly, AcceptsIntegersAndRejectsJunk) {
    EXPECT_EQ(qpoly_from_json(nlohmann::json::parse("[1,2]")), QPoly::from_coeffs({1, 2}));
    EXPECT_THROW(qpoly_from_json(nlohmann::json::parse(R"(["12x"])")), ParseError);
    EXPECT_THROW(qpoly_from_json(nlohmann::json::parse(R"([true])")), ParseError);
}

TEST(JsonSymPoly, CanonicalBytes) {
    SymPoly a = llt_of_shapes(parse_shape_sequence("[(1),(1)]"), 2);
    std::string expect =
        R"({"num_vars":2,"terms":[{"exponents":[2],"q_coeffs":["1"]},)"
        R"({"exponents":[1,1],"q_coeffs":["1","1"]}]})";
    EXPECT_EQ(sympoly_to_json(a).dump(), expect);
    EXPECT_EQ(sympoly_to_json(a).dump(), sympoly_to_json(a).dump());
}

TEST(JsonSymPoly, RoundTrips) {
    SymPoly a = llt_of_shapes(parse_shape_sequence("[(2,1),(1)]"), 4);
    EXPECT_EQ(sympoly_from_json(nlohmann::json::parse(sympoly_to_json(a).dump())), a);
    SymPoly z = SymPoly::zero(3);
    EXPECT_EQ(sympoly_from_json(nlohmann::json::parse(sympoly_to_json(z).dump())), z);
}

TEST(JsonGraph, RoundTripsAndDefaults) {
    LLTGraph g = melting_lollipop_graph(MeltingLollipop(1, 3, 1));
    EXPECT_EQ(graph_from_json(nlohmann::json::parse(graph_to_json(g).dump())), g);
    LLTGraph sparse = graph_from_json(nlohmann::json::parse(R"({"n":2,"ed":[[1,2]]})"));
    EXPECT_EQ(sparse, LLTGraph(2, {}, {}, {{1, 2}}));
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"e1":[]})")), ParseError);
}

TEST(JsonTree, AcceptsBothShapes) {
    LabeledTree t = tree_from_json(nlohmann::json::parse("[[1,3],[1,5],[1,6],[2,5],[4,5]]"));
    EXPECT_EQ(t.size(), 6);
    LabeledTree o = tree_from_json(
        nlohmann::json::parse(R"({"m":6,"edges":[[1,3],[1,5],[1,6],[2,5],[4,5]]})"));
    EXPECT_EQ(o.edges, t.edges);
    EXPECT_EQ(tree_from_json(nlohmann::json::parse(tree_to_json(t).dump())).edges, t.edges);
}

TEST(JsonParking, RoundTrips) {
    ParkingFunction f({3, 1, 3, 1, 1});
    EXPECT_EQ(parking_to_json(f).dump(), "[3,1,3,1,1]");
    EXPECT_EQ(parking_from_json(nlohmann::json::parse("[3,1,3,1,1]")), f);
}

TEST(JsonShapes, PrintsShapeStrings) {
    ojson j = shapes_to_json(parse_shape_sequence("[(3,2)/(1),(1,1)]"));
    EXPECT_EQ(j.dump(), R"x({"shapes":["(3,2)/(1)","(1,1)"]})x");
}

TEST(JsonReport, CarriesWitnessOnFailure) {
    VerificationReport ok = VerificationReport::pass("claim_a", "x=1");
    ok.millis = 2.5;
    ok.notes = {"note"};
    ojson j = report_to_json(ok);
    EXPECT_EQ(j["claim"], "claim_a");
    EXPECT_EQ(j["holds"], true);
    EXPECT_FALSE(j.contains("witness"));
    EXPECT_FALSE(j.contains("millis"));  // JSON output is run-to-run identical

    SymPoly lhs = SymPoly::monomial_basis(Partition({1}), 2);
    VerificationReport bad = VerificationReport::fail("claim_b", "x=2", lhs, SymPoly::zero(2));
    ojson jb = report_to_json(bad);
    EXPECT_EQ(jb["holds"], false);
    ASSERT_TRUE(jb.contains("witness"));
    EXPECT_EQ(jb["witness"]["difference"], sympoly_to_json(lhs));
}
