#include "lhp/io.hpp"

#include <gtest/gtest.h>

using namespace lhp;
using lhp::io::json;

TEST(Parse, IntList) {
    EXPECT_EQ(io::parse_int_list("1,2,3"), (std::vector<Int>{1, 2, 3}));
    EXPECT_EQ(io::parse_int_list(" 4 , -5"), (std::vector<Int>{4, -5}));
    EXPECT_THROW(io::parse_int_list(""), InputError);
    EXPECT_THROW(io::parse_int_list("1,,2"), InputError);
    EXPECT_THROW(io::parse_int_list("1,x"), InputError);
    EXPECT_THROW(io::parse_int_list("99999999999999999999"), InputError);
}

TEST(Parse, Sequence) {
    EXPECT_EQ(io::parse_sequence("1,2,3"), SSequence({1, 2, 3}));
    EXPECT_THROW(io::parse_sequence("1,0"), InputError);
}

TEST(Parse, Poset) {
    const auto p = io::parse_poset(json::parse(R"({"n":3,"covers":[[1,3],[2,3]]})"));
    EXPECT_EQ(p.n(), 3u);
    EXPECT_TRUE(p.leq(1, 3));
    EXPECT_FALSE(p.leq(1, 2));
    EXPECT_EQ(io::parse_poset(json::parse(R"({"n":2})")).relations().size(), 0u);
    EXPECT_THROW(io::parse_poset(json::parse(R"({"n":2,"covers":[[2,1]]})")), InputError);
    EXPECT_THROW(io::parse_poset(json::parse(R"({"covers":[]})")), InputError);
    EXPECT_THROW(io::parse_poset(json::parse(R"({"n":"3"})")), InputError);
    EXPECT_THROW(io::parse_poset(json::parse(R"({"n":2,"covers":[[1]]})")), InputError);
}

TEST(Parse, PosetRoundTrip) {
    const LabeledPoset p(4, {{1, 2}, {2, 4}, {3, 4}});
    const auto q = io::parse_poset(io::to_json(p));
    EXPECT_EQ(q.relations(), p.relations());
}

TEST(Parse, Collection) {
    const auto c = io::parse_collection(json::parse("[[0,0,1,3],[0,0,3,1]]"));
    EXPECT_EQ(c[0], (Point{0, 0, 3, 1}));
    EXPECT_THROW(io::parse_collection(json::parse(R"({"a":1})")), InputError);
    EXPECT_THROW(io::parse_collection(json::parse(R"([["a"]])")), InputError);
}

TEST(Files, ReadErrors) {
    EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), InputError);
    const auto j = io::read_json_file(std::string(LHP_TEST_DATA) + "/poset_v.json");
    EXPECT_EQ(j.at("n"), 3);
}

TEST(Reports, PolynomialAndBasis) {
    EXPECT_EQ(io::to_json(IntPolynomial({1, 4, 1})).dump(), "[1,4,1]");
    EXPECT_EQ(io::to_json(IntPolynomial(std::vector<Int>{})).dump(), "[0]");
    const auto basis = io::to_json(groebner_basis(SSequence({1, 1, 2})));
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_TRUE(basis[0].contains("lead"));
    EXPECT_TRUE(basis[0].contains("trail"));
    EXPECT_EQ(basis[0]["lead"].size(), 2u);
}

TEST(Reports, ChainSchema) {
    const SSequence s({1, 2, 3});
    const auto chain = idp_decompose(LabeledPoset::chain(3), s, Point{1, 3, 5}, 2);
    const auto r = io::chain_report(Point{1, 3, 5}, 2, chain, true, true);
    EXPECT_EQ(r.at("lambda"), json({1, 3, 5}));
    EXPECT_EQ(r.at("k"), 2);
    EXPECT_EQ(r.at("chain"), json::parse("[[0,1,2],[1,2,3]]"));
    EXPECT_TRUE(r.at("unique").get<bool>());
    EXPECT_TRUE(r.at("brute_ok").get<bool>());
}

TEST(Reports, TriangulationSchema) {
    const SSequence s({1, 2, 3});
    const auto t = build_triangulation(s);
    const auto r = io::triangulation_report(t, h_vector(t), true, true);
    for (const char* key : {"vertices", "maximal_faces", "f_vector", "h_vector", "unimodular", "cover_ok", "regular"})
        EXPECT_TRUE(r.contains(key)) << key;
    EXPECT_EQ(r.at("maximal_faces").size(), 6u);
    EXPECT_EQ(r.at("h_vector"), json({1, 4, 1}));
    EXPECT_EQ(r.at("f_vector"), json({1, 8, 19, 18, 6}));
}
