#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "json.hpp"
#include "minorbench/constructions.hpp"
#include "minorbench/graph_io.hpp"
#include "test_support.hpp"

using namespace minorbench;

namespace {

nlohmann::json reference()
{
    return nlohmann::json::parse(testkit::read_file(MINORBENCH_TEST_DATA "/reference.json"));
}

}  // namespace

TEST(Graph6, MatchesReferenceEncoder)
{
    const auto ref = reference()["graph6"];
    EXPECT_EQ(to_graph6(complete_graph(5)), ref["K5"]);
    EXPECT_EQ(to_graph6(complete_bipartite(3, 3)), ref["K3,3"]);
    EXPECT_EQ(to_graph6(petersen_graph()), ref["petersen"]);
    EXPECT_EQ(to_graph6(half_grid({1, 1})), ref["half_grid_1_1"]);
    EXPECT_EQ(to_graph6(build_G({1, 1})), ref["G_1_1"]);
    // 88 vertices exercises the long size prefix.
    EXPECT_EQ(to_graph6(build_G({3, 7})), ref["G_3_7"]);
}

TEST(Graph6, SmallCases)
{
    EXPECT_EQ(to_graph6(empty_graph(0)), "?");
    EXPECT_EQ(to_graph6(empty_graph(1)), "@");
    EXPECT_EQ(to_graph6(complete_graph(2)), "A_");
    EXPECT_EQ(from_graph6(">>graph6<<D~{"), complete_graph(5));
}

TEST(Graph6, RejectsMalformed)
{
    EXPECT_THROW(from_graph6(""), FormatError);
    EXPECT_THROW(from_graph6("D~"), FormatError);
    EXPECT_THROW(from_graph6("A`"), FormatError);  // padding bits set
    EXPECT_THROW(from_graph6("D~{\x7f"), FormatError);
}

TEST(Graph6, RoundTripRandom)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = testkit::random_graph(rng, 1 + rng() % 70, 0.3);
        const std::string text = to_graph6(g);
        EXPECT_EQ(from_graph6(text), g);
        EXPECT_EQ(to_graph6(from_graph6(text)), text);
    }
}

TEST(Json, RoundTripKeepsTags)
{
    const Graph g = build_G({2, 1});
    const std::string text = to_json(g);
    const Graph back = from_json(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(to_json(back), text);
    const auto doc = nlohmann::json::parse(text);
    EXPECT_EQ(doc["n"], g.vertex_count());
    EXPECT_EQ(doc["tags"]["0"]["kind"], "grid");
}

TEST(Json, RejectsBrokenDocuments)
{
    EXPECT_THROW(from_json("{"), FormatError);
    EXPECT_THROW(from_json(R"({"n": 2, "edges": [[0, 2]]})"), FormatError);
    EXPECT_THROW(from_json(R"({"n": 2, "edges": [], "tags": {"x": {"kind": "plain"}}})"), FormatError);
}

TEST(Files, ExtensionPicksFormat)
{
    const auto dir = std::filesystem::temp_directory_path() / "minorbench_io_test";
    std::filesystem::create_directories(dir);
    const Graph g = build_G({1, 1});
    write_graph_file(dir / "g.json", g);
    write_graph_file(dir / "g.g6", g);
    EXPECT_EQ(read_graph_file(dir / "g.json"), g);
    EXPECT_EQ(read_graph_file(dir / "g.g6"), g.without_tags());
    EXPECT_THROW(read_graph_file(dir / "missing.json"), std::runtime_error);
    std::filesystem::remove_all(dir);
}

TEST(Dot, GridVerticesCarryPositions)
{
    const std::string dot = to_dot(half_grid({1, 0}));
    EXPECT_NE(dot.find("graph G {"), std::string::npos);
    EXPECT_NE(dot.find("pos="), std::string::npos);
    EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
}
