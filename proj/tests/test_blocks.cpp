#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "minorbench/blocks.hpp"
#include "minorbench/constructions.hpp"
#include "test_support.hpp"

using namespace minorbench;

TEST(Blocks, PathAndCycle)
{
    const auto p = block_decomposition(path_graph(4));
    EXPECT_EQ(p.blocks.size(), 3u);
    EXPECT_EQ(p.cut_vertices, (std::vector<VertexId>{1, 2}));
    const auto c = block_decomposition(cycle_graph(5));
    EXPECT_EQ(c.blocks.size(), 1u);
    EXPECT_TRUE(c.cut_vertices.empty());
    EXPECT_TRUE(block_decomposition(empty_graph(3)).blocks.empty());
}

TEST(Blocks, BowTie)
{
    // Two triangles sharing vertex 2.
    const Graph g = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    const auto d = block_decomposition(g);
    EXPECT_EQ(d.blocks, (std::vector<std::vector<VertexId>>{{0, 1, 2}, {2, 3, 4}}));
    EXPECT_EQ(d.cut_vertices, std::vector<VertexId>{2});
    EXPECT_EQ(d.tree_edges.size(), 2u);
    EXPECT_EQ(block_axiom_violation(g, d), "");
    const VertexId tri[] = {3, 4};
    EXPECT_EQ(containing_block(d, tri), 1u);
}

TEST(Blocks, Biconnectivity)
{
    EXPECT_TRUE(is_biconnected(half_grid({2, 2})));
    EXPECT_FALSE(is_biconnected(half_grid({2, 0})));
    EXPECT_TRUE(is_biconnected(complete_graph(2)));
    EXPECT_FALSE(is_biconnected(empty_graph(2)));
    EXPECT_FALSE(is_biconnected(build_G({1, 1})));
}

TEST(Blocks, CensusOfG)
{
    const auto ref = nlohmann::json::parse(testkit::read_file(MINORBENCH_TEST_DATA "/reference.json"));
    for (int m = 1; m <= 3; ++m) {
        const auto d = block_decomposition(build_G({m, 1}));
        EXPECT_EQ(d.blocks.size(), static_cast<std::size_t>(1 + m + (m + 1)));
        EXPECT_EQ(d.blocks.size(), ref["blocks_G_m_1"][std::to_string(m)].get<std::size_t>());
    }
    EXPECT_EQ(block_decomposition(build_G({2, 1})).cut_vertices,
              ref["cut_vertices_G_2_1"].get<std::vector<VertexId>>());
}

TEST(Blocks, AgreeWithBruteForce)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = testkit::random_graph(rng, 2 + rng() % 14, trial % 2 ? 0.2 : 0.35);
        const auto d = block_decomposition(g);
        EXPECT_EQ(block_axiom_violation(g, d), "");
        EXPECT_EQ(d.blocks, testkit::brute_force_blocks(g));
        EXPECT_EQ(d.cut_vertices, testkit::brute_force_cut_vertices(g));
    }
}

TEST(Blocks, AxiomCheckerCatchesDamage)
{
    const Graph g = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto d = block_decomposition(g);
    auto merged = d;
    merged.blocks = {{0, 1, 2, 3, 4}};
    merged.tree_edges.clear();
    merged.cut_vertices.clear();
    EXPECT_NE(block_axiom_violation(g, merged), "");
    auto missing = d;
    missing.blocks.pop_back();
    EXPECT_NE(block_axiom_violation(g, missing), "");
    auto bogus_cut = d;
    bogus_cut.cut_vertices.push_back(0);
    EXPECT_NE(block_axiom_violation(g, bogus_cut), "");
}

TEST(Blocks, DotMentionsEveryBlock)
{
    const auto d = block_decomposition(build_G({1, 1}));
    const std::string dot = block_cut_tree_dot(d);
    for (std::size_t b = 0; b < d.blocks.size(); ++b)
        EXPECT_NE(dot.find("b" + std::to_string(b)), std::string::npos);
}
