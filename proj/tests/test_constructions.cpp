#include <gtest/gtest.h>

#include "minorbench/blocks.hpp"
#include "minorbench/constructions.hpp"
#include "minorbench/minor.hpp"
#include "minorbench/recipe.hpp"

using namespace minorbench;

TEST(HalfGrid, Counts)
{
    const Graph g = half_grid({1, 1});
    EXPECT_EQ(g.vertex_count(), 6u);
    EXPECT_EQ(g.edge_count(), 7u);
    EXPECT_EQ(half_grid({1, 0}).without_tags(), path_graph(3));
    EXPECT_EQ(grid_vertex_id({2, 3}, -2, 0), 0u);
    EXPECT_EQ(grid_vertex_id({2, 3}, 0, 1), 7u);
    EXPECT_EQ(find_grid_vertex(half_grid({2, 3}), 0, 1), 7u);
    EXPECT_FALSE(find_grid_vertex(half_grid({2, 3}), 3, 0).has_value());
}

TEST(HalfGrid, ParamsValidated)
{
    EXPECT_THROW(half_grid({0, 1}), std::invalid_argument);
    EXPECT_THROW(half_grid({1, -1}), std::invalid_argument);
}

TEST(HalfGrid, GridsArePlanar)
{
    EXPECT_EQ(kuratowski_class(half_grid({3, 3}), {}).kind, KuratowskiClass::Kind::Planar);
}

TEST(Attach, K5AndK33)
{
    const Graph base = half_grid({1, 1});
    const Graph with5 = attach_k5(base, *find_grid_vertex(base, -1, 0));
    EXPECT_EQ(with5.vertex_count(), 10u);
    EXPECT_EQ(with5.edge_count(), 17u);
    EXPECT_EQ(to_string(with5.tag(6)), "k5(-1,1)");
    const Graph with33 = attach_k33(base, *find_grid_vertex(base, 0, 0));
    EXPECT_EQ(with33.vertex_count(), 11u);
    EXPECT_EQ(with33.edge_count(), 16u);
    // Anchor shares a side with new vertices 1 and 2.
    const VertexId anchor = *find_grid_vertex(base, 0, 0);
    EXPECT_FALSE(with33.has_edge(anchor, 6));
    EXPECT_TRUE(with33.has_edge(anchor, 8));
    EXPECT_THROW(attach_k5(build_G({1, 1}), 7), std::invalid_argument);  // private vertex
}

TEST(BuildG, CountsFollowTheFormula)
{
    for (int m = 1; m <= 3; ++m)
        for (int h = 0; h <= 3; ++h) {
            const Graph g = build_G({m, h});
            EXPECT_EQ(g.vertex_count(), static_cast<std::size_t>((2 * m + 1) * (h + 1) + 4 * m + 5 * (m + 1)));
        }
    EXPECT_EQ(build_G({1, 1}).edge_count(), 35u);
    EXPECT_EQ(build_G({2, 0}).vertex_count(), 28u);
}

TEST(BuildG, GridPartIsTheHalfGrid)
{
    const TruncationParams p{2, 2};
    const Graph g = build_G(p);
    std::vector<VertexId> grid;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (std::holds_alternative<GridTag>(g.tag(v)))
            grid.push_back(v);
    EXPECT_EQ(induced_subgraph(g, grid).graph, half_grid(p));
    EXPECT_TRUE(is_biconnected(half_grid(p)));
}

TEST(BuildI, Structure)
{
    const Graph i = build_I();
    EXPECT_EQ(i.vertex_count(), kIVertexCount);
    EXPECT_EQ(i.edge_count(), 19u);
    const auto d = block_decomposition(i);
    EXPECT_EQ(d.blocks.size(), 2u);
    EXPECT_EQ(d.cut_vertices, std::vector<VertexId>{kICutVertex});
    for (VertexId v = 1; v <= 4; ++v)
        EXPECT_TRUE(i.has_edge(kICutVertex, v));
    EXPECT_FALSE(i.has_edge(kICutVertex, 5));
    EXPECT_TRUE(i.has_edge(kICutVertex, 7));
}

TEST(BuildH, IsIPlusPath)
{
    const Graph h = build_H(2);
    EXPECT_EQ(h.vertex_count(), 13u);
    EXPECT_EQ(h.edge_count(), 21u);
    EXPECT_EQ(connected_components(h).size(), 2u);
    EXPECT_THROW(build_H(0), std::invalid_argument);
}

TEST(Recipe, CanonicalRecipeRebuildsG)
{
    for (int m = 1; m <= 3; ++m)
        for (int h = 0; h <= 2; ++h)
            EXPECT_EQ(eval_recipe(canonical_g_recipe(), {m, h}), build_G({m, h}));
    EXPECT_EQ(eval_recipe(parse_recipe("base halfgrid"), {2, 1}), half_grid({2, 1}));
}

TEST(Recipe, ParsesWhitespaceFreely)
{
    const Recipe r = parse_recipe("  base   halfgrid;attach K5 where col<0 ;\n attach K33 where col >= 0");
    EXPECT_EQ(r, canonical_g_recipe());
    EXPECT_EQ(to_string(r), "base halfgrid; attach K5 where col < 0; attach K33 where col >= 0;");
    EXPECT_EQ(parse_recipe(to_string(r)), r);
}

TEST(Recipe, Errors)
{
    EXPECT_THROW(parse_recipe(""), RecipeError);
    EXPECT_THROW(parse_recipe("attach K5 where col < 0"), RecipeError);
    EXPECT_THROW(parse_recipe("base halfgrid; base halfgrid"), RecipeError);
    EXPECT_THROW(parse_recipe("attach K5 where col < 0; base halfgrid"), RecipeError);
    EXPECT_THROW(parse_recipe("base halfgrid; attach K7 where col < 0"), RecipeError);
    EXPECT_THROW(parse_recipe("base halfgrid; attach K5 where col = 0"), RecipeError);
    EXPECT_THROW(parse_recipe("base halfgrid; attach K5 where row < 0"), RecipeError);
    EXPECT_THROW(parse_recipe("Base halfgrid"), RecipeError);
    try {
        parse_recipe("base halfgrid; attach K5 where col < 1");
        FAIL();
    } catch (const RecipeError& e) {
        EXPECT_GT(e.position(), 0u);
    }
}

TEST(Recipe, ColumnPredicates)
{
    EXPECT_TRUE(column_matches(ColumnComparison::Less, -1));
    EXPECT_FALSE(column_matches(ColumnComparison::Less, 0));
    EXPECT_TRUE(column_matches(ColumnComparison::GreaterEqual, 0));
    EXPECT_TRUE(column_matches(ColumnComparison::Equal, 0));
    EXPECT_FALSE(column_matches(ColumnComparison::Greater, 0));
    EXPECT_TRUE(column_matches(ColumnComparison::LessEqual, 0));
}
