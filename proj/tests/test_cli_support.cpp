#include <gtest/gtest.h>

#include "cli_support.hpp"
#include "minorbench/constructions.hpp"

using namespace minorbench;

TEST(CliSupport, NamedGraphs)
{
    EXPECT_TRUE(cli::is_named_graph("K5"));
    EXPECT_TRUE(cli::is_named_graph("H:3"));
    EXPECT_FALSE(cli::is_named_graph("graph.json"));
    EXPECT_EQ(cli::load_graph("K5"), complete_graph(5));
    EXPECT_EQ(cli::load_graph("K33"), complete_bipartite(3, 3));
    EXPECT_EQ(cli::load_graph("I"), build_I());
    EXPECT_EQ(cli::load_graph("PATH:2"), path_graph(3));
    EXPECT_EQ(cli::load_graph("H:2"), build_H(2));
}

TEST(CliSupport, SelectByIds)
{
    const Graph g = complete_graph(8);
    EXPECT_EQ(cli::select_vertices(g, "7,0,3,3"), (std::vector<VertexId>{0, 3, 7}));
    EXPECT_THROW(cli::select_vertices(g, "0,8"), std::invalid_argument);
}

TEST(CliSupport, SelectByPredicate)
{
    const Graph g = build_G({1, 1});
    const auto left = cli::select_vertices(g, "row==0 && col<0");
    EXPECT_EQ(left, std::vector<VertexId>{*find_grid_vertex(g, -1, 0)});
    EXPECT_EQ(cli::select_vertices(g, "col>=0").size(), 4u);
    EXPECT_THROW(cli::select_vertices(g, "depth==0"), std::invalid_argument);
    EXPECT_THROW(cli::select_vertices(complete_graph(3), "row==0"), std::invalid_argument);
}
