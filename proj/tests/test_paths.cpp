#include <gtest/gtest.h>

#include <random>

#include "minorbench/constructions.hpp"
#include "minorbench/paths.hpp"
#include "test_support.hpp"

using namespace minorbench;

namespace {

std::vector<VertexId> row_of(const Graph& g, TruncationParams p, int row)
{
    std::vector<VertexId> out;
    for (int a = -p.m; a <= p.m; ++a)
        out.push_back(*find_grid_vertex(g, a, row));
    return out;
}

std::vector<VertexId> column_of(const Graph& g, TruncationParams p, int col)
{
    std::vector<VertexId> out;
    for (int b = 0; b <= p.h; ++b)
        out.push_back(*find_grid_vertex(g, col, b));
    return out;
}

}  // namespace

TEST(Paths, GridRows)
{
    const TruncationParams p{2, 2};
    const Graph g = half_grid(p);
    const auto family = max_vertex_disjoint_paths(g, row_of(g, p, 0), row_of(g, p, 2));
    EXPECT_EQ(family.paths.size(), 5u);
    EXPECT_EQ(path_family_violation(g, family), "");
}

TEST(Paths, GridColumns)
{
    const TruncationParams p{1, 1};
    const Graph g = half_grid(p);
    const auto left = column_of(g, p, -1);
    const auto right = column_of(g, p, 1);
    EXPECT_EQ(max_vertex_disjoint_paths(g, left, right).paths.size(), 2u);
    const CutSet cut = min_vertex_cut(g, left, right);
    EXPECT_EQ(cut.vertices, (std::vector<VertexId>{*find_grid_vertex(g, 0, 0), *find_grid_vertex(g, 0, 1)}));
    EXPECT_TRUE(separates(g, cut.vertices, left, right));
}

TEST(Paths, SharedVertexIsATrivialPath)
{
    const Graph g = path_graph(3);
    const VertexId s[] = {1};
    const VertexId t[] = {1, 2};
    const auto family = max_vertex_disjoint_paths(g, s, t);
    ASSERT_EQ(family.paths.size(), 1u);
    EXPECT_EQ(family.paths[0], std::vector<VertexId>{1});
    EXPECT_THROW(min_vertex_cut(g, s, t), std::invalid_argument);
    const VertexId none[] = {0};
    EXPECT_THROW(max_vertex_disjoint_paths(g, std::span<const VertexId>{}, none), std::invalid_argument);
}

TEST(Paths, ViolationsDetected)
{
    const Graph g = path_graph(4);
    EXPECT_NE(path_family_violation(g, {{{0, 2}}}), "");
    EXPECT_NE(path_family_violation(g, {{{0, 1}, {1, 2}}}), "");
    EXPECT_NE(path_family_violation(g, {{{0, 1, 0}}}), "");
    EXPECT_EQ(path_family_violation(g, {{{0, 1}, {2, 3}}}), "");
}

TEST(Paths, MengerOnRandomGraphs)
{
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 6 + rng() % 6;
        const Graph g = testkit::random_graph(rng, n, trial % 2 ? 0.25 : 0.4);
        std::vector<VertexId> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const std::size_t ns = 1 + rng() % 3, nt = 1 + rng() % 3;
        std::vector<VertexId> s(order.begin(), order.begin() + ns);
        std::vector<VertexId> t(order.begin() + ns, order.begin() + ns + nt);
        const auto family = max_vertex_disjoint_paths(g, s, t);
        const CutSet cut = min_vertex_cut(g, s, t);
        EXPECT_EQ(path_family_violation(g, family), "");
        EXPECT_EQ(family.paths.size(), cut.vertices.size());
        EXPECT_TRUE(separates(g, cut.vertices, s, t));
        EXPECT_EQ(cut.vertices.size(), testkit::brute_force_cut_size(g, s, t, n));
        for (const auto& path : family.paths) {
            EXPECT_NE(std::find(s.begin(), s.end(), path.front()), s.end());
            EXPECT_NE(std::find(t.begin(), t.end(), path.back()), t.end());
        }
    }
}
