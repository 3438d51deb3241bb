#include <gtest/gtest.h>

#include "minorbench/constructions.hpp"
#include "minorbench/packing.hpp"

using namespace minorbench;

namespace {

// Every grid vertex left of column 0, or every grid vertex from column 0 rightwards.
std::vector<VertexId> side(const Graph& g, TruncationParams p, bool left)
{
    std::vector<VertexId> out;
    for (int a = left ? -p.m : 0; a <= (left ? -1 : p.m); ++a)
        for (int b = 0; b <= p.h; ++b)
            out.push_back(*find_grid_vertex(g, a, b));
    return out;
}

}  // namespace

TEST(Packing, RepeatDisjoint)
{
    const Graph g = repeat_disjoint(complete_graph(3), 3);
    EXPECT_EQ(g.vertex_count(), 9u);
    EXPECT_EQ(g.edge_count(), 9u);
    EXPECT_TRUE(g.has_edge(6, 8));
    EXPECT_FALSE(g.has_edge(2, 3));
}

TEST(Packing, ViolationChecker)
{
    const Graph host = repeat_disjoint(complete_graph(3), 2);
    Packing ok;
    ok.models = {MinorModel{{{0}, {1}, {2}}}, MinorModel{{{3}, {4}, {5}}}};
    EXPECT_EQ(packing_violation(ok, complete_graph(3), host), "");
    Packing shared = ok;
    shared.models[1].branch_sets[0] = {2};
    EXPECT_NE(packing_violation(shared, complete_graph(3), host), "");
}

TEST(Packing, GreedyOnDisjointCopies)
{
    const Graph host = repeat_disjoint(complete_graph(4), 3);
    const Packing p = greedy_packing(complete_graph(4), host, {});
    EXPECT_EQ(p.size(), 3u);
    EXPECT_FALSE(p.budget_exhausted);
    EXPECT_EQ(packing_violation(p, complete_graph(4), host), "");
}

TEST(Packing, ExactOnG)
{
    const Graph i = build_I();
    const auto two = exact_packing(i, build_G({2, 1}), 2, {});
    EXPECT_EQ(two.outcome, PackingOutcome::Reached);
    EXPECT_EQ(two.best.size(), 2u);
    EXPECT_EQ(packing_violation(two.best, i, build_G({2, 1})), "");

    const auto flat = exact_packing(i, build_G({2, 0}), 2, {});
    EXPECT_EQ(flat.outcome, PackingOutcome::UpperBounded);
    EXPECT_EQ(flat.best.size(), 1u);

    const Graph g41 = build_G({4, 1});
    const auto three = exact_packing(i, g41, 3, {});
    EXPECT_EQ(three.outcome, PackingOutcome::UpperBounded);
    EXPECT_EQ(three.best.size(), 2u);
    EXPECT_EQ(packing_violation(three.best, i, g41), "");
}

TEST(Packing, ExhaustedWithTinyBudget)
{
    SearchBudget tiny;
    tiny.max_expansions = 5;
    const auto r = exact_packing(build_I(), build_G({2, 1}), 2, tiny);
    EXPECT_EQ(r.outcome, PackingOutcome::Exhausted);
    EXPECT_EQ(to_string(PackingOutcome::Exhausted), "exhausted");
}

TEST(Packing, CutBounds)
{
    for (int m = 1; m <= 3; ++m) {
        const TruncationParams p{m, 1};
        const Graph g = build_G(p);
        EXPECT_EQ(packing_upper_bound_by_cut(g, side(g, p, true), side(g, p, false)), 2u);
    }
    const TruncationParams p13{1, 3};
    const Graph g13 = build_G(p13);
    const auto l13 = side(g13, p13, true);
    const auto r13 = side(g13, p13, false);
    EXPECT_EQ(packing_upper_bound_by_cut(g13, l13, r13), 4u);
    EXPECT_TRUE(separates(g13, packing_cut_certificate(g13, l13, r13).vertices, l13, r13));

    // Already separated sides need no cut.
    const Graph two = repeat_disjoint(path_graph(2), 2);
    const VertexId l[] = {0};
    const VertexId r[] = {3};
    EXPECT_EQ(packing_upper_bound_by_cut(two, l, r), 0u);
}
