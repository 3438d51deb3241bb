#include <gtest/gtest.h>

#include "json.hpp"
#include "minorbench/verify.hpp"

using namespace minorbench;

TEST(Verdict, ExitCodes)
{
    EXPECT_EQ(exit_code(Verdict::Pass), 0);
    EXPECT_EQ(exit_code(Verdict::Fail), 1);
    EXPECT_EQ(exit_code(Verdict::Inconclusive), 3);
    EXPECT_EQ(to_string(Verdict::Inconclusive), "inconclusive");
}

TEST(Decompose, ModelFoundInG)
{
    const Graph g = build_G({1, 1});
    const auto r = find_minor_model(build_I(), g, {});
    ASSERT_EQ(r.outcome, SearchOutcome::Found);
    const auto parts = decompose_I_model(*r.model, g);
    ASSERT_TRUE(std::holds_alternative<IDecomposition>(parts)) << std::get<NotDecomposable>(parts).reason;
    const auto& d = std::get<IDecomposition>(parts);
    EXPECT_EQ(d.k5_anchor, -1);
    EXPECT_GE(d.k33_anchor, 0);
    EXPECT_EQ(d.path.front(), *find_grid_vertex(g, d.k5_anchor, 0));
    EXPECT_EQ(d.path.back(), *find_grid_vertex(g, d.k33_anchor, 0));
}

TEST(Decompose, RejectsBadInput)
{
    const Graph g = build_G({1, 1});
    const auto r = find_minor_model(build_I(), g, {});
    ASSERT_TRUE(r.model);
    EXPECT_THROW(decompose_I_model(*r.model, g.without_tags()), std::invalid_argument);
    MinorModel short_model = *r.model;
    short_model.branch_sets.pop_back();
    EXPECT_THROW(decompose_I_model(short_model, g), std::invalid_argument);
    // Swapping a K5 label with a K3,3 label breaks the expected tag pattern.
    MinorModel swapped = *r.model;
    std::swap(swapped.branch_sets[1], swapped.branch_sets[5]);
    EXPECT_TRUE(std::holds_alternative<NotDecomposable>(decompose_I_model(swapped, g)));
}

TEST(BlockConfinementCheck, PassesOnSmallTruncations)
{
    const auto a = verify_lemma1({1, 1}, {});
    EXPECT_EQ(a.verdict, Verdict::Pass) << to_text(a);
    EXPECT_FALSE(a.models.empty());
    for (const auto& m : a.models)
        EXPECT_TRUE(m.ok);
    std::size_t attached = 0;
    for (const auto& b : a.blocks) {
        EXPECT_TRUE(b.k5_confined && b.k33_confined);
        attached += b.kind == BlockKind::AttachedK5 || b.kind == BlockKind::AttachedK33;
    }
    EXPECT_EQ(attached, 3u);
}

TEST(BlockConfinementCheck, NegativeControlFails)
{
    const TruncationParams p{1, 1};
    const Graph bad = negative_control_host(p);
    EXPECT_GT(bad.vertex_count(), build_G(p).vertex_count());
    const auto r = verify_lemma1_on(bad, p, {});
    EXPECT_EQ(r.verdict, Verdict::Fail);
    EXPECT_FALSE(r.findings.empty());
}

TEST(BlockConfinementCheck, TinyBudgetIsInconclusive)
{
    SearchBudget tiny;
    tiny.max_expansions = 2;
    EXPECT_EQ(verify_lemma1({1, 1}, tiny).verdict, Verdict::Inconclusive);
}

TEST(Trace, SinglePathKeepsTopRowConnected)
{
    const TruncationParams p{2, 2};
    const Graph g = build_G(p);
    PathFamily f;
    f.paths = {{*find_grid_vertex(g, -1, 0), *find_grid_vertex(g, 0, 0)}};
    const auto t = component_trace(p, f);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0].top_row_component_count, 1u);
    EXPECT_EQ(t[0].column0_consumed, 1u);
}

TEST(Trace, RejectsBadPaths)
{
    const TruncationParams p{2, 1};
    const Graph g = build_G(p);
    PathFamily top;
    top.paths = {{*find_grid_vertex(g, -1, 1), *find_grid_vertex(g, 0, 1)}};
    EXPECT_THROW(component_trace(p, top), std::invalid_argument);
    PathFamily one_side;
    one_side.paths = {{*find_grid_vertex(g, -2, 0), *find_grid_vertex(g, -1, 0)}};
    EXPECT_THROW(component_trace(p, one_side), std::invalid_argument);
}

TEST(DisjointHModels, LowerBoundForSmallN)
{
    for (int n = 1; n <= 2; ++n) {
        const auto r = verify_proposition_lower(n, 2);
        EXPECT_EQ(r.verdict, Verdict::Pass) << to_text(r);
        EXPECT_EQ(r.lower_packing.size(), static_cast<std::size_t>(n));
        EXPECT_EQ(r.params.m, n);
        EXPECT_EQ(r.params.h, 2 * n - 1 + 2);
        EXPECT_EQ(packing_violation(r.lower_packing, build_H(2), build_G(r.params)), "");
        for (const auto& e : r.trace)
            EXPECT_EQ(e.top_row_component_count, 1u);
    }
}

TEST(Saturation, SmallTables)
{
    const auto h0 = verify_saturation(0, {1, 2}, {});
    EXPECT_EQ(h0.verdict, Verdict::Pass) << to_text(h0);
    for (const auto& c : h0.cells)
        EXPECT_EQ(c.size, 1u);
    const auto h1 = verify_saturation(1, {1, 2, 3}, {});
    EXPECT_EQ(h1.verdict, Verdict::Pass) << to_text(h1);
    ASSERT_EQ(h1.cells.size(), 3u);
    EXPECT_EQ(h1.cells[0].size, 1u);
    EXPECT_EQ(h1.cells[1].size, 2u);
    EXPECT_EQ(h1.cells[2].size, 2u);
    EXPECT_EQ(h1.cells[2].cut.vertices.size(), 2u);
}

TEST(Reports, JsonIsStableAndParses)
{
    const auto a = to_json(verify_lemma1({1, 1}, {}));
    EXPECT_EQ(a, to_json(verify_lemma1({1, 1}, {})));
    const auto doc = nlohmann::json::parse(a);
    EXPECT_EQ(doc["verdict"], "pass");
    const auto s = to_json(verify_saturation(0, {1}, {}));
    EXPECT_TRUE(nlohmann::json::accept(s));
    EXPECT_TRUE(nlohmann::json::accept(to_json(verify_proposition_lower(1, 1))));
}
