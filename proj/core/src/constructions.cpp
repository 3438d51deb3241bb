#include "minorbench/constructions.hpp"

#include <stdexcept>

namespace minorbench {

namespace {

int anchor_column(const Graph& g, VertexId v)
{
    const auto* grid = std::get_if<GridTag>(&g.tag(v));
    if (!grid)
        throw std::invalid_argument("attachment vertex " + std::to_string(v) + " is not a grid vertex");
    return grid->col;
}

template <class PrivateTag>
Graph attach(const Graph& g, VertexId v, std::size_t extra, const std::vector<Edge>& local_edges)
{
    if (v >= g.vertex_count())
        throw std::out_of_range("attach: vertex " + std::to_string(v) + " out of range");
    const auto n = static_cast<VertexId>(g.vertex_count());
    // local vertex 0 is v, local i >= 1 is the new vertex n + i - 1
    auto global = [&](VertexId local) { return local == 0 ? v : n + local - 1; };
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : local_edges)
        edges.emplace_back(global(e.u), global(e.v));
    std::optional<std::vector<VertexTag>> tags;
    if (g.has_tags()) {
        const int col = anchor_column(g, v);
        tags.emplace(g.tags().begin(), g.tags().end());
        for (std::size_t i = 1; i <= extra; ++i)
            tags->push_back(PrivateTag{col, static_cast<int>(i)});
    }
    return build_graph(g.vertex_count() + extra, edges, std::move(tags));
}

}  // namespace

void TruncationParams::validate() const
{
    if (m < 1)
        throw std::invalid_argument("truncation needs m >= 1");
    if (h < 0)
        throw std::invalid_argument("truncation needs h >= 0");
}

VertexId grid_vertex_id(TruncationParams p, int col, int row)
{
    if (col < -p.m || col > p.m || row < 0 || row > p.h)
        throw std::out_of_range("grid coordinate (" + std::to_string(col) + "," + std::to_string(row) +
                                ") outside the truncation");
    return static_cast<VertexId>(row * (2 * p.m + 1) + (col + p.m));
}

std::optional<VertexId> find_grid_vertex(const Graph& g, int col, int row)
{
    if (!g.has_tags())
        return std::nullopt;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (const auto* t = std::get_if<GridTag>(&g.tag(v)); t && t->col == col && t->row == row)
            return v;
    return std::nullopt;
}

Graph half_grid(TruncationParams p)
{
    p.validate();
    const std::size_t width = 2 * static_cast<std::size_t>(p.m) + 1;
    const std::size_t n = width * static_cast<std::size_t>(p.h + 1);
    std::vector<Edge> edges;
    std::vector<VertexTag> tags(n);
    for (int row = 0; row <= p.h; ++row) {
        for (int col = -p.m; col <= p.m; ++col) {
            const VertexId v = grid_vertex_id(p, col, row);
            tags[v] = GridTag{col, row};
            if (col < p.m)
                edges.emplace_back(v, grid_vertex_id(p, col + 1, row));
            if (row < p.h)
                edges.emplace_back(v, grid_vertex_id(p, col, row + 1));
        }
    }
    return build_graph(n, edges, std::move(tags));
}

Graph attach_k5(const Graph& g, VertexId v)
{
    std::vector<Edge> local;
    for (VertexId a = 0; a < 5; ++a)
        for (VertexId b = a + 1; b < 5; ++b)
            local.emplace_back(a, b);
    return attach<K5PrivateTag>(g, v, 4, local);
}

Graph attach_k33(const Graph& g, VertexId v)
{
    // sides {v, new1, new2} and {new3, new4, new5}
    std::vector<Edge> local;
    for (VertexId a : {0u, 1u, 2u})
        for (VertexId b : {3u, 4u, 5u})
            local.emplace_back(a, b);
    return attach<K33PrivateTag>(g, v, 5, local);
}

Graph build_G(TruncationParams p)
{
    Graph g = half_grid(p);
    for (int a = -p.m; a <= -1; ++a)
        g = attach_k5(g, grid_vertex_id(p, a, 0));
    for (int b = 0; b <= p.m; ++b)
        g = attach_k33(g, grid_vertex_id(p, b, 0));
    return g;
}

Graph build_I()
{
    return one_sum(complete_graph(5), 0, complete_bipartite(3, 3), 0);
}

Graph build_H(std::size_t ray_edges)
{
    if (ray_edges < 1)
        throw std::invalid_argument("ray surrogate needs at least one edge");
    return disjoint_union(build_I(), path_graph(ray_edges + 1));
}

}  // namespace minorbench
