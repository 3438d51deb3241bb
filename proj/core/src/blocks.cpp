#include "minorbench/blocks.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

namespace minorbench {

namespace {

struct Frame {
    VertexId vertex;
    VertexId parent;
    std::size_t next = 0;
};

constexpr VertexId kNoParent = static_cast<VertexId>(-1);

}  // namespace

BlockDecomposition block_decomposition(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> disc(n, 0);
    std::vector<std::size_t> low(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<VertexId>> blocks;
    std::size_t clock = 0;

    for (VertexId root = 0; root < n; ++root) {
        if (visited[root] || g.degree(root) == 0)
            continue;
        std::vector<Frame> stack{{root, kNoParent}};
        visited[root] = true;
        disc[root] = low[root] = clock++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbrs = g.neighbors(f.vertex);
            if (f.next < nbrs.size()) {
                const VertexId w = nbrs[f.next++];
                if (!visited[w]) {
                    visited[w] = true;
                    disc[w] = low[w] = clock++;
                    edge_stack.emplace_back(f.vertex, w);
                    stack.push_back({w, f.vertex});
                } else if (w != f.parent && disc[w] < disc[f.vertex]) {
                    edge_stack.emplace_back(f.vertex, w);
                    low[f.vertex] = std::min(low[f.vertex], disc[w]);
                }
                continue;
            }
            const VertexId v = f.vertex;
            const VertexId p = f.parent;
            stack.pop_back();
            if (p == kNoParent)
                continue;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                const Edge tree_edge(p, v);
                std::vector<VertexId> block;
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e.u);
                    block.push_back(e.v);
                    if (e == tree_edge)
                        break;
                }
                std::sort(block.begin(), block.end());
                block.erase(std::unique(block.begin(), block.end()), block.end());
                blocks.push_back(std::move(block));
            }
        }
    }

    std::sort(blocks.begin(), blocks.end());

    BlockDecomposition d;
    std::vector<std::size_t> membership(n, 0);
    for (const auto& b : blocks)
        for (VertexId v : b)
            ++membership[v];
    for (VertexId v = 0; v < n; ++v)
        if (membership[v] >= 2)
            d.cut_vertices.push_back(v);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (VertexId v : blocks[i])
            if (membership[v] >= 2)
                d.tree_edges.emplace_back(i, v);
    d.blocks = std::move(blocks);
    return d;
}

bool is_biconnected(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n < 2)
        return false;
    if (connected_components(g).size() != 1)
        return false;
    if (n == 2)
        return g.edge_count() == 1;
    auto d = block_decomposition(g);
    return d.blocks.size() == 1 && d.cut_vertices.empty();
}

std::optional<std::size_t> containing_block(const BlockDecomposition& d, std::span<const VertexId> vertices)
{
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const auto& b = d.blocks[i];
        bool all = std::all_of(vertices.begin(), vertices.end(),
                               [&](VertexId v) { return std::binary_search(b.begin(), b.end(), v); });
        if (all)
            return i;
    }
    return std::nullopt;
}

std::string block_axiom_violation(const Graph& g, const BlockDecomposition& d)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> membership(n, 0);
    for (const auto& b : d.blocks) {
        if (b.size() < 2)
            return "block with fewer than two vertices";
        for (VertexId v : b)
            ++membership[v];
    }

    // Every edge lies in exactly one block.
    std::size_t internal_edges = 0;
    for (const Edge& e : g.edges()) {
        std::size_t owners = 0;
        for (const auto& b : d.blocks)
            owners += std::binary_search(b.begin(), b.end(), e.u) && std::binary_search(b.begin(), b.end(), e.v);
        if (owners != 1)
            return "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") lies in " +
                   std::to_string(owners) + " blocks";
    }
    for (const auto& b : d.blocks) {
        Relabeled sub = induced_subgraph(g, b);
        internal_edges += sub.graph.edge_count();
        if (b.size() > 2 && !is_biconnected(sub.graph))
            return "block starting at " + std::to_string(b.front()) + " is not 2-connected";
        if (b.size() == 2 && sub.graph.edge_count() != 1)
            return "two-vertex block is not a bridge";
    }
    if (internal_edges != g.edge_count())
        return "block edge counts do not sum to |E|";

    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
            std::vector<VertexId> common;
            std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(), d.blocks[j].begin(), d.blocks[j].end(),
                                  std::back_inserter(common));
            if (common.size() > 1)
                return "blocks " + std::to_string(i) + " and " + std::to_string(j) + " share " +
                       std::to_string(common.size()) + " vertices";
            if (common.size() == 1 && !std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), common[0]))
                return "shared vertex " + std::to_string(common[0]) + " is not listed as a cut vertex";
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        bool listed = std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), v);
        if (listed != (membership[v] >= 2))
            return "cut vertex listing disagrees with block membership at " + std::to_string(v);
        if (listed) {
            auto split = delete_vertices(g, std::array<VertexId, 1>{v});
            if (connected_components(split.graph).size() <= connected_components(g).size())
                return "vertex " + std::to_string(v) + " is listed as a cut vertex but does not separate";
        }
    }

    // Forest check on the incidence graph via union-find: nodes are blocks then cut vertices.
    std::vector<std::size_t> parent(d.blocks.size() + n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [block, cut] : d.tree_edges) {
        auto a = find(block);
        auto b = find(d.blocks.size() + cut);
        if (a == b)
            return "block-cut incidence structure has a cycle";
        parent[a] = b;
    }
    return {};
}

std::string block_cut_tree_dot(const BlockDecomposition& d)
{
    std::ostringstream out;
    out << "graph block_cut_tree {\n";
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        out << "  b" << i << " [shape=box, label=\"B" << i << ": {";
        for (std::size_t k = 0; k < d.blocks[i].size(); ++k)
            out << (k ? "," : "") << d.blocks[i][k];
        out << "}\"];\n";
    }
    for (VertexId c : d.cut_vertices)
        out << "  c" << c << " [shape=circle, label=\"" << c << "\"];\n";
    for (auto [block, cut] : d.tree_edges)
        out << "  b" << block << " -- c" << cut << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace minorbench
