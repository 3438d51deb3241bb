#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "minorbench/graph.hpp"
#include "minorbench/paths.hpp"

namespace minorbench::testkit {

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return build_graph(n, edges);
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Smallest vertex set whose removal separates sources from sinks, found by trying
/// every subset in order of size. `limit` caps the size tried; returns limit + 1 when
/// nothing up to the cap separates.
inline std::size_t brute_force_cut_size(const Graph& g, const std::vector<VertexId>& sources,
                                        const std::vector<VertexId>& sinks, std::size_t limit)
{
    const std::size_t n = g.vertex_count();
    for (std::size_t k = 0; k <= limit && k <= n; ++k) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::vector<VertexId> removed;
            for (VertexId v = 0; v < n; ++v)
                if (pick[v])
                    removed.push_back(v);
            if (separates(g, removed, sources, sinks))
                return k;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return limit + 1;
}

/// Blocks from first principles: two edges at a common vertex w share a block iff their
/// other ends are connected in g - w. Returns each block's sorted vertex set, sorted.
inline std::vector<std::vector<VertexId>> brute_force_blocks(const Graph& g)
{
    const auto edges = g.edges();
    std::vector<std::size_t> parent(edges.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto connected_without = [&](VertexId w, VertexId a, VertexId b) {
        std::vector<bool> seen(g.vertex_count(), false);
        std::vector<VertexId> stack{a};
        seen[a] = seen[w] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            if (v == b)
                return true;
            for (VertexId x : g.neighbors(v))
                if (!seen[x]) {
                    seen[x] = true;
                    stack.push_back(x);
                }
        }
        return false;
    };
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& e = edges[i];
            const Edge& f = edges[j];
            VertexId w, a, b;
            if (e.u == f.u) {
                w = e.u, a = e.v, b = f.v;
            } else if (e.u == f.v) {
                w = e.u, a = e.v, b = f.u;
            } else if (e.v == f.u) {
                w = e.v, a = e.u, b = f.v;
            } else if (e.v == f.v) {
                w = e.v, a = e.u, b = f.u;
            } else {
                continue;
            }
            if (connected_without(w, a, b))
                parent[find(i)] = find(j);
        }
    std::vector<std::vector<VertexId>> blocks;
    std::vector<std::vector<VertexId>> by_root(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        by_root[find(i)].push_back(edges[i].u);
        by_root[find(i)].push_back(edges[i].v);
    }
    for (auto& b : by_root) {
        if (b.empty())
            continue;
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

/// Cut vertices from the definition: deleting them raises the number of components.
inline std::vector<VertexId> brute_force_cut_vertices(const Graph& g)
{
    const std::size_t base = connected_components(g).size();
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const VertexId removed[] = {v};
        if (connected_components(delete_vertices(g, removed).graph).size() > base)
            out.push_back(v);
    }
    return out;
}

}  // namespace minorbench::testkit
