#include "minorbench/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace minorbench {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_vertex(const Graph& g, VertexId v, const char* what)
{
    if (v >= g.vertex_count())
        throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range (n=" + std::to_string(g.vertex_count()) + ")");
}

std::vector<VertexTag> tags_or_plain(const Graph& g)
{
    if (g.has_tags())
        return {g.tags().begin(), g.tags().end()};
    return std::vector<VertexTag>(g.vertex_count(), PlainTag{});
}

// Rebuilds g on the vertices with old_to_new set, keeping every edge whose
// endpoints both survive (after mapping).
Relabeled remap(const Graph& g, std::vector<std::optional<VertexId>> old_to_new, std::size_t new_n)
{
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        auto a = old_to_new[e.u];
        auto b = old_to_new[e.v];
        if (a && b && *a != *b)
            edges.emplace_back(*a, *b);
    }
    std::optional<std::vector<VertexTag>> tags;
    if (g.has_tags()) {
        tags.emplace(new_n, PlainTag{});
        std::vector<bool> seen(new_n, false);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (auto nv = old_to_new[v]; nv && !seen[*nv]) {
                (*tags)[*nv] = g.tag(v);
                seen[*nv] = true;
            }
        }
    }
    return {build_graph(new_n, edges, std::move(tags)), std::move(old_to_new)};
}

}  // namespace

std::string to_string(const VertexTag& tag)
{
    return std::visit(
        overloaded{
            [](const GridTag& t) { return "grid(" + std::to_string(t.col) + "," + std::to_string(t.row) + ")"; },
            [](const K5PrivateTag& t) {
                return "k5(" + std::to_string(t.anchor_col) + "," + std::to_string(t.index) + ")";
            },
            [](const K33PrivateTag& t) {
                return "k33(" + std::to_string(t.anchor_col) + "," + std::to_string(t.index) + ")";
            },
            [](const PlainTag&) { return std::string("plain"); },
        },
        tag);
}

void validate_tag(const VertexTag& tag)
{
    if (const auto* g = std::get_if<GridTag>(&tag); g && g->row < 0)
        throw std::invalid_argument("grid tag with negative row");
    if (const auto* k = std::get_if<K5PrivateTag>(&tag); k && (k->index < 1 || k->index > 4))
        throw std::invalid_argument("K5 private index must be in 1..4");
    if (const auto* k = std::get_if<K33PrivateTag>(&tag); k && (k->index < 1 || k->index > 5))
        throw std::invalid_argument("K3,3 private index must be in 1..5");
}

std::span<const VertexId> Graph::neighbors(VertexId v) const
{
    check_vertex(*this, v, "neighbors");
    return adjacency_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const
{
    if (u >= vertex_count() || v >= vertex_count())
        return false;
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

const VertexTag& Graph::tag(VertexId v) const
{
    check_vertex(*this, v, "tag");
    if (!tags_)
        throw std::logic_error("graph carries no tags");
    return (*tags_)[v];
}

std::span<const VertexTag> Graph::tags() const
{
    if (!tags_)
        return {};
    return *tags_;
}

Graph Graph::without_tags() const
{
    Graph g = *this;
    g.tags_.reset();
    return g;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges, std::optional<std::vector<VertexTag>> tags)
{
    Graph g;
    g.adjacency_.assign(n, {});
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw std::out_of_range("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") has an endpoint >= n=" + std::to_string(n));
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        degree_sum += nbrs.size();
    }
    g.edge_count_ = degree_sum / 2;
    if (tags) {
        if (tags->size() != n)
            throw std::invalid_argument("tag map must cover every vertex");
        for (const auto& t : *tags)
            validate_tag(t);
        g.tags_ = std::move(tags);
    }
    return g;
}

Graph build_graph(std::size_t n, std::initializer_list<Edge> edges)
{
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph disjoint_union(const Graph& g1, const Graph& g2)
{
    const auto shift = static_cast<VertexId>(g1.vertex_count());
    std::vector<Edge> edges = g1.edges();
    for (const Edge& e : g2.edges())
        edges.emplace_back(e.u + shift, e.v + shift);
    std::optional<std::vector<VertexTag>> tags;
    if (g1.has_tags() || g2.has_tags()) {
        tags = tags_or_plain(g1);
        auto rest = tags_or_plain(g2);
        tags->insert(tags->end(), rest.begin(), rest.end());
    }
    return build_graph(g1.vertex_count() + g2.vertex_count(), edges, std::move(tags));
}

Graph one_sum(const Graph& g1, VertexId v1, const Graph& g2, VertexId v2)
{
    check_vertex(g1, v1, "one_sum");
    check_vertex(g2, v2, "one_sum");
    const auto n1 = static_cast<VertexId>(g1.vertex_count());
    auto map2 = [&](VertexId w) -> VertexId {
        if (w == v2)
            return v1;
        return n1 + (w < v2 ? w : w - 1);
    };
    std::vector<Edge> edges = g1.edges();
    for (const Edge& e : g2.edges())
        edges.emplace_back(map2(e.u), map2(e.v));
    std::optional<std::vector<VertexTag>> tags;
    if (g1.has_tags() || g2.has_tags()) {
        tags = tags_or_plain(g1);
        auto rest = tags_or_plain(g2);
        for (VertexId w = 0; w < rest.size(); ++w)
            if (w != v2)
                tags->push_back(rest[w]);
    }
    return build_graph(g1.vertex_count() + g2.vertex_count() - 1, edges, std::move(tags));
}

Relabeled delete_vertices(const Graph& g, std::span<const VertexId> removed)
{
    std::vector<bool> gone(g.vertex_count(), false);
    for (VertexId v : removed) {
        check_vertex(g, v, "delete_vertices");
        gone[v] = true;
    }
    std::vector<std::optional<VertexId>> old_to_new(g.vertex_count());
    VertexId next = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!gone[v])
            old_to_new[v] = next++;
    return remap(g, std::move(old_to_new), next);
}

Relabeled induced_subgraph(const Graph& g, std::span<const VertexId> kept)
{
    std::vector<bool> keep(g.vertex_count(), false);
    for (VertexId v : kept) {
        check_vertex(g, v, "induced_subgraph");
        keep[v] = true;
    }
    std::vector<VertexId> removed;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!keep[v])
            removed.push_back(v);
    return delete_vertices(g, removed);
}

Relabeled contract_edge(const Graph& g, Edge e)
{
    if (!g.has_edge(e.u, e.v))
        throw std::invalid_argument("contract_edge: (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") is not an edge");
    std::vector<std::optional<VertexId>> old_to_new(g.vertex_count());
    VertexId next = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (v != e.v)
            old_to_new[v] = next++;
    old_to_new[e.v] = old_to_new[e.u];
    return remap(g, std::move(old_to_new), next);
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g)
{
    std::vector<std::vector<VertexId>> parts;
    std::vector<bool> seen(g.vertex_count(), false);
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (seen[root])
            continue;
        std::vector<VertexId> part{root};
        seen[root] = true;
        for (std::size_t i = 0; i < part.size(); ++i)
            for (VertexId w : g.neighbors(part[i]))
                if (!seen[w]) {
                    seen[w] = true;
                    part.push_back(w);
                }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

bool is_connected_subset(const Graph& g, std::span<const VertexId> subset)
{
    if (subset.empty())
        return false;
    std::vector<char> inside(g.vertex_count(), 0);
    for (VertexId v : subset) {
        check_vertex(g, v, "is_connected_subset");
        inside[v] = 1;
    }
    std::vector<VertexId> stack{subset.front()};
    inside[subset.front()] = 2;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v))
            if (inside[w] == 1) {
                inside[w] = 2;
                ++reached;
                stack.push_back(w);
            }
    }
    std::size_t distinct = 0;
    for (char c : inside)
        distinct += c != 0;
    return reached == distinct;
}

bool satisfies_invariants(const Graph& g)
{
    std::size_t degree_sum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto nbrs = g.neighbors(v);
        degree_sum += nbrs.size();
        if (!std::is_sorted(nbrs.begin(), nbrs.end()) ||
            std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            return false;
        for (VertexId w : nbrs) {
            if (w == v || w >= g.vertex_count() || !g.has_edge(w, v))
                return false;
        }
    }
    if (degree_sum != 2 * g.edge_count())
        return false;
    return !g.has_tags() || g.tags().size() == g.vertex_count();
}

Graph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b)
{
    std::vector<Edge> edges;
    for (VertexId u = 0; u < a; ++u)
        for (VertexId v = 0; v < b; ++v)
            edges.emplace_back(u, static_cast<VertexId>(a + v));
    return build_graph(a + b, edges);
}

Graph path_graph(std::size_t vertices)
{
    std::vector<Edge> edges;
    for (VertexId v = 1; v < vertices; ++v)
        edges.emplace_back(v - 1, v);
    return build_graph(vertices, edges);
}

Graph cycle_graph(std::size_t vertices)
{
    if (vertices < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (VertexId v = 0; v < vertices; ++v)
        edges.emplace_back(v, static_cast<VertexId>((v + 1) % vertices));
    return build_graph(vertices, edges);
}

Graph empty_graph(std::size_t vertices)
{
    return build_graph(vertices, std::span<const Edge>{});
}

Graph petersen_graph()
{
    // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
    std::vector<Edge> edges;
    for (VertexId i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return build_graph(10, edges);
}

}  // namespace minorbench
