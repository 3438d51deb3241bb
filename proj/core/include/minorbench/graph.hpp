#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace minorbench {

using VertexId = std::uint32_t;

/// Grid coordinate (col, row) of the half-grid truncation.
struct GridTag {
    int col = 0;
    int row = 0;
    bool operator==(const GridTag&) const = default;
};

/// One of the four private vertices of a K5 glued onto grid vertex (anchor_col, 0).
struct K5PrivateTag {
    int anchor_col = 0;
    int index = 1;  // 1..4
    bool operator==(const K5PrivateTag&) const = default;
};

/// One of the five private vertices of a K3,3 glued onto grid vertex (anchor_col, 0).
/// Indices 1 and 2 share the anchor's bipartition class; 3..5 form the other class.
struct K33PrivateTag {
    int anchor_col = 0;
    int index = 1;  // 1..5
    bool operator==(const K33PrivateTag&) const = default;
};

struct PlainTag {
    bool operator==(const PlainTag&) const = default;
};

using VertexTag = std::variant<GridTag, K5PrivateTag, K33PrivateTag, PlainTag>;

std::string to_string(const VertexTag& tag);

/// Rejects tags whose fields are out of range (negative rows, bad private indices).
void validate_tag(const VertexTag& tag);

/// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 with optional per-vertex tags.
///
/// Adjacency lists are kept sorted, so two graphs compare equal exactly when they
/// have the same vertex count, edge set and tags.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    bool has_edge(VertexId u, VertexId v) const;

    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;

    bool has_tags() const { return tags_.has_value(); }
    const VertexTag& tag(VertexId v) const;
    std::span<const VertexTag> tags() const;

    /// Same vertices and edges with the tags dropped.
    Graph without_tags() const;

    bool operator==(const Graph&) const = default;

private:
    friend Graph build_graph(std::size_t, std::span<const Edge>, std::optional<std::vector<VertexTag>>);

    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
    std::optional<std::vector<VertexTag>> tags_;
};

/// Graph together with the map from the ids of the graph it was derived from.
/// `old_to_new[v]` is empty when v no longer exists.
struct Relabeled {
    Graph graph;
    std::vector<std::optional<VertexId>> old_to_new;
};

/// Builds a graph with the given edges; duplicate edges collapse.
/// Throws std::out_of_range for an endpoint >= n and std::invalid_argument for a
/// self-loop or a tag vector whose length differs from n.
Graph build_graph(std::size_t n, std::span<const Edge> edges,
                  std::optional<std::vector<VertexTag>> tags = std::nullopt);

Graph build_graph(std::size_t n, std::initializer_list<Edge> edges);

/// g2's ids are shifted by g1.vertex_count(). If exactly one side is tagged the
/// other side's vertices receive PlainTag.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Identifies v1 of g1 with v2 of g2. g1 keeps its ids; the remaining vertices of
/// g2 follow in their original order. The merged vertex keeps g1's tag.
Graph one_sum(const Graph& g1, VertexId v1, const Graph& g2, VertexId v2);

Relabeled delete_vertices(const Graph& g, std::span<const VertexId> removed);
Relabeled induced_subgraph(const Graph& g, std::span<const VertexId> kept);

/// Merges the endpoints of e into the smaller endpoint; parallel edges collapse.
/// Throws std::invalid_argument when e is not an edge of g.
Relabeled contract_edge(const Graph& g, Edge e);

/// Components ordered by smallest vertex, each sorted ascending.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// True when the vertex subset induces a connected subgraph (the empty set is not connected).
bool is_connected_subset(const Graph& g, std::span<const VertexId> subset);

/// Checks the structural invariants: symmetric sorted adjacency, no loops,
/// consistent edge count and a full tag vector when tags are present.
bool satisfies_invariants(const Graph& g);

// Small named graphs.
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph path_graph(std::size_t vertices);
Graph cycle_graph(std::size_t vertices);
Graph empty_graph(std::size_t vertices);
Graph petersen_graph();

}  // namespace minorbench
