#pragma once

#include <optional>

#include "minorbench/graph.hpp"

namespace minorbench {

/// Finite window of the half-grid: columns -m..m, rows 0..h.
struct TruncationParams {
    int m = 1;
    int h = 0;

    void validate() const;
    bool operator==(const TruncationParams&) const = default;
};

/// Id of grid vertex (col, row) in half_grid(p) and in everything built on top of it:
/// row-major, row 0 first, columns ascending.
VertexId grid_vertex_id(TruncationParams p, int col, int row);

/// Looks a grid vertex up by its tag; works on any tagged graph.
std::optional<VertexId> find_grid_vertex(const Graph& g, int col, int row);

Graph half_grid(TruncationParams p);

/// Glues a K5 onto v with four new vertices. On a tagged graph v must carry a grid tag
/// and the new vertices are tagged K5Private(col of v, 1..4).
Graph attach_k5(const Graph& g, VertexId v);

/// Glues a K3,3 onto v with five new vertices; v and new vertices 1, 2 form one side.
Graph attach_k33(const Graph& g, VertexId v);

/// Half-grid truncation with a K5 at every (a,0), a < 0 and a K3,3 at every (b,0), b >= 0.
/// K5s are attached first (a ascending), then K3,3s (b ascending).
Graph build_G(TruncationParams p);

/// 1-sum of K5 and K3,3. Vertex 0 is the shared cut vertex, 1..4 complete the K5,
/// 5..9 complete the K3,3 (5 and 6 on the cut vertex's side).
Graph build_I();

/// build_I() plus a disjoint path with `ray_edges` edges (vertices 10..10+ray_edges).
Graph build_H(std::size_t ray_edges);

/// Pattern vertex roles in build_I().
inline constexpr VertexId kICutVertex = 0;
inline constexpr std::size_t kIVertexCount = 10;
inline bool is_k5_side_of_I(VertexId v) { return v >= 1 && v <= 4; }
inline bool is_k33_side_of_I(VertexId v) { return v >= 5 && v <= 9; }

}  // namespace minorbench
