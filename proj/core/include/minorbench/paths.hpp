#pragma once

#include <span>
#include <string>
#include <vector>

#include "minorbench/graph.hpp"

namespace minorbench {

/// Pairwise vertex-disjoint host paths (endpoints included); a single vertex is a
/// trivial path.
struct PathFamily {
    std::vector<std::vector<VertexId>> paths;
};

struct CutSet {
    std::vector<VertexId> vertices;
};

/// Empty when the family is valid in g, otherwise the reason it is not.
std::string path_family_violation(const Graph& g, const PathFamily& family);

/// Maximum family of disjoint source-to-sink paths (unit vertex capacities,
/// augmenting paths). A vertex in both sets yields a trivial path. Paths are
/// ordered by their first vertex. Throws std::invalid_argument on an empty side.
PathFamily max_vertex_disjoint_paths(const Graph& g, std::span<const VertexId> sources,
                                     std::span<const VertexId> sinks);

/// Minimum vertex set whose removal leaves no source-to-sink path; sources and sinks
/// may themselves be cut, but among smallest cuts one with the fewest source or sink
/// vertices is returned. Throws std::invalid_argument when the sides overlap.
CutSet min_vertex_cut(const Graph& g, std::span<const VertexId> sources, std::span<const VertexId> sinks);

/// True when g minus `removed` has no path from a source to a sink.
bool separates(const Graph& g, std::span<const VertexId> removed, std::span<const VertexId> sources,
               std::span<const VertexId> sinks);

}  // namespace minorbench
