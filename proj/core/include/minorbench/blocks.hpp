#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minorbench/graph.hpp"

namespace minorbench {

/// Blocks (maximal 2-connected subgraphs and bridges) with the block-cut forest.
/// Isolated vertices belong to no block.
struct BlockDecomposition {
    /// Each block sorted ascending; blocks ordered by their sorted vertex lists,
    /// so in particular by smallest contained vertex.
    std::vector<std::vector<VertexId>> blocks;
    std::vector<VertexId> cut_vertices;
    /// (block index, cut vertex) incidences, sorted.
    std::vector<std::pair<std::size_t, VertexId>> tree_edges;

    bool operator==(const BlockDecomposition&) const = default;
};

BlockDecomposition block_decomposition(const Graph& g);

bool is_biconnected(const Graph& g);

/// Index of the block containing every vertex of `vertices`, if any.
std::optional<std::size_t> containing_block(const BlockDecomposition& d, std::span<const VertexId> vertices);

/// Checks the decomposition axioms against g: every edge in exactly one block, blocks
/// meet in at most one vertex which is then a cut vertex, and the block-cut incidence
/// graph is a forest. Returns a description of the first violation, empty when valid.
std::string block_axiom_violation(const Graph& g, const BlockDecomposition& d);

std::string block_cut_tree_dot(const BlockDecomposition& d);

}  // namespace minorbench
