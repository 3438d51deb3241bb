#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minorbench/graph.hpp"

namespace minorbench::cli {

/// K<n>, K33, I, H:<L>, PATH:<L> (L edges) or a graph file (.g6 or JSON).
Graph load_graph(const std::string& name_or_path);

/// True when the string names a built-in graph rather than a file.
bool is_named_graph(const std::string& name);

/// Either an explicit id list ("0,3,7") or a conjunction of grid-tag predicates
/// ("row==0 && col<0"). Fields are row and col; operators ==, !=, <, <=, >, >=.
/// Predicates only match grid-tagged vertices. Throws std::invalid_argument.
std::vector<VertexId> select_vertices(const Graph& g, const std::string& selection);

/// Search budget from MINORBENCH_BUDGET, or the library default when unset.
std::uint64_t default_budget();

}  // namespace minorbench::cli
