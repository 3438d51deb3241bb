#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "minorbench/graph.hpp"

namespace minorbench {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// graph6 encoding (no ">>graph6<<" header, no trailing newline). Tags are not encoded.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// Canonical JSON document: {"n": N, "edges": [[u,v],...], "tags": {"id": {...}}}.
/// Edges are emitted sorted; "tags" is omitted for untagged graphs.
std::string to_json(const Graph& g);
Graph from_json(std::string_view text);

/// Graphviz rendering; tagged vertices are labeled with their tag.
std::string to_dot(const Graph& g, std::string_view name = "G");

/// Reads a graph file, choosing graph6 for a ".g6" extension and JSON otherwise.
Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

}  // namespace minorbench
