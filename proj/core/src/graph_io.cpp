#include "minorbench/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace minorbench {

using nlohmann::json;

namespace {

constexpr int kGraph6Bias = 63;

void append_size(std::string& out, std::uint64_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kGraph6Bias));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Bias));
    } else if (n <= 68719476735ULL) {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Bias));
    } else {
        throw FormatError("graph too large for graph6");
    }
}

int sextet(std::string_view text, std::size_t pos)
{
    if (pos >= text.size())
        throw FormatError("graph6: unexpected end of input at byte " + std::to_string(pos));
    int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw FormatError("graph6: invalid byte " + std::to_string(c) + " at position " + std::to_string(pos));
    return c - kGraph6Bias;
}

json tag_to_json(const VertexTag& tag)
{
    if (const auto* t = std::get_if<GridTag>(&tag))
        return {{"kind", "grid"}, {"col", t->col}, {"row", t->row}};
    if (const auto* t = std::get_if<K5PrivateTag>(&tag))
        return {{"kind", "k5"}, {"anchor_col", t->anchor_col}, {"index", t->index}};
    if (const auto* t = std::get_if<K33PrivateTag>(&tag))
        return {{"kind", "k33"}, {"anchor_col", t->anchor_col}, {"index", t->index}};
    return {{"kind", "plain"}};
}

VertexTag tag_from_json(const json& j)
{
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "grid")
        return GridTag{j.at("col").get<int>(), j.at("row").get<int>()};
    if (kind == "k5")
        return K5PrivateTag{j.at("anchor_col").get<int>(), j.at("index").get<int>()};
    if (kind == "k33")
        return K33PrivateTag{j.at("anchor_col").get<int>(), j.at("index").get<int>()};
    if (kind == "plain")
        return PlainTag{};
    throw FormatError("unknown tag kind '" + kind + "'");
}

}  // namespace

std::string to_graph6(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::string out;
    append_size(out, n);
    // Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
    int bits = 0;
    int acc = 0;
    for (VertexId j = 1; j < n; ++j) {
        for (VertexId i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kGraph6Bias));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + kGraph6Bias));
    return out;
}

Graph from_graph6(std::string_view text)
{
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (sextet(text, 0) == 63) {
        if (sextet(text, 1) == 63) {
            for (pos = 2; pos < 8; ++pos)
                n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos));
        } else {
            for (pos = 1; pos < 4; ++pos)
                n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos));
        }
    } else {
        n = static_cast<std::uint64_t>(sextet(text, 0));
        pos = 1;
    }
    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t expected = pos + (pairs + 5) / 6;
    if (text.size() != expected)
        throw FormatError("graph6: expected " + std::to_string(expected) + " bytes for n=" + std::to_string(n) +
                          ", got " + std::to_string(text.size()));
    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (VertexId j = 1; j < n; ++j) {
        for (VertexId i = 0; i < j; ++i, ++k) {
            int word = sextet(text, pos + k / 6);
            if ((word >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    }
    if (k % 6 != 0) {
        int word = sextet(text, pos + k / 6);
        if (word & ((1 << (6 - k % 6)) - 1))
            throw FormatError("graph6: nonzero padding bits");
    }
    return build_graph(n, edges);
}

std::string to_json(const Graph& g)
{
    json doc;
    doc["n"] = g.vertex_count();
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v});
    doc["edges"] = std::move(edges);
    if (g.has_tags()) {
        json tags = json::object();
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            tags[std::to_string(v)] = tag_to_json(g.tag(v));
        doc["tags"] = std::move(tags);
    }
    return doc.dump(1) + "\n";
}

Graph from_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("JSON graph: ") + e.what());
    }
    try {
        const auto n = doc.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& pair : doc.at("edges")) {
            if (!pair.is_array() || pair.size() != 2)
                throw FormatError("JSON graph: each edge must be a two-element array");
            edges.emplace_back(pair[0].get<VertexId>(), pair[1].get<VertexId>());
        }
        std::optional<std::vector<VertexTag>> tags;
        if (doc.contains("tags")) {
            tags.emplace(n, PlainTag{});
            std::vector<bool> seen(n, false);
            auto assign = [&](std::size_t id, const json& entry) {
                if (id >= n)
                    throw FormatError("JSON graph: tag for vertex " + std::to_string(id) + " out of range");
                (*tags)[id] = tag_from_json(entry);
                seen[id] = true;
            };
            for (const auto& [key, entry] : doc.at("tags").items()) {
                if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
                    throw FormatError("JSON graph: tag key '" + key + "' is not a vertex id");
                assign(std::stoul(key), entry);
            }
            for (std::size_t v = 0; v < n; ++v)
                if (!seen[v])
                    throw FormatError("JSON graph: tags must cover every vertex (missing " + std::to_string(v) + ")");
        }
        return build_graph(n, edges, std::move(tags));
    } catch (const json::exception& e) {
        throw FormatError(std::string("JSON graph: ") + e.what());
    } catch (const std::logic_error& e) {
        // out-of-range endpoints, self-loops, bad tag values
        throw FormatError(std::string("JSON graph: ") + e.what());
    }
}

std::string to_dot(const Graph& g, std::string_view name)
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.has_tags()) {
            out << " [label=\"" << v << "\\n" << to_string(g.tag(v)) << "\"";
            if (const auto* t = std::get_if<GridTag>(&g.tag(v)))
                out << ", pos=\"" << t->col << "," << t->row << "!\"";
            out << "]";
        }
        out << ";\n";
    }
    for (const Edge& e : g.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

Graph read_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (path.extension() == ".g6")
        return from_graph6(buffer.str());
    return from_json(buffer.str());
}

void write_graph_file(const std::filesystem::path& path, const Graph& g)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw FormatError("cannot write " + path.string());
    if (path.extension() == ".g6")
        out << to_graph6(g) << "\n";
    else
        out << to_json(g);
}

}  // namespace minorbench
