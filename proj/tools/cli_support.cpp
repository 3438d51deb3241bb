#include "cli_support.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <regex>
#include <stdexcept>

#include "minorbench/constructions.hpp"
#include "minorbench/graph_io.hpp"
#include "minorbench/minor.hpp"

namespace minorbench::cli {

namespace {

std::size_t parse_count(const std::string& text, const std::string& what)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("bad " + what + " in graph name: '" + text + "'");
    return std::stoul(text);
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

bool is_named_graph(const std::string& name)
{
    static const std::regex pattern(R"(K\d+|I|H:\d+|PATH:\d+)");
    return std::regex_match(name, pattern);
}

Graph load_graph(const std::string& name)
{
    if (!is_named_graph(name))
        return read_graph_file(name);
    if (name == "I")
        return build_I();
    if (name == "K33")
        return complete_bipartite(3, 3);
    if (name.rfind("H:", 0) == 0)
        return build_H(parse_count(name.substr(2), "ray length"));
    if (name.rfind("PATH:", 0) == 0)
        return path_graph(parse_count(name.substr(5), "path length") + 1);
    return complete_graph(parse_count(name.substr(1), "clique size"));
}

std::vector<VertexId> select_vertices(const Graph& g, const std::string& selection)
{
    const std::string text = trim(selection);
    if (text.empty())
        throw std::invalid_argument("empty vertex selection");

    static const std::regex id_list(R"(\s*\d+\s*(,\s*\d+\s*)*)");
    if (std::regex_match(text, id_list)) {
        std::vector<VertexId> out;
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto comma = text.find(',', pos);
            if (comma == std::string::npos)
                comma = text.size();
            const auto v = std::stoul(trim(text.substr(pos, comma - pos)));
            if (v >= g.vertex_count())
                throw std::invalid_argument("vertex " + std::to_string(v) + " is outside the graph");
            out.push_back(static_cast<VertexId>(v));
            pos = comma + 1;
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    struct Predicate {
        bool row;
        std::string op;
        int value;
    };
    static const std::regex clause(R"(\s*(row|col)\s*(==|!=|<=|>=|<|>)\s*(-?\d+)\s*)");
    std::vector<Predicate> predicates;
    std::size_t pos = 0;
    while (true) {
        auto amp = text.find("&&", pos);
        const std::string part = text.substr(pos, amp == std::string::npos ? std::string::npos : amp - pos);
        std::smatch m;
        if (!std::regex_match(part, m, clause))
            throw std::invalid_argument("cannot parse vertex selection '" + selection + "'");
        predicates.push_back({m[1] == "row", m[2], std::stoi(m[3])});
        if (amp == std::string::npos)
            break;
        pos = amp + 2;
    }
    if (!g.has_tags())
        throw std::invalid_argument("tag predicates need a tagged graph");

    auto holds = [](int x, const std::string& op, int y) {
        if (op == "==")
            return x == y;
        if (op == "!=")
            return x != y;
        if (op == "<")
            return x < y;
        if (op == "<=")
            return x <= y;
        if (op == ">")
            return x > y;
        return x >= y;
    };
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto* t = std::get_if<GridTag>(&g.tag(v));
        if (t && std::all_of(predicates.begin(), predicates.end(), [&](const Predicate& p) {
                return holds(p.row ? t->row : t->col, p.op, p.value);
            }))
            out.push_back(v);
    }
    return out;
}

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("MINORBENCH_BUDGET"); env && *env) {
        char* end = nullptr;
        const auto value = std::strtoull(env, &end, 10);
        if (*end != '\0' || value == 0)
            throw std::invalid_argument(std::string("MINORBENCH_BUDGET must be a positive integer, got '") + env + "'");
        return value;
    }
    return SearchBudget{}.max_expansions;
}

}  // namespace minorbench::cli
