#include "minorbench/paths.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

namespace minorbench {

namespace {

// Flow network with vertex splitting: v_in = 2v, v_out = 2v + 1, super source 2n,
// super sink 2n + 1. With unit split arcs the flow decomposes into disjoint paths.
// With weighted split arcs (W for interior vertices, W + 1 for terminals, W > n) a
// minimum cut is a smallest vertex cut and, among those, uses the fewest terminals.
class SplitNetwork {
public:
    SplitNetwork(const Graph& g, std::span<const VertexId> sources, std::span<const VertexId> sinks,
                 bool prefer_interior = false)
        : n_(g.vertex_count()), head_(2 * n_ + 2, -1)
    {
        std::vector<bool> is_source(n_, false), is_sink(n_, false);
        for (VertexId s : sources)
            is_source[s] = true;
        for (VertexId t : sinks)
            is_sink[t] = true;
        const std::int64_t w = static_cast<std::int64_t>(n_) + 1;
        // Only the split arcs are finite, so every minimum cut is a vertex cut.
        const std::int64_t unbounded = prefer_interior ? (w + 1) * w + 1 : w;
        for (VertexId v = 0; v < n_; ++v)
            add_arc(in(v), out(v), !prefer_interior ? 1 : is_source[v] || is_sink[v] ? w + 1 : w);
        for (const Edge& e : g.edges()) {
            add_arc(out(e.u), in(e.v), unbounded);
            add_arc(out(e.v), in(e.u), unbounded);
        }
        for (VertexId v = 0; v < n_; ++v) {
            if (is_source[v])
                add_arc(source(), in(v), unbounded);
            if (is_sink[v])
                add_arc(out(v), sink(), unbounded);
        }
    }

    void max_flow()
    {
        while (augment()) {
        }
    }

    /// Vertices whose split arc crosses the residual reachability boundary.
    std::vector<VertexId> cut() const
    {
        auto reach = reachable();
        std::vector<VertexId> out_vertices;
        for (VertexId v = 0; v < n_; ++v)
            if (reach[in(v)] && !reach[out(v)])
                out_vertices.push_back(v);
        return out_vertices;
    }

    std::vector<std::vector<VertexId>> paths() const
    {
        std::vector<std::int64_t> flow(arcs_.size(), 0);
        for (std::size_t a = 0; a < arcs_.size(); ++a)
            if (arcs_[a].forward)
                flow[a] = flow_on(a);
        auto take = [&](std::size_t node) {
            for (int b = head_[node]; b != -1; b = arcs_[static_cast<std::size_t>(b)].next) {
                const auto ub = static_cast<std::size_t>(b);
                if (arcs_[ub].forward && flow[ub] > 0) {
                    --flow[ub];
                    return arcs_[ub].to;
                }
            }
            return sink();
        };
        std::vector<std::vector<VertexId>> result;
        while (true) {
            std::size_t node = take(source());
            if (node == sink())
                break;
            std::vector<VertexId> path;
            while (node != sink()) {
                const auto v = static_cast<VertexId>(node / 2);
                // a circulation can route a walk back onto itself; drop the loop
                if (auto it = std::find(path.begin(), path.end(), v); it != path.end())
                    path.erase(it, path.end());
                path.push_back(v);
                node = take(take(in(v)));
            }
            result.push_back(std::move(path));
        }
        std::sort(result.begin(), result.end());
        return result;
    }

private:
    struct Arc {
        std::size_t to;
        std::int64_t cap;
        int next;
        bool forward;
    };

    std::size_t in(VertexId v) const { return 2 * static_cast<std::size_t>(v); }
    std::size_t out(VertexId v) const { return 2 * static_cast<std::size_t>(v) + 1; }
    std::size_t source() const { return 2 * n_; }
    std::size_t sink() const { return 2 * n_ + 1; }

    // Flow on a forward arc is the residual capacity of its reverse twin.
    std::int64_t flow_on(std::size_t a) const { return arcs_[a ^ 1].cap; }

    void add_arc(std::size_t from, std::size_t to, std::int64_t cap)
    {
        arcs_.push_back({to, cap, head_[from], true});
        head_[from] = static_cast<int>(arcs_.size() - 1);
        arcs_.push_back({from, 0, head_[to], false});
        head_[to] = static_cast<int>(arcs_.size() - 1);
    }

    std::vector<bool> reachable() const
    {
        std::vector<bool> seen(head_.size(), false);
        std::queue<std::size_t> queue;
        queue.push(source());
        seen[source()] = true;
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop();
            for (int a = head_[x]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
                const Arc& arc = arcs_[static_cast<std::size_t>(a)];
                if (arc.cap > 0 && !seen[arc.to]) {
                    seen[arc.to] = true;
                    queue.push(arc.to);
                }
            }
        }
        return seen;
    }

    bool augment()
    {
        std::vector<int> via(head_.size(), -1);
        std::vector<bool> seen(head_.size(), false);
        std::queue<std::size_t> queue;
        queue.push(source());
        seen[source()] = true;
        while (!queue.empty() && !seen[sink()]) {
            auto x = queue.front();
            queue.pop();
            for (int a = head_[x]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
                const Arc& arc = arcs_[static_cast<std::size_t>(a)];
                if (arc.cap > 0 && !seen[arc.to]) {
                    seen[arc.to] = true;
                    via[arc.to] = a;
                    queue.push(arc.to);
                }
            }
        }
        if (!seen[sink()])
            return false;
        std::int64_t push = std::numeric_limits<std::int64_t>::max();
        for (std::size_t x = sink(); x != source();) {
            const auto a = static_cast<std::size_t>(via[x]);
            push = std::min(push, arcs_[a].cap);
            x = arcs_[a ^ 1].to;
        }
        for (std::size_t x = sink(); x != source();) {
            const auto a = static_cast<std::size_t>(via[x]);
            arcs_[a].cap -= push;
            arcs_[a ^ 1].cap += push;
            x = arcs_[a ^ 1].to;
        }
        return true;
    }

    std::size_t n_;
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

void check_sides(const Graph& g, std::span<const VertexId> sources, std::span<const VertexId> sinks)
{
    if (sources.empty() || sinks.empty())
        throw std::invalid_argument("source and sink sets must be nonempty");
    for (VertexId v : sources)
        if (v >= g.vertex_count())
            throw std::out_of_range("source vertex out of range");
    for (VertexId v : sinks)
        if (v >= g.vertex_count())
            throw std::out_of_range("sink vertex out of range");
}

}  // namespace

std::string path_family_violation(const Graph& g, const PathFamily& family)
{
    std::vector<int> owner(g.vertex_count(), -1);
    for (std::size_t i = 0; i < family.paths.size(); ++i) {
        const auto& path = family.paths[i];
        if (path.empty())
            return "path " + std::to_string(i) + " is empty";
        for (std::size_t j = 0; j < path.size(); ++j) {
            const VertexId v = path[j];
            if (v >= g.vertex_count())
                return "path " + std::to_string(i) + " leaves the graph";
            if (owner[v] != -1)
                return "paths " + std::to_string(owner[v]) + " and " + std::to_string(i) + " share vertex " +
                       std::to_string(v);
            owner[v] = static_cast<int>(i);
            if (j > 0 && !g.has_edge(path[j - 1], v))
                return "path " + std::to_string(i) + " uses a non-edge (" + std::to_string(path[j - 1]) + "," +
                       std::to_string(v) + ")";
        }
    }
    return {};
}

PathFamily max_vertex_disjoint_paths(const Graph& g, std::span<const VertexId> sources,
                                     std::span<const VertexId> sinks)
{
    check_sides(g, sources, sinks);
    SplitNetwork net(g, sources, sinks);
    net.max_flow();
    return {net.paths()};
}

CutSet min_vertex_cut(const Graph& g, std::span<const VertexId> sources, std::span<const VertexId> sinks)
{
    check_sides(g, sources, sinks);
    for (VertexId s : sources)
        if (std::find(sinks.begin(), sinks.end(), s) != sinks.end())
            throw std::invalid_argument("vertex " + std::to_string(s) +
                                        " is both a source and a sink; the sides cannot be separated");
    SplitNetwork net(g, sources, sinks, true);
    net.max_flow();
    return {net.cut()};
}

bool separates(const Graph& g, std::span<const VertexId> removed, std::span<const VertexId> sources,
               std::span<const VertexId> sinks)
{
    std::vector<char> state(g.vertex_count(), 0);  // 1 removed, 2 reached
    for (VertexId v : removed)
        state[v] = 1;
    std::vector<VertexId> stack;
    for (VertexId s : sources)
        if (state[s] == 0) {
            state[s] = 2;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v))
            if (state[w] == 0) {
                state[w] = 2;
                stack.push_back(w);
            }
    }
    for (VertexId t : sinks)
        if (state[t] == 2)
            return false;
    return true;
}

}  // namespace minorbench
