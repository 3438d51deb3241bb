#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "minorbench/minor.hpp"

namespace minorbench {

namespace {

using Mask = std::uint32_t;

struct SmallGraph {
    std::vector<Mask> adj;

    std::size_t edges() const
    {
        std::size_t twice = 0;
        for (Mask m : adj)
            twice += static_cast<std::size_t>(std::popcount(m));
        return twice / 2;
    }

    std::string key() const
    {
        std::string out;
        for (Mask m : adj) {
            out.push_back(static_cast<char>(m & 0xff));
            out.push_back(static_cast<char>((m >> 8) & 0xff));
            out.push_back(static_cast<char>((m >> 16) & 0xff));
        }
        return out;
    }

    // Merges vertex b into a and removes b, shifting higher ids down by one.
    SmallGraph contract(std::size_t a, std::size_t b) const
    {
        std::vector<Mask> merged = adj;
        merged[a] |= merged[b];
        for (std::size_t v = 0; v < merged.size(); ++v)
            if (merged[v] & (Mask{1} << b))
                merged[v] = (merged[v] & ~(Mask{1} << b)) | (Mask{1} << a);
        merged[a] &= ~(Mask{1} << a);
        SmallGraph out;
        for (std::size_t v = 0; v < merged.size(); ++v) {
            if (v == b)
                continue;
            const Mask m = merged[v];
            const Mask low = m & ((Mask{1} << b) - 1);
            const Mask high = (m >> (b + 1)) << b;
            out.adj.push_back(low | high);
        }
        return out;
    }
};

class SubgraphMatcher {
public:
    SubgraphMatcher(const Graph& pattern, const SmallGraph& host) : pattern_(pattern), host_(host)
    {
        order_.resize(pattern.vertex_count());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](VertexId a, VertexId b) { return pattern.degree(a) > pattern.degree(b); });
        image_.assign(pattern.vertex_count(), -1);
    }

    bool run() { return extend(0, 0); }

private:
    bool extend(std::size_t depth, Mask used)
    {
        if (depth == order_.size())
            return true;
        const VertexId p = order_[depth];
        const auto need = static_cast<int>(pattern_.degree(p));
        for (std::size_t h = 0; h < host_.adj.size(); ++h) {
            if (used & (Mask{1} << h))
                continue;
            if (std::popcount(host_.adj[h]) < need)
                continue;
            bool fits = true;
            for (VertexId q : pattern_.neighbors(p)) {
                const int hq = image_[q];
                if (hq >= 0 && !(host_.adj[h] & (Mask{1} << hq))) {
                    fits = false;
                    break;
                }
            }
            if (!fits)
                continue;
            image_[p] = static_cast<int>(h);
            if (extend(depth + 1, used | (Mask{1} << h)))
                return true;
            image_[p] = -1;
        }
        return false;
    }

    const Graph& pattern_;
    const SmallGraph& host_;
    std::vector<VertexId> order_;
    std::vector<int> image_;
};

SmallGraph to_small(const Graph& g)
{
    SmallGraph s;
    s.adj.assign(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        s.adj[e.u] |= Mask{1} << e.v;
        s.adj[e.v] |= Mask{1} << e.u;
    }
    return s;
}

class ContractionOracle {
public:
    explicit ContractionOracle(const Graph& pattern) : pattern_(pattern) {}

    bool contains(const SmallGraph& g)
    {
        if (g.adj.size() < pattern_.vertex_count() || g.edges() < pattern_.edge_count())
            return false;
        if (!refuted_.insert(g.key()).second)
            return false;
        if (SubgraphMatcher(pattern_, g).run())
            return true;
        if (g.adj.size() == pattern_.vertex_count())
            return false;
        for (std::size_t a = 0; a < g.adj.size(); ++a)
            for (std::size_t b = a + 1; b < g.adj.size(); ++b)
                if ((g.adj[a] & (Mask{1} << b)) && contains(g.contract(a, b)))
                    return true;
        return false;
    }

private:
    const Graph& pattern_;
    // Every host visited and not yet answered "true" ends up refuted; the search stops at
    // the first success, so nothing in this set is ever a positive instance.
    std::unordered_set<std::string> refuted_;
};

}  // namespace

bool contains_subgraph(const Graph& pattern, const Graph& host)
{
    if (host.vertex_count() > 32)
        throw std::length_error("subgraph test supports at most 32 host vertices");
    return SubgraphMatcher(pattern, to_small(host)).run();
}

bool has_minor_oracle(const Graph& pattern, const Graph& host, std::size_t host_limit)
{
    if (host.vertex_count() > host_limit || host.vertex_count() > 24)
        throw std::length_error("host has " + std::to_string(host.vertex_count()) +
                                " vertices, above the oracle limit of " + std::to_string(host_limit));
    if (pattern.vertex_count() == 0)
        throw std::invalid_argument("pattern must have at least one vertex");
    // Deleting vertices and edges is covered by the subgraph test at each node, so the
    // recursion only needs to branch on contractions.
    return ContractionOracle(pattern).contains(to_small(host));
}

}  // namespace minorbench
