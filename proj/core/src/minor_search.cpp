#include "minorbench/minor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "minorbench/blocks.hpp"

namespace minorbench {

namespace {

constexpr int kUnused = -1;
constexpr int kUnprocessed = -2;
constexpr std::size_t kMaxPatternVertices = 64;
constexpr std::size_t kMaxPatternEdges = 256;
constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

using EdgeMask = std::array<std::uint64_t, kMaxPatternEdges / 64>;

struct BudgetExhausted {};

bool subset_of(const EdgeMask& a, const EdgeMask& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i])
            return false;
    return true;
}

// Processing order for host vertices together with the frontier bookkeeping the
// search needs. frontier[t] lists the vertices processed at steps <= t that still
// have a neighbor processed after step t.
struct HostOrder {
    std::vector<VertexId> order;
    std::vector<std::size_t> pos;
    std::vector<std::size_t> last;
    std::vector<std::vector<VertexId>> frontier;
    std::vector<std::vector<VertexId>> closing;
    std::size_t width = 0;
};

std::vector<VertexId> greedy_order(const Graph& host, VertexId start)
{
    const std::size_t n = host.vertex_count();
    std::vector<VertexId> order;
    order.reserve(n);
    std::vector<bool> done(n, false);
    std::vector<std::size_t> remaining(n);
    for (VertexId v = 0; v < n; ++v)
        remaining[v] = host.degree(v);

    auto take = [&](VertexId v) {
        done[v] = true;
        order.push_back(v);
        for (VertexId w : host.neighbors(v))
            --remaining[w];
    };

    VertexId next = start;
    while (true) {
        take(next);
        if (order.size() == n)
            break;
        // Candidates: unprocessed neighbors of the processed set; otherwise restart
        // at a minimum-degree vertex of the next component.
        bool found = false;
        long best_delta = 0;
        std::size_t best_links = 0;
        std::size_t best_degree = 0;
        for (VertexId w = 0; w < n; ++w) {
            if (done[w])
                continue;
            std::size_t links = host.degree(w) - remaining[w];
            if (links == 0)
                continue;
            long delta = remaining[w] > 0 ? 1 : 0;
            for (VertexId u : host.neighbors(w))
                if (done[u] && remaining[u] == 1)
                    --delta;
            auto better = [&] {
                if (!found)
                    return true;
                if (delta != best_delta)
                    return delta < best_delta;
                if (links != best_links)
                    return links > best_links;
                return host.degree(w) < best_degree;
            };
            if (better()) {
                found = true;
                best_delta = delta;
                best_links = links;
                best_degree = host.degree(w);
                next = w;
            }
        }
        if (!found) {
            std::size_t best = std::numeric_limits<std::size_t>::max();
            for (VertexId w = 0; w < n; ++w)
                if (!done[w] && host.degree(w) < best) {
                    best = host.degree(w);
                    next = w;
                }
        }
    }
    return order;
}

// Like greedy_order, but a block is finished before the walk returns to the block it
// was entered from, so pendant pieces never stay open while the rest is swept.
std::vector<VertexId> block_order(const Graph& host, const BlockDecomposition& d,
                                  const std::vector<std::vector<std::size_t>>& blocks_of, VertexId start)
{
    const std::size_t n = host.vertex_count();
    std::vector<VertexId> order;
    order.reserve(n);
    std::vector<bool> done(n, false);
    std::vector<bool> block_done(d.blocks.size(), false);
    std::vector<std::size_t> remaining(n);
    for (VertexId v = 0; v < n; ++v)
        remaining[v] = host.degree(v);

    std::function<void(VertexId)> take;
    auto sweep = [&](std::size_t b) {
        const auto& members = d.blocks[b];
        while (true) {
            bool found = false;
            VertexId next = 0;
            long best_delta = 0;
            std::size_t best_links = 0;
            std::size_t best_degree = 0;
            for (VertexId w : members) {
                if (done[w])
                    continue;
                std::size_t links = host.degree(w) - remaining[w];
                if (links == 0)
                    continue;
                long delta = remaining[w] > 0 ? 1 : 0;
                for (VertexId u : host.neighbors(w))
                    if (done[u] && remaining[u] == 1)
                        --delta;
                const bool better = !found || delta < best_delta ||
                                    (delta == best_delta &&
                                     (links > best_links || (links == best_links && host.degree(w) < best_degree)));
                if (better) {
                    found = true;
                    best_delta = delta;
                    best_links = links;
                    best_degree = host.degree(w);
                    next = w;
                }
            }
            if (!found)
                return;
            take(next);
        }
    };
    take = [&](VertexId v) {
        done[v] = true;
        order.push_back(v);
        for (VertexId w : host.neighbors(v))
            --remaining[w];
        for (std::size_t b : blocks_of[v])
            if (!block_done[b]) {
                block_done[b] = true;
                sweep(b);
            }
    };

    VertexId next = start;
    while (true) {
        take(next);
        if (order.size() == n)
            break;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (VertexId w = 0; w < n; ++w)
            if (!done[w] && host.degree(w) < best) {
                best = host.degree(w);
                next = w;
            }
    }
    return order;
}

HostOrder make_host_order(const Graph& host, std::vector<VertexId> order)
{
    const std::size_t n = host.vertex_count();
    HostOrder h;
    h.order = std::move(order);
    h.pos.assign(n, 0);
    for (std::size_t t = 0; t < n; ++t)
        h.pos[h.order[t]] = t;
    h.last.assign(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        h.last[v] = h.pos[v];
        for (VertexId w : host.neighbors(v))
            h.last[v] = std::max(h.last[v], h.pos[w]);
    }
    h.frontier.assign(n, {});
    h.closing.assign(n, {});
    for (VertexId v = 0; v < n; ++v) {
        h.closing[h.last[v]].push_back(v);
        for (std::size_t t = h.pos[v]; t < h.last[v]; ++t)
            h.frontier[t].push_back(v);
    }
    for (std::size_t t = 0; t < n; ++t) {
        std::sort(h.frontier[t].begin(), h.frontier[t].end(),
                  [&](VertexId a, VertexId b) { return h.pos[a] < h.pos[b]; });
        h.width = std::max(h.width, h.frontier[t].size());
    }
    return h;
}

HostOrder best_host_order(const Graph& host)
{
    const std::size_t n = host.vertex_count();
    if (n == 0)
        return {};
    std::optional<HostOrder> best;
    std::size_t best_sum = 0;
    const BlockDecomposition d = block_decomposition(host);
    std::vector<std::vector<std::size_t>> blocks_of(n);
    for (std::size_t b = 0; b < d.blocks.size(); ++b)
        for (VertexId v : d.blocks[b])
            blocks_of[v].push_back(b);
    // Plain sweeps suit hosts that are mostly one block; block-first sweeps suit hosts
    // with many pendant blocks. Every start vertex is tried with both.
    for (std::size_t trial = 0; trial < 2 * n; ++trial) {
        const auto start = static_cast<VertexId>(trial % n);
        HostOrder candidate = make_host_order(
            host, trial < n ? greedy_order(host, start) : block_order(host, d, blocks_of, start));
        std::size_t sum = 0;
        for (const auto& f : candidate.frontier)
            sum += f.size();
        if (!best || candidate.width < best->width || (candidate.width == best->width && sum < best_sum)) {
            best_sum = sum;
            best = std::move(candidate);
        }
    }
    return std::move(*best);
}

// Pattern preprocessing: label order, edge numbering and symmetry classes.
struct PatternInfo {
    std::size_t k = 0;
    std::vector<VertexId> label_to_pattern;
    std::vector<int> edge_index;  // k*k, in label space
    std::vector<EdgeMask> incident;
    EdgeMask all_edges{};
    std::vector<int> twin_prev;
    std::vector<int> component;
    std::vector<int> component_prev;
    std::vector<std::uint64_t> component_labels;
};

bool twins(const Graph& g, VertexId a, VertexId b)
{
    std::vector<VertexId> na, nb;
    for (VertexId w : g.neighbors(a))
        if (w != b)
            na.push_back(w);
    for (VertexId w : g.neighbors(b))
        if (w != a)
            nb.push_back(w);
    return na == nb;
}

bool same_shape(const Graph& g, const std::vector<VertexId>& a, const std::vector<VertexId>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (g.has_edge(a[i], a[j]) != g.has_edge(b[i], b[j]))
                return false;
    return true;
}

PatternInfo analyse_pattern(const Graph& pattern)
{
    PatternInfo info;
    info.k = pattern.vertex_count();
    if (info.k > kMaxPatternVertices)
        throw std::invalid_argument("pattern has more than 64 vertices");
    if (pattern.edge_count() > kMaxPatternEdges)
        throw std::invalid_argument("pattern has more than 256 edges");

    info.label_to_pattern.resize(info.k);
    std::iota(info.label_to_pattern.begin(), info.label_to_pattern.end(), 0);
    std::stable_sort(info.label_to_pattern.begin(), info.label_to_pattern.end(),
                     [&](VertexId a, VertexId b) { return pattern.degree(a) > pattern.degree(b); });
    std::vector<int> pattern_to_label(info.k);
    for (std::size_t l = 0; l < info.k; ++l)
        pattern_to_label[info.label_to_pattern[l]] = static_cast<int>(l);

    info.edge_index.assign(info.k * info.k, -1);
    info.incident.assign(info.k, EdgeMask{});
    int next_edge = 0;
    for (const Edge& e : pattern.edges()) {
        const auto a = static_cast<std::size_t>(pattern_to_label[e.u]);
        const auto b = static_cast<std::size_t>(pattern_to_label[e.v]);
        const int id = next_edge++;
        info.edge_index[a * info.k + b] = info.edge_index[b * info.k + a] = id;
        info.incident[a][id / 64] |= 1ULL << (id % 64);
        info.incident[b][id / 64] |= 1ULL << (id % 64);
        info.all_edges[id / 64] |= 1ULL << (id % 64);
    }

    info.twin_prev.assign(info.k, -1);
    for (std::size_t l = 0; l < info.k; ++l) {
        const VertexId p = info.label_to_pattern[l];
        if (pattern.degree(p) == 0)
            continue;
        for (std::size_t j = l; j-- > 0;) {
            const VertexId q = info.label_to_pattern[j];
            if (pattern.degree(q) == pattern.degree(p) && twins(pattern, p, q)) {
                info.twin_prev[l] = static_cast<int>(j);
                break;
            }
        }
    }

    auto comps = connected_components(pattern);
    info.component.assign(info.k, 0);
    info.component_prev.assign(comps.size(), -1);
    info.component_labels.assign(comps.size(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (VertexId p : comps[c]) {
            const auto l = static_cast<std::size_t>(pattern_to_label[p]);
            info.component[l] = static_cast<int>(c);
            info.component_labels[c] |= 1ULL << l;
        }
        for (std::size_t d = c; d-- > 0;)
            if (same_shape(pattern, comps[d], comps[c])) {
                info.component_prev[c] = static_cast<int>(d);
                break;
            }
    }
    return info;
}

class Searcher {
public:
    Searcher(const PatternInfo& pattern, const Graph& host, const HostOrder& order, std::vector<bool> forbidden,
             std::uint64_t max_expansions)
        : p_(pattern), host_(host), h_(order), forbidden_(std::move(forbidden)), max_expansions_(max_expansions)
    {
        const std::size_t n = host.vertex_count();
        label_.assign(n, kUnprocessed);
        parent_.resize(n);
        std::iota(parent_.begin(), parent_.end(), 0);
        size_.assign(n, 1);
        fragments_.assign(p_.k, 0);
        available_.assign(n + 1, 0);
        for (std::size_t t = n; t-- > 0;)
            available_[t] = available_[t + 1] + (forbidden_[h_.order[t]] ? 0 : 1);
        // Host twins can swap labels in any model, so the later twin never takes a
        // smaller label. Only twins still on the frontier are used, which keeps the
        // rule a function of the memo key.
        host_twin_prev_.assign(n, -1);
        for (std::size_t t = 0; t < n; ++t) {
            const VertexId v = h_.order[t];
            for (std::size_t s = t; s-- > 0;) {
                const VertexId u = h_.order[s];
                if (h_.last[u] >= t && forbidden_[u] == forbidden_[v] && twins(host, u, v)) {
                    host_twin_prev_[v] = static_cast<int>(u);
                    break;
                }
            }
        }
        all_labels_ = p_.k == 64 ? ~0ULL : (1ULL << p_.k) - 1;
    }

    // Runs the search with the given bound on model size; true when a model was found.
    bool run(std::size_t bound)
    {
        bound_ = bound;
        return dfs(0);
    }

    std::uint64_t expansions() const { return expansions_; }

    MinorModel extract() const
    {
        MinorModel model;
        model.branch_sets.assign(p_.k, {});
        for (VertexId v = 0; v < host_.vertex_count(); ++v)
            if (label_[v] >= 0)
                model.branch_sets[p_.label_to_pattern[static_cast<std::size_t>(label_[v])]].push_back(v);
        return model;
    }

private:
    struct Undo {
        VertexId vertex;
        std::size_t unions;
        std::size_t realized;
    };

    VertexId find(VertexId v) const
    {
        while (parent_[v] != v)
            v = parent_[v];
        return v;
    }

    bool unite(VertexId a, VertexId b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        union_log_.push_back(b);
        return true;
    }

    void undo_union()
    {
        const VertexId b = union_log_.back();
        union_log_.pop_back();
        const VertexId a = parent_[b];
        size_[a] -= size_[b];
        parent_[b] = b;
    }

    bool label_open(int l, std::size_t t) const
    {
        if (t == 0)
            return false;
        for (VertexId u : h_.frontier[t - 1])
            if (label_[u] == l)
                return true;
        return false;
    }

    bool allowed_first_use(std::size_t l) const
    {
        if (p_.twin_prev[l] >= 0 && !(used_ & (1ULL << p_.twin_prev[l])))
            return false;
        const int c = p_.component[l];
        if (!(used_ & p_.component_labels[static_cast<std::size_t>(c)])) {
            const int prev = p_.component_prev[static_cast<std::size_t>(c)];
            if (prev >= 0 && !(used_ & p_.component_labels[static_cast<std::size_t>(prev)]))
                return false;
        }
        return true;
    }

    void assign(VertexId v, int l)
    {
        undo_.push_back({v, union_log_.size(), realized_log_.size()});
        label_[v] = l;
        if (l < 0)
            return;
        const auto ul = static_cast<std::size_t>(l);
        undo_.back().vertex = v;
        newly_used_.push_back(!(used_ & (1ULL << ul)));
        used_ |= 1ULL << ul;
        ++fragments_[ul];
        ++used_vertices_;
        for (VertexId u : host_.neighbors(v)) {
            const int lu = label_[u];
            if (lu < 0)
                continue;
            if (lu == l) {
                if (unite(u, v))
                    --fragments_[ul];
            } else {
                const int e = p_.edge_index[ul * p_.k + static_cast<std::size_t>(lu)];
                if (e >= 0 && !(realized_[e / 64] & (1ULL << (e % 64)))) {
                    realized_[e / 64] |= 1ULL << (e % 64);
                    realized_log_.push_back(e);
                }
            }
        }
    }

    void unassign()
    {
        const Undo u = undo_.back();
        undo_.pop_back();
        const int l = label_[u.vertex];
        label_[u.vertex] = kUnprocessed;
        if (l < 0)
            return;
        const auto ul = static_cast<std::size_t>(l);
        while (union_log_.size() > u.unions) {
            undo_union();
            ++fragments_[ul];
        }
        while (realized_log_.size() > u.realized) {
            const int e = realized_log_.back();
            realized_log_.pop_back();
            realized_[e / 64] &= ~(1ULL << (e % 64));
        }
        --fragments_[ul];
        --used_vertices_;
        if (newly_used_.back())
            used_ &= ~(1ULL << ul);
        newly_used_.pop_back();
    }

    // Checks the labels touched at step t once the vertices closing at t leave the frontier.
    bool consistent_after(std::size_t t) const
    {
        std::array<int, 16> touched{};
        std::size_t count = 0;
        auto touch = [&](int l) {
            if (l < 0)
                return;
            for (std::size_t i = 0; i < count; ++i)
                if (touched[i] == l)
                    return;
            if (count < touched.size())
                touched[count++] = l;
        };
        touch(label_[h_.order[t]]);
        for (VertexId u : h_.closing[t])
            touch(label_[u]);
        if (count == touched.size())
            return consistent_all(t);
        for (std::size_t i = 0; i < count; ++i)
            if (!label_consistent(touched[i], t))
                return false;
        return true;
    }

    bool consistent_all(std::size_t t) const
    {
        for (std::size_t l = 0; l < p_.k; ++l)
            if ((used_ & (1ULL << l)) && !label_consistent(static_cast<int>(l), t))
                return false;
        return true;
    }

    bool label_consistent(int l, std::size_t t) const
    {
        const auto ul = static_cast<std::size_t>(l);
        std::array<VertexId, 64> roots{};
        std::size_t open = 0;
        for (VertexId u : h_.frontier[t]) {
            if (label_[u] != l)
                continue;
            const VertexId r = find(u);
            bool seen = false;
            for (std::size_t i = 0; i < open; ++i)
                seen = seen || roots[i] == r;
            if (!seen) {
                if (open == roots.size())
                    return true;
                roots[open++] = r;
            }
        }
        if (open == 0)
            return fragments_[ul] == 1 && subset_of(p_.incident[ul], realized_);
        return fragments_[ul] == open;
    }

    bool complete() const
    {
        if (used_ != all_labels_ || !subset_of(p_.all_edges, realized_))
            return false;
        for (std::size_t l = 0; l < p_.k; ++l)
            if (fragments_[l] != 1)
                return false;
        return true;
    }

    std::string key(std::size_t t) const
    {
        std::string out;
        out.reserve(16 + 2 * 16 + sizeof(EdgeMask));
        auto put = [&](std::uint64_t x, int bytes) {
            for (int i = 0; i < bytes; ++i)
                out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
        };
        put(t, 4);
        put(used_, 8);
        for (auto w : realized_)
            put(w, 8);
        if (t > 0) {
            std::vector<VertexId> roots;
            for (VertexId u : h_.frontier[t - 1]) {
                const int l = label_[u];
                out.push_back(static_cast<char>(l < 0 ? 255 : l));
                if (l < 0)
                    continue;
                const VertexId r = find(u);
                auto it = std::find(roots.begin(), roots.end(), r);
                out.push_back(static_cast<char>(it - roots.begin()));
                if (it == roots.end())
                    roots.push_back(r);
            }
        }
        return out;
    }

    bool dfs(std::size_t t)
    {
        const std::size_t n = host_.vertex_count();
        if (complete()) {
            for (std::size_t s = t; s < n; ++s)
                label_[h_.order[s]] = kUnused;
            return true;
        }
        if (t == n)
            return false;
        const auto missing = static_cast<std::size_t>(p_.k - static_cast<std::size_t>(std::popcount(used_)));
        if (missing > available_[t])
            return false;
        if (bound_ != kUnbounded && used_vertices_ + missing > bound_)
            return false;

        const std::size_t allowance = bound_ == kUnbounded ? kUnbounded : bound_ - used_vertices_;
        std::string state = key(t);
        if (auto it = failed_.find(state); it != failed_.end() && it->second >= allowance)
            return false;

        const VertexId v = h_.order[t];
        const int options = forbidden_[v] ? 0 : static_cast<int>(p_.k);
        const int twin = host_twin_prev_[v];
        const int floor = twin >= 0 ? label_[static_cast<VertexId>(twin)] : -1;
        for (int l = std::max(-1, floor); l < options; ++l) {
            if (++expansions_ > max_expansions_)
                throw BudgetExhausted{};
            if (l >= 0) {
                const auto ul = static_cast<std::size_t>(l);
                if (used_ & (1ULL << ul)) {
                    if (!label_open(l, t))
                        continue;
                } else if (!allowed_first_use(ul)) {
                    continue;
                }
                if (bound_ != kUnbounded && used_vertices_ + 1 + missing - ((used_ >> ul) & 1 ? 0 : 1) > bound_)
                    continue;
            }
            assign(v, l);
            if (consistent_after(t) && dfs(t + 1))
                return true;
            unassign();
        }
        auto& slot = failed_[std::move(state)];
        slot = std::max(slot, allowance);
        return false;
    }

    const PatternInfo& p_;
    const Graph& host_;
    const HostOrder& h_;
    std::vector<bool> forbidden_;
    std::uint64_t max_expansions_;
    std::uint64_t expansions_ = 0;
    std::size_t bound_ = kUnbounded;

    std::vector<int> label_;
    std::vector<int> host_twin_prev_;
    std::vector<VertexId> parent_;
    std::vector<std::size_t> size_;
    std::vector<VertexId> union_log_;
    std::vector<int> realized_log_;
    std::vector<Undo> undo_;
    std::vector<bool> newly_used_;
    std::vector<std::size_t> fragments_;
    std::vector<std::size_t> available_;
    std::uint64_t used_ = 0;
    std::uint64_t all_labels_ = 0;
    EdgeMask realized_{};
    std::size_t used_vertices_ = 0;
    std::unordered_map<std::string, std::size_t> failed_;
};

}  // namespace

std::vector<VertexId> model_vertices(const MinorModel& model)
{
    std::vector<VertexId> out;
    for (const auto& set : model.branch_sets)
        out.insert(out.end(), set.begin(), set.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<VertexId>> model_partition(const MinorModel& model)
{
    auto sets = model.branch_sets;
    for (auto& s : sets)
        std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    return sets;
}

std::string model_to_json(const MinorModel& model)
{
    std::ostringstream out;
    out << "{";
    for (std::size_t p = 0; p < model.branch_sets.size(); ++p) {
        out << (p ? ", " : "") << "\"" << p << "\": [";
        for (std::size_t i = 0; i < model.branch_sets[p].size(); ++i)
            out << (i ? ", " : "") << model.branch_sets[p][i];
        out << "]";
    }
    out << "}";
    return out.str();
}

void SearchBudget::validate() const
{
    if (max_expansions == 0)
        throw std::invalid_argument("search budget must allow at least one expansion");
}

std::string to_string(SearchOutcome outcome)
{
    switch (outcome) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::Absent: return "absent";
    case SearchOutcome::Exhausted: return "exhausted";
    }
    return "?";
}

bool verify_model(const MinorModel& model, const Graph& pattern, const Graph& host)
{
    if (model.branch_sets.size() != pattern.vertex_count())
        throw std::invalid_argument("model has " + std::to_string(model.branch_sets.size()) +
                                    " branch sets for a pattern with " + std::to_string(pattern.vertex_count()) +
                                    " vertices");
    std::vector<int> owner(host.vertex_count(), -1);
    for (std::size_t p = 0; p < model.branch_sets.size(); ++p) {
        const auto& set = model.branch_sets[p];
        if (set.empty())
            return false;
        for (VertexId v : set) {
            if (v >= host.vertex_count())
                throw std::out_of_range("branch set vertex " + std::to_string(v) + " outside the host");
            if (owner[v] != -1)
                return false;
            owner[v] = static_cast<int>(p);
        }
    }
    for (const auto& set : model.branch_sets)
        if (!is_connected_subset(host, set))
            return false;
    for (const Edge& e : pattern.edges()) {
        bool joined = false;
        for (VertexId v : model.branch_sets[e.u]) {
            for (VertexId w : host.neighbors(v))
                if (owner[w] == static_cast<int>(e.v)) {
                    joined = true;
                    break;
                }
            if (joined)
                break;
        }
        if (!joined)
            return false;
    }
    return true;
}

MinorModel shrink_model(MinorModel model, const Graph& pattern, const Graph& host)
{
    for (auto& s : model.branch_sets)
        std::sort(s.begin(), s.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v : model_vertices(model)) {
            for (auto& set : model.branch_sets) {
                auto it = std::lower_bound(set.begin(), set.end(), v);
                if (it == set.end() || *it != v)
                    continue;
                if (set.size() == 1)
                    break;
                set.erase(it);
                if (verify_model(model, pattern, host)) {
                    changed = true;
                } else {
                    set.insert(std::lower_bound(set.begin(), set.end(), v), v);
                }
                break;
            }
        }
    }
    return model;
}

bool is_minimal_model(const MinorModel& model, const Graph& pattern, const Graph& host)
{
    if (!verify_model(model, pattern, host))
        return false;
    for (std::size_t p = 0; p < model.branch_sets.size(); ++p) {
        if (model.branch_sets[p].size() == 1)
            continue;
        for (std::size_t i = 0; i < model.branch_sets[p].size(); ++i) {
            MinorModel smaller = model;
            smaller.branch_sets[p].erase(smaller.branch_sets[p].begin() + static_cast<std::ptrdiff_t>(i));
            if (verify_model(smaller, pattern, host))
                return false;
        }
    }
    return true;
}

SearchResult find_minor_model(const Graph& pattern, const Graph& host, const SearchBudget& budget,
                              const SearchOptions& options)
{
    budget.validate();
    if (pattern.vertex_count() == 0)
        throw std::invalid_argument("pattern must have at least one vertex");
    SearchResult result;
    std::vector<bool> forbidden(host.vertex_count(), false);
    for (VertexId v : options.forbidden) {
        if (v >= host.vertex_count())
            throw std::out_of_range("forbidden vertex outside the host");
        forbidden[v] = true;
    }
    const std::size_t free_vertices =
        host.vertex_count() - static_cast<std::size_t>(std::count(forbidden.begin(), forbidden.end(), true));
    if (pattern.vertex_count() > free_vertices || pattern.edge_count() > host.edge_count()) {
        result.outcome = SearchOutcome::Absent;
        return result;
    }

    const PatternInfo info = analyse_pattern(pattern);
    const HostOrder order = best_host_order(host);
    Searcher searcher(info, host, order, std::move(forbidden), budget.max_expansions);

    const std::size_t cap = options.max_model_vertices.value_or(kUnbounded);
    bool found = false;
    try {
        if (options.smallest_first) {
            const std::size_t limit = std::min(cap, free_vertices);
            for (std::size_t bound = pattern.vertex_count(); bound <= limit && !found; ++bound)
                found = searcher.run(bound);
        } else {
            found = searcher.run(cap);
        }
    } catch (const BudgetExhausted&) {
        result.outcome = SearchOutcome::Exhausted;
        result.expansions = searcher.expansions();
        return result;
    }
    result.expansions = searcher.expansions();
    if (!found) {
        result.outcome = SearchOutcome::Absent;
        return result;
    }
    MinorModel model = searcher.extract();
    if (options.shrink)
        model = shrink_model(std::move(model), pattern, host);
    if (!verify_model(model, pattern, host))
        throw std::logic_error("minor search produced an invalid model");
    result.outcome = SearchOutcome::Found;
    result.model = std::move(model);
    return result;
}

ModelEnumeration enumerate_models(const Graph& pattern, const Graph& host, std::size_t cap,
                                  const SearchBudget& budget)
{
    if (cap == 0)
        throw std::invalid_argument("enumeration cap must be at least 1");
    budget.validate();
    ModelEnumeration out;
    std::set<std::vector<std::vector<VertexId>>> seen;
    std::set<std::vector<VertexId>> explored;
    // Breadth-first over forbidden sets: small forbidden sets rarely end in a costly
    // absence proof.
    std::deque<std::vector<VertexId>> queue{{}};
    std::uint64_t spent = 0;
    while (!queue.empty() && out.models.size() < cap) {
        std::vector<VertexId> forbidden = std::move(queue.front());
        queue.pop_front();
        if (!explored.insert(forbidden).second)
            continue;
        if (spent >= budget.max_expansions) {
            out.budget_exhausted = true;
            break;
        }
        SearchOptions options;
        options.forbidden = forbidden;
        SearchResult r = find_minor_model(pattern, host, {budget.max_expansions - spent, budget.determinism_seed},
                                          options);
        spent += r.expansions;
        if (r.outcome == SearchOutcome::Exhausted) {
            out.budget_exhausted = true;
            break;
        }
        if (r.outcome == SearchOutcome::Absent)
            continue;
        if (seen.insert(model_partition(*r.model)).second)
            out.models.push_back(*r.model);
        const auto used = model_vertices(*r.model);
        for (VertexId v : used) {
            auto child = forbidden;
            child.insert(std::lower_bound(child.begin(), child.end(), v), v);
            if (!explored.contains(child))
                queue.push_back(std::move(child));
        }
    }
    return out;
}

std::string to_string(KuratowskiClass::Kind kind)
{
    switch (kind) {
    case KuratowskiClass::Kind::Planar: return "planar";
    case KuratowskiClass::Kind::HasK5: return "has-K5";
    case KuratowskiClass::Kind::HasK33: return "has-K33";
    case KuratowskiClass::Kind::Both: return "both";
    }
    return "?";
}

KuratowskiClass kuratowski_class(const Graph& g, const SearchBudget& budget)
{
    auto k5 = find_minor_model(complete_graph(5), g, budget);
    auto k33 = find_minor_model(complete_bipartite(3, 3), g, budget);
    if (k5.outcome == SearchOutcome::Exhausted || k33.outcome == SearchOutcome::Exhausted)
        throw SearchInconclusive("Kuratowski classification ran out of budget");
    KuratowskiClass out;
    out.k5_witness = k5.model;
    out.k33_witness = k33.model;
    const bool has5 = k5.outcome == SearchOutcome::Found;
    const bool has33 = k33.outcome == SearchOutcome::Found;
    out.kind = has5 && has33 ? KuratowskiClass::Kind::Both
               : has5        ? KuratowskiClass::Kind::HasK5
               : has33       ? KuratowskiClass::Kind::HasK33
                             : KuratowskiClass::Kind::Planar;
    return out;
}

}  // namespace minorbench
