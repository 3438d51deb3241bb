#include "minorbench/packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace minorbench {

std::string packing_violation(const Packing& packing, const Graph& pattern, const Graph& host)
{
    std::vector<int> owner(host.vertex_count(), -1);
    for (std::size_t i = 0; i < packing.models.size(); ++i) {
        if (!verify_model(packing.models[i], pattern, host))
            return "model " + std::to_string(i) + " is not a valid model";
        for (VertexId v : model_vertices(packing.models[i])) {
            if (owner[v] != -1)
                return "models " + std::to_string(owner[v]) + " and " + std::to_string(i) + " share vertex " +
                       std::to_string(v);
            owner[v] = static_cast<int>(i);
        }
    }
    return {};
}

Graph repeat_disjoint(const Graph& g, std::size_t copies)
{
    Graph out = empty_graph(0);
    for (std::size_t i = 0; i < copies; ++i)
        out = disjoint_union(out, g);
    return out;
}

Packing greedy_packing(const Graph& pattern, const Graph& host, const SearchBudget& budget)
{
    budget.validate();
    Packing packing;
    SearchOptions options;
    options.smallest_first = true;
    std::uint64_t spent = 0;
    while (true) {
        if (spent >= budget.max_expansions) {
            packing.budget_exhausted = true;
            break;
        }
        auto r = find_minor_model(pattern, host, {budget.max_expansions - spent, budget.determinism_seed}, options);
        spent += r.expansions;
        if (r.outcome == SearchOutcome::Exhausted) {
            packing.budget_exhausted = true;
            break;
        }
        if (r.outcome == SearchOutcome::Absent)
            break;
        for (VertexId v : model_vertices(*r.model))
            options.forbidden.push_back(v);
        std::sort(options.forbidden.begin(), options.forbidden.end());
        packing.models.push_back(std::move(*r.model));
    }
    return packing;
}

std::string to_string(PackingOutcome outcome)
{
    switch (outcome) {
    case PackingOutcome::Reached: return "reached";
    case PackingOutcome::UpperBounded: return "upper-bounded";
    case PackingOutcome::Exhausted: return "exhausted";
    }
    return "?";
}

ExactPackingResult exact_packing(const Graph& pattern, const Graph& host, std::size_t target,
                                 const SearchBudget& budget)
{
    if (target == 0)
        throw std::invalid_argument("packing target must be at least 1");
    budget.validate();
    ExactPackingResult result;
    const std::size_t k = pattern.vertex_count();
    for (std::size_t copies = 1; copies <= target; ++copies) {
        if (result.expansions >= budget.max_expansions) {
            result.outcome = PackingOutcome::Exhausted;
            result.best.budget_exhausted = true;
            return result;
        }
        const Graph multi = repeat_disjoint(pattern, copies);
        auto r = find_minor_model(multi, host, {budget.max_expansions - result.expansions, budget.determinism_seed});
        result.expansions += r.expansions;
        if (r.outcome == SearchOutcome::Exhausted) {
            result.outcome = PackingOutcome::Exhausted;
            result.best.budget_exhausted = true;
            return result;
        }
        if (r.outcome == SearchOutcome::Absent) {
            result.outcome = PackingOutcome::UpperBounded;
            return result;
        }
        Packing packing;
        for (std::size_t i = 0; i < copies; ++i) {
            MinorModel m;
            m.branch_sets.assign(r.model->branch_sets.begin() + static_cast<std::ptrdiff_t>(i * k),
                                 r.model->branch_sets.begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
            packing.models.push_back(std::move(m));
        }
        std::sort(packing.models.begin(), packing.models.end(),
                  [](const MinorModel& a, const MinorModel& b) { return model_vertices(a) < model_vertices(b); });
        result.best = std::move(packing);
    }
    result.outcome = PackingOutcome::Reached;
    return result;
}

CutSet packing_cut_certificate(const Graph& host, std::span<const VertexId> left, std::span<const VertexId> right)
{
    return min_vertex_cut(host, left, right);
}

std::size_t packing_upper_bound_by_cut(const Graph& host, std::span<const VertexId> left,
                                       std::span<const VertexId> right)
{
    return packing_cut_certificate(host, left, right).vertices.size();
}

}  // namespace minorbench
