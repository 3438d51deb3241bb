#pragma once

#include <span>
#include <string>
#include <vector>

#include "minorbench/minor.hpp"
#include "minorbench/paths.hpp"

namespace minorbench {

/// Pairwise vertex-disjoint models of one pattern.
struct Packing {
    std::vector<MinorModel> models;
    bool budget_exhausted = false;

    std::size_t size() const { return models.size(); }
};

/// Empty when every model is valid and no two models share a host vertex.
std::string packing_violation(const Packing& packing, const Graph& pattern, const Graph& host);

/// `copies` disjoint copies of g (ids of copy i start at i * n).
Graph repeat_disjoint(const Graph& g, std::size_t copies);

/// Repeatedly takes a smallest model among the unused host vertices. A lower bound on
/// the packing number.
Packing greedy_packing(const Graph& pattern, const Graph& host, const SearchBudget& budget);

enum class PackingOutcome { Reached, UpperBounded, Exhausted };

std::string to_string(PackingOutcome outcome);

struct ExactPackingResult {
    PackingOutcome outcome = PackingOutcome::Exhausted;
    /// Largest packing found (size == target when Reached; the packing number when UpperBounded).
    Packing best;
    std::uint64_t expansions = 0;
};

/// Exact packing search: j disjoint models exist iff j copies of the pattern form a
/// minor, so j = 1, 2, ... are decided in turn until the target is met or ruled out.
ExactPackingResult exact_packing(const Graph& pattern, const Graph& host, std::size_t target,
                                 const SearchBudget& budget);

/// Minimum vertex cut between the two sides, which bounds any packing whose every
/// model must contain a left-to-right path. Empty when the sides are already separated.
CutSet packing_cut_certificate(const Graph& host, std::span<const VertexId> left, std::span<const VertexId> right);

std::size_t packing_upper_bound_by_cut(const Graph& host, std::span<const VertexId> left,
                                       std::span<const VertexId> right);

}  // namespace minorbench
