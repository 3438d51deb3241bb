#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorbench/graph.hpp"

namespace minorbench {

/// branch_sets[p] is the sorted set of host vertices representing pattern vertex p.
struct MinorModel {
    std::vector<std::vector<VertexId>> branch_sets;

    bool operator==(const MinorModel&) const = default;
};

/// All host vertices used by the model, sorted.
std::vector<VertexId> model_vertices(const MinorModel& model);

/// The branch sets as an unordered family (sorted), forgetting which pattern vertex
/// each set represents. Two models related by a pattern automorphism share it.
std::vector<std::vector<VertexId>> model_partition(const MinorModel& model);

std::string model_to_json(const MinorModel& model);

struct SearchBudget {
    std::uint64_t max_expansions = 20'000'000;
    /// Recorded in reports only; the search itself is fully deterministic.
    std::uint64_t determinism_seed = 0;

    void validate() const;
};

/// Raised when a caller needs a definite answer and the budget ran out.
class SearchInconclusive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SearchOutcome { Found, Absent, Exhausted };

std::string to_string(SearchOutcome outcome);

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::Absent;
    std::optional<MinorModel> model;
    std::uint64_t expansions = 0;
};

struct SearchOptions {
    /// Host vertices that no branch set may use.
    std::vector<VertexId> forbidden;
    /// Upper bound on the total number of host vertices in the model.
    std::optional<std::size_t> max_model_vertices;
    /// Return a model with the fewest host vertices (iterative deepening on the bound).
    bool smallest_first = false;
    /// Shrink the witness to an inclusion-minimal model before returning it.
    bool shrink = true;
};

/// True iff branch sets are nonempty, pairwise disjoint, connected in the host, and
/// every pattern edge is realized by a host edge between the corresponding sets.
/// Throws std::invalid_argument when the model does not cover the pattern and
/// std::out_of_range for a host id outside the host.
bool verify_model(const MinorModel& model, const Graph& pattern, const Graph& host);

/// Repeatedly removes single vertices (smallest id first) while the model stays valid.
MinorModel shrink_model(MinorModel model, const Graph& pattern, const Graph& host);

/// No single vertex can be removed from any branch set without breaking validity.
bool is_minimal_model(const MinorModel& model, const Graph& pattern, const Graph& host);

/// Branch-and-bound minor search.
///
/// Host vertices are visited in a fixed low-frontier order and each receives either
/// "unused" or a pattern label (labels ordered by descending pattern degree).
/// Partial assignments are pruned when a branch-set fragment can no longer grow,
/// when a finished branch set misses a pattern edge, and on counting bounds; failed
/// frontier states are memoized. Interchangeable pattern vertices (twins, identical
/// components) are only tried in canonical first-use order. The result is a function
/// of (pattern, host, budget, options) only.
SearchResult find_minor_model(const Graph& pattern, const Graph& host, const SearchBudget& budget,
                              const SearchOptions& options = {});

struct ModelEnumeration {
    std::vector<MinorModel> models;
    bool budget_exhausted = false;
};

/// Up to `cap` distinct inclusion-minimal models, deduplicated by model_partition.
/// Distinct witnesses are reached by forbidding vertices of models already found.
ModelEnumeration enumerate_models(const Graph& pattern, const Graph& host, std::size_t cap,
                                  const SearchBudget& budget);

/// Reference oracle: memoized recursion over edge contractions of the host, with a
/// subgraph test at every node. Exact, but only usable on tiny hosts.
inline constexpr std::size_t kDefaultOracleLimit = 10;
bool has_minor_oracle(const Graph& pattern, const Graph& host, std::size_t host_limit = kDefaultOracleLimit);

/// Brute-force (not necessarily induced) subgraph containment; used by the oracle.
bool contains_subgraph(const Graph& pattern, const Graph& host);

struct KuratowskiClass {
    enum class Kind { Planar, HasK5, HasK33, Both };

    Kind kind = Kind::Planar;
    std::optional<MinorModel> k5_witness;
    std::optional<MinorModel> k33_witness;
};

std::string to_string(KuratowskiClass::Kind kind);

/// Classifies g by K5 / K3,3 minor containment. Throws SearchInconclusive on budget exhaustion.
KuratowskiClass kuratowski_class(const Graph& g, const SearchBudget& budget);

}  // namespace minorbench
