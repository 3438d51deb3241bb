#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "minorbench/constructions.hpp"
#include "minorbench/minor.hpp"
#include "minorbench/packing.hpp"
#include "minorbench/paths.hpp"

namespace minorbench {

/// Inconclusive means a search ran out of budget; it never counts as a pass or a failure.
enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict verdict);

/// Shell exit status for a verdict: 0 pass, 1 fail, 3 inconclusive.
int exit_code(Verdict verdict);

enum class BlockKind { AttachedK5, AttachedK33, Grid, Other };

std::string to_string(BlockKind kind);

struct BlockCheck {
    std::vector<VertexId> vertices;
    BlockKind kind = BlockKind::Other;
    /// Anchor column for attached blocks.
    std::optional<int> anchor_col;
    SearchOutcome k5 = SearchOutcome::Absent;
    SearchOutcome k33 = SearchOutcome::Absent;
    /// A K5 minor only where a K5 is attached left of column 0.
    bool k5_confined = true;
    /// A K3,3 minor only where a K3,3 is attached at column 0 or right of it.
    bool k33_confined = true;
};

struct IDecomposition {
    int k5_anchor = 0;
    /// Grid path from (k5_anchor, 0) to (k33_anchor, 0), host ids.
    std::vector<VertexId> path;
    int k33_anchor = 0;
};

struct NotDecomposable {
    std::string reason;
};

/// Splits a valid minimal I-model (pattern ids as in build_I) of a tagged host into the
/// K5 block it uses, the grid path carried by the cut vertex's branch set, and the
/// K3,3 block. Throws std::invalid_argument on an untagged host.
std::variant<IDecomposition, NotDecomposable> decompose_I_model(const MinorModel& model, const Graph& host);

struct DecomposedModel {
    MinorModel model;
    std::variant<IDecomposition, NotDecomposable> parts;
    /// Decomposes and k5_anchor < 0 <= k33_anchor.
    bool ok = false;
};

struct Lemma1Report {
    TruncationParams params;
    std::vector<BlockCheck> blocks;
    std::vector<DecomposedModel> models;
    /// The enumeration stopped on budget before reaching its cap.
    bool enumeration_truncated = false;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> findings;
};

inline constexpr std::size_t kDefaultModelCap = 12;

/// Block confinement of K5 / K3,3 minors plus decomposition of enumerated minimal
/// I-models, on an arbitrary tagged host (build_G or a mutation of it).
Lemma1Report verify_lemma1_on(const Graph& host, TruncationParams params, const SearchBudget& budget,
                              std::size_t model_cap = kDefaultModelCap);

Lemma1Report verify_lemma1(TruncationParams params, const SearchBudget& budget,
                           std::size_t model_cap = kDefaultModelCap);

/// build_G(p) with an extra K5 glued onto (0,0); the checks must reject it.
Graph negative_control_host(TruncationParams params);

struct TraceEntry {
    std::size_t path_index = 0;
    std::vector<VertexId> deleted_path;
    std::size_t components_after_deletion = 0;
    std::size_t top_row_component_count = 0;
    /// Distinct column-0 vertices among all paths deleted so far.
    std::size_t column0_consumed = 0;
};

/// Deletes the paths from build_G(p) one after another and counts the components
/// meeting row h. Every path must be a grid path joining a column < 0 to a column >= 0
/// and must avoid row h; otherwise std::invalid_argument.
std::vector<TraceEntry> component_trace(TruncationParams params, const PathFamily& family);

struct SaturationCell {
    int m = 0;
    PackingOutcome outcome = PackingOutcome::Exhausted;
    /// Exact packing number when outcome is UpperBounded.
    std::size_t size = 0;
    Packing packing;
    CutSet cut;
    std::uint64_t expansions = 0;
};

struct SaturationReport {
    int h = 0;
    std::vector<SaturationCell> cells;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> findings;
};

/// Exact I-packing numbers of build_G(m, h) for each m, each checked against the
/// column-0 cut between the K5 anchors and the K3,3 anchors.
SaturationReport verify_saturation(int h, const std::vector<int>& m_range, const SearchBudget& budget);

struct PropositionReport {
    int n = 0;
    std::size_t ray_edges = 0;
    TruncationParams params;
    PathFamily crossing_paths;
    Packing lower_packing;
    std::vector<TraceEntry> trace;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> findings;
};

/// n disjoint H-models (I plus a path with `ray_edges` edges) in build_G(n, 2n-1+L).
/// The crossing paths come from a maximum disjoint path family in rows 0..n-1, the
/// paths for the ray in rows n..2n-1+L; every model is checked with verify_model.
PropositionReport verify_proposition_lower(int n, std::size_t ray_edges);

TruncationParams proposition_params(int n, std::size_t ray_edges);

std::string to_json(const Lemma1Report& report);
std::string to_json(const SaturationReport& report);
std::string to_json(const PropositionReport& report);
std::string to_text(const Lemma1Report& report);
std::string to_text(const SaturationReport& report);
std::string to_text(const PropositionReport& report);

}  // namespace minorbench
