#include "minorbench/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "minorbench/blocks.hpp"

namespace minorbench {

namespace {

using Json = nlohmann::ordered_json;

const GridTag* grid_tag(const Graph& g, VertexId v) { return std::get_if<GridTag>(&g.tag(v)); }

BlockCheck classify_block(const Graph& host, std::vector<VertexId> vertices)
{
    BlockCheck check;
    check.vertices = std::move(vertices);
    std::vector<const GridTag*> grid;
    std::set<int> k5_anchors, k33_anchors;
    std::size_t k5 = 0, k33 = 0, other = 0;
    for (VertexId v : check.vertices) {
        const VertexTag& t = host.tag(v);
        if (auto* g = std::get_if<GridTag>(&t)) {
            grid.push_back(g);
        } else if (auto* a = std::get_if<K5PrivateTag>(&t)) {
            ++k5;
            k5_anchors.insert(a->anchor_col);
        } else if (auto* b = std::get_if<K33PrivateTag>(&t)) {
            ++k33;
            k33_anchors.insert(b->anchor_col);
        } else {
            ++other;
        }
    }
    if (other == 0 && k5 == 0 && k33 == 0) {
        check.kind = BlockKind::Grid;
    } else if (other == 0 && k33 == 0 && k5 == 4 && k5_anchors.size() == 1 && grid.size() == 1 &&
               grid[0]->row == 0 && grid[0]->col == *k5_anchors.begin()) {
        check.kind = BlockKind::AttachedK5;
        check.anchor_col = grid[0]->col;
    } else if (other == 0 && k5 == 0 && k33 == 5 && k33_anchors.size() == 1 && grid.size() == 1 &&
               grid[0]->row == 0 && grid[0]->col == *k33_anchors.begin()) {
        check.kind = BlockKind::AttachedK33;
        check.anchor_col = grid[0]->col;
    }
    return check;
}

// Private vertices of the block attached at (anchor, 0), ordered by private index.
template <class Tag>
std::vector<VertexId> attached_privates(const Graph& host, int anchor)
{
    std::vector<std::pair<int, VertexId>> found;
    for (VertexId v = 0; v < host.vertex_count(); ++v)
        if (auto* t = std::get_if<Tag>(&host.tag(v)); t && t->anchor_col == anchor)
            found.emplace_back(t->index, v);
    std::sort(found.begin(), found.end());
    std::vector<VertexId> out;
    for (const auto& [index, v] : found)
        out.push_back(v);
    return out;
}

template <class Tag>
std::optional<int> common_anchor(const Graph& host, const MinorModel& model, VertexId first, VertexId last)
{
    std::optional<int> anchor;
    for (VertexId p = first; p <= last; ++p)
        for (VertexId v : model.branch_sets[p]) {
            auto* t = std::get_if<Tag>(&host.tag(v));
            if (!t || (anchor && *anchor != t->anchor_col))
                return std::nullopt;
            anchor = t->anchor_col;
        }
    return anchor;
}

std::vector<VertexId> to_host(const std::vector<VertexId>& path, const std::vector<VertexId>& new_to_old)
{
    std::vector<VertexId> out;
    out.reserve(path.size());
    for (VertexId v : path)
        out.push_back(new_to_old[v]);
    return out;
}

Json ids(const std::vector<VertexId>& vs) { return Json(vs); }

Json model_json(const MinorModel& model)
{
    Json out = Json::array();
    for (const auto& set : model.branch_sets)
        out.push_back(set);
    return out;
}

Json packing_json(const Packing& packing)
{
    Json out = Json::array();
    for (const auto& m : packing.models)
        out.push_back(model_json(m));
    return out;
}

Json trace_json(const std::vector<TraceEntry>& trace)
{
    Json out = Json::array();
    for (const auto& e : trace)
        out.push_back({{"path_index", e.path_index},
                       {"deleted_path", e.deleted_path},
                       {"components_after_deletion", e.components_after_deletion},
                       {"top_row_component_count", e.top_row_component_count},
                       {"column0_consumed", e.column0_consumed}});
    return out;
}

Json params_json(TruncationParams p) { return {{"m", p.m}, {"h", p.h}}; }

void finish(Verdict& verdict, bool inconclusive, const std::vector<std::string>& findings)
{
    verdict = inconclusive ? Verdict::Inconclusive : findings.empty() ? Verdict::Pass : Verdict::Fail;
}

}  // namespace

std::string to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

int exit_code(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Inconclusive: return 3;
    }
    return 1;
}

std::string to_string(BlockKind kind)
{
    switch (kind) {
    case BlockKind::AttachedK5: return "attached-K5";
    case BlockKind::AttachedK33: return "attached-K33";
    case BlockKind::Grid: return "grid";
    case BlockKind::Other: return "other";
    }
    return "?";
}

std::variant<IDecomposition, NotDecomposable> decompose_I_model(const MinorModel& model, const Graph& host)
{
    if (!host.has_tags())
        throw std::invalid_argument("decomposition needs a tagged host");
    if (model.branch_sets.size() != kIVertexCount)
        throw std::invalid_argument("an I-model has exactly 10 branch sets");
    const auto a = common_anchor<K5PrivateTag>(host, model, 1, 4);
    if (!a)
        return NotDecomposable{"K5 side is not inside one attached K5"};
    const auto b = common_anchor<K33PrivateTag>(host, model, 5, 9);
    if (!b)
        return NotDecomposable{"K3,3 side is not inside one attached K3,3"};

    const auto& core = model.branch_sets[kICutVertex];
    for (VertexId v : core)
        if (!grid_tag(host, v))
            return NotDecomposable{"cut vertex branch set leaves the grid at vertex " + std::to_string(v)};
    const auto start = find_grid_vertex(host, *a, 0);
    const auto end = find_grid_vertex(host, *b, 0);
    auto contains = [&](std::optional<VertexId> v) {
        return v && std::find(core.begin(), core.end(), *v) != core.end();
    };
    if (!contains(start) || !contains(end))
        return NotDecomposable{"cut vertex branch set misses an anchor"};

    // The branch set must induce a path between the two anchors.
    const Relabeled sub = induced_subgraph(host, core);
    const Graph& p = sub.graph;
    const VertexId s = *sub.old_to_new[*start];
    const VertexId t = *sub.old_to_new[*end];
    std::vector<VertexId> new_to_old(p.vertex_count());
    for (VertexId v = 0; v < host.vertex_count(); ++v)
        if (sub.old_to_new[v])
            new_to_old[*sub.old_to_new[v]] = v;
    if (p.edge_count() + 1 != p.vertex_count() || !is_connected_subset(host, core))
        return NotDecomposable{"cut vertex branch set is not a path"};
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
        const std::size_t want = p.vertex_count() == 1 ? 0 : (v == s || v == t) ? 1 : 2;
        if (p.degree(v) != want)
            return NotDecomposable{"cut vertex branch set is not a path between the anchors"};
    }
    IDecomposition out;
    out.k5_anchor = *a;
    out.k33_anchor = *b;
    std::optional<VertexId> prev;
    VertexId cur = s;
    out.path.push_back(new_to_old[s]);
    while (cur != t) {
        const auto nbrs = p.neighbors(cur);
        const VertexId next = prev && nbrs[0] == *prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
        out.path.push_back(new_to_old[cur]);
    }
    return out;
}

Lemma1Report verify_lemma1_on(const Graph& host, TruncationParams params, const SearchBudget& budget,
                              std::size_t model_cap)
{
    params.validate();
    budget.validate();
    if (!host.has_tags())
        throw std::invalid_argument("lemma check needs a tagged host");
    Lemma1Report report;
    report.params = params;
    bool inconclusive = false;

    const Graph k5 = complete_graph(5);
    const Graph k33 = complete_bipartite(3, 3);
    for (const auto& block : block_decomposition(host).blocks) {
        BlockCheck check = classify_block(host, block);
        const Graph sub = induced_subgraph(host, block).graph;
        check.k5 = find_minor_model(k5, sub, budget).outcome;
        check.k33 = find_minor_model(k33, sub, budget).outcome;
        const bool k5_allowed = check.kind == BlockKind::AttachedK5 && *check.anchor_col < 0;
        const bool k33_allowed = check.kind == BlockKind::AttachedK33 && *check.anchor_col >= 0;
        check.k5_confined = check.k5 != SearchOutcome::Found || k5_allowed;
        check.k33_confined = check.k33 != SearchOutcome::Found || k33_allowed;
        if (check.k5 == SearchOutcome::Exhausted || check.k33 == SearchOutcome::Exhausted)
            inconclusive = true;
        const std::string where = to_string(check.kind) + " block at vertex " + std::to_string(check.vertices.front());
        if (!check.k5_confined)
            report.findings.push_back("K5 minor in " + where);
        if (!check.k33_confined)
            report.findings.push_back("K3,3 minor in " + where);
        report.blocks.push_back(std::move(check));
    }

    const Graph pattern = build_I();
    auto models = enumerate_models(pattern, host, model_cap, budget);
    report.enumeration_truncated = models.budget_exhausted;
    if (models.models.empty()) {
        if (models.budget_exhausted)
            inconclusive = true;
        else
            report.findings.push_back("host has no I-minor");
    }
    for (auto& model : models.models) {
        DecomposedModel entry{model, decompose_I_model(model, host), false};
        if (auto* parts = std::get_if<IDecomposition>(&entry.parts)) {
            entry.ok = parts->k5_anchor < 0 && parts->k33_anchor >= 0;
            if (!entry.ok)
                report.findings.push_back("I-model with K5 at column " + std::to_string(parts->k5_anchor) +
                                          " and K3,3 at column " + std::to_string(parts->k33_anchor));
        } else {
            report.findings.push_back("I-model not decomposable: " + std::get<NotDecomposable>(entry.parts).reason);
        }
        report.models.push_back(std::move(entry));
    }
    finish(report.verdict, inconclusive && report.findings.empty(), report.findings);
    return report;
}

Lemma1Report verify_lemma1(TruncationParams params, const SearchBudget& budget, std::size_t model_cap)
{
    params.validate();
    return verify_lemma1_on(build_G(params), params, budget, model_cap);
}

Graph negative_control_host(TruncationParams params)
{
    params.validate();
    const Graph g = build_G(params);
    return attach_k5(g, *find_grid_vertex(g, 0, 0));
}

std::vector<TraceEntry> component_trace(TruncationParams params, const PathFamily& family)
{
    params.validate();
    const Graph host = build_G(params);
    if (auto why = path_family_violation(host, family); !why.empty())
        throw std::invalid_argument("invalid path family: " + why);
    for (std::size_t i = 0; i < family.paths.size(); ++i) {
        bool left = false, right = false;
        for (VertexId v : family.paths[i]) {
            const GridTag* t = grid_tag(host, v);
            if (!t)
                throw std::invalid_argument("path " + std::to_string(i) + " leaves the grid");
            if (t->row == params.h)
                throw std::invalid_argument("path " + std::to_string(i) + " touches the top row");
            left = left || t->col < 0;
            right = right || t->col >= 0;
        }
        if (!left || !right)
            throw std::invalid_argument("path " + std::to_string(i) + " does not cross column 0");
    }

    std::vector<TraceEntry> out;
    std::vector<VertexId> removed;
    std::size_t column0 = 0;
    for (std::size_t i = 0; i < family.paths.size(); ++i) {
        TraceEntry e;
        e.path_index = i;
        e.deleted_path = family.paths[i];
        for (VertexId v : family.paths[i]) {
            removed.push_back(v);
            if (grid_tag(host, v)->col == 0)
                ++column0;
        }
        const Graph rest = delete_vertices(host, removed).graph;
        const auto comps = connected_components(rest);
        e.components_after_deletion = comps.size();
        for (const auto& comp : comps)
            if (std::any_of(comp.begin(), comp.end(), [&](VertexId v) {
                    const GridTag* t = grid_tag(rest, v);
                    return t && t->row == params.h;
                }))
                ++e.top_row_component_count;
        e.column0_consumed = column0;
        out.push_back(std::move(e));
    }
    return out;
}

SaturationReport verify_saturation(int h, const std::vector<int>& m_range, const SearchBudget& budget)
{
    budget.validate();
    SaturationReport report;
    report.h = h;
    bool inconclusive = false;
    const Graph pattern = build_I();
    const auto cap = static_cast<std::size_t>(h) + 1;
    for (int m : m_range) {
        const TruncationParams p{m, h};
        p.validate();
        const Graph g = build_G(p);
        SaturationCell cell;
        cell.m = m;
        const auto r = exact_packing(pattern, g, cap + 1, budget);
        cell.outcome = r.outcome;
        cell.packing = r.best;
        cell.size = r.best.size();
        cell.expansions = r.expansions;
        std::vector<VertexId> left, right;
        for (int a = -m; a < 0; ++a)
            left.push_back(*find_grid_vertex(g, a, 0));
        for (int b = 0; b <= m; ++b)
            right.push_back(*find_grid_vertex(g, b, 0));
        cell.cut = packing_cut_certificate(g, left, right);

        const std::string at = "m=" + std::to_string(m) + ": ";
        if (r.outcome == PackingOutcome::Exhausted)
            inconclusive = true;
        if (auto why = packing_violation(cell.packing, pattern, g); !why.empty())
            report.findings.push_back(at + why);
        if (!separates(g, cell.cut.vertices, left, right))
            report.findings.push_back(at + "cut certificate does not separate");
        if (r.outcome == PackingOutcome::Reached || cell.size > cap)
            report.findings.push_back(at + "packing exceeds h+1");
        if (cell.size > cell.cut.vertices.size())
            report.findings.push_back(at + "packing exceeds the cut certificate");
        report.cells.push_back(std::move(cell));
    }
    // Once m >= h+1 every cell must sit at the cut value.
    for (const auto& cell : report.cells)
        if (cell.m >= h + 1 && cell.outcome == PackingOutcome::UpperBounded && cell.size != cell.cut.vertices.size())
            report.findings.push_back("m=" + std::to_string(cell.m) + ": packing " + std::to_string(cell.size) +
                                      " below the cut value " + std::to_string(cell.cut.vertices.size()));
    finish(report.verdict, inconclusive && report.findings.empty(), report.findings);
    return report;
}

TruncationParams proposition_params(int n, std::size_t ray_edges)
{
    if (n < 1 || ray_edges < 1)
        throw std::invalid_argument("proposition check needs n >= 1 and a ray of at least one edge");
    return {n, 2 * n - 1 + static_cast<int>(ray_edges)};
}

PropositionReport verify_proposition_lower(int n, std::size_t ray_edges)
{
    PropositionReport report;
    report.n = n;
    report.ray_edges = ray_edges;
    report.params = proposition_params(n, ray_edges);
    const TruncationParams p = report.params;
    const Graph host = build_G(p);

    // Crossing paths live in rows 0..n-1.
    std::vector<VertexId> band;
    for (int row = 0; row < n; ++row)
        for (int col = -p.m; col <= p.m; ++col)
            band.push_back(*find_grid_vertex(host, col, row));
    std::sort(band.begin(), band.end());
    const Relabeled sub = induced_subgraph(host, band);
    std::vector<VertexId> new_to_old(sub.graph.vertex_count());
    for (VertexId v : band)
        new_to_old[*sub.old_to_new[v]] = v;
    std::vector<VertexId> sources, sinks;
    for (int a = -p.m; a < 0; ++a)
        sources.push_back(*sub.old_to_new[*find_grid_vertex(host, a, 0)]);
    for (int b = 0; b <= p.m; ++b)
        sinks.push_back(*sub.old_to_new[*find_grid_vertex(host, b, 0)]);
    const PathFamily flow = max_vertex_disjoint_paths(sub.graph, sources, sinks);

    auto is_in = [](const std::vector<VertexId>& set, VertexId v) {
        return std::find(set.begin(), set.end(), v) != set.end();
    };
    for (const auto& path : flow.paths) {
        if (report.crossing_paths.paths.size() == static_cast<std::size_t>(n))
            break;
        // Keep the stretch from the last source to the first sink after it.
        std::size_t first = 0;
        for (std::size_t i = 0; i < path.size(); ++i)
            if (is_in(sources, path[i]))
                first = i;
        std::size_t last = first;
        while (last < path.size() && !is_in(sinks, path[last]))
            ++last;
        if (last == path.size())
            continue;
        report.crossing_paths.paths.push_back(
            to_host({path.begin() + static_cast<std::ptrdiff_t>(first), path.begin() + static_cast<std::ptrdiff_t>(last) + 1},
                    new_to_old));
    }
    if (report.crossing_paths.paths.size() < static_cast<std::size_t>(n)) {
        report.findings.push_back("only " + std::to_string(report.crossing_paths.paths.size()) +
                                  " disjoint crossing paths in rows 0..n-1");
        finish(report.verdict, false, report.findings);
        return report;
    }

    const Graph pattern = build_H(ray_edges);
    for (int i = 0; i < n; ++i) {
        const auto& path = report.crossing_paths.paths[static_cast<std::size_t>(i)];
        const int a = grid_tag(host, path.front())->col;
        const int b = grid_tag(host, path.back())->col;
        MinorModel model;
        model.branch_sets.assign(pattern.vertex_count(), {});
        model.branch_sets[kICutVertex] = path;
        std::sort(model.branch_sets[kICutVertex].begin(), model.branch_sets[kICutVertex].end());
        const auto k5 = attached_privates<K5PrivateTag>(host, a);
        const auto k33 = attached_privates<K33PrivateTag>(host, b);
        for (std::size_t j = 0; j < k5.size() && j < 4; ++j)
            model.branch_sets[1 + j] = {k5[j]};
        for (std::size_t j = 0; j < k33.size() && j < 5; ++j)
            model.branch_sets[5 + j] = {k33[j]};
        // The ray surrogate runs up column -n+i from row n.
        for (std::size_t j = 0; j <= ray_edges; ++j)
            model.branch_sets[kIVertexCount + j] = {*find_grid_vertex(host, -n + i, n + static_cast<int>(j))};
        if (!verify_model(model, pattern, host))
            report.findings.push_back("H-model " + std::to_string(i) + " is invalid");
        report.lower_packing.models.push_back(std::move(model));
    }
    if (auto why = packing_violation(report.lower_packing, pattern, host); !why.empty())
        report.findings.push_back(why);

    report.trace = component_trace(p, report.crossing_paths);
    for (const auto& e : report.trace) {
        if (e.top_row_component_count != 1)
            report.findings.push_back("after deleting path " + std::to_string(e.path_index) + ", " +
                                      std::to_string(e.top_row_component_count) + " components meet the top row");
        if (e.column0_consumed < e.path_index + 1)
            report.findings.push_back("crossing paths share column-0 vertices");
    }
    finish(report.verdict, false, report.findings);
    return report;
}

std::string to_json(const Lemma1Report& report)
{
    Json blocks = Json::array();
    for (const auto& b : report.blocks) {
        Json entry = {{"vertices", ids(b.vertices)}, {"kind", to_string(b.kind)}};
        entry["anchor_col"] = b.anchor_col ? Json(*b.anchor_col) : Json(nullptr);
        entry["k5"] = to_string(b.k5);
        entry["k33"] = to_string(b.k33);
        entry["k5_confined"] = b.k5_confined;
        entry["k33_confined"] = b.k33_confined;
        blocks.push_back(std::move(entry));
    }
    Json models = Json::array();
    for (const auto& m : report.models) {
        Json entry = {{"model", model_json(m.model)}};
        if (auto* parts = std::get_if<IDecomposition>(&m.parts)) {
            entry["k5_anchor"] = parts->k5_anchor;
            entry["path"] = parts->path;
            entry["k33_anchor"] = parts->k33_anchor;
        } else {
            entry["not_decomposable"] = std::get<NotDecomposable>(m.parts).reason;
        }
        entry["ok"] = m.ok;
        models.push_back(std::move(entry));
    }
    Json out = {{"check", "lemma1"},
                {"params", params_json(report.params)},
                {"blocks", std::move(blocks)},
                {"models", std::move(models)},
                {"enumeration_truncated", report.enumeration_truncated},
                {"findings", report.findings},
                {"verdict", to_string(report.verdict)}};
    return out.dump(1) + "\n";
}

std::string to_json(const SaturationReport& report)
{
    Json cells = Json::array();
    for (const auto& c : report.cells)
        cells.push_back({{"m", c.m},
                         {"outcome", to_string(c.outcome)},
                         {"size", c.size},
                         {"cut", c.cut.vertices},
                         {"cut_size", c.cut.vertices.size()},
                         {"packing", packing_json(c.packing)},
                         {"expansions", c.expansions}});
    Json out = {{"check", "saturation"},
                {"h", report.h},
                {"cells", std::move(cells)},
                {"findings", report.findings},
                {"verdict", to_string(report.verdict)}};
    return out.dump(1) + "\n";
}

std::string to_json(const PropositionReport& report)
{
    Json out = {{"check", "proposition"},
                {"n", report.n},
                {"ray_edges", report.ray_edges},
                {"params", params_json(report.params)},
                {"crossing_paths", report.crossing_paths.paths},
                {"lower_packing", packing_json(report.lower_packing)},
                {"component_trace", trace_json(report.trace)},
                {"findings", report.findings},
                {"verdict", to_string(report.verdict)}};
    return out.dump(1) + "\n";
}

std::string to_text(const Lemma1Report& report)
{
    std::ostringstream out;
    out << "lemma1 m=" << report.params.m << " h=" << report.params.h << "\n";
    for (const auto& b : report.blocks) {
        out << "  block " << to_string(b.kind);
        if (b.anchor_col)
            out << " @" << *b.anchor_col;
        out << " (" << b.vertices.size() << " vertices): K5 " << to_string(b.k5) << ", K3,3 " << to_string(b.k33)
            << (b.k5_confined && b.k33_confined ? "" : "  <-- not confined") << "\n";
    }
    std::size_t good = 0;
    for (const auto& m : report.models)
        good += m.ok ? 1 : 0;
    out << "  I-models: " << report.models.size() << " enumerated, " << good << " decompose"
        << (report.enumeration_truncated ? " (enumeration truncated by budget)" : "") << "\n";
    for (const auto& f : report.findings)
        out << "  finding: " << f << "\n";
    out << "  verdict: " << to_string(report.verdict) << "\n";
    return out.str();
}

std::string to_text(const SaturationReport& report)
{
    std::ostringstream out;
    out << "saturation h=" << report.h << "\n";
    for (const auto& c : report.cells)
        out << "  m=" << c.m << ": packing " << c.size << " (" << to_string(c.outcome) << "), cut "
            << c.cut.vertices.size() << "\n";
    for (const auto& f : report.findings)
        out << "  finding: " << f << "\n";
    out << "  verdict: " << to_string(report.verdict) << "\n";
    return out.str();
}

std::string to_text(const PropositionReport& report)
{
    std::ostringstream out;
    out << "proposition n=" << report.n << " ray=" << report.ray_edges << " on G(" << report.params.m << ","
        << report.params.h << ")\n";
    out << "  disjoint H-models: " << report.lower_packing.size() << "\n";
    for (const auto& e : report.trace)
        out << "  after path " << e.path_index << ": " << e.components_after_deletion << " components, "
            << e.top_row_component_count << " meeting the top row, " << e.column0_consumed
            << " column-0 vertices used\n";
    for (const auto& f : report.findings)
        out << "  finding: " << f << "\n";
    out << "  verdict: " << to_string(report.verdict) << "\n";
    return out.str();
}

}  // namespace minorbench
