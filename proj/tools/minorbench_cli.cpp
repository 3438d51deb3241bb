// minorbench: command-line front end for the minor workbench.
//
// Exit codes: 0 success / pass / found, 1 check failed / absent, 2 usage or input
// error, 3 inconclusive (search budget ran out).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "json.hpp"
#include "minorbench/blocks.hpp"
#include "minorbench/constructions.hpp"
#include "minorbench/graph_io.hpp"
#include "minorbench/minor.hpp"
#include "minorbench/packing.hpp"
#include "minorbench/paths.hpp"
#include "minorbench/recipe.hpp"
#include "minorbench/verify.hpp"

using namespace minorbench;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json model_json(const MinorModel& m) { return Json::parse(model_to_json(m)); }

void emit_graph(const Graph& g, const std::string& out, const std::string& dot)
{
    if (out.empty())
        std::cout << to_json(g);
    else
        write_graph_file(out, g);
    if (!dot.empty())
        write_text(dot, to_dot(g));
}

struct Options {
    // gen
    std::string construction = "G";
    int m = 1;
    int h = 0;
    std::size_t ray = 1;
    std::string out;
    std::string dot;
    // shared
    std::string host;
    std::string pattern;
    std::uint64_t budget = 0;
    bool json = false;
    std::string report;
    // minor
    std::size_t enumerate = 0;
    bool smallest = false;
    // paths
    std::string sources;
    std::string sinks;
    // pack
    std::size_t target = 1;
    bool exact = false;
    std::string cut_left;
    std::string cut_right;
    // verify
    std::size_t cap = kDefaultModelCap;
    bool negative_control = false;
    int n = 1;
    int m_max = 4;
    // recipe
    std::string recipe_file;
};

int cmd_gen(const Options& o)
{
    Graph g;
    if (o.construction == "G")
        g = build_G({o.m, o.h});
    else if (o.construction == "halfgrid")
        g = half_grid({o.m, o.h});
    else if (o.construction == "negative-control")
        g = negative_control_host({o.m, o.h});
    else if (o.construction == "H")
        g = build_H(o.ray);
    else if (cli::is_named_graph(o.construction))
        g = cli::load_graph(o.construction);
    else
        throw CLI::ValidationError("--construction", "unknown construction '" + o.construction + "'");
    emit_graph(g, o.out, o.dot);
    return 0;
}

int cmd_blocks(const Options& o)
{
    const Graph g = cli::load_graph(o.host);
    const BlockDecomposition d = block_decomposition(g);
    const std::string violation = block_axiom_violation(g, d);
    if (!o.dot.empty())
        write_text(o.dot, block_cut_tree_dot(d));
    if (o.json) {
        Json out = {{"blocks", d.blocks}, {"cut_vertices", d.cut_vertices}};
        Json edges = Json::array();
        for (const auto& [b, v] : d.tree_edges)
            edges.push_back({b, v});
        out["tree_edges"] = std::move(edges);
        out["axioms"] = violation.empty() ? "ok" : violation;
        std::cout << out.dump(1) << "\n";
    } else {
        for (std::size_t i = 0; i < d.blocks.size(); ++i) {
            std::cout << "block " << i << ":";
            for (VertexId v : d.blocks[i])
                std::cout << " " << v;
            std::cout << "\n";
        }
        std::cout << "cut vertices:";
        for (VertexId v : d.cut_vertices)
            std::cout << " " << v;
        std::cout << "\naxioms: " << (violation.empty() ? "ok" : violation) << "\n";
    }
    return violation.empty() ? 0 : 1;
}

int cmd_minor(const Options& o)
{
    const Graph pattern = cli::load_graph(o.pattern);
    const Graph host = cli::load_graph(o.host);
    const SearchBudget budget{o.budget, 0};
    if (o.enumerate > 0) {
        const auto e = enumerate_models(pattern, host, o.enumerate, budget);
        Json models = Json::array();
        for (const auto& m : e.models)
            models.push_back(model_json(m));
        Json out = {{"models", std::move(models)}, {"budget_exhausted", e.budget_exhausted}};
        std::cout << out.dump(1) << "\n";
        if (e.models.empty())
            return e.budget_exhausted ? kInconclusive : 1;
        return 0;
    }
    SearchOptions options;
    options.smallest_first = o.smallest;
    const auto r = find_minor_model(pattern, host, budget, options);
    Json out = {{"outcome", to_string(r.outcome)}, {"expansions", r.expansions}};
    out["model"] = r.model ? model_json(*r.model) : Json(nullptr);
    std::cout << out.dump(1) << "\n";
    switch (r.outcome) {
    case SearchOutcome::Found: return 0;
    case SearchOutcome::Absent: return 1;
    case SearchOutcome::Exhausted: return kInconclusive;
    }
    return 1;
}

int cmd_paths(const Options& o)
{
    const Graph g = cli::load_graph(o.host);
    const auto sources = cli::select_vertices(g, o.sources);
    const auto sinks = cli::select_vertices(g, o.sinks);
    if (sources.empty() || sinks.empty())
        throw CLI::ValidationError("--sources/--sinks", "selection matched no vertex");
    const PathFamily family = max_vertex_disjoint_paths(g, sources, sinks);
    Json out = {{"count", family.paths.size()}, {"paths", family.paths}};
    const bool overlap = std::any_of(sources.begin(), sources.end(), [&](VertexId s) {
        return std::find(sinks.begin(), sinks.end(), s) != sinks.end();
    });
    out["min_cut"] = overlap ? Json(nullptr) : Json(min_vertex_cut(g, sources, sinks).vertices);
    std::cout << out.dump(1) << "\n";
    return 0;
}

int cmd_pack(const Options& o)
{
    const Graph pattern = cli::load_graph(o.pattern);
    const Graph host = cli::load_graph(o.host);
    const SearchBudget budget{o.budget, 0};
    Json out;
    int code = 0;
    auto models_json = [](const Packing& p) {
        Json ms = Json::array();
        for (const auto& m : p.models)
            ms.push_back(model_json(m));
        return ms;
    };
    if (o.exact) {
        const auto r = exact_packing(pattern, host, o.target, budget);
        out = {{"mode", "exact"},
               {"outcome", to_string(r.outcome)},
               {"size", r.best.size()},
               {"models", models_json(r.best)},
               {"expansions", r.expansions}};
        if (r.outcome == PackingOutcome::Exhausted)
            code = kInconclusive;
    } else {
        const auto p = greedy_packing(pattern, host, budget);
        out = {{"mode", "greedy"},
               {"size", p.size()},
               {"target_met", p.size() >= o.target},
               {"models", models_json(p)},
               {"budget_exhausted", p.budget_exhausted}};
        if (p.budget_exhausted)
            code = kInconclusive;
    }
    if (!o.cut_left.empty() || !o.cut_right.empty()) {
        const auto left = cli::select_vertices(host, o.cut_left);
        const auto right = cli::select_vertices(host, o.cut_right);
        const CutSet cut = packing_cut_certificate(host, left, right);
        out["cut_certificate"] = {{"vertices", cut.vertices}, {"bound", cut.vertices.size()}};
    }
    std::cout << out.dump(1) << "\n";
    return code;
}

template <class Report>
int emit_report(const Options& o, const Report& report)
{
    if (!o.report.empty())
        write_text(o.report, to_json(report));
    std::cout << (o.json ? to_json(report) : to_text(report));
    return exit_code(report.verdict);
}

int cmd_verify_lemma1(const Options& o)
{
    const TruncationParams p{o.m, o.h};
    p.validate();
    const SearchBudget budget{o.budget, 0};
    const Graph host = o.negative_control ? negative_control_host(p) : build_G(p);
    return emit_report(o, verify_lemma1_on(host, p, budget, o.cap));
}

int cmd_verify_proposition(const Options& o)
{
    if (o.n < 1)
        throw CLI::ValidationError("--n", "must be at least 1");
    return emit_report(o, verify_proposition_lower(o.n, o.ray));
}

int cmd_verify_saturation(const Options& o)
{
    std::vector<int> range;
    for (int m = 1; m <= o.m_max; ++m)
        range.push_back(m);
    return emit_report(o, verify_saturation(o.h, range, {o.budget, 0}));
}

int cmd_recipe_parse(const Options& o)
{
    std::cout << to_string(parse_recipe(read_input(o.recipe_file))) << "\n";
    return 0;
}

int cmd_recipe_eval(const Options& o)
{
    const Recipe recipe = parse_recipe(read_input(o.recipe_file));
    emit_graph(eval_recipe(recipe, {o.m, o.h}), o.out, o.dot);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"minorbench: graph-minor workbench for half-grid truncations"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Options o;
    try {
        o.budget = cli::default_budget();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    int code = 0;
    std::function<int()> action;

    auto budget_flag = [&](CLI::App* sub) {
        sub->add_option("--budget", o.budget, "search expansions (default from MINORBENCH_BUDGET)")
            ->check(CLI::PositiveNumber);
    };
    auto mh_flags = [&](CLI::App* sub) {
        sub->add_option("--m", o.m, "columns span -m..m")->check(CLI::Range(1, 1000));
        sub->add_option("--h", o.h, "rows span 0..h")->check(CLI::Range(0, 1000));
    };

    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("--construction", o.construction, "G, halfgrid, negative-control, H, or a named graph");
    mh_flags(gen);
    gen->add_option("--ray", o.ray, "ray edges for H")->check(CLI::PositiveNumber);
    gen->add_option("--out", o.out, "output file (.g6 or JSON); stdout JSON when omitted");
    gen->add_option("--dot", o.dot, "also write DOT to this file");
    gen->callback([&] { action = [&] { return cmd_gen(o); }; });

    auto* blocks = app.add_subcommand("blocks", "block decomposition and block-cut tree");
    blocks->add_option("--host", o.host, "graph file or name")->required();
    blocks->add_option("--dot", o.dot, "write the block-cut tree as DOT");
    blocks->add_flag("--json", o.json, "JSON output");
    blocks->callback([&] { action = [&] { return cmd_blocks(o); }; });

    auto* minor = app.add_subcommand("minor", "minor search");
    minor->add_option("--pattern", o.pattern, "pattern file or name")->required();
    minor->add_option("--host", o.host, "host file or name")->required();
    minor->add_option("--enumerate", o.enumerate, "list up to N minimal models");
    minor->add_flag("--smallest", o.smallest, "return a model with the fewest host vertices");
    budget_flag(minor);
    minor->callback([&] { action = [&] { return cmd_minor(o); }; });

    auto* paths = app.add_subcommand("paths", "disjoint paths and minimum vertex cut");
    paths->add_option("--host", o.host, "graph file or name")->required();
    paths->add_option("--sources", o.sources, "ids (0,1,2) or tag predicates (row==0 && col<0)")->required();
    paths->add_option("--sinks", o.sinks, "ids or tag predicates")->required();
    paths->callback([&] { action = [&] { return cmd_paths(o); }; });

    auto* pack = app.add_subcommand("pack", "disjoint model packing");
    pack->add_option("--pattern", o.pattern, "pattern file or name")->required();
    pack->add_option("--host", o.host, "host file or name")->required();
    pack->add_option("--target", o.target, "number of models wanted")->check(CLI::PositiveNumber);
    pack->add_flag("--exact", o.exact, "exact search instead of greedy");
    pack->add_option("--cut-left", o.cut_left, "left side of the cut certificate");
    pack->add_option("--cut-right", o.cut_right, "right side of the cut certificate");
    budget_flag(pack);
    pack->callback([&] { action = [&] { return cmd_pack(o); }; });

    auto* verify = app.add_subcommand("verify", "finite-shadow checks");
    verify->require_subcommand(1);
    auto report_flags = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "print the JSON report instead of the text summary");
        sub->add_option("--report", o.report, "also write the JSON report to this file");
    };
    auto* lemma1 = verify->add_subcommand("lemma1", "block confinement and I-model decomposition");
    mh_flags(lemma1);
    lemma1->add_option("--cap", o.cap, "I-models to enumerate")->check(CLI::PositiveNumber);
    lemma1->add_flag("--negative-control", o.negative_control, "run on the host with an extra K5 at (0,0)");
    budget_flag(lemma1);
    report_flags(lemma1);
    lemma1->callback([&] { action = [&] { return cmd_verify_lemma1(o); }; });

    auto* prop = verify->add_subcommand("proposition", "n disjoint H-models");
    prop->add_option("--n", o.n, "number of models")->check(CLI::Range(1, 64));
    prop->add_option("--ray", o.ray, "ray edges")->check(CLI::PositiveNumber);
    report_flags(prop);
    prop->callback([&] { action = [&] { return cmd_verify_proposition(o); }; });

    auto* sat = verify->add_subcommand("saturation", "exact I-packing numbers against the column-0 cut");
    sat->add_option("--h", o.h, "rows span 0..h")->check(CLI::Range(0, 1000));
    sat->add_option("--m-max", o.m_max, "m runs over 1..m-max")->check(CLI::Range(1, 1000));
    budget_flag(sat);
    report_flags(sat);
    sat->callback([&] { action = [&] { return cmd_verify_saturation(o); }; });

    auto* recipe = app.add_subcommand("recipe", "construction recipes");
    recipe->require_subcommand(1);
    auto* parse = recipe->add_subcommand("parse", "print the canonical form");
    parse->add_option("file", o.recipe_file, "recipe file, - for stdin");
    parse->callback([&] { action = [&] { return cmd_recipe_parse(o); }; });
    auto* eval = recipe->add_subcommand("eval", "evaluate a recipe");
    eval->add_option("file", o.recipe_file, "recipe file, - for stdin");
    mh_flags(eval);
    eval->add_option("--out", o.out, "output file; stdout JSON when omitted");
    eval->add_option("--dot", o.dot, "also write DOT to this file");
    eval->callback([&] { action = [&] { return cmd_recipe_eval(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        code = action();
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SearchInconclusive& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return code;
}
