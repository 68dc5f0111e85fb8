#include "svid_tools/cli.hpp"

#include "svid/centrality.hpp"
#include "svid/edge_list.hpp"
#include "svid/errors.hpp"
#include "svid/generators.hpp"
#include "svid/immunization.hpp"
#include "svid/metrics.hpp"
#include "svid/shapley.hpp"
#include "svid/sir.hpp"
#include "svid_tools/plot.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef SVID_VERSION
#define SVID_VERSION "0.0.0"
#endif

namespace svid::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct InputSource {
    bool generated = false;
    std::string path;
    GenSpec gen;

    [[nodiscard]] std::string name() const {
        if (!generated) return fs::path(path).stem().string();
        std::string out = gen.descriptor() + "_s" + std::to_string(gen.seed);
        std::replace(out.begin(), out.end(), ':', '_');
        std::replace(out.begin(), out.end(), ',', '_');
        return out;
    }

    [[nodiscard]] json describe() const {
        if (!generated) return {{"kind", "file"}, {"path", path}};
        return {{"kind", "generated"}, {"spec", gen.descriptor()}, {"seed", gen.seed}};
    }
};

struct Options {
    std::vector<std::string> inputs;
    std::vector<std::string> gens;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    bool svg = false;

    std::vector<std::string> methods;
    std::vector<double> qs;
    double batch = 0.05;
    int hops = 1;
    bool no_exclusion = false;

    std::vector<double> lambdas;
    double sigma = 0.1;
    std::size_t runs = 50;
    std::size_t initial_infected = 1;
    std::size_t max_steps = 100000;
    std::string immunized_path;

    std::string manifest_path;
};

std::uint64_t require_seed(const Options& o, const std::string& why) {
    if (!o.seed) {
        throw ConfigError("--seed is required for " + why);
    }
    return *o.seed;
}

std::vector<InputSource> collect_inputs(const Options& o) {
    std::vector<InputSource> sources;
    for (const auto& path : o.inputs) {
        InputSource s;
        s.path = path;
        sources.push_back(s);
    }
    for (const auto& text : o.gens) {
        InputSource s;
        s.generated = true;
        const auto at = text.find('@');
        std::uint64_t seed = 0;
        if (at != std::string::npos) {
            try {
                std::size_t used = 0;
                seed = std::stoull(text.substr(at + 1), &used);
                if (used != text.size() - at - 1) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ConfigError("malformed seed suffix in '" + text + "'");
            }
        } else {
            seed = require_seed(o, "generated graphs (or use SPEC@SEED)");
        }
        s.gen = parse_gen_spec(text.substr(0, at), seed);
        sources.push_back(s);
    }
    if (sources.empty()) {
        throw ConfigError("an input is required: --input PATH or --gen er:n,m / ba:n,m0");
    }
    return sources;
}

InputSource single_input(const Options& o) {
    auto sources = collect_inputs(o);
    if (sources.size() != 1) {
        throw ConfigError("this command takes exactly one --input or --gen");
    }
    return sources.front();
}

Graph load(const InputSource& src, std::ostream& err) {
    if (src.generated) return generate(src.gen);
    auto report = read_edge_list(src.path);
    if (report.duplicate_edges != 0 || report.self_loops != 0) {
        err << src.path << ": dropped " << report.duplicate_edges << " duplicate edge(s) and "
            << report.self_loops << " self-loop(s)\n";
    }
    return std::move(report.graph);
}

CentralityMethod method_from(const std::string& key) {
    auto m = parse_method(key);
    if (!m) {
        throw ConfigError("unknown method '" + key + "' (expected da, bwa, eva, cna or svida)");
    }
    return *m;
}

StrategyConfig strategy_from(const Options& o, CentralityMethod method, double q) {
    StrategyConfig cfg;
    cfg.method = method;
    cfg.batch_fraction = o.batch;
    cfg.neighbor_exclusion = !o.no_exclusion;
    cfg.target_fraction = q;
    cfg.svid.hops = o.hops;
    cfg.validate();
    return cfg;
}

json strategy_json(const StrategyConfig& cfg) {
    return {{"method", std::string(method_key(cfg.method))},
            {"q", cfg.target_fraction},
            {"batch", cfg.batch_fraction},
            {"neighbor_exclusion", cfg.neighbor_exclusion},
            {"hops", cfg.svid.hops}};
}

json sir_json(const SirParams& p) {
    return {{"sigma", p.sigma},
            {"runs", p.runs},
            {"initial_infected", p.initial_infected},
            {"max_steps", p.max_steps},
            {"master_seed", p.master_seed}};
}

SirParams sir_from(const Options& o, double lambda) {
    SirParams p;
    p.lambda = lambda;
    p.sigma = o.sigma;
    p.runs = o.runs;
    p.initial_infected = o.initial_infected;
    p.max_steps = o.max_steps;
    p.master_seed = require_seed(o, "epidemic simulation");
    p.validate();
    return p;
}

fs::path prepare_out(const Options& o) {
    if (o.out_dir.empty()) {
        throw ConfigError("--out DIR is required for this command");
    }
    fs::path dir(o.out_dir);
    fs::create_directories(dir);
    return dir;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

/// Arguments with --out removed; what a replay needs to reproduce a run.
std::vector<std::string> canonical_args(const std::vector<std::string>& args) {
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--out") {
            ++i;
            continue;
        }
        if (args[i].rfind("--out=", 0) == 0) continue;
        kept.push_back(args[i]);
    }
    return kept;
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const std::vector<std::string>& args, json details) {
    json manifest = {
        {"tool", "svid"},
        {"version", SVID_VERSION},
        {"command", command},
        {"args", canonical_args(args)},
        {"details", std::move(details)},
    };
    auto out = open_out(dir / "manifest.json");
    out << manifest.dump(2) << '\n';
}

// --- commands --------------------------------------------------------------

int cmd_stats(const Options& o, const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
    const auto src = single_input(o);
    const Graph g = load(src, err);
    const GraphStats s = stats(g);
    const std::string threshold = s.epidemic_threshold ? format_real(*s.epidemic_threshold) : "";
    out << "nodes: " << s.nodes << '\n'
        << "edges: " << s.edges << '\n'
        << "k_max: " << s.k_max << '\n'
        << "clustering: " << format_real(s.clustering) << '\n'
        << "mean_degree: " << format_real(s.mean_degree) << '\n'
        << "mean_sq_degree: " << format_real(s.mean_sq_degree) << '\n'
        << "epidemic_threshold: " << (threshold.empty() ? "undefined" : threshold) << '\n';
    if (!o.out_dir.empty()) {
        const auto dir = prepare_out(o);
        auto csv = open_out(dir / "stats.csv");
        csv << "network,nodes,edges,k_max,clustering,mean_degree,mean_sq_degree,epidemic_threshold\n"
            << src.name() << ',' << s.nodes << ',' << s.edges << ',' << s.k_max << ','
            << format_real(s.clustering) << ',' << format_real(s.mean_degree) << ','
            << format_real(s.mean_sq_degree) << ',' << threshold << '\n';
        write_manifest(dir, "stats", args, {{"input", src.describe()}});
    }
    return kOk;
}

int cmd_rank(const Options& o, const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    const auto src = single_input(o);
    const Graph g = load(src, err);
    if (o.methods.size() != 1) {
        throw ConfigError("rank takes exactly one --method");
    }
    const std::string& key = o.methods.front();
    SvidOptions svid_opts;
    svid_opts.hops = o.hops;
    svid_opts.validate();
    ScoreVector scores;
    if (key == "spin") {
        scores = spin_shapley(g);
    } else {
        const auto method = method_from(key);
        if (method == CentralityMethod::Eigenvector) {
            auto eig = eigenvector_centrality(g);
            if (!eig.converged) {
                err << "warning: power iteration stopped after " << eig.iterations
                    << " iterations without converging\n";
            }
            scores = std::move(eig.scores);
        } else {
            scores = score_for_method(g, method, svid_opts).primary;
        }
        scores.method = std::string(method_key(method));
    }
    if (o.out_dir.empty()) {
        write_scores_csv(g, scores, out);
        return kOk;
    }
    const auto dir = prepare_out(o);
    auto csv = open_out(dir / "scores.csv");
    write_scores_csv(g, scores, csv);
    write_manifest(dir, "rank", args,
                   {{"input", src.describe()}, {"method", key}, {"hops", o.hops}});
    return kOk;
}

std::vector<Series> fq_series(const FqTable& table) {
    std::vector<Series> series;
    for (std::size_t j = 0; j < table.methods.size(); ++j) {
        Series s{std::string(method_label(table.methods[j])), {}};
        for (std::size_t row = 0; row < table.q.size(); ++row) {
            if (table.f[j][row]) s.points.emplace_back(table.q[row], *table.f[j][row]);
        }
        series.push_back(std::move(s));
    }
    return series;
}

int cmd_immunize(const Options& o, const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
    const auto src = single_input(o);
    if (o.methods.size() != 1) {
        throw ConfigError("immunize takes exactly one --method");
    }
    if (o.qs.size() > 1) {
        throw ConfigError("immunize takes a single --q");
    }
    const double q = o.qs.empty() ? 1.0 : o.qs.front();
    const auto cfg = strategy_from(o, method_from(o.methods.front()), q);
    const auto dir = prepare_out(o);
    const Graph g = load(src, err);

    const ImmunizationPlan plan = run_strategy(g, cfg);
    {
        auto csv = open_out(dir / "plan.csv");
        write_plan_csv(g, plan, csv);
    }
    std::optional<double> r_value;
    if (plan.complete()) r_value = robustness(plan).robustness;
    {
        auto csv = open_out(dir / "plan_summary.csv");
        csv << "method,q,batch,fallback_count,robustness\n"
            << method_key(plan.method) << ',' << format_real(plan.target_fraction) << ','
            << format_real(plan.batch_fraction) << ',' << plan.fallback_count << ','
            << (r_value ? format_real(*r_value) : "") << '\n';
    }
    const std::vector<ImmunizationPlan> plans{plan};
    const FqTable table = f_q_curve(plans);
    {
        auto csv = open_out(dir / "fq.csv");
        write_fq_csv(table, csv);
    }
    if (o.svg) {
        auto svg = open_out(dir / "fq.svg");
        write_svg_chart(fq_series(table), "q", "f", svg);
    }
    write_manifest(dir, "immunize", args,
                   {{"input", src.describe()}, {"strategy", strategy_json(cfg)}});

    out << "removed " << plan.order.size() << " of " << plan.node_count << " nodes, final f = "
        << format_real(plan.s_curve.empty() ? plan.initial_fraction : plan.s_curve.back())
        << ", fallbacks = " << plan.fallback_count << '\n';
    if (r_value) out << "robustness R = " << format_real(*r_value) << '\n';
    return kOk;
}

NodeSet immunized_from_plan_file(const Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open plan file", 0, path);
    }
    std::map<std::int64_t, NodeId> by_label;
    for (NodeId v = 0; v < g.node_count(); ++v) by_label.emplace(g.label(v), v);

    NodeSet immunized(g.node_count());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) {
            if (line.rfind("step,node", 0) != 0) {
                throw ParseError("expected plan header 'step,node,lcc_fraction'", line_no, path);
            }
            continue;
        }
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string step;
        std::string node;
        if (!std::getline(row, step, ',') || !std::getline(row, node, ',')) {
            throw ParseError("malformed plan row", line_no, path);
        }
        std::int64_t label = 0;
        try {
            std::size_t used = 0;
            label = std::stoll(node, &used);
            if (used != node.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("malformed node label '" + node + "'", line_no, path);
        }
        auto it = by_label.find(label);
        if (it == by_label.end()) {
            throw ParseError("node " + node + " is not in the graph", line_no, path);
        }
        immunized.insert(it->second);
    }
    return immunized;
}

int cmd_sir(const Options& o, const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    const auto src = single_input(o);
    if (o.lambdas.size() > 1) {
        throw ConfigError("sir takes a single --lambda");
    }
    if (o.methods.size() > 1) {
        throw ConfigError("sir takes at most one --method");
    }
    if (!o.methods.empty() && !o.immunized_path.empty()) {
        throw ConfigError("use either --method/--q or --immunized, not both");
    }
    const SirParams p = sir_from(o, o.lambdas.empty() ? 0.5 : o.lambdas.front());
    const auto dir = prepare_out(o);
    const Graph g = load(src, err);

    NodeSet immunized(g.node_count());
    std::string arm = "none";
    json details = {{"input", src.describe()}, {"lambda", p.lambda}, {"sir", sir_json(p)}};
    if (!o.methods.empty()) {
        if (o.qs.size() != 1) {
            throw ConfigError("--method in sir needs exactly one --q");
        }
        const auto cfg = strategy_from(o, method_from(o.methods.front()), o.qs.front());
        const auto plan = run_strategy(g, cfg);
        immunized = NodeSet(g.node_count(), plan.order);
        arm = std::string(method_key(cfg.method));
        details["strategy"] = strategy_json(cfg);
    } else if (!o.immunized_path.empty()) {
        immunized = immunized_from_plan_file(g, o.immunized_path);
        arm = "file";
        details["immunized"] = o.immunized_path;
    }
    const double q = static_cast<double>(immunized.size()) / static_cast<double>(g.node_count());

    const SirEnsemble e = sir_ensemble(g, immunized, p);
    {
        auto csv = open_out(dir / "trace.csv");
        write_trace_csv(e, csv);
    }
    {
        auto csv = open_out(dir / "summary.csv");
        write_sir_summary_header(csv);
        write_sir_summary_row(p, q, arm, e, csv);
    }
    if (o.svg) {
        std::vector<Series> series{{"s", {}}, {"i", {}}, {"r", {}}};
        for (std::size_t t = 0; t < e.s_mean.size(); ++t) {
            const auto x = static_cast<double>(t);
            series[0].points.emplace_back(x, 100.0 * e.s_mean[t]);
            series[1].points.emplace_back(x, 100.0 * e.i_mean[t]);
            series[2].points.emplace_back(x, 100.0 * e.r_mean[t]);
        }
        auto svg = open_out(dir / "trace.svg");
        write_svg_chart(series, "t", "population (%)", svg);
    }
    write_manifest(dir, "sir", args, std::move(details));

    out << "active nodes " << e.active << ", immunized " << immunized.size()
        << ", mean |r| = " << format_real(e.r_abs_mean) << " (std " << format_real(e.r_abs_std)
        << "), mean peak i = " << format_real(e.peak_infected_mean) << '\n';
    return kOk;
}

int cmd_compare(const Options& o, const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    const auto sources = collect_inputs(o);
    std::vector<CentralityMethod> methods;
    if (o.methods.empty()) {
        methods.assign(std::begin(kAllMethods), std::end(kAllMethods));
    } else {
        for (const auto& key : o.methods) methods.push_back(method_from(key));
    }
    std::vector<StrategyConfig> configs;
    for (auto m : methods) configs.push_back(strategy_from(o, m, 1.0));

    for (double q : o.qs) {
        if (!(q >= 0.0 && q < 1.0)) {
            throw ConfigError("--q grid values must lie in [0, 1), got " + format_real(q));
        }
    }
    std::vector<SirParams> sir_grid;
    if (!o.lambdas.empty()) {
        if (o.qs.empty()) {
            throw ConfigError("an epidemic grid needs at least one --q");
        }
        for (double lambda : o.lambdas) sir_grid.push_back(sir_from(o, lambda));
    }
    const auto dir = prepare_out(o);

    std::vector<std::string> names;
    for (const auto& src : sources) names.push_back(src.name());
    RobustnessTable table(methods, names);

    std::ostringstream r_rows;
    r_rows << "network,method,q,lambda,sigma,r_abs_mean,r_abs_std\n";

    for (std::size_t col = 0; col < sources.size(); ++col) {
        const Graph g = load(sources[col], err);
        // Independent (method) cells run concurrently; results are assembled in order.
        std::vector<std::future<ImmunizationPlan>> pending;
        for (const auto& cfg : configs) {
            pending.push_back(std::async(std::launch::async,
                                         [&g, cfg] { return full_ordering(g, cfg); }));
        }
        std::vector<ImmunizationPlan> plans;
        for (auto& f : pending) plans.push_back(f.get());

        for (std::size_t row = 0; row < plans.size(); ++row) table.set(row, col, plans[row]);
        const FqTable fq = f_q_curve(plans);
        {
            auto csv = open_out(dir / ("fq_" + names[col] + ".csv"));
            write_fq_csv(fq, csv);
        }
        if (o.svg) {
            auto svg = open_out(dir / ("fq_" + names[col] + ".svg"));
            write_svg_chart(fq_series(fq), "q", "f", svg);
        }

        for (std::size_t row = 0; row < plans.size(); ++row) {
            for (double q : o.qs) {
                const std::size_t count =
                    q == 0.0 ? 0 : fraction_to_count(q, plans[row].node_count);
                NodeSet immunized(g.node_count(),
                                  std::span<const NodeId>(plans[row].order).first(count));
                for (const auto& p : sir_grid) {
                    const auto e = sir_ensemble(g, immunized, p);
                    r_rows << names[col] << ',' << method_key(methods[row]) << ','
                           << format_real(q) << ',' << format_real(p.lambda) << ','
                           << format_real(p.sigma) << ',' << format_real(e.r_abs_mean) << ','
                           << format_real(e.r_abs_std) << '\n';
                }
            }
        }
    }

    {
        auto csv = open_out(dir / "robustness.csv");
        write_robustness_csv(table, csv);
    }
    {
        auto csv = open_out(dir / "fallbacks.csv");
        write_fallback_csv(table, csv);
    }
    if (!sir_grid.empty()) {
        auto csv = open_out(dir / "r_vs_q.csv");
        csv << r_rows.str();
    }
    json inputs = json::array();
    for (const auto& src : sources) inputs.push_back(src.describe());
    json details = {{"inputs", inputs}, {"strategy", strategy_json(configs.front())}};
    details["strategy"].erase("method");
    if (!sir_grid.empty()) {
        details["sir"] = sir_json(sir_grid.front());
        details["lambdas"] = o.lambdas;
        details["qs"] = o.qs;
    }
    write_manifest(dir, "compare", args, std::move(details));

    write_robustness_csv(table, out);
    return kOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
    const auto src = single_input(o);
    if (!src.generated) {
        throw ConfigError("generate needs --gen");
    }
    const Graph g = generate(src.gen);
    if (o.out_dir.empty()) {
        write_edge_list(g, out);
    } else {
        write_edge_list(g, fs::path(o.out_dir));
    }
    return kOk;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_replay(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.out_dir.empty()) {
        throw ConfigError("replay needs --out DIR");
    }
    std::ifstream in(o.manifest_path);
    if (!in) {
        throw ParseError("cannot open manifest", 0, o.manifest_path);
    }
    json manifest;
    try {
        manifest = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(e.what(), 0, o.manifest_path);
    }
    if (!manifest.contains("args") || !manifest["args"].is_array()) {
        throw ParseError("manifest has no argument list", 0, o.manifest_path);
    }
    auto replay_args = manifest["args"].get<std::vector<std::string>>();
    if (!replay_args.empty() && replay_args.front() == "replay") {
        throw ConfigError("a replay manifest cannot replay itself");
    }
    replay_args.push_back("--out");
    replay_args.push_back(o.out_dir);
    return dispatch(replay_args, out, err);
}

// --- argument wiring ---------------------------------------------------------

void add_input_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--input", o.inputs, "Edge-list file (two integer labels per line)");
    cmd->add_option("--gen", o.gens, "Generate er:n,m or ba:n,m0 (optionally SPEC@SEED)");
    cmd->add_option("--seed", o.seed, "Master seed for generation and simulation");
}

void add_strategy_flags(CLI::App* cmd, Options& o, bool many_methods) {
    auto* method = cmd->add_option("--method", o.methods, "da, bwa, eva, cna or svida");
    if (many_methods) method->delimiter(',');
    cmd->add_option("--q", o.qs, "Fraction of nodes to immunize")->delimiter(',');
    cmd->add_option("--batch", o.batch, "Recompute scores after this fraction of N selections");
    cmd->add_option("--hops", o.hops, "Common-neighbour radius for SVID (1 or 2)");
    cmd->add_flag("--no-exclusion", o.no_exclusion, "Allow picking neighbours of earlier picks");
}

void add_sir_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--lambda", o.lambdas, "Infection probability")->delimiter(',');
    cmd->add_option("--sigma", o.sigma, "Recovery probability");
    cmd->add_option("--runs", o.runs, "Ensemble size");
    cmd->add_option("--i0", o.initial_infected, "Initially infected nodes");
    cmd->add_option("--max-steps", o.max_steps, "Step cap per run");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shapley-value targeted immunization toolkit", "svid"};
    app.set_version_flag("--version", std::string("svid ") + SVID_VERSION);
    app.require_subcommand(1);
    Options o;

    auto* stats_cmd = app.add_subcommand("stats", "Graph statistics");
    add_input_flags(stats_cmd, o);
    stats_cmd->add_option("--out", o.out_dir, "Output directory");

    auto* rank_cmd = app.add_subcommand("rank", "Static centrality scores as CSV");
    add_input_flags(rank_cmd, o);
    rank_cmd->add_option("--method", o.methods, "da, bwa, eva, cna, svida or spin")->required();
    rank_cmd->add_option("--hops", o.hops, "Common-neighbour radius for SVID (1 or 2)");
    rank_cmd->add_option("--out", o.out_dir, "Output directory");

    auto* immunize_cmd = app.add_subcommand("immunize", "Adaptive targeted immunization plan");
    add_input_flags(immunize_cmd, o);
    add_strategy_flags(immunize_cmd, o, false);
    immunize_cmd->get_option("--method")->required();
    immunize_cmd->add_option("--out", o.out_dir, "Output directory");
    immunize_cmd->add_flag("--svg", o.svg, "Also write an SVG f-q chart");

    auto* sir_cmd = app.add_subcommand("sir", "SIR ensemble on the (optionally immunized) graph");
    add_input_flags(sir_cmd, o);
    add_strategy_flags(sir_cmd, o, false);
    add_sir_flags(sir_cmd, o);
    sir_cmd->add_option("--immunized", o.immunized_path, "Plan CSV whose nodes are immunized");
    sir_cmd->add_option("--out", o.out_dir, "Output directory");
    sir_cmd->add_flag("--svg", o.svg, "Also write an SVG trace chart");

    auto* compare_cmd = app.add_subcommand("compare", "Robustness table and |r|-vs-q grid");
    add_input_flags(compare_cmd, o);
    add_strategy_flags(compare_cmd, o, true);
    add_sir_flags(compare_cmd, o);
    compare_cmd->add_option("--out", o.out_dir, "Output directory");
    compare_cmd->add_flag("--svg", o.svg, "Also write SVG f-q charts");

    auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph as an edge list");
    add_input_flags(generate_cmd, o);
    generate_cmd->add_option("--out", o.out_dir, "Output file (stdout if omitted)");

    auto* replay_cmd = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    replay_cmd->add_option("--manifest", o.manifest_path, "manifest.json to replay")->required();
    replay_cmd->add_option("--out", o.out_dir, "Output directory")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << "svid " << SVID_VERSION << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigFailure;
    }

    if (stats_cmd->parsed()) return cmd_stats(o, args, out, err);
    if (rank_cmd->parsed()) return cmd_rank(o, args, out, err);
    if (immunize_cmd->parsed()) return cmd_immunize(o, args, out, err);
    if (sir_cmd->parsed()) return cmd_sir(o, args, out, err);
    if (compare_cmd->parsed()) return cmd_compare(o, args, out, err);
    if (generate_cmd->parsed()) return cmd_generate(o, out);
    if (replay_cmd->parsed()) return cmd_replay(o, out, err);
    return kConfigFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseFailure;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return kConfigFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeFailure;
    }
}

} // namespace svid::cli
