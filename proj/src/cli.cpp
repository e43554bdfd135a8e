#include "localsep/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "localsep/decomposition.hpp"
#include "localsep/errors.hpp"
#include "localsep/generators.hpp"
#include "localsep/io.hpp"
#include "localsep/local_cut.hpp"
#include "localsep/parallel.hpp"
#include "localsep/pipeline.hpp"
#include "localsep/two_separators.hpp"

namespace localsep::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string edges;
    std::string nodes;
    std::optional<Distance> d;
    double scale = 1.0;
    unsigned jobs = 0;
    std::string out;
    std::string meta;
    std::string raw;
    std::string mode = "2sep";
    std::vector<Distance> d_values;
    std::size_t bag_id = 0;
    bool quiet = false;

    std::string kind = "rgg";
    std::size_t vertices = 10000;
    std::size_t target_edges = 0;
    double spacing = 2.0;
    std::uint64_t seed = 1;
};

class Phases {
public:
    explicit Phases(std::ostream& log, bool quiet) : log_(log), quiet_(quiet) {}

    template <class Fn>
    auto time(const std::string& name, Fn&& fn) {
        auto start = std::chrono::steady_clock::now();
        auto finish = [&] {
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            seconds_.emplace_back(name, secs);
            if (!quiet_) log_ << "[localsep] " << name << ": " << secs << " s\n";
        };
        if constexpr (std::is_void_v<decltype(fn())>) {
            fn();
            finish();
        } else {
            auto result = fn();
            finish();
            return result;
        }
    }

    const std::vector<std::pair<std::string, double>>& seconds() const { return seconds_; }

private:
    std::ostream& log_;
    bool quiet_;
    std::vector<std::pair<std::string, double>> seconds_;
};

/// Writes to `path`, or to `fallback` when path is empty.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& write) {
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path);
    write(f);
    if (!f) throw InputError("failed writing " + path);
}

void write_tables(const fs::path& dir, const Graph& g) {
    if (dir.empty()) throw InputError("--out directory is required");
    fs::create_directories(dir);
    emit((dir / "nodes.csv").string(), std::cout, [&](std::ostream& o) { io::write_nodes(o, g); });
    emit((dir / "edges.csv").string(), std::cout, [&](std::ostream& o) { io::write_edges(o, g); });
}

struct Context {
    Options& opt;
    std::ostream& out;
    std::ostream& err;
    Phases phases;
    io::RunMeta meta;
    Graph graph;

    Context(Options& o, std::ostream& out_, std::ostream& err_, const std::string& command)
        : opt(o), out(out_), err(err_), phases(err_, o.quiet) {
        meta.command = command;
    }

    void load() {
        std::optional<fs::path> nodes;
        if (!opt.nodes.empty()) nodes = opt.nodes;
        auto loaded = phases.time("load", [&] { return io::load(nodes, opt.edges, opt.scale); });
        graph = std::move(loaded.graph);
        meta.input_digest = loaded.digest;
        meta.scale = opt.scale;
        meta.jobs = resolve_jobs(opt.jobs);
        meta.d = opt.d;
        meta.counts["vertices"] = graph.vertex_count();
        meta.counts["edges"] = graph.edge_count();
        meta.counts["clamped_weights"] = loaded.report.clamped_weights;
    }

    Distance d() const {
        if (!opt.d) throw InputError("--d is required");
        return *opt.d;
    }

    void finish_meta(const std::string& default_path = {}) {
        std::string path = opt.meta.empty() ? default_path : opt.meta;
        if (path.empty()) return;
        meta.phase_seconds = phases.seconds();
        emit(path, out, [&](std::ostream& o) { io::write_meta(o, meta); });
    }

    void compute_r() {
        meta.r_statistic = phases.time("R", [&] { return max_ball_size(graph, d(), opt.jobs); });
    }
};

DecompositionGraph decompose(Context& ctx) {
    const Distance d = ctx.d();
    if (ctx.opt.mode == "1sep") {
        auto cuts = ctx.phases.time("separators", [&] { return find_local_cutvertices(ctx.graph, d, ctx.opt.jobs); });
        ctx.meta.counts["cutvertices"] = cuts.size();
        return ctx.phases.time("decomposition", [&] { return build_from_cutvertices(ctx.graph, d, cuts); });
    }
    auto records = ctx.phases.time("separators", [&] { return find_local_2separators(ctx.graph, d, ctx.opt.jobs); });
    records = ctx.phases.time("nestedness", [&] { return filter_totally_nested(std::move(records), ctx.opt.jobs); });
    auto nested = nested_only(records);
    ctx.meta.counts["2separators"] = records.size();
    ctx.meta.counts["nested"] = nested.size();
    return ctx.phases.time("decomposition", [&] { return build_from_2separators(ctx.graph, d, nested); });
}

void cmd_preprocess(Context& ctx) {
    ctx.load();
    Graph g = ctx.phases.time("prune", [&] { return prune_degree_one(ctx.graph); });
    g = ctx.phases.time("suppress", [&] { return suppress_degree_two(g); });
    ctx.meta.counts["out_vertices"] = g.vertex_count();
    ctx.meta.counts["out_edges"] = g.edge_count();
    write_tables(ctx.opt.out, g);
    ctx.finish_meta();
}

void cmd_onesep(Context& ctx) {
    ctx.load();
    const Distance d = ctx.d();
    auto cuts = ctx.phases.time("separators", [&] { return find_local_cutvertices(ctx.graph, d, ctx.opt.jobs); });
    ctx.meta.counts["cutvertices"] = cuts.size();
    emit(ctx.opt.out, ctx.out, [&](std::ostream& o) { io::write_cutvertices(o, ctx.graph, cuts); });
    if (!ctx.opt.meta.empty()) ctx.compute_r();
    ctx.finish_meta();
}

void cmd_twosep(Context& ctx) {
    ctx.load();
    const Distance d = ctx.d();
    auto records = ctx.phases.time("separators", [&] { return find_local_2separators(ctx.graph, d, ctx.opt.jobs); });
    records = ctx.phases.time("nestedness", [&] { return filter_totally_nested(std::move(records), ctx.opt.jobs); });
    ctx.meta.counts["2separators"] = records.size();
    ctx.meta.counts["nested"] = nested_only(records).size();
    emit(ctx.opt.out, ctx.out, [&](std::ostream& o) { io::write_2separators(o, ctx.graph, records); });
    if (!ctx.opt.meta.empty()) ctx.compute_r();
    ctx.finish_meta();
}

void cmd_decompose(Context& ctx) {
    ctx.load();
    auto raw = decompose(ctx);
    auto simple = ctx.phases.time("suppression", [&] { return suppress_degree_two_nodes(raw); });
    ctx.meta.counts["raw_nodes"] = raw.nodes.size();
    ctx.meta.counts["raw_edges"] = raw.edges.size();
    ctx.meta.counts["nodes"] = simple.nodes.size();
    ctx.meta.counts["edges_out"] = simple.edges.size();
    ctx.meta.counts["bags"] = simple.bag_count();
    if (!ctx.opt.raw.empty())
        emit(ctx.opt.raw, ctx.out, [&](std::ostream& o) { io::write_dot(o, ctx.graph, raw); });
    emit(ctx.opt.out, ctx.out, [&](std::ostream& o) { io::write_dot(o, ctx.graph, simple); });
    ctx.compute_r();
    ctx.finish_meta(ctx.opt.out.empty() ? std::string() : ctx.opt.out + ".meta.json");
}

void cmd_sweep(Context& ctx) {
    ctx.load();
    if (ctx.opt.d_values.empty()) throw InputError("--d-values is required");
    auto rows = ctx.phases.time("sweep", [&] { return sweep_d(ctx.graph, ctx.opt.d_values, ctx.opt.jobs); });
    emit(ctx.opt.out, ctx.out, [&](std::ostream& o) { io::write_sweep(o, rows); });
    ctx.finish_meta();
}

void cmd_extract_bag(Context& ctx) {
    ctx.load();
    auto dg = decompose(ctx);
    const std::size_t bags = dg.bag_count();
    if (ctx.opt.bag_id >= bags)
        throw InputError("--bag-id " + std::to_string(ctx.opt.bag_id) + " out of range (" +
                         std::to_string(bags) + " bags)");
    Graph sub = ctx.graph.induced_subgraph(dg.nodes[ctx.opt.bag_id].vertices);
    ctx.meta.counts["bag_vertices"] = sub.vertex_count();
    ctx.meta.counts["bag_edges"] = sub.edge_count();
    write_tables(ctx.opt.out, sub);
    ctx.finish_meta();
}

void cmd_generate(Context& ctx) {
    Graph g;
    const auto& o = ctx.opt;
    if (o.kind == "rgg") {
        std::size_t target = o.target_edges ? o.target_edges : o.vertices + o.vertices / 50;
        g = gen::random_geometric_graph(o.vertices, target, o.spacing, o.seed);
    } else if (o.kind == "cycle") {
        g = gen::cycle(o.vertices);
    } else if (o.kind == "k4-ring") {
        g = gen::k4_ring(o.vertices);
    } else {
        throw InputError("unknown --kind '" + o.kind + "'");
    }
    write_tables(o.out, g);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Local cutvertices, local 2-separators and graph decompositions", "localsep"};
    app.require_subcommand(1);

    auto add_input = [&](CLI::App* sub, bool with_d) {
        sub->add_option("--edges", opt.edges, "edges CSV (source,target[,weight])")->required();
        sub->add_option("--nodes", opt.nodes, "nodes CSV (id,x,y)");
        if (with_d) sub->add_option("--d", opt.d, "ball diameter")->required()->check(CLI::PositiveNumber);
        sub->add_option("--scale", opt.scale, "multiplier applied to lengths before rounding")
            ->check(CLI::PositiveNumber);
        sub->add_option("--jobs", opt.jobs, "worker threads (0 = all cores)");
        sub->add_option("--meta", opt.meta, "run metadata JSON path");
        sub->add_flag("--quiet", opt.quiet, "do not log phase timings");
    };

    std::vector<std::pair<CLI::App*, std::function<void(Context&)>>> commands;
    auto* pre = app.add_subcommand("preprocess", "prune degree-1 vertices and suppress degree-2 chains");
    add_input(pre, false);
    pre->add_option("--out", opt.out, "output directory for nodes.csv and edges.csv")->required();
    commands.emplace_back(pre, cmd_preprocess);

    auto* one = app.add_subcommand("onesep", "list d-local cutvertices");
    add_input(one, true);
    one->add_option("--out", opt.out, "output CSV (default stdout)");
    commands.emplace_back(one, cmd_onesep);

    auto* two = app.add_subcommand("twosep", "list d-local 2-separators with nestedness");
    add_input(two, true);
    two->add_option("--out", opt.out, "output CSV (default stdout)");
    commands.emplace_back(two, cmd_twosep);

    auto* dec = app.add_subcommand("decompose", "build and simplify the decomposition graph");
    add_input(dec, true);
    dec->add_option("--mode", opt.mode, "separator kind")->check(CLI::IsMember({"1sep", "2sep"}));
    dec->add_option("--out", opt.out, "DOT after suppression (default stdout)");
    dec->add_option("--raw", opt.raw, "DOT before suppression");
    commands.emplace_back(dec, cmd_decompose);

    auto* sw = app.add_subcommand("sweep", "cutvertex and cluster statistics over several d");
    add_input(sw, false);
    sw->add_option("--d-values", opt.d_values, "comma-separated diameters")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    sw->add_option("--out", opt.out, "output CSV (default stdout)");
    commands.emplace_back(sw, cmd_sweep);

    auto* bag = app.add_subcommand("extract-bag", "write one bag's induced subgraph as CSV tables");
    add_input(bag, true);
    bag->add_option("--mode", opt.mode, "separator kind")->check(CLI::IsMember({"1sep", "2sep"}));
    bag->add_option("--bag-id", opt.bag_id, "bag index as numbered in the DOT output")->required();
    bag->add_option("--out", opt.out, "output directory")->required();
    commands.emplace_back(bag, cmd_extract_bag);

    auto* gen = app.add_subcommand("generate", "write synthetic test data");
    gen->add_option("--kind", opt.kind, "rgg, cycle or k4-ring")->check(CLI::IsMember({"rgg", "cycle", "k4-ring"}));
    gen->add_option("--vertices", opt.vertices, "vertex count (K4 count for k4-ring)");
    gen->add_option("--target-edges", opt.target_edges, "approximate edge count for rgg");
    gen->add_option("--spacing", opt.spacing, "mean point spacing for rgg")->check(CLI::PositiveNumber);
    gen->add_option("--seed", opt.seed, "random seed");
    gen->add_option("--out", opt.out, "output directory")->required();
    commands.emplace_back(gen, cmd_generate);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        const CLI::App* failing = &app;
        for (auto* sub : app.get_subcommands()) failing = sub;
        err << failing->help();
        return 1;
    }

    try {
        for (auto& [sub, fn] : commands) {
            if (!sub->parsed()) continue;
            Context ctx(opt, out, err, sub->get_name());
            fn(ctx);
        }
        return 0;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const fs::filesystem_error& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace localsep::cli
