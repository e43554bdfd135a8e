// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <stdexcept>
#include <thread>

#include "localsep/cli.hpp"
#include "localsep/decomposition.hpp"
#include "localsep/generators.hpp"
#include "localsep/io.hpp"
#include "localsep/local_cut.hpp"
#include "localsep/oracle.hpp"
#include "localsep/two_separators.hpp"

using namespace localsep;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using Pair = std::pair<VertexId, VertexId>;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::set<std::vector<VertexId>> partition(const ConnectivityGraph& c) {
    std::vector<std::vector<VertexId>> groups(c.component_count);
    for (std::size_t i = 0; i < c.nodes.size(); ++i) groups[c.component[i]].push_back(c.nodes[i]);
    return {groups.begin(), groups.end()};
}

std::vector<Pair> pairs_of(const std::vector<SeparatorRecord>& records) {
    std::vector<Pair> out;
    for (const auto& r : records) out.emplace_back(r.v0, r.v1);
    return out;
}

bool decomposition_is_cycle(const DecompositionGraph& dg) {
    auto adj = dg.adjacency();
    if (dg.nodes.empty() || dg.edges.size() != dg.nodes.size()) return false;
    for (const auto& a : adj)
        if (a.size() != 2) return false;
    std::vector<bool> seen(dg.nodes.size(), false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        ++reached;
        for (auto y : adj[x])
            if (!seen[y]) seen[y] = true, stack.push_back(y);
    }
    return reached == dg.nodes.size();
}

bool decomposition_is_tree(const DecompositionGraph& dg) {
    std::vector<std::uint32_t> parent(dg.nodes.size());
    std::iota(parent.begin(), parent.end(), 0u);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& e : dg.edges) {
        auto a = find(e.a), b = find(e.b);
        if (a == b) return false;
        parent[a] = b;
    }
    return dg.edges.size() + 1 == dg.nodes.size();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    if (code != 0) std::cerr << err.str();
    return code;
}

/// Criterion 10 is checked on every graph the other criteria touch.
struct CountBound {
    std::size_t graphs = 0;
    std::size_t violations = 0;
    void check(const Graph& g, Distance d, std::size_t records) {
        ++graphs;
        if (records > max_ball_size(g, d) * g.vertex_count()) ++violations;
    }
} count_bound;

Outcome criterion1() {
    auto start = Clock::now();
    for (std::size_t n = 3; n <= 12; ++n) {
        Graph c = gen::cycle(n);
        std::vector<VertexId> all(n);
        std::iota(all.begin(), all.end(), 0u);
        for (Distance d = 2; d <= 2 * static_cast<Distance>(n); ++d) {
            auto got = find_local_cutvertices(c, d);
            bool ok = d < static_cast<Distance>(n) ? got == all : got.empty();
            if (!ok) return {false, "C_" + std::to_string(n) + " at d=" + std::to_string(d)};
        }
    }
    double t = seconds_since(start);
    return {t < 1.0, "n=3..12, d=2..2n, " + std::to_string(t) + " s (limit 1 s)"};
}

Outcome criterion2() {
    auto start = Clock::now();
    std::size_t checks = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const std::size_t n = 2 + seed % 9;  // 2..10 vertices
        Graph g = gen::random_graph(n, 0.3, 2, 1000 + seed);
        for (VertexId v = 0; v < n; ++v) {
            for (Distance d = 1; d <= 8; ++d) {
                Ball fast = ball(g, v, d);
                Ball slow = oracle::ball_by_walk_enumeration(g, v, d);
                ++checks;
                if (fast.vertices != slow.vertices || fast.edges != slow.edges)
                    return {false, "seed " + std::to_string(seed) + " v=" + std::to_string(v) +
                                       " d=" + std::to_string(d)};
            }
        }
    }
    double t = seconds_since(start);
    return {t < 60.0, std::to_string(checks) + " balls on 300 graphs, " + std::to_string(t) + " s (limit 60 s)"};
}

Outcome criterion3() {
    auto start = Clock::now();
    std::size_t checks = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const std::size_t n = 3 + seed % 10;  // 3..12 vertices
        Graph g = gen::random_graph(n, 0.3, 2, 2000 + seed);
        for (Distance d = 2; d <= 8; ++d) {
            std::vector<Ball> balls;
            for (VertexId v = 0; v < n; ++v) balls.push_back(oracle::ball_by_walk_enumeration(g, v, d));
            std::size_t separators = 0;
            for (VertexId a = 0; a < n; ++a) {
                for (VertexId b = a + 1; b < n; ++b) {
                    if (!balls[a].contains_vertex(b)) continue;
                    auto fast = connectivity_graph(g, a, b, d);
                    auto slow = oracle::connectivity_graph_full(g, a, b, d, balls[a], balls[b]);
                    ++checks;
                    separators += slow.disconnected();
                    if (partition(fast) != partition(slow))
                        return {false, "seed " + std::to_string(seed) + " pair " + std::to_string(a) + "," +
                                           std::to_string(b) + " d=" + std::to_string(d)};
                }
            }
            count_bound.check(g, d, separators);
        }
    }
    double t = seconds_since(start);
    return {t < 120.0, std::to_string(checks) + " pairs on 200 graphs, " + std::to_string(t) + " s (limit 120 s)"};
}

// Checks the literal statement. Disagreements are also re-checked after
// identifying, for every common neighbour x of v0 and v1, the two
// subdivision vertices next to v0 on v0x and next to v1 on v1x.
Outcome criterion4() {
    const std::size_t k = 3;
    std::size_t checks = 0, literal_bad = 0, contracted_bad = 0;
    std::string first;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const std::size_t n = 4 + seed % 5;  // 4..8 vertices
        Graph g = gen::random_graph(n, 0.35, 1, 3000 + seed);
        auto sub = oracle::subdivide(g, k);
        auto next_to = [&](VertexId v, EdgeId e) {
            for (const Arc& a : sub.graph.neighbors(v))
                if (sub.origin_edge[a.to] == static_cast<std::int64_t>(e)) return a.to;
            throw std::logic_error("subdivision vertex not found");
        };
        for (Distance d = 2; d <= 8; ++d) {
            const Distance dk = static_cast<Distance>(k + 1) * d;
            for (VertexId a = 0; a < n; ++a) {
                for (VertexId b = a + 1; b < n; ++b) {
                    if (!ball(g, a, d).contains_vertex(b)) continue;
                    auto c = connectivity_graph(g, a, b, d);
                    auto ck = connectivity_graph(sub.graph, a, b, dk);
                    auto ab = g.find_edge(a, b);
                    std::vector<std::uint32_t> parent(ck.nodes.size());
                    std::iota(parent.begin(), parent.end(), 0u);
                    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
                        return parent[x] == x ? x : parent[x] = find(parent[x]);
                    };
                    std::set<std::uint32_t> comps;
                    for (std::size_t i = 0; i < ck.nodes.size(); ++i) {
                        if (ab && sub.origin_edge[ck.nodes[i]] == static_cast<std::int64_t>(*ab)) continue;
                        comps.insert(ck.component[i]);
                    }
                    ++checks;
                    if (c.disconnected() == (comps.size() >= 2)) continue;
                    if (literal_bad++ == 0)
                        first = "seed " + std::to_string(seed) + " pair " + std::to_string(a) + "," +
                                std::to_string(b) + " d=" + std::to_string(d);
                    for (const Arc& x : g.neighbors(a)) {
                        auto bx = g.find_edge(b, x.to);
                        if (!bx) continue;
                        parent[find(ck.component_of(next_to(a, x.edge)))] =
                            find(ck.component_of(next_to(b, *bx)));
                    }
                    std::set<std::uint32_t> merged;
                    for (auto comp : comps) merged.insert(find(comp));
                    if (c.disconnected() != (merged.size() >= 2)) ++contracted_bad;
                }
            }
        }
    }
    std::string detail = std::to_string(checks) + " pairs on 100 unit-weight graphs, k=3, scaled d = (k+1) d";
    if (literal_bad == 0) return {true, detail};
    return {false, detail + "; " + std::to_string(literal_bad) + " disagree (first: " + first +
                       "); after identifying common-neighbour subdivision vertices: " +
                       std::to_string(contracted_bad) + " disagree"};
}

Outcome criterion5() {
    std::size_t graphs = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const std::size_t n = 5 + seed % 10;  // 5..14 vertices
        Graph g = gen::random_connected_graph(n, 0.12, 2, 4000 + seed);
        const Distance d = 2 * oracle::diameter(g) + g.max_weight();
        auto cuts = find_local_cutvertices(g, d);
        if (cuts != oracle::global_cutvertices(g)) return {false, "cutvertices, seed " + std::to_string(seed)};
        auto records = find_local_2separators(g, d);
        count_bound.check(g, d, records.size());
        if (pairs_of(records) != oracle::global_2cuts(g)) return {false, "2-cuts, seed " + std::to_string(seed)};
        auto dg = build_from_cutvertices(g, d, cuts);
        std::vector<std::vector<VertexId>> bags;
        for (const auto& node : dg.nodes)
            if (node.kind == NodeKind::Bag) bags.push_back(node.vertices);
        if (!decomposition_is_tree(dg) || bags != oracle::blocks_bruteforce(g))
            return {false, "block-cut tree, seed " + std::to_string(seed)};
        ++graphs;
    }
    return {true, std::to_string(graphs) + " connected graphs with 5..14 vertices"};
}

Outcome criterion6() {
    auto start = Clock::now();
    Graph ring = gen::k4_ring(6);
    auto records = filter_totally_nested(find_local_2separators(ring, 4));
    count_bound.check(ring, 4, records.size());
    auto nested = nested_only(records);
    bool all_edge = std::all_of(nested.begin(), nested.end(), [](const SeparatorRecord& r) {
        return r.cycle_data.verdict == Verdict::NestedByEdge;
    });
    auto dg = build_from_2separators(ring, 4, nested);
    auto six = suppress_degree_two_nodes(dg);
    double t = seconds_since(start);
    bool ok = records.size() == 6 && nested.size() == 6 && all_edge && dg.nodes.size() == 12 &&
              decomposition_is_cycle(dg) && six.nodes.size() == 6 && six.bag_count() == 6 &&
              decomposition_is_cycle(six) && t < 1.0;
    return {ok, std::to_string(nested.size()) + " nested separators, " + std::to_string(dg.nodes.size()) +
                    "-node decomposition, " + std::to_string(six.nodes.size()) + "-cycle after suppression, " +
                    std::to_string(t) + " s"};
}

Outcome criterion7() {
    Graph c8 = gen::cycle(8);
    auto records = filter_totally_nested(find_local_2separators(c8, 8));
    count_bound.check(c8, 8, records.size());
    if (records.size() != 20) return {false, std::to_string(records.size()) + " separators"};
    if (pairs_of(records) != oracle::local_2separators_bruteforce(c8, 8)) return {false, "separator set differs"};
    for (const auto& x : records) {
        if (x.nested) return {false, "a separator was marked nested"};
        bool crossed = false;
        for (const auto& y : records) crossed = crossed || oracle::crossing_bruteforce(c8, 8, {x.v0, x.v1}, {y.v0, y.v1});
        if (!crossed) return {false, "oracle finds an uncrossed separator"};
    }
    auto dg = build_from_2separators(c8, 8, nested_only(records));
    bool single = dg.nodes.size() == 1 && dg.nodes[0].vertices.size() == 8;
    return {single, "20 separators, none nested (each crossed per oracle), single bag of 8"};
}

Outcome criterion8(const fs::path& work) {
    fs::path data = work / "rgg10k";
    if (cli({"generate", "--kind", "rgg", "--vertices", "10000", "--seed", "17", "--out", data.string()}) != 0)
        return {false, "generate failed"};
    const std::string nodes = (data / "nodes.csv").string(), edges = (data / "edges.csv").string();
    const unsigned max_jobs = std::max(4u, std::thread::hardware_concurrency());

    auto run_all = [&](const std::string& jobs, const fs::path& out) {
        fs::create_directories(out);
        auto common = [&](std::vector<std::string> args) {
            args.insert(args.end(), {"--edges", edges, "--nodes", nodes, "--jobs", jobs, "--quiet"});
            return cli(args);
        };
        int rc = 0;
        rc |= common({"onesep", "--d", "17", "--out", (out / "onesep.csv").string()});
        rc |= common({"twosep", "--d", "17", "--out", (out / "twosep.csv").string()});
        rc |= common({"decompose", "--mode", "1sep", "--d", "17", "--out", (out / "d1.dot").string(), "--raw",
                      (out / "d1_raw.dot").string()});
        rc |= common({"decompose", "--mode", "2sep", "--d", "17", "--out", (out / "d2.dot").string(), "--raw",
                      (out / "d2_raw.dot").string()});
        rc |= common({"sweep", "--d-values", "5,11,17,23", "--out", (out / "sweep.csv").string()});
        rc |= common({"preprocess", "--out", (out / "pre").string()});
        return rc;
    };
    if (run_all("1", work / "jobs1") != 0 || run_all(std::to_string(max_jobs), work / "jobsmax") != 0)
        return {false, "a subcommand failed"};

    std::size_t compared = 0;
    for (const auto& entry : fs::recursive_directory_iterator(work / "jobs1")) {
        if (!entry.is_regular_file() || entry.path().extension() == ".json") continue;
        fs::path other = work / "jobsmax" / fs::relative(entry.path(), work / "jobs1");
        if (slurp(entry.path()) != slurp(other))
            return {false, fs::relative(entry.path(), work / "jobs1").string() + " differs"};
        ++compared;
    }

    auto g = io::load(fs::path(nodes), edges, 1.0).graph;
    count_bound.check(g, 17, find_local_2separators(g, 17).size());
    return {compared >= 9, std::to_string(compared) + " files byte-identical for --jobs 1 vs --jobs " +
                               std::to_string(max_jobs) + " (" + std::to_string(g.vertex_count()) + " vertices, " +
                               std::to_string(g.edge_count()) + " edges)"};
}

Outcome criterion9(const fs::path& work) {
    fs::path data = work / "rgg316k";
    if (cli({"generate", "--kind", "rgg", "--vertices", "316000", "--target-edges", "322000", "--seed", "9",
             "--out", data.string()}) != 0)
        return {false, "generate failed"};
    auto start = Clock::now();
    int rc = cli({"onesep", "--edges", (data / "edges.csv").string(), "--nodes", (data / "nodes.csv").string(),
                  "--d", "17", "--out", (work / "onesep316k.csv").string(), "--quiet"});
    double t = seconds_since(start);
    auto edges = slurp(data / "edges.csv");
    auto m = static_cast<std::size_t>(std::count(edges.begin(), edges.end(), '\n')) - 1;
    return {rc == 0 && t < 10.0, "onesep d=17 on 316000 vertices / " + std::to_string(m) + " edges: " +
                                     std::to_string(t) + " s wall with " +
                                     std::to_string(std::thread::hardware_concurrency()) +
                                     " hardware threads (limit 10 s)"};
}

Outcome criterion10() {
    return {count_bound.violations == 0 && count_bound.graphs > 0,
            std::to_string(count_bound.graphs) + " (graph, d) instances, " + std::to_string(count_bound.violations) +
                " violations of records <= R n"};
}

}  // namespace

int main(int argc, char** argv) {
    fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "localsep_acceptance";
    fs::remove_all(work);
    fs::create_directories(work);

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 cycle family", criterion1},
        {"2 ball oracle equivalence", criterion2},
        {"3 connectivity-graph oracle equivalence", criterion3},
        {"4 subdivision metamorphic", criterion4},
        {"5 global specialization", criterion5},
        {"6 ring of K4s", criterion6},
        {"7 C_8 torso", criterion7},
        {"8 determinism under parallelism", [&] { return criterion8(work); }},
        {"9 performance 316k", [&] { return criterion9(work); }},
        {"10 count bound", criterion10},
    };

    // Optional further arguments select criteria by number.
    std::set<std::string> only(argv + std::min(argc, 2), argv + argc);
    int failures = 0;
    for (auto& [name, fn] : criteria) {
        if (!only.empty() && !only.count(name.substr(0, name.find(' ')))) continue;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << name << ": " << o.detail << std::endl;
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
