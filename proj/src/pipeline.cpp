#include "localsep/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "localsep/errors.hpp"
#include "localsep/local_cut.hpp"

namespace localsep {

Weight scaled_weight(double length, double scale, BuildReport* report) {
    if (!(scale > 0) || !std::isfinite(scale)) throw InputError("scale must be a positive number");
    if (!(length >= 0) || !std::isfinite(length)) throw InputError("edge length must be non-negative");
    double scaled = std::floor(scale * length + 0.5);
    if (scaled > 9.0e15) throw InputError("scaled edge weight is too large");
    if (scaled < 1) {
        if (report) ++report->clamped_weights;
        return 1;
    }
    return static_cast<Weight>(scaled);
}

Graph build_graph(std::span<const NodeRecord> nodes, std::span<const EdgeRecord> edges,
                  double scale, BuildReport* report) {
    std::unordered_map<std::string, VertexId> index;
    std::vector<std::string> labels;
    std::vector<Point> coords;
    bool with_coords = !nodes.empty() && std::all_of(nodes.begin(), nodes.end(), [](const auto& n) {
        return n.position.has_value();
    });

    for (const auto& n : nodes) {
        auto [it, inserted] = index.try_emplace(n.id, static_cast<VertexId>(labels.size()));
        if (!inserted) throw InputError("duplicate node id '" + n.id + "'");
        labels.push_back(n.id);
        if (with_coords) coords.push_back(*n.position);
    }

    auto lookup = [&](const std::string& id) -> VertexId {
        auto it = index.find(id);
        if (it != index.end()) return it->second;
        if (!nodes.empty()) throw InputError("edge endpoint '" + id + "' missing from node table");
        auto v = static_cast<VertexId>(labels.size());
        index.emplace(id, v);
        labels.push_back(id);
        return v;
    };

    std::vector<EdgeInput> inputs;
    inputs.reserve(edges.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        VertexId u = lookup(e.source);
        VertexId v = lookup(e.target);
        if (u == v) throw InputError("loop at '" + e.source + "'");
        auto key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
        if (!seen.insert(key).second)
            throw InputError("parallel edge between '" + e.source + "' and '" + e.target + "'");

        Weight w = 1;
        if (e.weight) {
            if (!(*e.weight > 0)) throw InputError("edge weight must be positive");
            w = scaled_weight(*e.weight, scale, report);
        } else if (with_coords) {
            const Point& a = coords[u];
            const Point& b = coords[v];
            w = scaled_weight(std::hypot(a.x - b.x, a.y - b.y), scale, report);
        }
        inputs.push_back({u, v, w});
    }
    const std::size_t n = labels.size();
    return Graph::from_edges(n, inputs, std::move(labels), std::move(coords));
}

Graph euclidean_weights(std::span<const NodeRecord> nodes, std::span<const EdgeRecord> edges,
                        double scale, BuildReport* report) {
    for (const auto& n : nodes) {
        if (!n.position) throw InputError("node '" + n.id + "' has no coordinates");
    }
    if (nodes.empty() && !edges.empty()) throw InputError("coordinate weights need a node table");
    std::vector<EdgeRecord> unweighted(edges.begin(), edges.end());
    for (auto& e : unweighted) e.weight.reset();
    return build_graph(nodes, unweighted, scale, report);
}

Graph prune_degree_one(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> degree(n);
    std::vector<std::uint8_t> gone(n, 0);
    std::deque<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] == 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (gone[v] || degree[v] != 1) continue;
        gone[v] = 1;
        for (const Arc& a : g.neighbors(v)) {
            if (gone[a.to]) continue;
            --degree[v];
            if (--degree[a.to] == 1) queue.push_back(a.to);
        }
    }
    // A single edge whose ends both reach degree 0 leaves two isolated vertices.
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < n; ++v) {
        if (!gone[v] && !(degree[v] == 0 && g.degree(v) > 0)) keep.push_back(v);
    }
    return g.induced_subgraph(keep);
}

namespace {

struct Chain {
    VertexId from;
    VertexId to;
    std::vector<VertexId> interior;
    std::vector<Weight> weights;  // interior.size() + 1 entries
};

}  // namespace

Graph suppress_degree_two(const Graph& g) {
    const std::size_t n = g.vertex_count();
    auto in_chain = [&](VertexId v) { return g.degree(v) == 2; };
    std::vector<std::uint8_t> visited(n, 0);
    std::vector<Chain> chains;

    auto walk = [&](VertexId start, const Arc& first) {
        Chain c{start, start, {}, {first.weight}};
        VertexId prev = start;
        VertexId cur = first.to;
        while (in_chain(cur) && cur != start) {
            visited[cur] = 1;
            c.interior.push_back(cur);
            auto arcs = g.neighbors(cur);
            const Arc& next = arcs[0].to == prev ? arcs[1] : arcs[0];
            c.weights.push_back(next.weight);
            prev = cur;
            cur = next.to;
        }
        c.to = cur;
        return c;
    };

    for (VertexId u = 0; u < n; ++u) {
        if (in_chain(u)) continue;
        for (const Arc& a : g.neighbors(u)) {
            if (in_chain(a.to) && !visited[a.to]) chains.push_back(walk(u, a));
        }
    }
    // Bare cycles: every vertex has degree two. Anchor at the smallest id.
    std::vector<Chain> cycles;
    for (VertexId s = 0; s < n; ++s) {
        if (!in_chain(s) || visited[s]) continue;
        visited[s] = 1;
        cycles.push_back(walk(s, g.neighbors(s)[0]));
    }

    std::vector<std::uint8_t> keep(n, 0);
    for (VertexId v = 0; v < n; ++v) keep[v] = !in_chain(v);

    std::vector<std::tuple<VertexId, VertexId, Weight>> out_edges;
    std::set<std::pair<VertexId, VertexId>> present;
    auto add = [&](VertexId a, VertexId b, Weight w) {
        out_edges.emplace_back(a, b, w);
        present.emplace(std::min(a, b), std::max(a, b));
    };
    for (const auto& e : g.edges()) {
        if (keep[e.u] && keep[e.v]) add(e.u, e.v, e.weight);
    }

    auto sum = [](const std::vector<Weight>& w, std::size_t from) {
        Weight s = 0;
        for (std::size_t i = from; i < w.size(); ++i) s += w[i];
        return s;
    };

    for (const auto& c : chains) {
        const auto& in = c.interior;
        if (c.from == c.to) {
            // Pendant cycle: keep the first two interior vertices.
            keep[in[0]] = keep[in[1]] = 1;
            add(c.from, in[0], c.weights[0]);
            add(in[0], in[1], c.weights[1]);
            add(in[1], c.to, sum(c.weights, 2));
        } else if (present.contains({std::min(c.from, c.to), std::max(c.from, c.to)})) {
            keep[in[0]] = 1;
            add(c.from, in[0], c.weights[0]);
            add(in[0], c.to, sum(c.weights, 1));
        } else {
            add(c.from, c.to, sum(c.weights, 0));
        }
    }
    for (const auto& c : cycles) {
        // walk() records the anchor's cycle as anchor -> interior... -> anchor.
        const auto& in = c.interior;
        keep[c.from] = keep[in[0]] = keep[in[1]] = 1;
        add(c.from, in[0], c.weights[0]);
        add(in[0], in[1], c.weights[1]);
        add(in[1], c.from, sum(c.weights, 2));
    }

    std::vector<VertexId> remap(n, 0);
    std::vector<std::string> labels;
    std::vector<Point> coords;
    VertexId next = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (!keep[v]) continue;
        remap[v] = next++;
        labels.push_back(g.label(v));
        if (g.has_coordinates()) coords.push_back(g.coordinate(v));
    }
    std::vector<EdgeInput> inputs;
    inputs.reserve(out_edges.size());
    for (auto [a, b, w] : out_edges) inputs.push_back({remap[a], remap[b], w});
    return Graph::from_edges(next, inputs, std::move(labels), std::move(coords));
}

std::vector<SweepRow> sweep_d(const Graph& g, std::span<const Distance> d_values, unsigned jobs) {
    std::vector<SweepRow> rows;
    rows.reserve(d_values.size());
    for (Distance d : d_values) {
        auto cuts = find_local_cutvertices(g, d, jobs);
        auto blocks = local_blocks(g, cuts);
        SweepRow row{d, cuts.size(), blocks.block_count(), 0};
        for (const auto& b : blocks.blocks) row.largest_cluster = std::max(row.largest_cluster, b.size());
        rows.push_back(row);
    }
    return rows;
}

}  // namespace localsep
