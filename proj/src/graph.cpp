#include "localsep/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "localsep/errors.hpp"
#include "localsep/parallel.hpp"
#include "ball_scan.hpp"

namespace localsep {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const EdgeInput> edges,
                        std::vector<std::string> labels, std::vector<Point> coordinates) {
    if (vertex_count > std::numeric_limits<VertexId>::max() - 1)
        throw InputError("too many vertices");
    if (edges.size() > std::numeric_limits<EdgeId>::max() - 1)
        throw InputError("too many edges");
    if (!labels.empty() && labels.size() != vertex_count)
        throw InputError("label table size does not match vertex count");
    if (!coordinates.empty() && coordinates.size() != vertex_count)
        throw InputError("coordinate table size does not match vertex count");

    Graph g;
    g.offsets_.assign(vertex_count + 1, 0);
    g.edges_.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count)
            throw InputError("edge endpoint out of range");
        if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
        if (e.weight < 1) throw InputError("edge weight must be a positive integer");
        if (g.total_weight_ > std::numeric_limits<Weight>::max() / 4 - e.weight)
            throw InputError("sum of edge weights overflows 64-bit distances");
        g.total_weight_ += e.weight;
        g.max_weight_ = std::max(g.max_weight_, e.weight);
        g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

    g.arcs_.resize(2 * edges.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
        const auto& e = g.edges_[id];
        g.arcs_[fill[e.u]++] = {e.v, id, e.weight};
        g.arcs_[fill[e.v]++] = {e.u, id, e.weight};
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto first = g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last, [](const Arc& a, const Arc& b) { return a.to < b.to; });
        auto dup = std::adjacent_find(first, last,
                                      [](const Arc& a, const Arc& b) { return a.to == b.to; });
        if (dup != last) {
            throw InputError("parallel edge between " + std::to_string(v) + " and " +
                             std::to_string(dup->to));
        }
    }
    g.labels_ = std::move(labels);
    g.coordinates_ = std::move(coordinates);
    return g;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
    auto arcs = neighbors(u);
    auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                               [](const Arc& a, VertexId target) { return a.to < target; });
    if (it != arcs.end() && it->to == v) return it->edge;
    return std::nullopt;
}

std::string Graph::label(VertexId v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::induced_subgraph(std::span<const VertexId> vertices) const {
    std::vector<VertexId> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    constexpr VertexId kAbsent = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> remap(vertex_count(), kAbsent);
    for (VertexId i = 0; i < keep.size(); ++i) remap[keep[i]] = i;

    std::vector<EdgeInput> sub_edges;
    for (const auto& e : edges_) {
        if (remap[e.u] != kAbsent && remap[e.v] != kAbsent)
            sub_edges.push_back({remap[e.u], remap[e.v], e.weight});
    }
    std::vector<std::string> sub_labels;
    std::vector<Point> sub_coords;
    sub_labels.reserve(keep.size());
    for (VertexId v : keep) sub_labels.push_back(label(v));
    if (has_coordinates()) {
        for (VertexId v : keep) sub_coords.push_back(coordinates_[v]);
    }
    return from_edges(keep.size(), sub_edges, std::move(sub_labels), std::move(sub_coords));
}

bool Ball::contains_vertex(VertexId v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Ball::contains_edge(EdgeId e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

ShortestPathSearch::ShortestPathSearch(std::size_t vertex_count) { resize(vertex_count); }

void ShortestPathSearch::resize(std::size_t vertex_count) {
    dist_.assign(vertex_count, kUnreachable);
    pred_.assign(vertex_count, 0);
    stamp_.assign(vertex_count, 0);
    settled_.assign(vertex_count, 0);
    epoch_ = 0;
}

void ShortestPathSearch::run(const Graph& g, VertexId source, Distance limit, VertexId blocked) {
    if (dist_.size() != g.vertex_count()) resize(g.vertex_count());
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    reached_.clear();
    heap_.clear();
    if (limit < 0 || source == blocked) return;

    auto greater = std::greater<std::pair<Distance, VertexId>>{};
    stamp_[source] = epoch_;
    dist_[source] = 0;
    pred_[source] = source;
    settled_[source] = 0;
    heap_.emplace_back(0, source);

    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), greater);
        auto [du, u] = heap_.back();
        heap_.pop_back();
        if (settled_[u] || du != dist_[u]) continue;
        settled_[u] = 1;
        reached_.push_back(u);
        for (const Arc& a : g.neighbors(u)) {
            if (a.to == blocked) continue;
            Distance nd = du + a.weight;
            if (nd > limit) continue;
            if (stamp_[a.to] != epoch_) {
                stamp_[a.to] = epoch_;
                settled_[a.to] = 0;
                dist_[a.to] = nd;
                pred_[a.to] = u;
                heap_.emplace_back(nd, a.to);
                std::push_heap(heap_.begin(), heap_.end(), greater);
            } else if (!settled_[a.to]) {
                if (nd < dist_[a.to]) {
                    dist_[a.to] = nd;
                    pred_[a.to] = u;
                    heap_.emplace_back(nd, a.to);
                    std::push_heap(heap_.begin(), heap_.end(), greater);
                } else if (nd == dist_[a.to] && u < pred_[a.to]) {
                    pred_[a.to] = u;
                }
            }
        }
    }
}

std::vector<VertexId> ShortestPathSearch::path_to(VertexId target) const {
    std::vector<VertexId> path;
    if (target >= stamp_.size() || !reached(target)) return path;
    for (VertexId v = target;; v = pred_[v]) {
        path.push_back(v);
        if (pred_[v] == v) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

Ball ball(const Graph& g, VertexId v, Distance d) {
    if (v >= g.vertex_count()) throw InputError("ball: vertex id out of range");
    if (d <= 0) throw InputError("ball: diameter must be positive");

    ShortestPathSearch search(g.vertex_count());
    search.run(g, v, d / 2);

    Ball b;
    b.root = v;
    b.diameter = d;
    b.vertices.assign(search.reached().begin(), search.reached().end());
    std::sort(b.vertices.begin(), b.vertices.end());
    b.distances.reserve(b.vertices.size());
    for (VertexId u : b.vertices) {
        b.distances.push_back(search.distance(u));
        for (const Arc& a : g.neighbors(u)) {
            if (a.to > u && ball_edge_member(search.distance(u), a.weight, search.distance(a.to), d))
                b.edges.push_back(a.edge);
        }
    }
    std::sort(b.edges.begin(), b.edges.end());
    return b;
}

std::vector<std::pair<VertexId, Distance>> bounded_distances(const Graph& g, VertexId v,
                                                             Distance limit) {
    if (v >= g.vertex_count()) throw InputError("bounded_distances: vertex id out of range");
    ShortestPathSearch search(g.vertex_count());
    search.run(g, v, limit);
    std::vector<std::pair<VertexId, Distance>> out;
    for (VertexId u : search.reached()) out.emplace_back(u, search.distance(u));
    std::sort(out.begin(), out.end());
    return out;
}

VertexPartition components(const Graph& g, std::span<const VertexId> removed) {
    const std::size_t n = g.vertex_count();
    VertexPartition p;
    p.block_of.assign(n, 0);
    for (VertexId r : removed) {
        if (r >= n) throw InputError("components: vertex id out of range");
        p.block_of[r] = -1;
    }
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (p.block_of[s] < 0 || seen[s]) continue;
        auto id = static_cast<std::int32_t>(p.blocks.size());
        auto& block = p.blocks.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            block.push_back(u);
            p.block_of[u] = id;
            for (const Arc& a : g.neighbors(u)) {
                if (!seen[a.to] && p.block_of[a.to] >= 0) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
            }
        }
        std::sort(block.begin(), block.end());
    }
    return p;
}

std::size_t max_ball_size(const Graph& g, Distance d, unsigned jobs) {
    if (d <= 0) throw InputError("max_ball_size: diameter must be positive");
    const unsigned workers = resolve_jobs(jobs);
    std::vector<std::size_t> best(workers, 0);
    std::vector<detail::BallScanner> scanners(workers);
    parallel_chunks(g.vertex_count(), workers, 256,
                    [&](unsigned w, std::size_t begin, std::size_t end) {
                        auto& scan = scanners[w];
                        for (std::size_t v = begin; v < end; ++v) {
                            scan.load(g, static_cast<VertexId>(v), d);
                            best[w] = std::max(best[w], scan.ball_size());
                        }
                    });
    return g.vertex_count() == 0 ? 0 : *std::max_element(best.begin(), best.end());
}

}  // namespace localsep
