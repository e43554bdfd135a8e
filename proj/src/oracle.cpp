#include "localsep/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "localsep/errors.hpp"

namespace localsep::oracle {

namespace {

void guard(const Graph& g, const char* what, std::size_t limit = kMaxVertices) {
    if (g.vertex_count() > limit) {
        throw PreconditionError(std::string(what) + ": oracle limited to " + std::to_string(limit) +
                                " vertices");
    }
}

/// Component count of G minus `removed`, and the component id of each vertex (-1 if removed).
std::pair<int, std::vector<int>> components_without(const Graph& g, const std::vector<bool>& removed) {
    const std::size_t n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (removed[s] || comp[s] >= 0) continue;
        std::vector<VertexId> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (const Arc& a : g.neighbors(u)) {
                if (!removed[a.to] && comp[a.to] < 0) {
                    comp[a.to] = count;
                    stack.push_back(a.to);
                }
            }
        }
        ++count;
    }
    return {count, comp};
}

}  // namespace

ClosedWalkWeights closed_walk_weights(const Graph& g, VertexId v, Distance max_d) {
    guard(g, "closed_walk_weights");
    if (max_d > kMaxWalkWeight) throw PreconditionError("closed_walk_weights: d too large for enumeration");
    if (v >= g.vertex_count()) throw PreconditionError("closed_walk_weights: vertex out of range");
    const std::size_t n = g.vertex_count();

    // can_return[x][b]: some walk x -> v of weight <= b exists. Built by
    // extending walks one edge at a time, so it prunes the enumeration to
    // prefixes that can still close without assuming anything about balls.
    const auto budget = static_cast<std::size_t>(std::max<Distance>(max_d, 0));
    std::vector<std::vector<bool>> can_return(n, std::vector<bool>(budget + 1, false));
    for (std::size_t b = 0; b <= budget; ++b) {
        can_return[v][b] = true;
        for (VertexId x = 0; x < n; ++x) {
            for (const Arc& a : g.neighbors(x)) {
                if (static_cast<std::size_t>(a.weight) <= b && can_return[a.to][b - a.weight])
                    can_return[x][b] = true;
            }
        }
    }

    ClosedWalkWeights out{std::vector<Distance>(n, kUnreachable),
                          std::vector<Distance>(g.edge_count(), kUnreachable)};
    out.vertex[v] = 0;
    std::vector<VertexId> walk_vertices{v};
    std::vector<EdgeId> walk_edges;

    std::function<void(VertexId, Distance)> extend = [&](VertexId at, Distance used) {
        if (at == v && used > 0) {
            for (VertexId x : walk_vertices) out.vertex[x] = std::min(out.vertex[x], used);
            for (EdgeId e : walk_edges) out.edge[e] = std::min(out.edge[e], used);
        }
        for (const Arc& a : g.neighbors(at)) {
            Distance next = used + a.weight;
            if (next > max_d || !can_return[a.to][static_cast<std::size_t>(max_d - next)]) continue;
            walk_vertices.push_back(a.to);
            walk_edges.push_back(a.edge);
            extend(a.to, next);
            walk_vertices.pop_back();
            walk_edges.pop_back();
        }
    };
    extend(v, 0);
    return out;
}

Ball ball_by_walk_enumeration(const Graph& g, VertexId v, Distance d) {
    if (d <= 0) throw PreconditionError("ball_by_walk_enumeration: d must be positive");
    auto w = closed_walk_weights(g, v, d);
    Ball b;
    b.root = v;
    b.diameter = d;
    // Distances are recovered from the walks too: the lightest closed walk
    // through x that is an out-and-back has weight 2 dist(v, x).
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (w.vertex[x] <= d) {
            b.vertices.push_back(x);
            b.distances.push_back(w.vertex[x] / 2);
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (w.edge[e] <= d) b.edges.push_back(e);
    }
    return b;
}

ConnectivityGraph connectivity_graph_full(const Graph& g, VertexId v0, VertexId v1, Distance d) {
    guard(g, "connectivity_graph_full");
    return connectivity_graph_full(g, v0, v1, d, ball_by_walk_enumeration(g, v0, d),
                                   ball_by_walk_enumeration(g, v1, d));
}

ConnectivityGraph connectivity_graph_full(const Graph& g, VertexId v0, VertexId v1, Distance d,
                                          const Ball& ball0, const Ball& ball1) {
    guard(g, "connectivity_graph_full");
    const std::size_t n = g.vertex_count();
    ConnectivityGraph c;
    c.v0 = v0;
    c.v1 = v1;
    c.d = d;
    for (VertexId x = 0; x < n; ++x) {
        if (x != v0 && x != v1 && (g.adjacent(x, v0) || g.adjacent(x, v1))) c.nodes.push_back(x);
    }

    // reach[i][x][y]: a path x..y inside ball i avoiding v0 and v1.
    auto reach_in = [&](const Ball& b) {
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        for (VertexId s : b.vertices) {
            if (s == v0 || s == v1) continue;
            std::vector<VertexId> stack{s};
            reach[s][s] = true;
            while (!stack.empty()) {
                VertexId u = stack.back();
                stack.pop_back();
                for (const Arc& a : g.neighbors(u)) {
                    if (a.to == v0 || a.to == v1 || reach[s][a.to] || !b.contains_edge(a.edge)) continue;
                    reach[s][a.to] = true;
                    stack.push_back(a.to);
                }
            }
        }
        return reach;
    };
    auto r0 = reach_in(ball0);
    auto r1 = reach_in(ball1);
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < c.nodes.size(); ++j) {
            VertexId x = c.nodes[i], y = c.nodes[j];
            if (r0[x][y] || r1[x][y]) c.edges.emplace_back(x, y);
        }
    }

    // Components of the literal graph, numbered by smallest node.
    const std::size_t k = c.nodes.size();
    c.component.assign(k, ~0u);
    for (std::size_t s = 0; s < k; ++s) {
        if (c.component[s] != ~0u) continue;
        std::uint32_t label = c.component_count++;
        std::vector<std::size_t> stack{s};
        c.component[s] = label;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (const auto& [x, y] : c.edges) {
                VertexId other;
                if (x == c.nodes[u]) other = y;
                else if (y == c.nodes[u]) other = x;
                else continue;
                auto idx = static_cast<std::size_t>(
                    std::lower_bound(c.nodes.begin(), c.nodes.end(), other) - c.nodes.begin());
                if (c.component[idx] == ~0u) {
                    c.component[idx] = label;
                    stack.push_back(idx);
                }
            }
        }
    }
    return c;
}

Subdivision subdivide(const Graph& g, std::size_t k) {
    if (k < 1) throw PreconditionError("subdivide: k must be at least 1");
    const std::size_t n = g.vertex_count();
    Subdivision s;
    s.origin_edge.assign(n, -1);
    std::vector<EdgeInput> edges;
    VertexId next = static_cast<VertexId>(n);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& info = g.edge(e);
        const auto segments = static_cast<std::size_t>(info.weight) * (k + 1);
        VertexId prev = info.u;
        for (std::size_t i = 1; i < segments; ++i) {
            s.origin_edge.push_back(e);
            edges.push_back({prev, next, 1});
            prev = next++;
        }
        edges.push_back({prev, info.v, 1});
    }
    s.graph = Graph::from_edges(next, edges);
    return s;
}

std::vector<VertexId> global_cutvertices(const Graph& g) {
    guard(g, "global_cutvertices", kMaxCutVertices);
    const std::size_t n = g.vertex_count();
    std::vector<bool> removed(n, false);
    const int base = components_without(g, removed).first;
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v) {
        removed[v] = true;
        if (components_without(g, removed).first > base) out.push_back(v);
        removed[v] = false;
    }
    return out;
}

std::vector<std::pair<VertexId, VertexId>> global_2cuts(const Graph& g) {
    guard(g, "global_2cuts", kMaxCutVertices);
    const std::size_t n = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> out;
    std::vector<bool> removed(n, false);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            removed[u] = removed[v] = true;
            auto [count, comp] = components_without(g, removed);
            std::set<int> touched;
            for (VertexId x = 0; x < n; ++x) {
                if (!removed[x] && (g.adjacent(x, u) || g.adjacent(x, v))) touched.insert(comp[x]);
            }
            if (touched.size() >= 2) out.emplace_back(u, v);
            removed[u] = removed[v] = false;
        }
    }
    return out;
}

std::vector<std::vector<VertexId>> cycles_up_to(const Graph& g, Distance d) {
    guard(g, "cycles_up_to", kMaxCycleVertices);
    std::vector<std::vector<VertexId>> out;
    const std::size_t n = g.vertex_count();
    std::vector<bool> on_path(n, false);
    std::vector<VertexId> path;

    // Each cycle is found twice (once per direction) from its smallest vertex;
    // keep the direction whose second vertex is smaller than its last.
    std::function<void(VertexId, VertexId, Distance)> grow = [&](VertexId start, VertexId at, Distance used) {
        for (const Arc& a : g.neighbors(at)) {
            Distance next = used + a.weight;
            if (next > d) continue;
            if (a.to == start && path.size() >= 3 && path[1] < path.back()) {
                out.push_back(path);
            } else if (a.to > start && !on_path[a.to]) {
                on_path[a.to] = true;
                path.push_back(a.to);
                grow(start, a.to, next);
                path.pop_back();
                on_path[a.to] = false;
            }
        }
    };
    for (VertexId s = 0; s < n; ++s) {
        on_path[s] = true;
        path = {s};
        grow(s, s, 0);
        on_path[s] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool crossing_bruteforce(const Graph& g, Distance d, std::pair<VertexId, VertexId> x,
                         std::pair<VertexId, VertexId> y) {
    guard(g, "crossing_bruteforce", kMaxCycleVertices);
    for (const auto& cyc : cycles_up_to(g, d)) {
        auto pos = [&](VertexId v) -> std::ptrdiff_t {
            auto it = std::find(cyc.begin(), cyc.end(), v);
            return it == cyc.end() ? -1 : it - cyc.begin();
        };
        auto x0 = pos(x.first), x1 = pos(x.second), y0 = pos(y.first), y1 = pos(y.second);
        if (x0 < 0 || x1 < 0 || y0 < 0 || y1 < 0) continue;
        if (x0 > x1) std::swap(x0, x1);
        // Alternation: exactly one of y's vertices lies strictly between x0 and x1,
        // and neither coincides with a vertex of x.
        auto inside = [&](std::ptrdiff_t p) { return p > x0 && p < x1; };
        bool distinct = y0 != x0 && y0 != x1 && y1 != x0 && y1 != x1;
        if (distinct && inside(y0) != inside(y1)) return true;
    }
    return false;
}

std::vector<std::pair<VertexId, VertexId>> local_2separators_bruteforce(const Graph& g, Distance d) {
    guard(g, "local_2separators_bruteforce");
    const std::size_t n = g.vertex_count();
    std::vector<Ball> balls;
    for (VertexId v = 0; v < n; ++v) balls.push_back(ball_by_walk_enumeration(g, v, d));
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            // Distance at most d/2 means v lies in the walk-defined ball of u.
            if (!balls[u].contains_vertex(v)) continue;
            auto c = connectivity_graph_full(g, u, v, d, balls[u], balls[v]);
            if (c.disconnected()) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<std::vector<VertexId>> blocks_bruteforce(const Graph& g) {
    guard(g, "blocks_bruteforce", kMaxCutVertices);
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();

    // Precompute components of G - v for every v.
    std::vector<std::vector<int>> comp_without(n);
    std::vector<bool> removed(n, false);
    for (VertexId v = 0; v < n; ++v) {
        removed[v] = true;
        comp_without[v] = components_without(g, removed).second;
        removed[v] = false;
    }
    auto whole = components_without(g, removed).second;

    auto same_block = [&](EdgeId e, EdgeId f) {
        const auto& a = g.edge(e);
        const auto& b = g.edge(f);
        if (whole[a.u] != whole[b.u]) return false;
        for (VertexId v = 0; v < n; ++v) {
            VertexId p = a.u == v ? a.v : a.u;
            VertexId q = b.u == v ? b.v : b.u;
            if (comp_without[v][p] != comp_without[v][q]) return false;
        }
        return true;
    };

    std::vector<int> block_of(m, -1);
    std::vector<std::vector<VertexId>> blocks;
    for (EdgeId e = 0; e < m; ++e) {
        if (block_of[e] >= 0) continue;
        int id = static_cast<int>(blocks.size());
        blocks.emplace_back();
        for (EdgeId f = e; f < m; ++f) {
            if (block_of[f] < 0 && same_block(e, f)) {
                block_of[f] = id;
                blocks.back().push_back(g.edge(f).u);
                blocks.back().push_back(g.edge(f).v);
            }
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) == 0) blocks.push_back({v});
    }
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

std::vector<std::vector<Distance>> all_pairs_distances(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Distance>> dist(n, std::vector<Distance>(n, kUnreachable));
    for (VertexId v = 0; v < n; ++v) dist[v][v] = 0;
    for (const auto& e : g.edges()) dist[e.u][e.v] = dist[e.v][e.u] = std::min(dist[e.u][e.v], e.weight);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (dist[i][k] != kUnreachable && dist[k][j] != kUnreachable)
                    dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
    return dist;
}

Distance diameter(const Graph& g) {
    Distance best = 0;
    for (const auto& row : all_pairs_distances(g))
        for (Distance x : row)
            if (x != kUnreachable) best = std::max(best, x);
    return best;
}

}  // namespace localsep::oracle
