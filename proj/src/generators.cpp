#include "localsep/generators.hpp"

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <unordered_map>

#include "localsep/errors.hpp"
#include "localsep/pipeline.hpp"

namespace localsep::gen {

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

Graph cycle(std::size_t n, Weight w) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<EdgeInput> e;
    for (std::size_t i = 0; i < n; ++i)
        e.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n), w});
    return Graph::from_edges(n, e);
}

Graph path(std::size_t n) {
    std::vector<EdgeInput> e;
    for (std::size_t i = 1; i < n; ++i) e.push_back({static_cast<VertexId>(i - 1), static_cast<VertexId>(i), 1});
    return Graph::from_edges(n, e);
}

Graph complete(std::size_t n) {
    std::vector<EdgeInput> e;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) e.push_back({i, j, 1});
    return Graph::from_edges(n, e);
}

Graph star(std::size_t leaves) {
    std::vector<EdgeInput> e;
    for (VertexId i = 1; i <= leaves; ++i) e.push_back({0, i, 1});
    return Graph::from_edges(leaves + 1, e);
}

Graph bowtie() {
    std::vector<EdgeInput> e{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
    return Graph::from_edges(5, e);
}

Graph two_k4_sharing_edge() {
    std::vector<EdgeInput> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                             {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}};
    return Graph::from_edges(6, e);
}

Graph k4_ring(std::size_t k) {
    if (k < 3) throw PreconditionError("k4_ring needs at least 3 K4s");
    std::set<std::pair<VertexId, VertexId>> edges;
    auto add = [&](VertexId a, VertexId b) { edges.emplace(std::min(a, b), std::max(a, b)); };
    for (std::size_t j = 0; j < k; ++j) {
        VertexId quad[4] = {static_cast<VertexId>(2 * j), static_cast<VertexId>(2 * j + 1),
                            static_cast<VertexId>(2 * ((j + 1) % k)), static_cast<VertexId>(2 * ((j + 1) % k) + 1)};
        for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y) add(quad[x], quad[y]);
    }
    std::vector<EdgeInput> e;
    for (auto [a, b] : edges) e.push_back({a, b, 1});
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < k; ++j) {
        labels.push_back("a" + std::to_string(j));
        labels.push_back("b" + std::to_string(j));
    }
    return Graph::from_edges(2 * k, e, std::move(labels));
}

Graph random_graph(std::size_t n, double p, Weight max_weight, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<EdgeInput> e;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (unit(rng) < p) e.push_back({i, j, 1 + static_cast<Weight>(below(rng, max_weight))});
    return Graph::from_edges(n, e);
}

Graph random_connected_graph(std::size_t n, double p, Weight max_weight, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 1; i < n; ++i) edges.emplace(static_cast<VertexId>(below(rng, i)), i);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (unit(rng) < p) edges.emplace(i, j);
    std::vector<EdgeInput> e;
    for (auto [a, b] : edges) e.push_back({a, b, 1 + static_cast<Weight>(below(rng, max_weight))});
    return Graph::from_edges(n, e);
}

Graph random_geometric_graph(std::size_t n, std::size_t target_edges, double spacing,
                             std::uint64_t seed) {
    if (n == 0) return Graph::from_edges(0, {});
    std::mt19937_64 rng(seed);
    const double side = spacing * std::sqrt(static_cast<double>(n));
    // Expected pairs within r: n^2 / 2 * pi r^2 / side^2, ignoring the border.
    const double r = std::sqrt(2.0 * static_cast<double>(target_edges) * side * side /
                               (M_PI * static_cast<double>(n) * static_cast<double>(n)));
    std::vector<Point> pts(n);
    for (auto& p : pts) {
        p.x = unit(rng) * side;
        p.y = unit(rng) * side;
    }

    const auto cells = static_cast<std::int64_t>(std::max(1.0, std::floor(side / r)));
    const double cell = side / static_cast<double>(cells);
    auto cell_of = [&](double c) { return std::min<std::int64_t>(cells - 1, static_cast<std::int64_t>(c / cell)); };
    std::unordered_map<std::int64_t, std::vector<VertexId>> grid;
    for (VertexId v = 0; v < n; ++v) grid[cell_of(pts[v].x) * cells + cell_of(pts[v].y)].push_back(v);

    std::vector<EdgeInput> e;
    for (VertexId v = 0; v < n; ++v) {
        const auto cx = cell_of(pts[v].x), cy = cell_of(pts[v].y);
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto x = cx + dx, y = cy + dy;
                if (x < 0 || y < 0 || x >= cells || y >= cells) continue;
                auto it = grid.find(x * cells + y);
                if (it == grid.end()) continue;
                for (VertexId u : it->second) {
                    if (u <= v) continue;
                    double len = std::hypot(pts[u].x - pts[v].x, pts[u].y - pts[v].y);
                    if (len <= r) e.push_back({v, u, scaled_weight(len, 1.0)});
                }
            }
        }
    }
    return Graph::from_edges(n, e, {}, std::move(pts));
}

}  // namespace localsep::gen
