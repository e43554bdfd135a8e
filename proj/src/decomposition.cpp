#include "localsep/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "localsep/errors.hpp"
#include "ball_scan.hpp"

namespace localsep {

std::size_t DecompositionGraph::bag_count() const {
    return static_cast<std::size_t>(std::count_if(
        nodes.begin(), nodes.end(), [](const DecompositionNode& n) { return n.kind == NodeKind::Bag; }));
}

std::vector<std::vector<std::uint32_t>> DecompositionGraph::adjacency() const {
    std::vector<std::vector<std::uint32_t>> adj(nodes.size());
    for (const auto& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

namespace {

class EdgeUnionFind {
public:
    explicit EdgeUnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::uint32_t> parent_;
};

std::optional<Point> centroid_of(const Graph& g, std::span<const VertexId> vertices) {
    if (!g.has_coordinates() || vertices.empty()) return std::nullopt;
    Point c;
    for (VertexId v : vertices) {
        c.x += g.coordinate(v).x;
        c.y += g.coordinate(v).y;
    }
    c.x /= static_cast<double>(vertices.size());
    c.y /= static_cast<double>(vertices.size());
    return c;
}

/// Shared assembly. `arc_keys[v]` assigns a split key to every arc of a
/// separator vertex v (parallel to g.neighbors(v)); arcs of other vertices
/// all share one key. Edges flagged in `excluded` belong to no bag.
DecompositionGraph assemble(const Graph& g, const std::vector<std::vector<std::int64_t>>& arc_keys,
                            const std::vector<std::uint8_t>& excluded,
                            std::vector<std::vector<VertexId>> separators) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    EdgeUnionFind uf(m);

    std::vector<std::pair<std::int64_t, EdgeId>> keyed;
    for (VertexId v = 0; v < n; ++v) {
        auto arcs = g.neighbors(v);
        keyed.clear();
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if (excluded[arcs[i].edge]) continue;
            std::int64_t key = arc_keys[v].empty() ? 0 : arc_keys[v][i];
            keyed.emplace_back(key, arcs[i].edge);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 1; i < keyed.size(); ++i) {
            if (keyed[i].first == keyed[i - 1].first) uf.unite(keyed[i].second, keyed[i - 1].second);
        }
    }

    std::vector<std::uint8_t> on_separator(n, 0);
    for (const auto& s : separators)
        for (VertexId v : s) on_separator[v] = 1;

    // Edge classes become bags; uncovered isolated vertices become singleton bags.
    std::vector<std::int64_t> class_of(m, -1);
    std::vector<std::vector<VertexId>> bags;
    std::vector<std::uint8_t> covered(n, 0);
    for (EdgeId e = 0; e < m; ++e) {
        if (excluded[e]) continue;
        std::uint32_t r = uf.find(e);
        if (class_of[r] < 0) {
            class_of[r] = static_cast<std::int64_t>(bags.size());
            bags.emplace_back();
        }
        auto& bag = bags[static_cast<std::size_t>(class_of[r])];
        bag.push_back(g.edge(e).u);
        bag.push_back(g.edge(e).v);
        covered[g.edge(e).u] = covered[g.edge(e).v] = 1;
    }
    for (VertexId v = 0; v < n; ++v) {
        if (!covered[v] && !on_separator[v]) bags.push_back({v});
    }
    for (auto& bag : bags) {
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
    std::sort(bags.begin(), bags.end());
    for (auto& s : separators) std::sort(s.begin(), s.end());
    std::sort(separators.begin(), separators.end());

    DecompositionGraph dg;
    dg.nodes.reserve(bags.size() + separators.size());
    for (auto& bag : bags) {
        auto c = centroid_of(g, bag);
        dg.nodes.push_back({NodeKind::Bag, std::move(bag), c});
    }
    const auto first_separator = static_cast<std::uint32_t>(dg.nodes.size());
    for (auto& s : separators) {
        auto c = centroid_of(g, s);
        dg.nodes.push_back({NodeKind::Separator, std::move(s), c});
    }

    // A separator attaches to every bag that contains its whole vertex set.
    std::vector<std::vector<std::uint32_t>> bags_at(n);
    for (std::uint32_t b = 0; b < first_separator; ++b)
        for (VertexId v : dg.nodes[b].vertices) bags_at[v].push_back(b);
    for (auto s = first_separator; s < dg.nodes.size(); ++s) {
        const auto& verts = dg.nodes[s].vertices;
        for (std::uint32_t b : bags_at[verts.front()]) {
            const auto& bag = dg.nodes[b].vertices;
            bool all = std::all_of(verts.begin(), verts.end(), [&](VertexId v) {
                return std::binary_search(bag.begin(), bag.end(), v);
            });
            if (all) dg.edges.push_back({b, s, 1});
        }
    }
    std::sort(dg.edges.begin(), dg.edges.end(), [](const auto& x, const auto& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    return dg;
}

}  // namespace

DecompositionGraph build_from_cutvertices(const Graph& g, Distance d,
                                          std::span<const VertexId> cutvertices) {
    if (d <= 0) throw InputError("d must be positive");
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::int64_t>> arc_keys(n);
    std::vector<std::vector<VertexId>> separators;
    detail::BallScanner scan;

    for (VertexId v : cutvertices) {
        if (v >= n) throw InputError("cutvertex id out of range");
        if (!arc_keys[v].empty() || g.degree(v) == 0) continue;
        scan.load(g, v, d);
        const VertexId removed[1] = {v};
        const std::uint32_t comps = scan.label_components(removed);
        auto arcs = g.neighbors(v);
        auto& keys = arc_keys[v];
        keys.resize(arcs.size());
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            std::uint32_t c = scan.component(arcs[i].to);
            // Edges too heavy to lie in the ball form their own local component.
            keys[i] = (c != detail::BallScanner::kNone && scan.edge_member(v, arcs[i]))
                          ? static_cast<std::int64_t>(c)
                          : static_cast<std::int64_t>(comps + i);
        }
        separators.push_back({v});
    }
    return assemble(g, arc_keys, std::vector<std::uint8_t>(g.edge_count(), 0), std::move(separators));
}

DecompositionGraph build_from_2separators(const Graph& g, Distance d,
                                          std::span<const SeparatorRecord> nested) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint8_t> excluded(g.edge_count(), 0);
    std::vector<std::vector<VertexId>> separators;
    std::vector<ConnectivityGraph> local;
    std::vector<std::vector<std::uint32_t>> pairs_at(n);
    std::unordered_set<std::uint64_t> seen;

    for (const auto& r : nested) {
        VertexId a = std::min(r.v0, r.v1), b = std::max(r.v0, r.v1);
        if (!seen.insert((static_cast<std::uint64_t>(a) << 32) | b).second) continue;
        auto idx = static_cast<std::uint32_t>(local.size());
        local.push_back(connectivity_graph(g, a, b, d));
        pairs_at[a].push_back(idx);
        pairs_at[b].push_back(idx);
        if (auto e = g.find_edge(a, b)) excluded[*e] = 1;
        separators.push_back({a, b});
    }

    std::vector<std::vector<std::int64_t>> arc_keys(n);
    std::map<std::vector<std::uint32_t>, std::int64_t> key_ids;
    std::vector<std::uint32_t> labels;
    for (VertexId v = 0; v < n; ++v) {
        if (pairs_at[v].empty()) continue;
        key_ids.clear();
        auto arcs = g.neighbors(v);
        auto& keys = arc_keys[v];
        keys.assign(arcs.size(), -1);
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if (excluded[arcs[i].edge]) continue;
            labels.clear();
            // Every remaining neighbour of v lies in N({v, partner}) for each pair.
            for (std::uint32_t p : pairs_at[v]) labels.push_back(local[p].component_of(arcs[i].to));
            auto [it, inserted] = key_ids.try_emplace(labels, static_cast<std::int64_t>(key_ids.size()));
            keys[i] = it->second;
        }
    }
    return assemble(g, arc_keys, excluded, std::move(separators));
}

DecompositionGraph suppress_degree_two_nodes(const DecompositionGraph& dg) {
    const auto adj = dg.adjacency();
    std::vector<std::uint8_t> drop(dg.nodes.size(), 0);
    std::vector<DecompositionEdge> edges;
    for (std::uint32_t s = 0; s < dg.nodes.size(); ++s) {
        if (dg.nodes[s].kind == NodeKind::Separator && adj[s].size() == 2) {
            drop[s] = 1;
            edges.push_back({adj[s][0], adj[s][1], 1});
        }
    }
    for (const auto& e : dg.edges) {
        if (!drop[e.a] && !drop[e.b]) edges.push_back(e);
    }

    std::vector<std::uint32_t> remap(dg.nodes.size(), 0);
    DecompositionGraph out;
    out.simplified = true;
    for (std::uint32_t i = 0; i < dg.nodes.size(); ++i) {
        if (drop[i]) continue;
        remap[i] = static_cast<std::uint32_t>(out.nodes.size());
        out.nodes.push_back(dg.nodes[i]);
    }
    for (auto& e : edges) {
        e.a = remap[e.a];
        e.b = remap[e.b];
        if (e.a > e.b) std::swap(e.a, e.b);
    }
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    for (const auto& e : edges) {
        if (e.a == e.b) continue;
        if (!out.edges.empty() && out.edges.back().a == e.a && out.edges.back().b == e.b)
            out.edges.back().multiplicity += e.multiplicity;
        else
            out.edges.push_back(e);
    }
    return out;
}

DecompositionStats stats(const DecompositionGraph& dg) {
    DecompositionStats s;
    s.node_count = dg.nodes.size();
    s.edge_count = dg.edges.size();
    for (const auto& node : dg.nodes) {
        if (node.kind != NodeKind::Bag) {
            ++s.separator_count;
            continue;
        }
        ++s.bag_count;
        s.largest_bag = std::max(s.largest_bag, node.vertices.size());
        ++s.bag_size_histogram[node.vertices.size()];
    }
    return s;
}

}  // namespace localsep
