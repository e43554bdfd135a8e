#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "localsep/decomposition.hpp"
#include "localsep/generators.hpp"
#include "localsep/local_cut.hpp"
#include "localsep/oracle.hpp"
#include "support.hpp"

using namespace localsep;

namespace {

bool is_cycle(const DecompositionGraph& dg) {
    auto adj = dg.adjacency();
    for (const auto& a : adj)
        if (a.size() != 2) return false;
    std::vector<bool> seen(dg.nodes.size(), false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        ++count;
        for (auto y : adj[x])
            if (!seen[y]) seen[y] = true, stack.push_back(y);
    }
    return count == dg.nodes.size();
}

bool is_forest(const DecompositionGraph& dg) {
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
    return true;
}

std::set<VertexId> covered(const DecompositionGraph& dg) {
    std::set<VertexId> out;
    for (const auto& n : dg.nodes) out.insert(n.vertices.begin(), n.vertices.end());
    return out;
}

}  // namespace

TEST_CASE("1-separator decompositions of named graphs") {
    Graph bow = gen::bowtie();
    auto cuts = find_local_cutvertices(bow, 3);
    auto dg = build_from_cutvertices(bow, 3, cuts);
    CHECK(dg.bag_count() == 2);
    CHECK(dg.separator_count() == 1);
    CHECK(dg.edges.size() == 2);
    CHECK(dg.nodes[0].vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(dg.nodes[1].vertices == std::vector<VertexId>{0, 3, 4});

    Graph c8 = gen::cycle(8);
    auto whole = build_from_cutvertices(c8, 8, find_local_cutvertices(c8, 8));
    CHECK(whole.nodes.size() == 1);
    CHECK(whole.edges.empty());

    auto ring = build_from_cutvertices(c8, 4, find_local_cutvertices(c8, 4));
    CHECK(ring.bag_count() == 8);
    CHECK(ring.separator_count() == 8);
    CHECK(ring.edges.size() == 16);
    CHECK(is_cycle(ring));
    for (std::uint32_t i = 0; i < ring.bag_count(); ++i) CHECK(ring.nodes[i].vertices.size() == 2);
}

TEST_CASE("bipartite structure and vertex coverage") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = gen::random_graph(12, 0.2, 2, seed);
        for (Distance d : {3, 5, 8}) {
            auto dg = build_from_cutvertices(g, d, find_local_cutvertices(g, d));
            for (const auto& e : dg.edges) CHECK(dg.nodes[e.a].kind != dg.nodes[e.b].kind);
            CHECK(covered(dg).size() == g.vertex_count());
            auto nested = nested_only(filter_totally_nested(find_local_2separators(g, d)));
            auto d2 = build_from_2separators(g, d, nested);
            for (const auto& e : d2.edges) CHECK(d2.nodes[e.a].kind != d2.nodes[e.b].kind);
            CHECK(covered(d2).size() == g.vertex_count());
        }
    }
}

TEST_CASE("global d reproduces the block-cut tree") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = gen::random_connected_graph(12, 0.12, 2, seed);
        const Distance d = 2 * oracle::diameter(g) + g.max_weight();
        auto dg = build_from_cutvertices(g, d, find_local_cutvertices(g, d));
        CHECK(is_forest(dg));
        CHECK(dg.edges.size() + 1 == dg.nodes.size());
        std::vector<std::vector<VertexId>> bags;
        for (const auto& n : dg.nodes)
            if (n.kind == NodeKind::Bag) bags.push_back(n.vertices);
        CHECK(bags == oracle::blocks_bruteforce(g));
    }
}

TEST_CASE("2-separator decompositions") {
    Graph ring = gen::k4_ring(6);
    auto nested = nested_only(filter_totally_nested(find_local_2separators(ring, 4)));
    auto dg = build_from_2separators(ring, 4, nested);
    CHECK(dg.bag_count() == 6);
    CHECK(dg.separator_count() == 6);
    CHECK(dg.edges.size() == 12);
    CHECK(is_cycle(dg));
    auto s = stats(dg);
    CHECK(s.node_count == 12);
    CHECK(s.edge_count == 12);
    CHECK(s.largest_bag == 4);
    CHECK(s.bag_size_histogram == std::map<std::size_t, std::size_t>{{4, 6}});

    auto six = suppress_degree_two_nodes(dg);
    CHECK(six.nodes.size() == 6);
    CHECK(six.bag_count() == 6);
    CHECK(is_cycle(six));
    CHECK(six.simplified);

    Graph c8 = gen::cycle(8);
    auto single = build_from_2separators(c8, 8, {});
    CHECK(single.nodes.size() == 1);
    CHECK(single.nodes[0].vertices.size() == 8);
    auto one = stats(single);
    CHECK(one.node_count == 1);
    CHECK(one.edge_count == 0);
    CHECK(one.largest_bag == 8);

    Graph two = gen::two_k4_sharing_edge();
    auto records = filter_totally_nested(find_local_2separators(two, 3));
    CHECK(records.size() == 1);
    auto path = build_from_2separators(two, 3, nested_only(records));
    CHECK(path.bag_count() == 2);
    CHECK(path.separator_count() == 1);
    CHECK(path.edges.size() == 2);
    auto joined = suppress_degree_two_nodes(path);
    CHECK(joined.nodes.size() == 2);
    CHECK(joined.edges.size() == 1);
}

TEST_CASE("suppression leaves degree-three nodes and counts merged edges") {
    // Three K4s glued along one edge: the separator has degree 3.
    std::vector<EdgeInput> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5},
                             {1, 4}, {1, 5}, {4, 5}, {0, 6}, {0, 7}, {1, 6}, {1, 7}, {6, 7}};
    Graph g = Graph::from_edges(8, e);
    auto nested = nested_only(filter_totally_nested(find_local_2separators(g, 3)));
    auto dg = build_from_2separators(g, 3, nested);
    CHECK(suppress_degree_two_nodes(dg).nodes.size() == dg.nodes.size());

    DecompositionGraph parallel;
    parallel.nodes = {{NodeKind::Bag, {0, 1, 2}, {}}, {NodeKind::Bag, {1, 2, 3}, {}},
                      {NodeKind::Separator, {1}, {}}, {NodeKind::Separator, {2}, {}}};
    parallel.edges = {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}};
    auto merged = suppress_degree_two_nodes(parallel);
    REQUIRE(merged.edges.size() == 1);
    CHECK(merged.edges[0].multiplicity == 2);

    CHECK(stats(DecompositionGraph{}).node_count == 0);
}
