#include <doctest.h>

#include <chrono>
#include <numeric>

#include "localsep/errors.hpp"
#include "localsep/generators.hpp"
#include "localsep/local_cut.hpp"
#include "localsep/oracle.hpp"
#include "support.hpp"

using namespace localsep;

namespace {

/// Cutvertex test straight from the walk-enumerated ball.
bool cut_by_oracle(const Graph& g, VertexId v, Distance d) {
    Ball b = oracle::ball_by_walk_enumeration(g, v, d);
    std::vector<EdgeInput> edges;
    std::vector<VertexId> index(g.vertex_count(), ~0u);
    VertexId k = 0;
    for (VertexId x : b.vertices)
        if (x != v) index[x] = k++;
    for (EdgeId e : b.edges) {
        const auto& info = g.edge(e);
        if (info.u != v && info.v != v) edges.push_back({index[info.u], index[info.v], 1});
    }
    if (k == 0) return false;
    return components(Graph::from_edges(k, edges)).block_count() >= 2;
}

}  // namespace

TEST_CASE("cycle, bowtie and path examples") {
    Graph c8 = gen::cycle(8);
    CHECK(find_local_cutvertices(c8, 4) == std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(find_local_cutvertices(c8, 8).empty());
    for (VertexId v = 0; v < 8; ++v) {
        CHECK(cut_by_oracle(c8, v, 4));
        CHECK_FALSE(cut_by_oracle(c8, v, 8));
    }
    Graph bow = gen::bowtie();
    CHECK(find_local_cutvertices(bow, 3) == std::vector<VertexId>{0});
    for (VertexId v = 0; v < 5; ++v) CHECK(cut_by_oracle(bow, v, 3) == (v == 0));
}

TEST_CASE("cycle family") {
    for (std::size_t n = 3; n <= 12; ++n) {
        Graph c = gen::cycle(n);
        std::vector<VertexId> all(n);
        std::iota(all.begin(), all.end(), 0u);
        for (Distance d = 2; d < static_cast<Distance>(n); ++d) CHECK(find_local_cutvertices(c, d) == all);
        for (Distance d = static_cast<Distance>(n); d <= static_cast<Distance>(n) + 3; ++d)
            CHECK(find_local_cutvertices(c, d).empty());
    }
}

TEST_CASE("degenerate cases") {
    Graph one = Graph::from_edges(1, {});
    CHECK(find_local_cutvertices(one, 3).empty());
    CHECK_FALSE(is_local_cutvertex(one, 0, 3));
    // With d = 1 every ball is its root alone.
    CHECK(find_local_cutvertices(gen::complete(4), 1).empty());
    // d = 2: the ball of a vertex of a triangle-free graph is a star.
    CHECK(find_local_cutvertices(gen::cycle(5), 2).size() == 5);
    CHECK_THROWS_AS(find_local_cutvertices(one, 0), InputError);
}

TEST_CASE("matches the oracle on random graphs") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = gen::random_graph(9, 0.3, 2, seed);
        for (Distance d = 1; d <= 8; ++d) {
            std::vector<VertexId> expect;
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (cut_by_oracle(g, v, d)) expect.push_back(v);
            CHECK(find_local_cutvertices(g, d) == expect);
        }
    }
}

TEST_CASE("global specialization gives articulation points") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = gen::random_connected_graph(11, 0.15, 3, seed);
        const Distance d = 2 * oracle::diameter(g) + g.max_weight();
        CHECK(find_local_cutvertices(g, d) == oracle::global_cutvertices(g));
    }
}

TEST_CASE("thread-count independence") {
    Graph g = gen::random_geometric_graph(3000, 3100, 2.0, 5);
    auto one = find_local_cutvertices(g, 17, 1);
    CHECK(find_local_cutvertices(g, 17, 2) == one);
    CHECK(find_local_cutvertices(g, 17, 8) == one);
    CHECK(find_local_cutvertices(g, 17, 0) == one);
}

TEST_CASE("cost grows about linearly in n") {
    auto time_for = [](std::size_t n) {
        Graph g = gen::random_geometric_graph(n, n + n / 50, 2.0, 11);
        auto start = std::chrono::steady_clock::now();
        for (int rep = 0; rep < 3; ++rep) find_local_cutvertices(g, 17, 1);
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    double small = time_for(20000);
    double large = time_for(40000);
    CHECK(large <= 2.5 * small + 0.05);
}

TEST_CASE("local blocks") {
    Graph bow = gen::bowtie();
    VertexId c[] = {0};
    auto blocks = local_blocks(bow, c);
    REQUIRE(blocks.block_count() == 2);
    CHECK(blocks.blocks[0].size() == 2);
    CHECK(blocks.blocks[1].size() == 2);

    CHECK(local_blocks(gen::cycle(8), {}).blocks.at(0).size() == 8);

    Graph p = gen::path(3);
    VertexId mid[] = {1};
    auto pb = local_blocks(p, mid);
    CHECK(pb.blocks == std::vector<std::vector<VertexId>>{{0}, {2}});
}
