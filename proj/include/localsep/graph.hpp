#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace localsep {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::int64_t;
using Distance = std::int64_t;

inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point&, const Point&) = default;
};

/// One endpoint's view of an edge.
struct Arc {
    VertexId to;
    EdgeId edge;
    Weight weight;
};

struct EdgeInfo {
    VertexId u;
    VertexId v;
    Weight weight;
};

struct EdgeInput {
    VertexId u;
    VertexId v;
    Weight weight = 1;
};

/// Immutable simple graph with positive integral edge weights, stored as CSR.
///
/// Vertices are dense ids 0..n-1. Each vertex optionally carries the string id
/// it had in the input (its label) and a planar coordinate. Adjacency lists are
/// sorted by neighbour id, which makes every traversal order deterministic.
class Graph {
public:
    Graph() = default;

    /// Validates and builds a graph. Throws InputError on loops, parallel
    /// edges, out-of-range endpoints, non-positive weights, weight sums that
    /// overflow 64 bits, or side tables whose size differs from n.
    static Graph from_edges(std::size_t vertex_count, std::span<const EdgeInput> edges,
                            std::vector<std::string> labels = {},
                            std::vector<Point> coordinates = {});

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const Arc> neighbors(VertexId v) const {
        return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    const EdgeInfo& edge(EdgeId e) const { return edges_[e]; }
    std::span<const EdgeInfo> edges() const { return edges_; }

    /// Edge joining u and v, if any. O(log deg(u)).
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

    /// Input id of v; the decimal dense id when the graph was built without labels.
    std::string label(VertexId v) const;
    bool has_labels() const { return !labels_.empty(); }

    bool has_coordinates() const { return !coordinates_.empty(); }
    const Point& coordinate(VertexId v) const { return coordinates_[v]; }

    Weight max_weight() const { return max_weight_; }
    Weight total_weight() const { return total_weight_; }

    /// Subgraph induced by `vertices` (any order, duplicates ignored). Vertices
    /// are renumbered in increasing order of their old ids; labels, coordinates
    /// and weights carry over.
    Graph induced_subgraph(std::span<const VertexId> vertices) const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Arc> arcs_;
    std::vector<EdgeInfo> edges_;
    std::vector<std::string> labels_;
    std::vector<Point> coordinates_;
    Weight max_weight_ = 0;
    Weight total_weight_ = 0;
};

/// The subgraph D_d(v): every vertex and edge on a closed walk of total weight
/// at most d through the root.
struct Ball {
    VertexId root = 0;
    Distance diameter = 0;
    std::vector<VertexId> vertices;    // sorted
    std::vector<Distance> distances;   // distance from root, parallel to `vertices`
    std::vector<EdgeId> edges;         // sorted

    /// Size as used for the R statistic: vertex count plus edge count.
    std::size_t size() const { return vertices.size() + edges.size(); }
    bool contains_vertex(VertexId v) const;
    bool contains_edge(EdgeId e) const;
};

/// Connected components of an induced subgraph. block_of[v] is -1 for
/// vertices outside the subset; blocks are sorted internally and ordered by
/// their smallest vertex.
struct VertexPartition {
    std::vector<std::int32_t> block_of;
    std::vector<std::vector<VertexId>> blocks;

    std::size_t block_count() const { return blocks.size(); }
};

/// Weight-bounded single-source shortest paths with reusable scratch space.
///
/// One instance serves many searches; each search only touches the vertices
/// it reaches, so a search costs O(size of the explored region), not O(n).
/// Ties between equally short predecessors resolve to the smallest vertex id.
class ShortestPathSearch {
public:
    explicit ShortestPathSearch(std::size_t vertex_count = 0);

    void resize(std::size_t vertex_count);

    /// Settles every vertex within `limit` of `source`, skipping `blocked`
    /// (pass an out-of-range id for none).
    void run(const Graph& g, VertexId source, Distance limit,
             VertexId blocked = std::numeric_limits<VertexId>::max());

    /// Vertices settled by the last run, in settling order (source first).
    std::span<const VertexId> reached() const { return reached_; }
    bool reached(VertexId v) const { return stamp_[v] == epoch_; }
    Distance distance(VertexId v) const { return reached(v) ? dist_[v] : kUnreachable; }
    VertexId predecessor(VertexId v) const { return pred_[v]; }

    /// Source-to-target path of the last run, source first. Empty when unreached.
    std::vector<VertexId> path_to(VertexId target) const;

private:
    std::vector<Distance> dist_;
    std::vector<VertexId> pred_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint8_t> settled_;
    std::vector<VertexId> reached_;
    std::vector<std::pair<Distance, VertexId>> heap_;
    std::uint32_t epoch_ = 0;
};

/// An edge xy of weight w lies in D_d(root) iff dist(x) + w + dist(y) <= d.
inline bool ball_edge_member(Distance dx, Weight w, Distance dy, Distance d) {
    return dx != kUnreachable && dy != kUnreachable && dx + w + dy <= d;
}

Ball ball(const Graph& g, VertexId v, Distance d);

/// Exact weighted distances for every vertex within `limit` of v.
std::vector<std::pair<VertexId, Distance>> bounded_distances(const Graph& g, VertexId v,
                                                             Distance limit);

VertexPartition components(const Graph& g, std::span<const VertexId> removed = {});

/// R: the largest ball size (vertices plus edges) over all roots.
std::size_t max_ball_size(const Graph& g, Distance d, unsigned jobs = 0);

}  // namespace localsep
