#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "localsep/graph.hpp"

namespace localsep::detail {

/// Scratch state for repeatedly materialising D_d(v) and labelling the
/// components of a punctured ball. Not thread-safe; keep one per worker.
class BallScanner {
public:
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    void load(const Graph& g, VertexId root, Distance d) {
        graph_ = &g;
        d_ = d;
        root_ = root;
        if (comp_.size() != g.vertex_count()) {
            comp_.assign(g.vertex_count(), kNone);
            comp_stamp_.assign(g.vertex_count(), 0);
            epoch_ = 0;
        }
        search_.run(g, root, d / 2);
    }

    VertexId root() const { return root_; }
    Distance diameter() const { return d_; }
    std::span<const VertexId> vertices() const { return search_.reached(); }
    bool member(VertexId v) const { return search_.reached(v); }
    Distance distance(VertexId v) const { return search_.distance(v); }

    bool edge_member(VertexId u, const Arc& a) const {
        return ball_edge_member(search_.distance(u), a.weight, search_.distance(a.to), d_);
    }

    std::size_t ball_size() const {
        std::size_t edges = 0;
        for (VertexId u : vertices()) {
            for (const Arc& a : graph_->neighbors(u))
                if (a.to > u && edge_member(u, a)) ++edges;
        }
        return vertices().size() + edges;
    }

    /// Labels the components of the ball minus `removed`; returns their count.
    /// Components are numbered in order of their smallest member when
    /// `canonical` is set, otherwise in discovery order.
    std::uint32_t label_components(std::span<const VertexId> removed, bool canonical = false) {
        next_epoch();
        for (VertexId r : removed) {
            if (r < comp_.size()) {
                comp_stamp_[r] = epoch_;
                comp_[r] = kNone;
            }
        }
        std::span<const VertexId> order = vertices();
        if (canonical) {
            sorted_.assign(order.begin(), order.end());
            std::sort(sorted_.begin(), sorted_.end());
            order = sorted_;
        }
        std::uint32_t count = 0;
        for (VertexId s : order) {
            if (comp_stamp_[s] == epoch_) continue;
            flood(s, count++);
        }
        return count;
    }

    /// Component label after label_components; kNone for removed or non-members.
    std::uint32_t component(VertexId v) const {
        return comp_stamp_[v] == epoch_ ? comp_[v] : kNone;
    }

    /// True iff the ball minus its root has at least two components.
    bool punctured_disconnected() {
        auto verts = vertices();
        if (verts.size() < 3) return false;
        next_epoch();
        comp_stamp_[root_] = epoch_;
        comp_[root_] = kNone;
        // verts[0] is the root; start from the next settled vertex.
        std::size_t reached = flood(verts[1], 0);
        return reached + 1 < verts.size();
    }

private:
    void next_epoch() {
        if (++epoch_ == 0) {
            std::fill(comp_stamp_.begin(), comp_stamp_.end(), 0);
            epoch_ = 1;
        }
    }

    std::size_t flood(VertexId s, std::uint32_t label) {
        std::size_t visited = 0;
        comp_stamp_[s] = epoch_;
        comp_[s] = label;
        stack_.push_back(s);
        while (!stack_.empty()) {
            VertexId u = stack_.back();
            stack_.pop_back();
            ++visited;
            for (const Arc& a : graph_->neighbors(u)) {
                if (comp_stamp_[a.to] == epoch_ || !edge_member(u, a)) continue;
                comp_stamp_[a.to] = epoch_;
                comp_[a.to] = label;
                stack_.push_back(a.to);
            }
        }
        return visited;
    }

    const Graph* graph_ = nullptr;
    Distance d_ = 0;
    VertexId root_ = 0;
    ShortestPathSearch search_;
    std::vector<std::uint32_t> comp_;
    std::vector<std::uint32_t> comp_stamp_;
    std::vector<VertexId> stack_;
    std::vector<VertexId> sorted_;
    std::uint32_t epoch_ = 0;
};

}  // namespace localsep::detail
