#include "localsep/two_separators.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>

#include "localsep/errors.hpp"
#include "localsep/parallel.hpp"
#include "ball_scan.hpp"

namespace localsep {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::NestedByEdge: return "edge";
        case Verdict::NestedByManyComponents: return "many_components";
        case Verdict::Cycle: return "cycle";
        case Verdict::Unresolved: return "unresolved";
    }
    return "unknown";
}

std::uint32_t ConnectivityGraph::component_of(VertexId x) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
    if (it == nodes.end() || *it != x)
        throw PreconditionError("vertex " + std::to_string(x) + " is not a connectivity-graph node");
    return component[static_cast<std::size_t>(it - nodes.begin())];
}

namespace {

constexpr std::uint32_t kNone = detail::BallScanner::kNone;

std::uint64_t pair_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

/// Per-worker state for testing candidate pairs around a fixed v0.
class PairTester {
public:
    void bind(const Graph& g, Distance d) {
        g_ = &g;
        d_ = d;
        if (node_stamp_.size() != g.vertex_count()) {
            node_stamp_.assign(g.vertex_count(), 0);
            epoch_ = 0;
        }
    }

    detail::BallScanner& ball0() { return ball0_; }

    /// Builds the simplified connectivity graph of (v0, v1) into `out`.
    /// ball0() must already hold D_d(v0). Star edges are only materialised
    /// when `with_edges` is set.
    void build(VertexId v0, VertexId v1, ConnectivityGraph& out, bool with_edges) {
        out.v0 = v0;
        out.v1 = v1;
        out.d = d_;
        out.nodes.clear();
        out.edges.clear();
        out.component.clear();
        out.component_count = 0;

        collect_nodes(v0, v1, out.nodes);
        const std::size_t k = out.nodes.size();
        parent_.resize(k);
        std::iota(parent_.begin(), parent_.end(), 0u);

        const VertexId removed[2] = {v0, v1};
        ball1_.load(*g_, v1, d_);
        for (detail::BallScanner* scan : {&ball0_, &ball1_}) {
            std::uint32_t comps = scan->label_components(removed);
            star_root_.assign(comps, kNone);
            for (std::uint32_t i = 0; i < k; ++i) {
                VertexId x = out.nodes[i];
                std::uint32_t c = scan->component(x);
                if (c == kNone) continue;
                if (star_root_[c] == kNone) {
                    star_root_[c] = i;
                } else {
                    unite(star_root_[c], i);
                    if (with_edges) out.edges.emplace_back(out.nodes[star_root_[c]], x);
                }
            }
        }

        // Relabel so components are numbered by their smallest node.
        out.component.assign(k, kNone);
        relabel_.assign(k, kNone);
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint32_t r = find(i);
            if (relabel_[r] == kNone) relabel_[r] = out.component_count++;
            out.component[i] = relabel_[r];
        }
    }

    std::optional<CycleData> cycle_for(const ConnectivityGraph& c) {
        const Graph& g = *g_;
        if (g.adjacent(c.v0, c.v1)) return CycleData{Verdict::NestedByEdge, {}};
        if (c.component_count != 2) return CycleData{Verdict::NestedByManyComponents, {}};

        // Shortest v1 -> v0 routes in G - v0, closed by an edge into v0 from
        // each of the two components.
        paths_.run(g, c.v1, c.d, c.v0);
        VertexId end[2] = {0, 0};
        Distance length[2] = {kUnreachable, kUnreachable};
        for (std::size_t i = 0; i < c.nodes.size(); ++i) {
            VertexId x = c.nodes[i];
            auto e = g.find_edge(c.v0, x);
            if (!e || !paths_.reached(x)) continue;
            Distance len = paths_.distance(x) + g.edge(*e).weight;
            std::uint32_t side = c.component[i];
            if (len < length[side]) {  // nodes ascend, so ties keep the smaller id
                length[side] = len;
                end[side] = x;
            }
        }
        if (length[0] == kUnreachable || length[1] == kUnreachable) return std::nullopt;
        if (length[0] + length[1] > c.d) return std::nullopt;

        std::vector<VertexId> left = paths_.path_to(end[0]);
        std::vector<VertexId> right = paths_.path_to(end[1]);
        CycleData out{Verdict::Cycle, {}};
        out.cycle.reserve(left.size() + right.size());
        out.cycle.push_back(c.v0);
        out.cycle.insert(out.cycle.end(), left.rbegin(), left.rend());
        out.cycle.insert(out.cycle.end(), right.begin() + 1, right.end());

        scratch_ = out.cycle;
        std::sort(scratch_.begin(), scratch_.end());
        if (std::adjacent_find(scratch_.begin(), scratch_.end()) != scratch_.end())
            return std::nullopt;
        return out;
    }

private:
    void collect_nodes(VertexId v0, VertexId v1, std::vector<VertexId>& nodes) {
        if (++epoch_ == 0) {
            std::fill(node_stamp_.begin(), node_stamp_.end(), 0);
            epoch_ = 1;
        }
        for (VertexId s : {v0, v1}) {
            for (const Arc& a : g_->neighbors(s)) {
                if (a.to == v0 || a.to == v1 || node_stamp_[a.to] == epoch_) continue;
                node_stamp_[a.to] = epoch_;
                nodes.push_back(a.to);
            }
        }
        std::sort(nodes.begin(), nodes.end());
    }

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

    const Graph* g_ = nullptr;
    Distance d_ = 0;
    detail::BallScanner ball0_;
    detail::BallScanner ball1_;
    ShortestPathSearch paths_;
    std::vector<std::uint32_t> node_stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> star_root_;
    std::vector<std::uint32_t> relabel_;
    std::vector<VertexId> scratch_;
};

void check_pair(const Graph& g, VertexId v0, VertexId v1, Distance d) {
    const std::size_t n = g.vertex_count();
    if (v0 >= n || v1 >= n) throw InputError("vertex id out of range");
    if (v0 == v1) throw PreconditionError("separator vertices must be distinct");
    if (d <= 0) throw PreconditionError("d must be positive");
}

}  // namespace

ConnectivityGraph connectivity_graph(const Graph& g, VertexId v0, VertexId v1, Distance d) {
    check_pair(g, v0, v1, d);
    PairTester tester;
    tester.bind(g, d);
    tester.ball0().load(g, v0, d);
    if (!tester.ball0().member(v1)) {
        throw PreconditionError("vertices " + std::to_string(v0) + " and " + std::to_string(v1) +
                                " are farther apart than d/2");
    }
    ConnectivityGraph c;
    tester.build(v0, v1, c, /*with_edges=*/true);
    return c;
}

CycleData cycle_data(const Graph& g, VertexId v0, VertexId v1, Distance d,
                     const ConnectivityGraph& c) {
    check_pair(g, v0, v1, d);
    if (c.v0 != v0 || c.v1 != v1 || c.d != d)
        throw PreconditionError("connectivity graph belongs to a different pair or d");
    if (!c.disconnected()) throw PreconditionError("pair is not a local 2-separator");
    PairTester tester;
    tester.bind(g, d);
    auto data = tester.cycle_for(c);
    if (!data) {
        throw DataIntegrityError("no cycle of length at most d through both local components of {" +
                                 std::to_string(v0) + ", " + std::to_string(v1) + "}");
    }
    return *std::move(data);
}

std::vector<SeparatorRecord> find_local_2separators(const Graph& g, Distance d, unsigned jobs) {
    if (d < 2) throw PreconditionError("local 2-separators need d >= 2");
    const unsigned workers = resolve_jobs(jobs);
    std::vector<PairTester> testers(workers);
    std::vector<std::vector<SeparatorRecord>> found(workers);
    for (auto& t : testers) t.bind(g, d);

    parallel_chunks(g.vertex_count(), workers, 64,
                    [&](unsigned w, std::size_t begin, std::size_t end) {
                        PairTester& t = testers[w];
                        ConnectivityGraph c;
                        std::vector<VertexId> partners;
                        for (std::size_t i = begin; i < end; ++i) {
                            auto v0 = static_cast<VertexId>(i);
                            t.ball0().load(g, v0, d);
                            partners.clear();
                            for (VertexId v1 : t.ball0().vertices())
                                if (v1 > v0) partners.push_back(v1);
                            for (VertexId v1 : partners) {
                                t.build(v0, v1, c, /*with_edges=*/false);
                                if (!c.disconnected()) continue;
                                auto data = t.cycle_for(c);
                                found[w].push_back(
                                    {v0, v1, data ? *std::move(data) : CycleData{Verdict::Unresolved, {}},
                                     false});
                            }
                        }
                    });

    std::vector<SeparatorRecord> out;
    for (auto& part : found) {
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    std::sort(out.begin(), out.end(), [](const SeparatorRecord& a, const SeparatorRecord& b) {
        return std::pair(a.v0, a.v1) < std::pair(b.v0, b.v1);
    });
    return out;
}

std::vector<SeparatorRecord> filter_totally_nested(std::vector<SeparatorRecord> records,
                                                   unsigned jobs) {
    std::unordered_set<std::uint64_t> index;
    index.reserve(records.size() * 2);
    for (const auto& r : records) index.insert(pair_key(r.v0, r.v1));

    parallel_chunks(records.size(), resolve_jobs(jobs), 256,
                    [&](unsigned, std::size_t begin, std::size_t end) {
                        for (std::size_t i = begin; i < end; ++i) {
                            SeparatorRecord& r = records[i];
                            switch (r.cycle_data.verdict) {
                                case Verdict::NestedByEdge:
                                case Verdict::NestedByManyComponents:
                                    r.nested = true;
                                    continue;
                                case Verdict::Unresolved:
                                    r.nested = false;
                                    continue;
                                case Verdict::Cycle:
                                    break;
                            }
                            const auto& cyc = r.cycle_data.cycle;
                            auto mid = std::find(cyc.begin() + 1, cyc.end(), r.v1);
                            bool crossed = false;
                            for (auto a = cyc.begin() + 1; a != mid && !crossed; ++a) {
                                for (auto b = mid + 1; b != cyc.end(); ++b) {
                                    if (index.contains(pair_key(*a, *b))) {
                                        crossed = true;
                                        break;
                                    }
                                }
                            }
                            r.nested = !crossed;
                        }
                    });
    return records;
}

std::vector<SeparatorRecord> nested_only(std::span<const SeparatorRecord> records) {
    std::vector<SeparatorRecord> out;
    for (const auto& r : records)
        if (r.nested) out.push_back(r);
    return out;
}

}  // namespace localsep
