#include "localsep/local_cut.hpp"

#include <algorithm>

#include "localsep/errors.hpp"
#include "localsep/parallel.hpp"
#include "ball_scan.hpp"

namespace localsep {

namespace {

bool test_vertex(const Graph& g, VertexId v, Distance d, detail::BallScanner& scan) {
    // Isolated and degree-1 vertices cannot split their ball.
    if (g.degree(v) < 2) return false;
    scan.load(g, v, d);
    return scan.punctured_disconnected();
}

}  // namespace

bool is_local_cutvertex(const Graph& g, VertexId v, Distance d) {
    if (v >= g.vertex_count()) throw InputError("vertex id out of range");
    if (d <= 0) throw InputError("d must be positive");
    detail::BallScanner scan;
    return test_vertex(g, v, d, scan);
}

std::vector<VertexId> find_local_cutvertices(const Graph& g, Distance d, unsigned jobs) {
    if (d <= 0) throw InputError("d must be positive");
    const unsigned workers = resolve_jobs(jobs);
    std::vector<detail::BallScanner> scanners(workers);
    std::vector<std::vector<VertexId>> found(workers);

    parallel_chunks(g.vertex_count(), workers, 512,
                    [&](unsigned w, std::size_t begin, std::size_t end) {
                        for (std::size_t i = begin; i < end; ++i) {
                            auto v = static_cast<VertexId>(i);
                            if (test_vertex(g, v, d, scanners[w])) found[w].push_back(v);
                        }
                    });

    std::vector<VertexId> out;
    for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

VertexPartition local_blocks(const Graph& g, std::span<const VertexId> cutvertices) {
    return components(g, cutvertices);
}

}  // namespace localsep
