#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "localsep/decomposition.hpp"
#include "localsep/graph.hpp"
#include "localsep/pipeline.hpp"
#include "localsep/two_separators.hpp"

namespace localsep::io {

/// Nodes table: header `id,x,y` or `id`. Errors name the 1-based line.
std::vector<NodeRecord> read_nodes(std::istream& in, const std::string& source = "nodes");
/// Edges table: header `source,target` or `source,target,weight`. An empty
/// weight field means "no weight".
std::vector<EdgeRecord> read_edges(std::istream& in, const std::string& source = "edges");

struct Loaded {
    Graph graph;
    BuildReport report;
    std::string digest;  // FNV-1a 64 over the edges file, then the nodes file
};

Loaded load(const std::optional<std::filesystem::path>& nodes, const std::filesystem::path& edges,
            double scale);

std::string fnv1a_hex(std::span<const char> bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

/// Graph as re-loadable tables: nodes with coordinates when present, edges
/// with explicit integer weights.
void write_nodes(std::ostream& out, const Graph& g);
void write_edges(std::ostream& out, const Graph& g);

void write_cutvertices(std::ostream& out, const Graph& g, std::span<const VertexId> cuts);
void write_2separators(std::ostream& out, const Graph& g, std::span<const SeparatorRecord> records);
void write_dot(std::ostream& out, const Graph& g, const DecompositionGraph& dg);
void write_sweep(std::ostream& out, std::span<const SweepRow> rows);

struct RunMeta {
    std::string command;
    std::string input_digest;
    std::optional<Distance> d;
    double scale = 1.0;
    unsigned jobs = 1;
    std::optional<std::size_t> r_statistic;
    std::vector<std::pair<std::string, double>> phase_seconds;
    std::map<std::string, std::size_t> counts;
};

void write_meta(std::ostream& out, const RunMeta& meta);

}  // namespace localsep::io
