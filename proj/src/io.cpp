#include "localsep/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "localsep/errors.hpp"

namespace localsep::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    for (;;) {
        auto comma = line.find(',');
        fields.push_back(trim(line.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return fields;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
    throw InputError(source + ":" + std::to_string(line) + ": " + what);
}

double parse_number(std::string_view s, const std::string& source, std::size_t line,
                    const char* field) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value))
        fail(source, line, std::string("invalid ") + field + " '" + std::string(s) + "'");
    return value;
}

/// Calls row(fields, line_number) for every non-blank line after the header.
template <class Row>
void read_table(std::istream& in, const std::string& source,
                const std::vector<std::vector<std::string_view>>& headers, Row&& row) {
    std::string line;
    std::size_t number = 0;
    std::size_t columns = 0;
    while (std::getline(in, line)) {
        ++number;
        if (trim(line).empty()) continue;
        auto fields = split(line);
        if (columns == 0) {
            auto match = std::find(headers.begin(), headers.end(), fields);
            if (match == headers.end()) fail(source, number, "unexpected header '" + std::string(trim(line)) + "'");
            columns = fields.size();
            continue;
        }
        if (fields.size() != columns)
            fail(source, number, "expected " + std::to_string(columns) + " fields, got " +
                                      std::to_string(fields.size()));
        row(fields, number);
    }
    if (columns == 0) fail(source, number, "missing header");
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw InputError("cannot open " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string dot_quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string fixed(double x) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(6);
    s << x;
    return s.str();
}

}  // namespace

std::vector<NodeRecord> read_nodes(std::istream& in, const std::string& source) {
    std::vector<NodeRecord> nodes;
    read_table(in, source, {{"id", "x", "y"}, {"id"}}, [&](const auto& f, std::size_t line) {
        if (f[0].empty()) fail(source, line, "empty id");
        NodeRecord n{std::string(f[0]), std::nullopt};
        if (f.size() == 3) {
            n.position = Point{parse_number(f[1], source, line, "x"), parse_number(f[2], source, line, "y")};
        }
        nodes.push_back(std::move(n));
    });
    return nodes;
}

std::vector<EdgeRecord> read_edges(std::istream& in, const std::string& source) {
    std::vector<EdgeRecord> edges;
    read_table(in, source, {{"source", "target", "weight"}, {"source", "target"}},
               [&](const auto& f, std::size_t line) {
                   if (f[0].empty() || f[1].empty()) fail(source, line, "empty endpoint");
                   EdgeRecord e{std::string(f[0]), std::string(f[1]), std::nullopt};
                   if (f.size() == 3 && !f[2].empty()) {
                       double w = parse_number(f[2], source, line, "weight");
                       if (!(w > 0)) fail(source, line, "weight must be positive");
                       e.weight = w;
                   }
                   edges.push_back(std::move(e));
               });
    return edges;
}

std::string fnv1a_hex(std::span<const char> bytes, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Loaded load(const std::optional<std::filesystem::path>& nodes, const std::filesystem::path& edges,
            double scale) {
    const std::string edge_bytes = read_file(edges);
    std::string node_bytes;
    if (nodes) node_bytes = read_file(*nodes);

    std::istringstream edge_stream(edge_bytes);
    auto edge_rows = read_edges(edge_stream, edges.filename().string());
    std::vector<NodeRecord> node_rows;
    if (nodes) {
        std::istringstream node_stream(node_bytes);
        node_rows = read_nodes(node_stream, nodes->filename().string());
    }

    Loaded out;
    out.graph = build_graph(node_rows, edge_rows, scale, &out.report);
    std::string both = edge_bytes;
    both += '\0';
    both += node_bytes;
    out.digest = fnv1a_hex(both);
    return out;
}

void write_nodes(std::ostream& out, const Graph& g) {
    out << (g.has_coordinates() ? "id,x,y\n" : "id\n");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << g.label(v);
        if (g.has_coordinates()) out << ',' << fixed(g.coordinate(v).x) << ',' << fixed(g.coordinate(v).y);
        out << '\n';
    }
}

void write_edges(std::ostream& out, const Graph& g) {
    out << "source,target,weight\n";
    for (const auto& e : g.edges()) out << g.label(e.u) << ',' << g.label(e.v) << ',' << e.weight << '\n';
}

void write_cutvertices(std::ostream& out, const Graph& g, std::span<const VertexId> cuts) {
    std::vector<VertexId> sorted(cuts.begin(), cuts.end());
    std::sort(sorted.begin(), sorted.end());
    out << "vertex\n";
    for (VertexId v : sorted) out << g.label(v) << '\n';
}

void write_2separators(std::ostream& out, const Graph& g, std::span<const SeparatorRecord> records) {
    std::vector<SeparatorRecord> sorted(records.begin(), records.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return std::pair(a.v0, a.v1) < std::pair(b.v0, b.v1); });
    out << "v0,v1,verdict,nested\n";
    for (const auto& r : sorted) {
        out << g.label(r.v0) << ',' << g.label(r.v1) << ',' << to_string(r.cycle_data.verdict) << ','
            << (r.nested ? 1 : 0) << '\n';
    }
}

void write_dot(std::ostream& out, const Graph& g, const DecompositionGraph& dg) {
    out << "graph decomposition {\n";
    std::size_t bag = 0, sep = 0;
    std::vector<std::string> names;
    names.reserve(dg.nodes.size());
    for (const auto& node : dg.nodes) {
        std::string label;
        if (node.kind == NodeKind::Bag) {
            names.push_back("bag" + std::to_string(bag++));
            label = "bag:" + std::to_string(node.vertices.size());
        } else {
            names.push_back("sep" + std::to_string(sep++));
            for (std::size_t i = 0; i < node.vertices.size(); ++i) {
                if (i) label += ',';
                label += g.label(node.vertices[i]);
            }
        }
        out << "  " << names.back() << " [shape=" << (node.kind == NodeKind::Bag ? "box" : "ellipse")
            << ", label=" << dot_quoted(label);
        if (node.centroid) out << ", pos=\"" << fixed(node.centroid->x) << ',' << fixed(node.centroid->y) << "!\"";
        out << "];\n";
    }
    for (const auto& e : dg.edges) {
        out << "  " << names[e.a] << " -- " << names[e.b];
        if (e.multiplicity > 1) out << " [label=\"" << e.multiplicity << "\"]";
        out << ";\n";
    }
    out << "}\n";
}

void write_sweep(std::ostream& out, std::span<const SweepRow> rows) {
    out << "d,cutvertices,clusters,largest_cluster\n";
    for (const auto& r : rows) out << r.d << ',' << r.cutvertices << ',' << r.clusters << ',' << r.largest_cluster << '\n';
}

void write_meta(std::ostream& out, const RunMeta& meta) {
    nlohmann::ordered_json j;
    j["command"] = meta.command;
    j["input_digest"] = meta.input_digest;
    j["d"] = meta.d ? nlohmann::ordered_json(*meta.d) : nlohmann::ordered_json(nullptr);
    j["scale"] = meta.scale;
    j["jobs"] = meta.jobs;
    j["R"] = meta.r_statistic ? nlohmann::ordered_json(*meta.r_statistic) : nlohmann::ordered_json(nullptr);
    auto& phases = j["phase_seconds"] = nlohmann::ordered_json::object();
    for (const auto& [name, secs] : meta.phase_seconds) phases[name] = secs;
    j["counts"] = meta.counts;
    out << j.dump(2) << '\n';
}

}  // namespace localsep::io
