// graph6 codec (bit-exact), DIMACS "p edge" and plain edge-list ingestion,
// and line-oriented streaming over files or stdin.
#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

namespace detail {

inline bool g6_byte_ok(unsigned char c) { return c >= 63 && c <= 126; }

// Reads N(n): 1 byte for n <= 62, '~' + 3 bytes for n <= 258047,
// '~~' + 6 bytes above. Returns (n, bytes consumed).
inline std::pair<long long, std::size_t> parse_g6_order(std::string_view rec) {
    if (rec.empty()) throw MalformedInput("graph6: empty record");
    for (char c : rec)
        if (!g6_byte_ok(static_cast<unsigned char>(c)))
            throw MalformedInput("graph6: byte outside 63..126");
    if (rec[0] != '~') return {rec[0] - 63, 1};
    if (rec.size() >= 2 && rec[1] != '~') {
        if (rec.size() < 4) throw MalformedInput("graph6: truncated order field");
        long long n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (rec[i] - 63);
        return {n, 4};
    }
    if (rec.size() < 8) throw MalformedInput("graph6: truncated order field");
    long long n = 0;
    for (int i = 2; i <= 7; ++i) n = (n << 6) | (rec[i] - 63);
    return {n, 8};
}

}  // namespace detail

// One graph6 record (optionally prefixed by the ">>graph6<<" header).
// Upper-triangle bits in column-major order x(0,1),x(0,2),x(1,2),x(0,3),...
// packed big-endian into 6-bit groups, each stored as byte value+63.
// Rejects stray bytes, truncation and nonzero padding.
inline Graph parse_graph6(std::string_view record, int max_n = kMaxVertices) {
    constexpr std::string_view header = ">>graph6<<";
    if (record.substr(0, header.size()) == header) record.remove_prefix(header.size());
    while (!record.empty() && (record.back() == '\n' || record.back() == '\r'))
        record.remove_suffix(1);

    auto [n_ll, off] = detail::parse_g6_order(record);
    if (n_ll > max_n)
        throw SizeCapExceeded("graph6: vertex count above cap", static_cast<int>(n_ll), max_n);
    const int n = static_cast<int>(n_ll);

    const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    const long long ngroups = (nbits + 5) / 6;
    if (static_cast<long long>(record.size()) - static_cast<long long>(off) != ngroups)
        throw MalformedInput("graph6: payload length mismatch");

    std::vector<Mask> rows(n, 0);
    long long bit = 0;
    for (long long gidx = 0; gidx < ngroups; ++gidx) {
        int group = record[off + gidx] - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            int value = (group >> b) & 1;
            if (bit >= nbits) {
                if (value) throw MalformedInput("graph6: nonzero padding bits");
                continue;
            }
            if (value) {
                // column-major: recover (i, j) with i < j from the bit index
                long long k = bit;
                int j = 1;
                while (k >= j) { k -= j; ++j; }
                int i = static_cast<int>(k);
                rows[i] |= Mask{1} << j;
                rows[j] |= Mask{1} << i;
            }
        }
    }
    return Graph::from_adjacency_rows(std::move(rows));
}

// Writer is the exact inverse; no header, zero padding, deterministic.
inline std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62)  // never reachable under kMaxVertices, kept as a format guard
        throw SizeCapExceeded("write_graph6: only the short order form is emitted", n, 62);
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

// DIMACS: "p edge n m" then "e u v" lines, vertices 1-based, 'c' comments.
inline Graph parse_dimacs(std::istream& in, int max_n = kMaxVertices) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long nn = -1, mm = -1;
            if (!(ls >> kind >> nn >> mm) || kind != "edge" || nn < 0)
                throw MalformedInput("dimacs: bad problem line: " + line);
            if (nn > max_n)
                throw SizeCapExceeded("dimacs: vertex count above cap", static_cast<int>(nn), max_n);
            n = static_cast<int>(nn);
        } else if (tag == "e") {
            if (n < 0) throw MalformedInput("dimacs: edge before problem line");
            int u, v;
            if (!(ls >> u >> v)) throw MalformedInput("dimacs: bad edge line: " + line);
            if (u < 1 || v < 1 || u > n || v > n)
                throw MalformedInput("dimacs: endpoint out of range: " + line);
            if (u == v) throw MalformedInput("dimacs: self-loop: " + line);
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw MalformedInput("dimacs: unrecognized line: " + line);
        }
    }
    if (n < 0) throw MalformedInput("dimacs: missing problem line");
    return Graph::from_edges(n, edges);
}

// Edge list: first non-comment line n, then "u v" lines, 0-based, '#' comments.
inline Graph parse_edgelist(std::istream& in, int max_n = kMaxVertices) {
    std::string line;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        ls >> std::ws;
        if (ls.eof() || ls.peek() == '#') continue;
        if (n < 0) {
            if (!(ls >> n) || n < 0) throw MalformedInput("edgelist: bad vertex count line");
            if (n > max_n)
                throw SizeCapExceeded("edgelist: vertex count above cap", static_cast<int>(n), max_n);
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) throw MalformedInput("edgelist: bad edge line: " + line);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw MalformedInput("edgelist: endpoint out of range: " + line);
        if (u == v) throw MalformedInput("edgelist: self-loop: " + line);
        edges.emplace_back(u, v);
    }
    if (n < 0) throw MalformedInput("edgelist: empty document");
    return Graph::from_edges(static_cast<int>(n), edges);
}

enum class GraphFormat { graph6, dimacs, edgelist };

inline std::optional<GraphFormat> graph_format_from_name(std::string_view name) {
    if (name == "g6" || name == "graph6") return GraphFormat::graph6;
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "edgelist") return GraphFormat::edgelist;
    return std::nullopt;
}

// One stream record: either a graph or a positioned parse error.
struct StreamRecord {
    int line = 0;  // 1-based line number of the record (graph6), 0 for documents
    std::optional<Graph> graph;
    std::string error;  // empty iff graph holds a value
};

// Lazily yields one Graph per record (graph6: per line; dimacs/edgelist: the
// whole document is one record). In lenient mode a malformed record comes
// back as a positioned error and the stream continues; strict mode throws.
class GraphStream {
public:
    GraphStream(std::istream& in, GraphFormat format, bool strict = false,
                int max_n = kMaxVertices)
        : in_(in), format_(format), strict_(strict), max_n_(max_n) {}

    std::optional<StreamRecord> next() {
        if (format_ != GraphFormat::graph6) {
            if (document_done_) return std::nullopt;
            document_done_ = true;
            ++consumed_;
            try {
                Graph g = format_ == GraphFormat::dimacs ? parse_dimacs(in_, max_n_)
                                                         : parse_edgelist(in_, max_n_);
                return StreamRecord{0, std::move(g), {}};
            } catch (const std::exception& e) {
                if (strict_) throw;
                return StreamRecord{0, std::nullopt, e.what()};
            }
        }
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            ++consumed_;
            try {
                return StreamRecord{line_no_, parse_graph6(line, max_n_), {}};
            } catch (const std::exception& e) {
                if (strict_)
                    throw MalformedInput("line " + std::to_string(line_no_) + ": " + e.what());
                return StreamRecord{line_no_, std::nullopt,
                                    "line " + std::to_string(line_no_) + ": " + e.what()};
            }
        }
        return std::nullopt;
    }

    // Number of records consumed so far (good and bad).
    int records_consumed() const { return consumed_; }

private:
    std::istream& in_;
    GraphFormat format_;
    bool strict_;
    int max_n_;
    int line_no_ = 0;
    int consumed_ = 0;
    bool document_done_ = false;
};

}  // namespace folkman
