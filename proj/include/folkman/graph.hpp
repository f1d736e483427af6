// Immutable simple undirected graph over bit-mask adjacency rows, with the
// induced-subgraph / deletion / merge / apex primitives every reduction in
// the library is built from.
#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "folkman/core.hpp"

namespace folkman {

class Graph {
public:
    Graph() = default;  // null graph

    // Collapses duplicate pairs; rejects loops and out-of-range endpoints.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
        if (n < 0 || n > kMaxVertices)
            throw SizeCapExceeded("graph vertex count out of range", n, kMaxVertices);
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, 0);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw MalformedInput("edge endpoint out of range: " + std::to_string(u) +
                                     " " + std::to_string(v));
            if (u == v)
                throw MalformedInput("self-loop at vertex " + std::to_string(u));
            g.adj_[u] |= Mask{1} << v;
            g.adj_[v] |= Mask{1} << u;
        }
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    // Rows must already be symmetric and loop-free; used by parsers/builders.
    static Graph from_adjacency_rows(std::vector<Mask> rows) {
        const int n = static_cast<int>(rows.size());
        if (n > kMaxVertices)
            throw SizeCapExceeded("graph vertex count out of range", n, kMaxVertices);
        Graph g;
        g.n_ = n;
        g.adj_ = std::move(rows);
        for (int v = 0; v < n; ++v) {
            if (g.adj_[v] & ~VertexSet::first_n(n).bits)
                throw MalformedInput("adjacency bit beyond vertex count");
            if ((g.adj_[v] >> v) & 1u)
                throw MalformedInput("self-loop in adjacency row");
            for (int u : VertexSet(g.adj_[v]))
                if (!((g.adj_[u] >> v) & 1u))
                    throw MalformedInput("asymmetric adjacency rows");
        }
        return g;
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (Mask row : adj_) twice += std::popcount(row);
        return twice / 2;
    }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }

    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    VertexSet closed_neighborhood(int v) const { return VertexSet(adj_[v] | (Mask{1} << v)); }
    int degree(int v) const { return std::popcount(adj_[v]); }

    VertexSet vertices() const { return VertexSet::first_n(n_); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < n_; ++v)
            for (int u : neighbors(v))
                if (u > v) out.emplace_back(v, u);
        return out;
    }

    // True iff s spans no edge.
    bool is_independent_set(VertexSet s) const {
        for (int v : s)
            if (neighbors(v).intersects(s)) return false;
        return true;
    }

    bool is_clique(VertexSet s) const {
        for (int v : s)
            if (((neighbors(v) & s) | VertexSet::single(v)) != s) return false;
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    int n_ = 0;
    std::vector<Mask> adj_;
};

// ------------------------------------------------------------ primitives --

// G[s]. Surviving vertices are compacted in ascending order; old_to_new (if
// requested) maps every original index to its new one, -1 for dropped.
inline Graph induced_subgraph(const Graph& g, VertexSet s,
                              std::vector<int>* old_to_new = nullptr) {
    if (!s.subset_of(g.vertices()))
        throw MalformedInput("induced_subgraph: subset has bits beyond vertex count");
    std::vector<int> map(g.vertex_count(), -1);
    std::vector<int> keep = s.to_vector();
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) map[keep[i]] = i;
    std::vector<Mask> rows(keep.size(), 0);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        for (int u : g.neighbors(keep[i]) & s)
            rows[i] |= Mask{1} << map[u];
    if (old_to_new) *old_to_new = std::move(map);
    return Graph::from_adjacency_rows(std::move(rows));
}

// G - s.
inline Graph delete_vertices(const Graph& g, VertexSet s,
                             std::vector<int>* old_to_new = nullptr) {
    if (!s.subset_of(g.vertices()))
        throw MalformedInput("delete_vertices: subset has bits beyond vertex count");
    return induced_subgraph(g, g.vertices() - s, old_to_new);
}

// Contracts each part to a single vertex (neighborhood = union of members'
// neighborhoods), collapsing multi-edges. Parts must be disjoint, non-empty
// and independent; merging adjacent vertices would create a loop. The merged
// vertex inherits the smallest index of its part, survivors are compacted in
// ascending order.
inline Graph merge_vertices(const Graph& g, std::span<const VertexSet> parts,
                            std::vector<int>* old_to_new = nullptr) {
    VertexSet seen;
    for (const VertexSet& p : parts) {
        if (p.empty()) throw PreconditionViolated("merge_vertices: empty part");
        if (!p.subset_of(g.vertices()))
            throw MalformedInput("merge_vertices: part has bits beyond vertex count");
        if (p.intersects(seen)) throw PreconditionViolated("merge_vertices: parts overlap");
        if (!g.is_independent_set(p))
            throw PreconditionViolated("merge_vertices: part contains adjacent vertices");
        seen |= p;
    }

    const int n = g.vertex_count();
    std::vector<int> rep(n);  // representative old index for every old index
    for (int v = 0; v < n; ++v) rep[v] = v;
    for (const VertexSet& p : parts) {
        int r = p.lowest();
        for (int v : p) rep[v] = r;
    }
    std::vector<int> survivors;
    for (int v = 0; v < n; ++v)
        if (rep[v] == v) survivors.push_back(v);

    std::vector<int> new_index(n, -1);
    for (int i = 0; i < static_cast<int>(survivors.size()); ++i) new_index[survivors[i]] = i;
    std::vector<int> map(n);
    for (int v = 0; v < n; ++v) map[v] = new_index[rep[v]];

    std::vector<Mask> rows(survivors.size(), 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) {
            int a = map[v], b = map[u];
            if (a != b) rows[a] |= Mask{1} << b;
        }
    if (old_to_new) *old_to_new = std::move(map);
    return Graph::from_adjacency_rows(std::move(rows));
}

inline Graph merge_vertices(const Graph& g, std::initializer_list<VertexSet> parts,
                            std::vector<int>* old_to_new = nullptr) {
    return merge_vertices(g, std::span<const VertexSet>(parts.begin(), parts.size()), old_to_new);
}

// New vertex gets index n and is adjacent exactly to nbrs.
inline Graph add_vertex_with_neighborhood(const Graph& g, VertexSet nbrs) {
    if (!nbrs.subset_of(g.vertices()))
        throw MalformedInput("add_vertex_with_neighborhood: bits beyond vertex count");
    const int n = g.vertex_count();
    if (n + 1 > kMaxVertices)
        throw SizeCapExceeded("add_vertex_with_neighborhood", n + 1, kMaxVertices);
    std::vector<Mask> rows(n + 1, 0);
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v).bits;
    for (int u : nbrs) {
        rows[u] |= Mask{1} << n;
        rows[n] |= Mask{1} << u;
    }
    return Graph::from_adjacency_rows(std::move(rows));
}

inline Graph complement_graph(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Mask> rows(n, 0);
    for (int v = 0; v < n; ++v)
        rows[v] = VertexSet::first_n(n).bits & ~g.neighbors(v).bits & ~(Mask{1} << v);
    return Graph::from_adjacency_rows(std::move(rows));
}

}  // namespace folkman
