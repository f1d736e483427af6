// Named graph families: cycles, paths, cliques, complete bipartite graphs,
// the hexagon-plus-triangle gadget, and the (generalized) Mycielski
// construction.
#pragma once

#include <span>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

inline Graph cycle_graph(int n) {
    if (n < 3) throw MalformedInput("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n) {
    if (n < 1) throw MalformedInput("path_graph: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw MalformedInput("complete_graph: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

inline Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw MalformedInput("complete_bipartite_graph: need a, b >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges);
}

inline Graph edgeless_graph(int n) {
    if (n < 1) throw MalformedInput("edgeless_graph: need n >= 1");
    return Graph::from_edges(n, {});
}

enum class BasicFamily { cycle, path, complete, complete_bipartite, edgeless };

inline Graph basic_graph(BasicFamily family, std::span<const int> params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw MalformedInput("basic_graph: wrong parameter count");
    };
    switch (family) {
        case BasicFamily::cycle: need(1); return cycle_graph(params[0]);
        case BasicFamily::path: need(1); return path_graph(params[0]);
        case BasicFamily::complete: need(1); return complete_graph(params[0]);
        case BasicFamily::complete_bipartite: need(2); return complete_bipartite_graph(params[0], params[1]);
        case BasicFamily::edgeless: need(1); return edgeless_graph(params[0]);
    }
    throw MalformedInput("basic_graph: unknown family");
}

// Mycielski construction on 2n+1 vertices: originals 0..n-1 keep their
// edges, shadow n+i sees exactly the base neighbours of i, the apex 2n
// sees all shadows. Raises the chromatic number by one and preserves
// triangle-freeness.
inline Graph mycielski(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw PreconditionViolated("mycielski: need at least one vertex");
    if (2 * n + 1 > kMaxVertices)
        throw SizeCapExceeded("mycielski", 2 * n + 1, kMaxVertices);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(n + u, v);
        edges.emplace_back(u, n + v);
    }
    for (int i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
    return Graph::from_edges(2 * n + 1, edges);
}

// M_k: M_2 = C5, M_k = mycielski(M_{k-1}); |V(M_k)| = 3 * 2^(k-1) - 1.
inline Graph mycielski_iterated(int k) {
    if (k < 2) throw PreconditionViolated("mycielski_iterated: need k >= 2");
    Graph g = cycle_graph(5);
    for (int i = 3; i <= k; ++i) g = mycielski(g);
    return g;
}

// M'_{k,l}: k-2 Mycielski steps applied to the odd cycle C_{2l+1};
// |V| = (l+1) * 2^(k-1) - 1, and M'_{k,2} = M_k.
inline Graph generalized_mycielski(int k, int ell) {
    if (k < 2) throw PreconditionViolated("generalized_mycielski: need k >= 2");
    if (ell < 2) throw PreconditionViolated("generalized_mycielski: need ell >= 2");
    Graph g = cycle_graph(2 * ell + 1);
    for (int i = 3; i <= k; ++i) g = mycielski(g);
    return g;
}

// The hexagon v1..v6 plus the triangle v1 v3 v5 (vertices 0, 2, 4 here):
// 1-near-bipartite yet no single deletion makes it bipartite.
inline Graph fig1_gadget() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                 {0, 2}, {2, 4}, {4, 0}});
}

}  // namespace folkman
