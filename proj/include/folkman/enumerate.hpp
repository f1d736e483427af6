// Exhaustive small-graph enumeration: all labeled graphs, or one
// representative per isomorphism class. The canonical form is the
// lexicographically smallest adjacency bit string over all vertex
// permutations, bits in column-major upper-triangle order (the graph6
// order), found by permutation search with prefix pruning.
#pragma once

#include <optional>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

inline constexpr int kLabeledEnumerationCap = 7;
inline constexpr int kDedupEnumerationCap = 8;

namespace detail {

// col[j] packs the bits x(i,j) for i < j, x(0,j) most significant, so that
// integer comparison of columns equals lexicographic comparison of the
// adjacency bit string.
inline std::vector<Mask> adjacency_columns(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Mask> cols(n, 0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) cols[j] |= Mask{1} << (j - 1 - i);
    return cols;
}

inline Graph graph_from_columns(int n, const std::vector<Mask>& cols) {
    std::vector<Mask> rows(n, 0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((cols[j] >> (j - 1 - i)) & 1u) {
                rows[i] |= Mask{1} << j;
                rows[j] |= Mask{1} << i;
            }
    return Graph::from_adjacency_rows(std::move(rows));
}

inline Mask candidate_column(const Graph& g, const std::vector<int>& perm, int j) {
    Mask col = 0;
    for (int i = 0; i < j; ++i)
        if (g.has_edge(perm[i], perm[j])) col |= Mask{1} << (j - 1 - i);
    return col;
}

struct CanonicalTest {
    const Graph& g;
    const std::vector<Mask> ref;
    std::vector<int> perm;
    VertexSet used;

    explicit CanonicalTest(const Graph& graph)
        : g(graph), ref(adjacency_columns(graph)), perm(graph.vertex_count(), -1) {}

    // True iff some permutation yields a strictly smaller string.
    bool smaller_exists(int j) {
        const int n = g.vertex_count();
        if (j == n) return false;
        for (int v = 0; v < n; ++v) {
            if (used.contains(v)) continue;
            perm[j] = v;
            Mask col = candidate_column(g, perm, j);
            if (col < ref[j]) return true;   // any completion is smaller
            if (col > ref[j]) continue;      // any completion is larger
            used.add(v);
            if (smaller_exists(j + 1)) return true;
            used.remove(v);
        }
        return false;
    }
};

struct CanonicalSearch {
    const Graph& g;
    std::vector<Mask> best;
    std::vector<Mask> cur;
    std::vector<int> perm;
    VertexSet used;

    explicit CanonicalSearch(const Graph& graph)
        : g(graph), best(adjacency_columns(graph)), cur(graph.vertex_count(), 0),
          perm(graph.vertex_count(), -1) {}

    // cmp: -1 current prefix below best, 0 equal, +1 pruned before recursion.
    void run(int j, int cmp) {
        const int n = g.vertex_count();
        if (j == n) {
            if (cmp < 0 && cur < best) best = cur;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used.contains(v)) continue;
            perm[j] = v;
            Mask col = candidate_column(g, perm, j);
            int next_cmp = cmp;
            if (cmp == 0) {
                if (col > best[j]) continue;
                next_cmp = col < best[j] ? -1 : 0;
            }
            cur[j] = col;
            used.add(v);
            run(j + 1, next_cmp);
            used.remove(v);
        }
    }
};

}  // namespace detail

inline bool is_canonical(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    detail::CanonicalTest test(g);
    return !test.smaller_exists(0);
}

// The canonical representative of g's isomorphism class.
inline Graph canonical_form(const Graph& g) {
    if (g.vertex_count() <= 1) return g;
    detail::CanonicalSearch search(g);
    search.run(0, 0);
    return detail::graph_from_columns(g.vertex_count(), search.best);
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

// All canonical graphs on exactly n vertices. Generated level by level: a
// canonical graph minus its last vertex is canonical (columns of earlier
// vertices precede the last column in the bit string), so every class on
// n vertices arises exactly once by extending a canonical parent with a
// new last vertex and keeping the extensions that are canonical.
inline std::vector<Graph> all_canonical_graphs(int n, int cap = kDedupEnumerationCap) {
    if (n > cap) throw SizeCapExceeded("all_canonical_graphs", n, cap);
    if (n < 0) throw MalformedInput("all_canonical_graphs: negative n");
    std::vector<Graph> level{Graph{}};
    for (int m = 1; m <= n; ++m) {
        std::vector<Graph> next;
        for (const Graph& parent : level)
            for (Mask nb = 0; nb < (Mask{1} << (m - 1)); ++nb) {
                Graph candidate = add_vertex_with_neighborhood(parent, VertexSet(nb));
                if (is_canonical(candidate)) next.push_back(std::move(candidate));
            }
        level = std::move(next);
    }
    return level;
}

// Streams graphs on exactly n vertices in a fixed deterministic order:
// dedup=false walks all 2^(n(n-1)/2) labeled graphs by ascending edge mask;
// dedup=true walks canonical representatives in orderly-generation order.
class GraphEnumerator {
public:
    GraphEnumerator(int n, bool dedup,
                    int labeled_cap = kLabeledEnumerationCap,
                    int dedup_cap = kDedupEnumerationCap)
        : n_(n), dedup_(dedup) {
        if (n < 0) throw MalformedInput("GraphEnumerator: negative n");
        if (dedup) {
            if (n > dedup_cap) throw SizeCapExceeded("enumerate_graphs dedup", n, dedup_cap);
            if (n > 0) parents_ = all_canonical_graphs(n - 1, dedup_cap);
        } else {
            if (n > labeled_cap) throw SizeCapExceeded("enumerate_graphs labeled", n, labeled_cap);
            pairs_ = n * (n - 1) / 2;
        }
    }

    std::optional<Graph> next() {
        if (dedup_) return next_canonical();
        if (labeled_done_) return std::nullopt;
        Graph g = labeled_graph(n_, labeled_mask_);
        if (labeled_mask_ == (std::uint64_t{1} << pairs_) - 1)
            labeled_done_ = true;
        else
            ++labeled_mask_;
        return g;
    }

    // The labeled graph whose column-major upper-triangle bits equal `mask`
    // (bit 0 = pair (0,1), bit 1 = (0,2), bit 2 = (1,2), ...).
    static Graph labeled_graph(int n, std::uint64_t mask) {
        std::vector<Mask> rows(n, 0);
        int t = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if ((mask >> t) & 1u) {
                    rows[i] |= Mask{1} << j;
                    rows[j] |= Mask{1} << i;
                }
        return Graph::from_adjacency_rows(std::move(rows));
    }

private:
    std::optional<Graph> next_canonical() {
        if (n_ == 0) {
            if (null_emitted_) return std::nullopt;
            null_emitted_ = true;
            return Graph{};
        }
        while (parent_idx_ < parents_.size()) {
            while (nb_ < (Mask{1} << (n_ - 1))) {
                Graph candidate = add_vertex_with_neighborhood(parents_[parent_idx_], VertexSet(nb_));
                ++nb_;
                if (is_canonical(candidate)) return candidate;
            }
            nb_ = 0;
            ++parent_idx_;
        }
        return std::nullopt;
    }

    int n_;
    bool dedup_;
    // labeled state
    int pairs_ = 0;
    std::uint64_t labeled_mask_ = 0;
    bool labeled_done_ = false;
    // dedup state
    std::vector<Graph> parents_;
    std::size_t parent_idx_ = 0;
    Mask nb_ = 0;
    bool null_emitted_ = false;
};

}  // namespace folkman
