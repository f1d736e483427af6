// Exact NP-hard kernels on bit-mask graphs: maximum independent set,
// clique, k-colourability and chromatic number, girth, even holes,
// diamonds and odd cycle transversal. Every solver returns a certificate
// and obeys an optional node/time budget.
#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

// Proper colour assignment proving chi <= k: colours are 1..k, adjacent
// vertices differ, every colour is used at least once.
struct ColoringCertificate {
    std::vector<int> colors;
    int k = 0;
};

// Properness alone: colours lie in 1..k and adjacent vertices differ.
inline bool is_proper_assignment(const Graph& g, const ColoringCertificate& cert) {
    if (static_cast<int>(cert.colors.size()) != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = cert.colors[v];
        if (c < 1 || c > cert.k) return false;
        for (int u : g.neighbors(v))
            if (cert.colors[u] == c) return false;
    }
    return true;
}

// Full certificate validity: proper and every colour 1..k used.
inline bool is_proper_coloring(const Graph& g, const ColoringCertificate& cert) {
    if (!is_proper_assignment(g, cert)) return false;
    std::vector<bool> used(cert.k + 1, false);
    for (int c : cert.colors) used[c] = true;
    for (int c = 1; c <= cert.k; ++c)
        if (!used[c]) return false;
    return true;
}

namespace detail {

struct BudgetInterrupt {};

class BudgetClock {
public:
    explicit BudgetClock(const SolverBudget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    void tick() {
        ++nodes_;
        if (budget_.max_nodes && nodes_ > *budget_.max_nodes) throw BudgetInterrupt{};
        if (budget_.max_millis && (*budget_.max_millis == 0 || (nodes_ & 1023u) == 0)) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
            if (static_cast<std::uint64_t>(ms) >= *budget_.max_millis) throw BudgetInterrupt{};
        }
    }

private:
    SolverBudget budget_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

// Greedy clique cover of g[p]; the number of cliques bounds alpha(g[p]).
inline int clique_cover_bound(const Graph& g, VertexSet p) {
    int cliques = 0;
    while (!p.empty()) {
        int v = p.lowest();
        VertexSet clique = VertexSet::single(v);
        VertexSet cand = p & g.neighbors(v);
        p.remove(v);
        while (!cand.empty()) {
            int u = cand.lowest();
            clique.add(u);
            p.remove(u);
            cand &= g.neighbors(u);
        }
        ++cliques;
    }
    return cliques;
}

struct MisSearch {
    const Graph& g;
    BudgetClock& clock;
    int best = -1;
    VertexSet best_set;

    MisSearch(const Graph& graph, BudgetClock& clk) : g(graph), clock(clk) {}

    void run(VertexSet p, VertexSet chosen, int size) {
        clock.tick();
        if (p.empty()) {
            if (size > best) {
                best = size;
                best_set = chosen;
            }
            return;
        }
        if (size + p.count() <= best) return;
        if (size + clique_cover_bound(g, p) <= best) return;

        // branch on a maximum-degree vertex of g[p], lowest index on ties
        int pick = -1, pick_deg = -1;
        for (int v : p) {
            int d = (g.neighbors(v) & p).count();
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        run(p - VertexSet::single(pick), chosen, size);                       // exclude
        run(p - (g.closed_neighborhood(pick) & p), chosen | VertexSet::single(pick),
            size + 1);                                                        // include
    }
};

inline std::pair<int, VertexSet> independence_number_impl(const Graph& g, BudgetClock& clock) {
    MisSearch search(g, clock);
    try {
        search.run(g.vertices(), VertexSet{}, 0);
    } catch (const BudgetInterrupt&) {
        throw BudgetExceeded("independence_number: budget exhausted",
                             search.best < 0 ? 0 : search.best, g.vertex_count());
    }
    return {search.best, search.best_set};
}

}  // namespace detail

struct IndependenceResult {
    int alpha = 0;
    VertexSet witness;
};

// Branch and bound: branch on a max-degree vertex (exclude vs include and
// delete the closed neighborhood), greedy clique cover as the upper bound.
inline IndependenceResult independence_number(const Graph& g, const SolverBudget& budget = {}) {
    detail::BudgetClock clock(budget);
    auto [alpha, witness] = detail::independence_number_impl(g, clock);
    return {alpha, witness};
}

struct CliqueResult {
    int omega = 0;
    VertexSet witness;
};

inline CliqueResult clique_number(const Graph& g, const SolverBudget& budget = {}) {
    try {
        IndependenceResult r = independence_number(complement_graph(g), budget);
        return {r.alpha, r.witness};
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded("clique_number: budget exhausted", e.lower_bound, e.upper_bound);
    }
}

// Exactly the independent sets of maximum size, in ascending mask order.
inline std::vector<VertexSet> all_maximum_independent_sets(const Graph& g,
                                                           int enumeration_cap = 20) {
    const int n = g.vertex_count();
    if (n > enumeration_cap)
        throw SizeCapExceeded("all_maximum_independent_sets", n, enumeration_cap);
    const int alpha = independence_number(g).alpha;
    std::vector<VertexSet> out;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        VertexSet s(m);
        if (s.count() == alpha && g.is_independent_set(s)) out.push_back(s);
    }
    return out;
}

// alpha(G[S]) for every S, via alpha(S) = max(alpha(S\v), 1 + alpha(S\N[v]))
// with v the lowest vertex of S. Table index = subset mask.
inline std::vector<std::uint8_t> independence_numbers_all_subsets(const Graph& g,
                                                                  int cap = 24) {
    const int n = g.vertex_count();
    if (n > cap) throw SizeCapExceeded("independence_numbers_all_subsets", n, cap);
    std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        int v = std::countr_zero(s);
        std::uint8_t without = table[s & (s - 1)];
        std::uint8_t with = static_cast<std::uint8_t>(1 + table[s & ~g.closed_neighborhood(v).bits]);
        table[s] = std::max(without, with);
    }
    return table;
}

namespace detail {

struct ColoringSearch {
    const Graph& g;
    int k;
    BudgetClock& clock;
    Mask full_palette;
    std::vector<int> order;      // fixed: descending degree, ties by index
    std::vector<int> color;      // 1..k, 0 = unassigned, indexed by vertex
    std::vector<Mask> forbidden; // bit c-1 set = colour c blocked, indexed by vertex

    ColoringSearch(const Graph& graph, int colors, BudgetClock& clk)
        : g(graph), k(colors), clock(clk),
          full_palette(k >= kMaxVertices ? ~Mask{0} : (Mask{1} << k) - 1),
          color(graph.vertex_count(), 0), forbidden(graph.vertex_count(), 0) {
        order.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    bool dfs(int pos) {
        clock.tick();
        if (pos == g.vertex_count()) return true;
        const int v = order[pos];
        // colour-symmetry breaking: position i may only use colours 1..i+1
        const int cmax = std::min(pos + 1, k);
        const Mask palette = cmax >= kMaxVertices ? ~Mask{0} : (Mask{1} << cmax) - 1;
        Mask allowed = palette & ~forbidden[v];
        while (allowed) {
            const int c = std::countr_zero(allowed) + 1;
            const Mask bit = allowed & (~allowed + 1);
            allowed &= allowed - 1;
            color[v] = c;
            bool dead = false;
            VertexSet touched;
            for (int u : g.neighbors(v)) {
                if (color[u] != 0 || (forbidden[u] & bit)) continue;
                forbidden[u] |= bit;
                touched.add(u);
                if ((forbidden[u] & full_palette) == full_palette) dead = true;
            }
            if (!dead && dfs(pos + 1)) return true;
            for (int u : touched) forbidden[u] &= ~bit;
            color[v] = 0;
        }
        return false;
    }
};

// Relabels colours to 1..k in order of first appearance (backtracking and
// the extension procedures can leave gaps).
inline ColoringCertificate compact_colors(std::vector<int> colors) {
    int max_color = 0;
    for (int c : colors) max_color = std::max(max_color, c);
    std::vector<int> relabel(max_color + 1, 0);
    int next = 0;
    for (int& c : colors) {
        if (relabel[c] == 0) relabel[c] = ++next;
        c = relabel[c];
    }
    return {std::move(colors), next};
}

}  // namespace detail

namespace detail {

inline std::optional<ColoringCertificate> is_k_colorable_impl(const Graph& g, int k,
                                                              BudgetClock& clock) {
    if (k < 0) throw PreconditionViolated("is_k_colorable: negative k");
    if (g.vertex_count() == 0) return ColoringCertificate{{}, 0};
    if (k == 0) return std::nullopt;
    ColoringSearch search(g, k, clock);
    if (!search.dfs(0)) return std::nullopt;
    return compact_colors(std::move(search.color));
}

}  // namespace detail

// Backtracking in a fixed vertex order (descending degree, ties by index)
// with colour-symmetry breaking; nullopt iff no proper k-colouring exists.
inline std::optional<ColoringCertificate> is_k_colorable(const Graph& g, int k,
                                                         const SolverBudget& budget = {}) {
    detail::BudgetClock clock(budget);
    try {
        return detail::is_k_colorable_impl(g, k, clock);
    } catch (const detail::BudgetInterrupt&) {
        throw BudgetExceeded("is_k_colorable: budget exhausted", 0, 1);
    }
}

struct ChromaticResult {
    int chi = 0;
    ColoringCertificate certificate;
};

// Smallest k admitting a proper k-colouring; starts at the clique bound.
// One budget clock covers the clique bound and every colourability probe.
inline ChromaticResult chromatic_number(const Graph& g, const SolverBudget& budget = {}) {
    if (g.vertex_count() == 0) return {0, {{}, 0}};
    detail::BudgetClock clock(budget);
    int lo = 1;
    try {
        lo = std::max(1, detail::independence_number_impl(complement_graph(g), clock).first);
        for (int k = lo;; ++k) {
            if (auto cert = detail::is_k_colorable_impl(g, k, clock))
                return {k, std::move(*cert)};
            lo = k + 1;
        }
    } catch (const detail::BudgetInterrupt&) {
        throw BudgetExceeded("chromatic_number: budget exhausted", lo, g.vertex_count());
    } catch (const BudgetExceeded&) {
        throw BudgetExceeded("chromatic_number: budget exhausted", lo, g.vertex_count());
    }
}

struct CycleResult {
    std::vector<int> cycle;  // vertices in cyclic order
    int girth = 0;
};

namespace detail {

// Rotates so the smallest vertex comes first, then the smaller neighbour.
inline void normalize_cycle(std::vector<int>& c) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    if (c.size() >= 3 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
}

}  // namespace detail

// BFS from every vertex; none iff the graph is a forest.
inline std::optional<CycleResult> shortest_cycle(const Graph& g) {
    const int n = g.vertex_count();
    std::optional<CycleResult> best;
    std::vector<int> dist(n), parent(n), queue(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        int head = 0, tail = 0;
        queue[tail++] = s;
        dist[s] = 0;
        while (head < tail) {
            int u = queue[head++];
            if (best && 2 * dist[u] >= best->girth) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                    continue;
                }
                if (w == parent[u]) continue;
                const int len = dist[u] + dist[w] + 1;
                if (best && len >= best->girth) continue;
                // reconstruct: s..u plus w..s, then validate
                std::vector<int> up, wp;
                for (int x = u; x != -1; x = parent[x]) up.push_back(x);
                for (int x = w; x != -1; x = parent[x]) wp.push_back(x);
                std::vector<int> cyc(up.rbegin(), up.rend());
                cyc.insert(cyc.end(), wp.begin(), wp.end() - 1);
                if (static_cast<int>(cyc.size()) != len) continue;
                VertexSet distinct;
                bool ok = true;
                for (std::size_t i = 0; i < cyc.size() && ok; ++i) {
                    if (distinct.contains(cyc[i])) ok = false;
                    distinct.add(cyc[i]);
                    if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) ok = false;
                }
                if (!ok) continue;
                detail::normalize_cycle(cyc);
                best = CycleResult{std::move(cyc), len};
            }
        }
    }
    return best;
}

// Induced chordless cycle of even length >= 4, preferring shortest then
// lexicographically least vertex set; subset enumeration by design.
inline std::optional<std::vector<int>> find_induced_even_cycle(const Graph& g,
                                                               int enumeration_cap = 24) {
    const int n = g.vertex_count();
    if (n > enumeration_cap) throw SizeCapExceeded("find_induced_even_cycle", n, enumeration_cap);
    std::optional<VertexSet> best;
    int best_size = 0;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        int size = std::popcount(m);
        if (size < 4 || (size & 1)) continue;
        if (best && (size > best_size || (size == best_size && m >= best->bits))) continue;
        VertexSet s(m);
        bool two_regular = true;
        for (int v : s)
            if ((g.neighbors(v) & s).count() != 2) {
                two_regular = false;
                break;
            }
        if (!two_regular) continue;
        // connected 2-regular = a single cycle: walk it
        int start = s.lowest();
        int prev = start, cur = (g.neighbors(start) & s).lowest(), steps = 1;
        while (cur != start) {
            VertexSet next = (g.neighbors(cur) & s) - VertexSet::single(prev);
            prev = cur;
            cur = next.lowest();
            ++steps;
        }
        if (steps != size) continue;
        best = s;
        best_size = size;
    }
    if (!best) return std::nullopt;
    // emit in cyclic order from the lowest vertex toward its smaller neighbour
    std::vector<int> cyc;
    int start = best->lowest();
    int prev = start, cur = (g.neighbors(start) & *best).lowest();
    cyc.push_back(start);
    while (cur != start) {
        cyc.push_back(cur);
        VertexSet next = (g.neighbors(cur) & *best) - VertexSet::single(prev);
        prev = cur;
        cur = next.lowest();
    }
    return cyc;
}

// The claim-(3) configuration: an edge xy with two nonadjacent common
// neighbours u, v. With uv a non-edge the 4-set induces exactly the five
// diamond edges, so `induced` is verified directly and reported.
struct DiamondResult {
    int x = -1, y = -1, u = -1, v = -1;
    bool induced = false;
};

inline std::optional<DiamondResult> find_diamond(const Graph& g) {
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y : g.neighbors(x)) {
            if (y <= x) continue;
            VertexSet common = g.neighbors(x) & g.neighbors(y);
            for (int u : common)
                for (int v : common) {
                    if (v <= u || g.has_edge(u, v)) continue;
                    VertexSet quad = VertexSet::of({x, y, u, v});
                    int edges = 0;
                    for (int a : quad) edges += (g.neighbors(a) & quad).count();
                    return DiamondResult{x, y, u, v, edges / 2 == 5};
                }
        }
    return std::nullopt;
}

inline bool is_bipartite(const Graph& g, std::vector<int>* side_out = nullptr) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = side[u] ^ 1;
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    if (side_out) *side_out = std::move(side);
    return true;
}

namespace detail {

// k-subsets of an n-bit universe in ascending mask order (Gosper).
template <typename Fn>
bool for_each_subset_of_size(int n, int k, Fn&& fn) {
    if (k == 0) return fn(Mask{0});
    if (k > n) return true;
    Mask s = (Mask{1} << k) - 1;
    const Mask limit = n >= kMaxVertices ? ~Mask{0} : (Mask{1} << n);
    while (s < limit) {
        if (!fn(s)) return false;
        Mask c = s & (~s + 1);
        Mask r = s + c;
        if (r >= limit || r < s) break;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return true;
}

}  // namespace detail

struct OctResult {
    int size = 0;
    VertexSet witness;
};

// Minimum vertex set whose deletion leaves a bipartite graph; iterative
// deepening over the deletion-set size, masks in ascending order.
inline OctResult odd_cycle_transversal(const Graph& g, const SolverBudget& budget = {}) {
    detail::BudgetClock clock(budget);
    const int n = g.vertex_count();
    for (int t = 0; t <= n; ++t) {
        std::optional<VertexSet> found;
        try {
            detail::for_each_subset_of_size(n, t, [&](Mask m) {
                clock.tick();
                if (is_bipartite(delete_vertices(g, VertexSet(m)))) {
                    found = VertexSet(m);
                    return false;
                }
                return true;
            });
        } catch (const detail::BudgetInterrupt&) {
            throw BudgetExceeded("odd_cycle_transversal: budget exhausted", t, n);
        }
        if (found) return {t, *found};
    }
    return {0, VertexSet{}};  // unreachable: deleting everything is bipartite
}

}  // namespace folkman
