// The potential rho(H) = |V(H)| - 2*alpha(H) + 2, the Folkman number
// f(G) = max rho over induced subgraphs (null subgraph included, value 2),
// exact independence ratios, half-stability and k-near-bipartiteness.
#pragma once

#include <optional>
#include <vector>

#include "folkman/solvers.hpp"

namespace folkman {

inline constexpr int kSubsetTableCap = 24;

// Subset S together with alpha and rho of G[S]; rho = |S| - 2*alpha + 2.
// The null subset is a valid witness with alpha = 0, rho = 2.
struct PotentialWitness {
    VertexSet subset;
    int alpha = 0;
    int rho = 2;
};

inline int potential(const Graph& g, const SolverBudget& budget = {}) {
    return g.vertex_count() - 2 * independence_number(g, budget).alpha + 2;
}

struct FolkmanNumberResult {
    int f = 2;
    PotentialWitness witness;
};

namespace detail {

// Maximizing subset with ties broken by smallest size, then least mask.
struct BestSubset {
    long long value = -1;
    int size = 0;
    Mask mask = 0;

    bool offer(long long v, int s, Mask m) {
        if (v > value || (v == value && (s < size || (s == size && m < mask)))) {
            value = v;
            size = s;
            mask = m;
            return true;
        }
        return false;
    }
};

// Branch search used above the subset-table cap: include/exclude each vertex,
// pruned by rho(S u T) <= |S| + |T| - 2*alpha(S) + 2.
struct PotentialBranchSearch {
    const Graph& g;
    BudgetClock& clock;
    BestSubset best;

    PotentialBranchSearch(const Graph& graph, BudgetClock& clk) : g(graph), clock(clk) {}

    void run(int v, VertexSet s) {
        clock.tick();
        const int n = g.vertex_count();
        const int alpha_s = independence_number(induced_subgraph(g, s)).alpha;
        best.offer(s.count() - 2 * alpha_s + 2, s.count(), s.bits);
        if (v == n) return;
        if (s.count() + (n - v) - 2 * alpha_s + 2 <= best.value) return;
        run(v + 1, s | VertexSet::single(v));
        run(v + 1, s);
    }
};

}  // namespace detail

// f(G) = max over all S (including the empty set) of |S| - 2*alpha(G[S]) + 2.
// Subset-table path up to n = 24, budget-bounded branch search above.
inline FolkmanNumberResult folkman_number(const Graph& g, const SolverBudget& budget = {}) {
    const int n = g.vertex_count();
    detail::BestSubset best;
    best.offer(2, 0, 0);  // null subgraph
    if (n <= kSubsetTableCap) {
        const auto alpha = independence_numbers_all_subsets(g);
        for (Mask s = 1; s < (Mask{1} << n); ++s)
            best.offer(std::popcount(s) - 2 * static_cast<int>(alpha[s]) + 2,
                       std::popcount(s), s);
    } else {
        detail::BudgetClock clock(budget);
        detail::PotentialBranchSearch search(g, clock);
        try {
            search.run(0, VertexSet{});
        } catch (const detail::BudgetInterrupt&) {
            throw BudgetExceeded("folkman_number: budget exhausted",
                                 search.best.value, n + 2);
        }
        best = search.best;
    }
    VertexSet w(best.mask);
    return {static_cast<int>(best.value),
            PotentialWitness{w, (w.count() - static_cast<int>(best.value) + 2) / 2,
                             static_cast<int>(best.value)}};
}

struct MirResult {
    Rational mir;
    VertexSet argmin;
    Rational hall_ratio;
};

// Exact minimum of alpha(G[S]) / |S| over non-empty S, with the argmin
// tie-broken by smallest size then least mask. Hall ratio is the inverse.
inline MirResult min_independence_ratio(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw MalformedInput("min_independence_ratio: null graph");
    if (n > kSubsetTableCap)
        throw SizeCapExceeded("min_independence_ratio", n, kSubsetTableCap);
    const auto alpha = independence_numbers_all_subsets(g);
    int best_alpha = 1, best_size = 1;
    Mask best_mask = 1;
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        const int a = alpha[s], sz = std::popcount(s);
        const long long lhs = static_cast<long long>(a) * best_size;
        const long long rhs = static_cast<long long>(best_alpha) * sz;
        if (lhs < rhs ||
            (lhs == rhs && (sz < best_size || (sz == best_size && s < best_mask)))) {
            best_alpha = a;
            best_size = sz;
            best_mask = s;
        }
    }
    Rational mir(best_alpha, best_size);
    return {mir, VertexSet(best_mask), mir.inverse()};
}

struct HalfStableDeletionResult {
    int k = 0;
    VertexSet witness;
};

inline bool is_half_stable(const Graph& g) {
    // null graph is half-stable by convention
    return 2 * independence_number(g).alpha >= g.vertex_count();
}

// Smallest |Y| with alpha(G-Y) >= |V(G-Y)| / 2; Y scanned by size then mask.
inline HalfStableDeletionResult min_deletion_to_half_stable(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kSubsetTableCap)
        throw SizeCapExceeded("min_deletion_to_half_stable", n, kSubsetTableCap);
    if (n == 0) return {0, VertexSet{}};
    const auto alpha = independence_numbers_all_subsets(g);
    const Mask full = VertexSet::first_n(n).bits;
    for (int t = 0; t <= n; ++t) {
        std::optional<VertexSet> found;
        detail::for_each_subset_of_size(n, t, [&](Mask y) {
            const Mask rest = full & ~y;
            if (2 * static_cast<int>(alpha[rest]) >= n - t) {
                found = VertexSet(y);
                return false;
            }
            return true;
        });
        if (found) return {t, *found};
    }
    return {n, VertexSet(full)};  // unreachable: the empty graph is half-stable
}

struct NearBipartiteResult {
    bool holds = false;
    // when false: an induced subgraph with rho > k + 2
    std::optional<PotentialWitness> violating_subgraph;
};

// Every induced subgraph becomes half-stable after deleting at most k
// vertices, equivalently f(G) <= k + 2.
inline NearBipartiteResult is_k_near_bipartite(const Graph& g, int k) {
    if (g.vertex_count() > kSubsetTableCap)
        throw SizeCapExceeded("is_k_near_bipartite", g.vertex_count(), kSubsetTableCap);
    FolkmanNumberResult f = folkman_number(g);
    if (f.f <= k + 2) return {true, std::nullopt};
    return {false, f.witness};
}

struct FolkmanBoundReport {
    int chi = 0;
    int f = 2;
    bool holds = false;
    ColoringCertificate chi_certificate;
    PotentialWitness f_witness;
};

inline FolkmanBoundReport check_folkman_bound(const Graph& g, const SolverBudget& budget = {}) {
    ChromaticResult chi = chromatic_number(g, budget);
    FolkmanNumberResult f = folkman_number(g, budget);
    return {chi.chi, f.f, chi.chi <= f.f, std::move(chi.certificate), f.witness};
}

}  // namespace folkman
