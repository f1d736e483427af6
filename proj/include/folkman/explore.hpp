// Parameterized generalizations: alpha_p (largest p-colourable induced
// subgraph), the f_p objective |S| - c*(alpha_p(S) - p), arithmetic audits
// of the generalized Mycielski family, exact Mycielski independence-ratio
// reports, and a small-scale search for the bipartization gap of
// k-near-bipartite graphs.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folkman/enumerate.hpp"
#include "folkman/families.hpp"
#include "folkman/invariants.hpp"
#include "folkman/io.hpp"

namespace folkman {

inline constexpr int kAlphaPCap = 20;
inline constexpr int kFpSweepCap = 16;

namespace detail {

// chi(g[s]) <= p, evaluated without building the induced subgraph for the
// cheap cases p = 1 (independence) and p = 2 (bipartiteness).
inline bool subset_chromatic_at_most(const Graph& g, VertexSet s, int p) {
    if (p >= s.count()) return true;
    if (p == 1) return g.is_independent_set(s);
    if (p == 2) {
        VertexSet todo = s, zero, one;
        while (!todo.empty()) {
            int root = todo.lowest();
            zero.add(root);
            VertexSet frontier = VertexSet::single(root);
            todo.remove(root);
            while (!frontier.empty()) {
                VertexSet next;
                for (int u : frontier) {
                    bool u_zero = zero.contains(u);
                    for (int w : g.neighbors(u) & s) {
                        if ((u_zero ? zero : one).contains(w)) return false;
                        VertexSet& side = u_zero ? one : zero;
                        if (!side.contains(w)) {
                            side.add(w);
                            next.add(w);
                            todo.remove(w);
                        }
                    }
                }
                frontier = next;
            }
        }
        return true;
    }
    return is_k_colorable(induced_subgraph(g, s), p).has_value();
}

}  // namespace detail

struct AlphaPResult {
    int size = 0;
    VertexSet witness;
};

// Largest induced subgraph with chromatic number at most p; the witness is
// the least mask among maximum-size subsets. alpha_1 coincides with the
// independence number.
inline AlphaPResult alpha_p(const Graph& g, int p, int cap = kAlphaPCap) {
    if (p < 1) throw PreconditionViolated("alpha_p: need p >= 1");
    const int n = g.vertex_count();
    if (n > cap) throw SizeCapExceeded("alpha_p", n, cap);
    for (int size = n; size >= 0; --size) {
        std::optional<VertexSet> found;
        detail::for_each_subset_of_size(n, size, [&](Mask m) {
            if (detail::subset_chromatic_at_most(g, VertexSet(m), p)) {
                found = VertexSet(m);
                return false;
            }
            return true;
        });
        if (found) return {size, *found};
    }
    return {0, VertexSet{}};
}

struct FpResult {
    Rational value;
    VertexSet witness;
};

// max over all S (the empty set included, contributing c*p) of
// |S| - c * (alpha_p(G[S]) - p), as an exact rational.
inline FpResult f_p_objective(const Graph& g, int p, Rational c, int cap = kFpSweepCap) {
    if (p < 1) throw PreconditionViolated("f_p_objective: need p >= 1");
    if (c <= Rational(0)) throw PreconditionViolated("f_p_objective: need c > 0");
    const int n = g.vertex_count();
    if (n > cap) throw SizeCapExceeded("f_p_objective", n, cap);

    // alpha_p for every subset: |S| when chi(G[S]) <= p, else the best
    // one-vertex deletion.
    std::vector<std::uint8_t> ap(std::size_t{1} << n, 0);
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        if (detail::subset_chromatic_at_most(g, VertexSet(s), p)) {
            ap[s] = static_cast<std::uint8_t>(std::popcount(s));
            continue;
        }
        std::uint8_t bestv = 0;
        for (Mask rest = s; rest;) {
            Mask bit = rest & (~rest + 1);
            rest &= rest - 1;
            bestv = std::max(bestv, ap[s & ~bit]);
        }
        ap[s] = bestv;
    }

    Rational best_value = c * Rational(p);  // S = empty
    Mask best_mask = 0;
    int best_size = 0;
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        Rational value = Rational(std::popcount(s)) - c * Rational(ap[s] - p);
        int size = std::popcount(s);
        if (value > best_value ||
            (value == best_value && (size < best_size || (size == best_size && s < best_mask)))) {
            best_value = value;
            best_mask = s;
            best_size = size;
        }
    }
    return {best_value, VertexSet(best_mask)};
}

// ------------------------------------------------- conclusion arithmetic --

struct GenMycielskiAudit {
    int k = 0;
    int ell = 0;
    Rational c;
    long long formula_vertices = 0;  // (ell+1) * 2^(k-1) - 1
    long long formula_alpha2 = 0;    // ell * 2^(k-1)
    std::optional<int> exact_vertices;  // absent when above the construction cap
    std::optional<int> exact_alpha2;    // absent when above the alpha_p cap
    std::optional<int> exact_chi;
    Rational f2_expression;          // formula_vertices - c * (formula_alpha2 - 2)
    bool expression_reaches_chi = false;  // f2_expression >= k + 1
};

// Evaluates the closed-form vertex count and alpha_2 of M'_{k,ell} against
// exact computation where feasible, and the f_2 expression at the given c.
// The inequality f_2 >= chi = k + 1 fails once ell is large enough.
inline GenMycielskiAudit audit_generalized_mycielski(int k, int ell, Rational c) {
    if (k < 2 || ell < 2)
        throw PreconditionViolated("audit_generalized_mycielski: need k, ell >= 2");
    GenMycielskiAudit audit;
    audit.k = k;
    audit.ell = ell;
    audit.c = c;
    audit.formula_vertices = (static_cast<long long>(ell) + 1) * (1LL << (k - 1)) - 1;
    audit.formula_alpha2 = static_cast<long long>(ell) * (1LL << (k - 1));
    audit.f2_expression =
        Rational(audit.formula_vertices) - c * Rational(audit.formula_alpha2 - 2);
    audit.expression_reaches_chi = audit.f2_expression >= Rational(k + 1);

    if (audit.formula_vertices <= kMaxVertices) {
        Graph g = generalized_mycielski(k, ell);
        audit.exact_vertices = g.vertex_count();
        if (g.vertex_count() <= kAlphaPCap) audit.exact_alpha2 = alpha_p(g, 2).size;
        audit.exact_chi = chromatic_number(g).chi;
    }
    return audit;
}

struct MirReportEntry {
    int k = 0;
    int vertices = 0;
    Rational mir;
    VertexSet argmin;
    Rational bound;            // 1/k
    bool bound_claimed = false;  // the 1/k lower bound is claimed for k >= 3 only
    bool meets_bound = false;
};

// Exact mir(M_k) for 2 <= k <= k_max, against the 1/k lower bound.
inline std::vector<MirReportEntry> mycielski_mir_report(int k_max, int cap = 4) {
    if (k_max < 2) throw PreconditionViolated("mycielski_mir_report: need k_max >= 2");
    if (k_max > cap) throw SizeCapExceeded("mycielski_mir_report", k_max, cap);
    std::vector<MirReportEntry> out;
    for (int k = 2; k <= k_max; ++k) {
        Graph g = mycielski_iterated(k);
        MirResult mir = min_independence_ratio(g);
        MirReportEntry entry;
        entry.k = k;
        entry.vertices = g.vertex_count();
        entry.mir = mir.mir;
        entry.argmin = mir.argmin;
        entry.bound = Rational(1, k);
        entry.bound_claimed = k >= 3;
        entry.meets_bound = mir.mir >= entry.bound;
        out.push_back(entry);
    }
    return out;
}

struct ReedGapReport {
    int n_max = 0;
    int k = 0;
    int graphs_considered = 0;      // non-isomorphic graphs with <= n_max vertices
    int near_bipartite_count = 0;   // those with f <= k + 2
    int max_transversal = 0;        // largest odd cycle transversal among them
    std::vector<std::string> extremal_graph6;
};

// Desk-scale lower estimate of the bipartization gap g(k): the largest odd
// cycle transversal among k-near-bipartite graphs on at most n_max vertices.
inline ReedGapReport reed_gap(int n_max, int k, int cap = 8) {
    if (n_max > cap) throw SizeCapExceeded("reed_gap", n_max, cap);
    if (n_max < 0 || k < 0) throw PreconditionViolated("reed_gap: negative parameter");
    ReedGapReport report;
    report.n_max = n_max;
    report.k = k;
    for (int n = 0; n <= n_max; ++n) {
        GraphEnumerator en(n, /*dedup=*/true);
        while (auto g = en.next()) {
            ++report.graphs_considered;
            if (!is_k_near_bipartite(*g, k).holds) continue;
            ++report.near_bipartite_count;
            int oct = odd_cycle_transversal(*g).size;
            if (oct > report.max_transversal) {
                report.max_transversal = oct;
                report.extremal_graph6.clear();
            }
            if (oct == report.max_transversal) report.extremal_graph6.push_back(write_graph6(*g));
        }
    }
    return report;
}

}  // namespace folkman
