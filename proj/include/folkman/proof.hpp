// Executable steps of the short Folkman-bound proof: the even-cycle
// contraction, the diamond and apex reductions, the two colouring-extension
// procedures, the common-vertex lemma for graphs with alpha > n/2, and an
// audit of the per-subset chromatic inequality on small graphs.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folkman/invariants.hpp"
#include "folkman/solvers.hpp"

namespace folkman {

enum class ReductionKind { even_cycle_contraction, diamond_reduction, apex_replacement };

inline const char* reduction_kind_name(ReductionKind k) {
    switch (k) {
        case ReductionKind::even_cycle_contraction: return "even-cycle-contraction";
        case ReductionKind::diamond_reduction: return "diamond-reduction";
        case ReductionKind::apex_replacement: return "apex-replacement";
    }
    return "?";
}

// Replayable record of one reduction: what was removed or merged and how
// surviving old indices map to new ones (-1 = removed).
struct ReductionTrace {
    ReductionKind kind{};
    VertexSet removed;
    std::vector<VertexSet> merged_parts;
    std::vector<int> old_to_new;
    std::vector<int> parameters;  // cycle vertices / x,y,u,v / x,y
    int merged_a = -1;            // new index of the first merged part
    int merged_b = -1;            // new index of the second merged part
    int new_vertex = -1;          // apex replacement: index of z
};

struct ReductionResult {
    Graph graph;
    ReductionTrace trace;
};

namespace detail {

inline void require_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int len = static_cast<int>(cycle.size());
    if (len < 3) throw PreconditionViolated("cycle too short");
    VertexSet s;
    for (int v : cycle) {
        if (v < 0 || v >= g.vertex_count())
            throw PreconditionViolated("cycle vertex out of range");
        if (s.contains(v)) throw PreconditionViolated("repeated cycle vertex");
        s.add(v);
    }
    for (int i = 0; i < len; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % len]))
            throw PreconditionViolated("cycle edge missing");
    for (int v : cycle)
        if ((g.neighbors(v) & s).count() != 2)
            throw PreconditionViolated("cycle has a chord");
}

}  // namespace detail

// Contracts the two alternating classes of an induced even cycle into
// single vertices a and b (joined by an edge).
inline ReductionResult even_cycle_contraction(const Graph& g, const std::vector<int>& cycle) {
    detail::require_induced_cycle(g, cycle);
    if (cycle.size() % 2 != 0)
        throw PreconditionViolated("even_cycle_contraction: odd cycle length");
    VertexSet a_class, b_class;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        (i % 2 == 0 ? a_class : b_class).add(cycle[i]);

    ReductionTrace trace;
    trace.kind = ReductionKind::even_cycle_contraction;
    trace.merged_parts = {a_class, b_class};
    trace.parameters = cycle;
    Graph merged = merge_vertices(g, {a_class, b_class}, &trace.old_to_new);
    trace.merged_a = trace.old_to_new[a_class.lowest()];
    trace.merged_b = trace.old_to_new[b_class.lowest()];
    return {std::move(merged), std::move(trace)};
}

// G_uv: delete the edge pair {x, y} and merge their nonadjacent common
// neighbours u and v into a single vertex w.
inline ReductionResult diamond_reduction(const Graph& g, int x, int y, int u, int v) {
    for (int w : {x, y, u, v})
        if (w < 0 || w >= g.vertex_count())
            throw PreconditionViolated("diamond_reduction: vertex out of range");
    if (!g.has_edge(x, y)) throw PreconditionViolated("diamond_reduction: xy not an edge");
    if (u == v) throw PreconditionViolated("diamond_reduction: u equals v");
    if (g.has_edge(u, v)) throw PreconditionViolated("diamond_reduction: uv is an edge");
    for (int w : {u, v})
        if (!g.has_edge(x, w) || !g.has_edge(y, w))
            throw PreconditionViolated("diamond_reduction: u, v must be common neighbours of x and y");

    std::vector<int> delete_map;
    Graph without = delete_vertices(g, VertexSet::of({x, y}), &delete_map);
    std::vector<int> merge_map;
    Graph merged = merge_vertices(
        without, {VertexSet::of({delete_map[u], delete_map[v]})}, &merge_map);

    ReductionTrace trace;
    trace.kind = ReductionKind::diamond_reduction;
    trace.removed = VertexSet::of({x, y});
    trace.merged_parts = {VertexSet::of({u, v})};
    trace.parameters = {x, y, u, v};
    trace.old_to_new.assign(g.vertex_count(), -1);
    for (int w = 0; w < g.vertex_count(); ++w)
        if (delete_map[w] != -1) trace.old_to_new[w] = merge_map[delete_map[w]];
    trace.new_vertex = trace.old_to_new[u];
    return {std::move(merged), std::move(trace)};
}

// G': delete the edge pair {x, y} and add a vertex z whose neighbourhood is
// the (image of the) common neighbourhood of x and y.
inline ReductionResult apex_replacement(const Graph& g, int x, int y) {
    for (int w : {x, y})
        if (w < 0 || w >= g.vertex_count())
            throw PreconditionViolated("apex_replacement: vertex out of range");
    if (!g.has_edge(x, y)) throw PreconditionViolated("apex_replacement: xy not an edge");
    VertexSet common = g.neighbors(x) & g.neighbors(y);

    std::vector<int> delete_map;
    Graph without = delete_vertices(g, VertexSet::of({x, y}), &delete_map);
    VertexSet mapped;
    for (int a : common) mapped.add(delete_map[a]);
    Graph result = add_vertex_with_neighborhood(without, mapped);

    ReductionTrace trace;
    trace.kind = ReductionKind::apex_replacement;
    trace.removed = VertexSet::of({x, y});
    trace.parameters = {x, y};
    trace.old_to_new = std::move(delete_map);
    trace.new_vertex = result.vertex_count() - 1;
    return {std::move(result), std::move(trace)};
}

namespace detail {

inline std::vector<int> deletion_map(const Graph& g, VertexSet removed) {
    std::vector<int> map;
    delete_vertices(g, removed, &map);
    return map;
}

// Base colourings may carry colour gaps (the extension only needs
// properness and a truthful k bound), so surjectivity is not required.
inline void require_certificate(const Graph& g, const ColoringCertificate& cert,
                                const char* who) {
    if (!is_proper_assignment(g, cert))
        throw PreconditionViolated(std::string(who) + ": base colouring is not proper");
}

}  // namespace detail

// Extends a proper colouring of G-K over a clique K: u_i takes colour i and
// every conflicting vertex in N_i moves to one fresh colour. Requires the
// outside neighbourhoods N_i to be pairwise disjoint and non-adjacent.
// Uses at most max(|K|, colours(phi) + 1) colours.
inline ColoringCertificate extend_coloring_over_clique(const Graph& g,
                                                       const std::vector<int>& clique,
                                                       const ColoringCertificate& phi) {
    VertexSet k_set;
    for (int v : clique) {
        if (v < 0 || v >= g.vertex_count())
            throw PreconditionViolated("extend_coloring_over_clique: vertex out of range");
        if (k_set.contains(v))
            throw PreconditionViolated("extend_coloring_over_clique: repeated clique vertex");
        k_set.add(v);
    }
    if (!g.is_clique(k_set))
        throw PreconditionViolated("extend_coloring_over_clique: K is not a clique");

    const VertexSet outside = g.vertices() - k_set;
    std::vector<VertexSet> nbhd;
    VertexSet seen;
    for (int u : clique) {
        VertexSet ni = g.neighbors(u) & outside;
        if (ni.intersects(seen))
            throw PreconditionViolated("extend_coloring_over_clique: neighbourhoods overlap");
        seen |= ni;
        nbhd.push_back(ni);
    }
    for (std::size_t i = 0; i < nbhd.size(); ++i)
        for (std::size_t j = i + 1; j < nbhd.size(); ++j)
            for (int a : nbhd[i])
                if (g.neighbors(a).intersects(nbhd[j]))
                    throw PreconditionViolated("extend_coloring_over_clique: neighbourhoods adjacent");

    std::vector<int> map = detail::deletion_map(g, k_set);
    Graph rest = delete_vertices(g, k_set);
    detail::require_certificate(rest, phi, "extend_coloring_over_clique");

    const int fresh = phi.k + 1;
    std::vector<int> colors(g.vertex_count(), 0);
    for (int v : outside) colors[v] = phi.colors[map[v]];
    for (std::size_t i = 0; i < clique.size(); ++i) {
        colors[clique[i]] = static_cast<int>(i) + 1;
        for (int w : nbhd[i])
            if (colors[w] == static_cast<int>(i) + 1) colors[w] = fresh;
    }
    ColoringCertificate cert = detail::compact_colors(std::move(colors));
    if (!is_proper_coloring(g, cert))
        throw std::logic_error("extend_coloring_over_clique: produced an improper colouring");
    return cert;
}

// Extends a proper colouring of G-C over a shortest odd cycle C: cycle
// vertices are coloured 1,2,...,1,2,3 around the cycle and conflicting
// outside neighbours move to one fresh colour. Requires every outside
// vertex to have at most one neighbour on C and the outside neighbourhoods
// to be pairwise non-adjacent. Uses at most max(3, colours(phi) + 1).
inline ColoringCertificate extend_coloring_over_odd_cycle(const Graph& g,
                                                          const std::vector<int>& cycle,
                                                          const ColoringCertificate& phi) {
    const int len = static_cast<int>(cycle.size());
    if (len < 5 || len % 2 == 0)
        throw PreconditionViolated("extend_coloring_over_odd_cycle: need an odd cycle of length >= 5");
    detail::require_induced_cycle(g, cycle);
    auto girth = shortest_cycle(g);
    if (!girth || girth->girth != len)
        throw PreconditionViolated("extend_coloring_over_odd_cycle: cycle is not shortest");

    VertexSet c_set;
    for (int v : cycle) c_set.add(v);
    const VertexSet outside = g.vertices() - c_set;
    for (int w : outside)
        if ((g.neighbors(w) & c_set).count() > 1)
            throw PreconditionViolated(
                "extend_coloring_over_odd_cycle: outside vertex with two neighbours on the cycle");
    std::vector<VertexSet> nbhd;
    for (int v : cycle) nbhd.push_back(g.neighbors(v) & outside);
    for (std::size_t i = 0; i < nbhd.size(); ++i)
        for (std::size_t j = i + 1; j < nbhd.size(); ++j)
            for (int a : nbhd[i])
                if (g.neighbors(a).intersects(nbhd[j]))
                    throw PreconditionViolated(
                        "extend_coloring_over_odd_cycle: neighbourhoods adjacent");

    std::vector<int> map = detail::deletion_map(g, c_set);
    Graph rest = delete_vertices(g, c_set);
    detail::require_certificate(rest, phi, "extend_coloring_over_odd_cycle");

    const int fresh = phi.k + 1;
    std::vector<int> colors(g.vertex_count(), 0);
    for (int v : outside) colors[v] = phi.colors[map[v]];
    for (int i = 0; i < len; ++i) {
        // positions 1..2p alternate colours 2,1; the last vertex takes 3
        int c = (i == len - 1) ? 3 : (i % 2 == 0 ? 2 : 1);
        colors[cycle[i]] = c;
        for (int w : nbhd[i])
            if (colors[w] == c) colors[w] = fresh;
    }
    ColoringCertificate cert = detail::compact_colors(std::move(colors));
    if (!is_proper_coloring(g, cert))
        throw std::logic_error("extend_coloring_over_odd_cycle: produced an improper colouring");
    return cert;
}

// ------------------------------------------------- common-vertex lemma --

namespace detail {

inline Graph remove_edge(const Graph& g, int u, int v) {
    std::vector<Mask> rows(g.vertex_count());
    for (int w = 0; w < g.vertex_count(); ++w) rows[w] = g.neighbors(w).bits;
    rows[u] &= ~(Mask{1} << v);
    rows[v] &= ~(Mask{1} << u);
    return Graph::from_adjacency_rows(std::move(rows));
}

inline VertexSet component_of(const Graph& g, int s) {
    VertexSet comp = VertexSet::single(s);
    std::vector<int> stack{s};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (!comp.contains(w)) {
                comp.add(w);
                stack.push_back(w);
            }
    }
    return comp;
}

}  // namespace detail

// The edge-deletion recursion from the common-vertex lemma: keep deleting
// an edge that preserves alpha (the lemma's contradiction shows one exists
// for connected graphs), shortcutting through isolated vertices and
// components the way the induction does. Requires alpha(g) > n/2.
inline int hajnal_constructive_vertex(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw PreconditionViolated("hajnal: empty graph");
    const int alpha = independence_number(g).alpha;
    if (2 * alpha <= n)
        throw PreconditionViolated("hajnal: needs an independent set on more than half the vertices");

    if (g.edge_count() == 0) return 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) return v;  // an isolated vertex lies in every maximum independent set

    VertexSet comp = detail::component_of(g, 0);
    if (comp != g.vertices()) {
        // recurse into the first component satisfying the hypothesis
        VertexSet left = g.vertices();
        while (!left.empty()) {
            VertexSet c = detail::component_of(g, left.lowest());
            left = left - c;
            Graph sub = induced_subgraph(g, c);
            if (2 * independence_number(sub).alpha > sub.vertex_count()) {
                std::vector<int> members = c.to_vector();
                return members[hajnal_constructive_vertex(sub)];
            }
        }
        throw std::logic_error("hajnal: no component satisfies the hypothesis");
    }

    for (auto [u, v] : g.edges())
        if (independence_number(detail::remove_edge(g, u, v)).alpha == alpha)
            return hajnal_constructive_vertex(detail::remove_edge(g, u, v));
    throw std::logic_error("hajnal: no alpha-preserving edge in a connected graph");
}

// A vertex contained in every maximum independent set (smallest such index).
// The constructive recursion is run alongside and cross-checked against the
// enumerated intersection.
inline int hajnal_common_vertex(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw PreconditionViolated("hajnal: empty graph");
    const int alpha = independence_number(g).alpha;
    if (2 * alpha <= n)
        throw PreconditionViolated("hajnal: needs an independent set on more than half the vertices");

    VertexSet intersection = g.vertices();
    for (VertexSet s : all_maximum_independent_sets(g)) intersection &= s;
    if (intersection.empty())
        throw std::logic_error("hajnal: maximum independent sets have empty intersection");
    const int constructive = hajnal_constructive_vertex(g);
    if (!intersection.contains(constructive))
        throw std::logic_error("hajnal: constructive vertex misses a maximum independent set");
    return intersection.lowest();
}

// ------------------------------------------------------ inequality audit --

struct EvenCycleChain {
    std::vector<int> cycle;
    int rho_h_prime = 0;     // potential of the contraction's witness
    int alpha_h = 0;         // alpha of the lifted subgraph H
    int alpha_h_prime = 0;   // alpha of the witness H'
    int half_length = 0;     // p, where |V(C)| = 2p
    bool alpha_step_within_bound = false;  // alpha(H) - alpha(H') <= p - 1
    VertexSet lifted_subgraph;
};

// Exploratory report: these properties characterize a hypothetical minimal
// counterexample and are expected to fail on ordinary graphs.
struct ProofInequalityReport {
    int chi = 0;
    bool subset_chi_inequality_holds = false;  // chi(G) >= chi(G[X]) + chi(G-X) - 1 for all X
    std::optional<VertexSet> violating_subset;
    bool diamond_free = false;
    bool even_hole_free = false;
    std::vector<EvenCycleChain> even_cycle_chains;
};

namespace detail {

inline std::vector<std::vector<int>> all_induced_even_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    const int n = g.vertex_count();
    std::vector<Mask> masks;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        int size = std::popcount(m);
        if (size < 4 || (size & 1)) continue;
        VertexSet s(m);
        bool two_regular = true;
        for (int v : s)
            if ((g.neighbors(v) & s).count() != 2) {
                two_regular = false;
                break;
            }
        if (!two_regular) continue;
        int start = s.lowest();
        int prev = start, cur = (g.neighbors(start) & s).lowest(), steps = 1;
        while (cur != start) {
            VertexSet next = (g.neighbors(cur) & s) - VertexSet::single(prev);
            prev = cur;
            cur = next.lowest();
            ++steps;
        }
        if (steps == size) masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (Mask m : masks) {
        VertexSet s(m);
        std::vector<int> cyc{s.lowest()};
        int prev = s.lowest(), cur = (g.neighbors(prev) & s).lowest();
        while (cur != cyc.front()) {
            cyc.push_back(cur);
            VertexSet next = (g.neighbors(cur) & s) - VertexSet::single(prev);
            prev = cur;
            cur = next.lowest();
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

}  // namespace detail

inline ProofInequalityReport audit_proof_inequalities(const Graph& g, int cap = 12) {
    const int n = g.vertex_count();
    if (n > cap) throw SizeCapExceeded("audit_proof_inequalities", n, cap);

    ProofInequalityReport report;
    report.chi = chromatic_number(g).chi;

    // chi of every induced subgraph, indexed by mask
    std::vector<int> chi(std::size_t{1} << n, 0);
    for (Mask m = 1; m < (Mask{1} << n); ++m)
        chi[m] = chromatic_number(induced_subgraph(g, VertexSet(m))).chi;

    report.subset_chi_inequality_holds = true;
    const Mask full = VertexSet::first_n(n).bits;
    for (Mask x = 0;; ++x) {
        if (report.chi < chi[x] + chi[full & ~x] - 1) {
            report.subset_chi_inequality_holds = false;
            report.violating_subset = VertexSet(x);
            break;
        }
        if (x == full) break;
    }

    report.diamond_free = !find_diamond(g).has_value();

    auto cycles = detail::all_induced_even_cycles(g);
    report.even_hole_free = cycles.empty();
    for (const auto& cycle : cycles) {
        ReductionResult contraction = even_cycle_contraction(g, cycle);
        FolkmanNumberResult fw = folkman_number(contraction.graph);

        VertexSet cycle_set;
        for (int v : cycle) cycle_set.add(v);
        VertexSet merged = contraction.trace.merged_parts[0] | contraction.trace.merged_parts[1];
        VertexSet lifted = cycle_set;
        for (int v = 0; v < n; ++v)
            if (!merged.contains(v) && fw.witness.subset.contains(contraction.trace.old_to_new[v]))
                lifted.add(v);

        EvenCycleChain entry;
        entry.cycle = cycle;
        entry.rho_h_prime = fw.witness.rho;
        entry.alpha_h_prime = fw.witness.alpha;
        entry.alpha_h = independence_number(induced_subgraph(g, lifted)).alpha;
        entry.half_length = static_cast<int>(cycle.size()) / 2;
        entry.alpha_step_within_bound =
            entry.alpha_h - entry.alpha_h_prime <= entry.half_length - 1;
        entry.lifted_subgraph = lifted;
        report.even_cycle_chains.push_back(std::move(entry));
    }
    return report;
}

}  // namespace folkman
