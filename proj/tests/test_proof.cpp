#include <catch2/catch_amalgamated.hpp>

#include "folkman/enumerate.hpp"
#include "folkman/families.hpp"
#include "folkman/proof.hpp"
#include "oracles.hpp"

using namespace folkman;

namespace {
const Graph kDiamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

TEST_CASE("even cycle contraction") {
    Graph c6 = cycle_graph(6);
    auto r = even_cycle_contraction(c6, {0, 1, 2, 3, 4, 5});
    CHECK(r.graph == complete_graph(2));
    CHECK(r.trace.merged_a == 0);
    CHECK(r.trace.merged_b == 1);
    CHECK(chromatic_number(r.graph).chi == 2);  // chi preserved at 2

    Graph k23 = complete_bipartite_graph(2, 3);
    auto hole = find_induced_even_cycle(k23);
    REQUIRE(hole.has_value());
    auto contracted = even_cycle_contraction(k23, *hole);
    CHECK(contracted.graph.vertex_count() == 3);

    CHECK_THROWS_AS(even_cycle_contraction(cycle_graph(5), {0, 1, 2, 3, 4}),
                    PreconditionViolated);
    CHECK_THROWS_AS(even_cycle_contraction(c6, {0, 1, 2, 3}), PreconditionViolated);
    // chorded cycle is rejected
    Graph chorded = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    CHECK_THROWS_AS(even_cycle_contraction(chorded, {0, 1, 2, 3}), PreconditionViolated);
}

TEST_CASE("contraction does not lower the chromatic number") {
    std::mt19937 rng(1234);
    int tested = 0;
    for (int attempt = 0; attempt < 2000 && tested < 40; ++attempt) {
        Graph g = oracles::random_graph(rng, 5 + static_cast<int>(rng() % 5), 0x500000);
        auto hole = find_induced_even_cycle(g);
        if (!hole) continue;
        auto r = even_cycle_contraction(g, *hole);
        CHECK(chromatic_number(r.graph).chi >= chromatic_number(g).chi);
        ++tested;
    }
    CHECK(tested == 40);
}

TEST_CASE("diamond reduction") {
    auto r = diamond_reduction(kDiamond, 0, 1, 2, 3);
    CHECK(r.graph.vertex_count() == 1);
    CHECK(r.trace.new_vertex == 0);
    CHECK(r.trace.old_to_new == std::vector<int>{-1, -1, 0, 0});

    // diamond embedded in a 6-vertex host
    Graph host = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                       {2, 4}, {3, 5}, {4, 5}});
    auto hr = diamond_reduction(host, 0, 1, 2, 3);
    CHECK(hr.graph.vertex_count() == 3);
    CHECK(hr.trace.old_to_new == std::vector<int>{-1, -1, 0, 0, 1, 2});
    // merged vertex sees both old pendants; the pendant edge survives
    CHECK(hr.graph.has_edge(0, 1));
    CHECK(hr.graph.has_edge(0, 2));
    CHECK(hr.graph.has_edge(1, 2));

    // u, v adjacent
    Graph k4 = complete_graph(4);
    CHECK_THROWS_AS(diamond_reduction(k4, 0, 1, 2, 3), PreconditionViolated);
    CHECK_THROWS_AS(diamond_reduction(kDiamond, 2, 3, 0, 1), PreconditionViolated);  // xy not an edge
}

TEST_CASE("chi(G) <= chi(G_uv) + 2 on small graphs with a diamond configuration") {
    for (int n = 4; n <= 6; ++n) {
        GraphEnumerator en(n, true);
        while (auto g = en.next()) {
            auto found = find_diamond(*g);
            if (!found) continue;
            auto r = diamond_reduction(*g, found->x, found->y, found->u, found->v);
            CHECK(chromatic_number(*g).chi <= chromatic_number(r.graph).chi + 2);
        }
    }
}

TEST_CASE("apex replacement") {
    // diamond, x y the adjacent degree-3 pair: result is the star u - z - v
    auto r = apex_replacement(kDiamond, 0, 1);
    CHECK(r.graph.vertex_count() == 3);
    CHECK(r.trace.new_vertex == 2);
    CHECK(r.graph.edge_count() == 2);
    CHECK(r.graph.degree(2) == 2);

    // triangle: z adjacent to the third vertex
    auto tri = apex_replacement(complete_graph(3), 0, 1);
    CHECK(tri.graph == complete_graph(2));

    // K2: empty common neighbourhood, z isolated
    auto k2 = apex_replacement(complete_graph(2), 0, 1);
    CHECK(k2.graph.vertex_count() == 1);
    CHECK(k2.graph.edge_count() == 0);

    CHECK_THROWS_AS(apex_replacement(kDiamond, 2, 3), PreconditionViolated);
}

TEST_CASE("apex bracket on the small corpus") {
    // chi(G) - 2 <= chi(G') <= chi(G - {x,y}) + 1 for every edge xy
    for (int n = 2; n <= 7; ++n) {
        GraphEnumerator en(n, true);
        while (auto g = en.next()) {
            const int chi_g = chromatic_number(*g).chi;
            for (auto [x, y] : g->edges()) {
                auto r = apex_replacement(*g, x, y);
                int chi_prime = chromatic_number(r.graph).chi;
                int chi_minus = chromatic_number(delete_vertices(*g, VertexSet::of({x, y}))).chi;
                CHECK(chi_g - 2 <= chi_prime);
                CHECK(chi_prime <= chi_minus + 1);
            }
        }
    }
}

TEST_CASE("colouring extension over a clique") {
    // triangle with pendants, base colouring 1,1,3,1,4 with a colour gap
    Graph g = Graph::from_edges(8, {{0, 1}, {0, 2}, {1, 2},                 // clique
                                    {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 7}, // pendants
                                    {5, 6}});
    ColoringCertificate phi{{1, 1, 1, 4, 3}, 4};  // on G-K vertices 3..7
    auto cert = extend_coloring_over_clique(g, {0, 1, 2}, phi);
    CHECK(is_proper_coloring(g, cert));
    CHECK(cert.k <= std::max(3, phi.k + 1));

    // single-vertex clique, no conflicts
    Graph star = complete_bipartite_graph(1, 3);
    ColoringCertificate leaves{{1, 1, 1}, 1};
    auto star_cert = extend_coloring_over_clique(star, {0}, leaves);
    CHECK(is_proper_coloring(star, star_cert));
    CHECK(star_cert.k == 2);  // centre takes 1, leaves move to the fresh colour

    // improper base colouring is rejected
    Graph k2_pendants = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    ColoringCertificate bad{{1, 1}, 1};
    CHECK_THROWS_AS(extend_coloring_over_clique(k2_pendants, {0, 1}, bad),
                    PreconditionViolated);

    // overlapping neighbourhoods are rejected
    Graph overlap = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    Graph shared = add_vertex_with_neighborhood(overlap, VertexSet::of({0, 1}));
    ColoringCertificate one{{1}, 1};
    CHECK_THROWS_AS(extend_coloring_over_clique(shared, {0, 1, 2}, one), PreconditionViolated);

    // a base certificate with a large colour bound stays safe to extend
    Graph pendant = Graph::from_edges(3, {{0, 1}, {1, 2}});
    ColoringCertificate sparse_colors{{40}, 41};  // lone vertex coloured 40 of 41
    auto wide = extend_coloring_over_clique(pendant, {0, 1}, sparse_colors);
    CHECK(is_proper_coloring(pendant, wide));
}

TEST_CASE("colouring extension over a shortest odd cycle") {
    // C5 with one pendant per cycle vertex
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, 5 + i);
    }
    Graph g = Graph::from_edges(10, edges);
    ColoringCertificate phi{{1, 1, 1, 1, 1}, 1};
    auto cert = extend_coloring_over_odd_cycle(g, {0, 1, 2, 3, 4}, phi);
    CHECK(is_proper_coloring(g, cert));
    CHECK(cert.k <= std::max(3, phi.k + 1));

    // bare odd cycle: 3-colouring of the cycle alone
    auto bare = extend_coloring_over_odd_cycle(cycle_graph(7), {0, 1, 2, 3, 4, 5, 6},
                                               ColoringCertificate{{}, 0});
    CHECK(is_proper_coloring(cycle_graph(7), bare));
    CHECK(bare.k == 3);

    // a vertex with two neighbours on the cycle is rejected
    Graph two = add_vertex_with_neighborhood(cycle_graph(5), VertexSet::of({0, 2}));
    CHECK_THROWS_AS(
        extend_coloring_over_odd_cycle(two, {0, 1, 2, 3, 4}, ColoringCertificate{{1}, 1}),
        PreconditionViolated);

    // even cycles are rejected
    CHECK_THROWS_AS(extend_coloring_over_odd_cycle(cycle_graph(6), {0, 1, 2, 3, 4, 5},
                                                   ColoringCertificate{{}, 0}),
                    PreconditionViolated);

    // non-shortest cycles are rejected: C5 with a chord has girth 3
    Graph chorded = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    CHECK_THROWS_AS(extend_coloring_over_odd_cycle(chorded, {0, 1, 2, 3, 4},
                                                   ColoringCertificate{{}, 0}),
                    PreconditionViolated);
}

TEST_CASE("common vertex of all maximum independent sets") {
    CHECK(hajnal_common_vertex(path_graph(3)) == 0);
    CHECK(hajnal_common_vertex(edgeless_graph(4)) == 0);
    CHECK_THROWS_AS(hajnal_common_vertex(cycle_graph(4)), PreconditionViolated);

    // edge plus isolated vertex: the isolated vertex is the only common one
    Graph mixed = Graph::from_edges(3, {{0, 1}});
    CHECK(hajnal_common_vertex(mixed) == 2);
    CHECK(hajnal_constructive_vertex(mixed) == 2);

    // path plus isolated vertex: 0 is common, the recursion may answer 3
    Graph path_iso = Graph::from_edges(4, {{0, 1}, {1, 2}});
    CHECK(hajnal_common_vertex(path_iso) == 0);
    VertexSet common = path_iso.vertices();
    for (VertexSet s : all_maximum_independent_sets(path_iso)) common &= s;
    CHECK(common.contains(hajnal_constructive_vertex(path_iso)));
}

TEST_CASE("hajnal sweep over the small corpus") {
    for (int n = 1; n <= 6; ++n) {
        GraphEnumerator en(n, true);
        while (auto g = en.next()) {
            if (2 * independence_number(*g).alpha <= n) continue;
            VertexSet common = g->vertices();
            for (VertexSet s : all_maximum_independent_sets(*g)) common &= s;
            REQUIRE_FALSE(common.empty());
            CHECK(common.contains(hajnal_common_vertex(*g)));
            CHECK(common.contains(hajnal_constructive_vertex(*g)));
        }
    }
}

TEST_CASE("proof inequality audit") {
    auto c5 = audit_proof_inequalities(cycle_graph(5));
    CHECK(c5.subset_chi_inequality_holds);
    CHECK(c5.even_hole_free);
    CHECK(c5.diamond_free);

    // two disjoint triangles: removing one triangle drops chi by 3, so the
    // subset inequality fails
    Graph two_triangles = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2},
                                                {3, 4}, {3, 5}, {4, 5}});
    auto tt = audit_proof_inequalities(two_triangles);
    CHECK_FALSE(tt.subset_chi_inequality_holds);
    REQUIRE(tt.violating_subset.has_value());

    auto c6 = audit_proof_inequalities(cycle_graph(6));
    CHECK_FALSE(c6.even_hole_free);
    REQUIRE(c6.even_cycle_chains.size() == 1);
    const auto& chain = c6.even_cycle_chains.front();
    CHECK(chain.half_length == 3);
    CHECK(chain.rho_h_prime == 2);
    CHECK(chain.alpha_h == 3);
    CHECK(chain.alpha_h_prime == 0);  // the contraction's witness is the null subgraph
    CHECK_FALSE(chain.alpha_step_within_bound);

    CHECK_THROWS_AS(audit_proof_inequalities(complete_bipartite_graph(6, 7)), SizeCapExceeded);
}
