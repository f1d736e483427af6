#include <catch2/catch_amalgamated.hpp>

#include "folkman/enumerate.hpp"
#include "folkman/families.hpp"
#include "folkman/invariants.hpp"
#include "folkman/solvers.hpp"

using namespace folkman;

TEST_CASE("basic families") {
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_bipartite_graph(2, 3).edge_count() == 6);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(edgeless_graph(3).edge_count() == 0);

    CHECK_THROWS_AS(cycle_graph(2), MalformedInput);
    CHECK_THROWS_AS(complete_bipartite_graph(0, 3), MalformedInput);

    const int params[] = {5};
    CHECK(basic_graph(BasicFamily::cycle, params) == cycle_graph(5));
    const int two[] = {2, 3};
    CHECK(basic_graph(BasicFamily::complete_bipartite, two) == complete_bipartite_graph(2, 3));
    CHECK_THROWS_AS(basic_graph(BasicFamily::cycle, two), MalformedInput);
}

TEST_CASE("mycielski structure") {
    Graph c5 = cycle_graph(5);
    Graph m = mycielski(c5);
    const int n = c5.vertex_count();
    CHECK(m.vertex_count() == 2 * n + 1);
    CHECK(m.edge_count() == 3 * c5.edge_count() + n);

    // shadows form an independent set of size n
    VertexSet shadows;
    for (int i = 0; i < n; ++i) shadows.add(n + i);
    CHECK(m.is_independent_set(shadows));
    // apex is adjacent exactly to the shadows
    CHECK(m.neighbors(2 * n) == shadows);
    // shadow i sees exactly the base neighbours of i
    for (int i = 0; i < n; ++i) {
        VertexSet expected = c5.neighbors(i);
        CHECK((m.neighbors(n + i) - VertexSet::single(2 * n)) == expected);
    }

    CHECK_THROWS_AS(mycielski(Graph{}), PreconditionViolated);
}

TEST_CASE("mycielski of small cliques") {
    CHECK(is_isomorphic(mycielski(complete_graph(2)), cycle_graph(5)));
    // mu(K1): the shadow has no base neighbours, so the only edge is
    // shadow-apex (|E| = 3*0 + 1), leaving the original isolated
    Graph mu1 = mycielski(complete_graph(1));
    CHECK(mu1.vertex_count() == 3);
    CHECK(mu1.edge_count() == 1);
    CHECK(mu1.has_edge(1, 2));
    CHECK(chromatic_number(mu1).chi == 2);
}

TEST_CASE("iterated mycielski graphs") {
    CHECK(mycielski_iterated(2) == cycle_graph(5));
    Graph m3 = mycielski_iterated(3);
    CHECK(m3.vertex_count() == 11);
    CHECK(m3.edge_count() == 20);
    CHECK(chromatic_number(m3).chi == 4);
    CHECK(mycielski_iterated(4).vertex_count() == 23);
    CHECK_THROWS_AS(mycielski_iterated(5), SizeCapExceeded);
    CHECK_THROWS_AS(mycielski_iterated(1), PreconditionViolated);
}

TEST_CASE("generalized mycielski graphs") {
    CHECK(generalized_mycielski(2, 2) == cycle_graph(5));
    CHECK(generalized_mycielski(2, 4) == cycle_graph(9));
    CHECK(generalized_mycielski(3, 3).vertex_count() == 15);
    CHECK(generalized_mycielski(3, 2) == mycielski_iterated(3));
    // |V(M'_{k,l})| = (l+1) * 2^(k-1) - 1
    for (int k = 2; k <= 3; ++k)
        for (int ell = 2; ell <= 4; ++ell)
            CHECK(generalized_mycielski(k, ell).vertex_count() ==
                  (ell + 1) * (1 << (k - 1)) - 1);
    CHECK_THROWS_AS(generalized_mycielski(1, 2), PreconditionViolated);
    CHECK_THROWS_AS(generalized_mycielski(3, 8), SizeCapExceeded);
}

TEST_CASE("fig1 gadget") {
    Graph g = fig1_gadget();
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 9);
    CHECK(independence_number(g).alpha == 3);
    CHECK(independence_number(g).witness == VertexSet::of({1, 3, 5}));
    CHECK(chromatic_number(g).chi == 3);
}

TEST_CASE("mycielski raises chi by one and preserves triangle-freeness") {
    for (int n = 1; n <= 7; ++n) {
        GraphEnumerator en(n, true);
        while (auto g = en.next()) {
            Graph m = mycielski(*g);
            if (g->edge_count() > 0)
                CHECK(chromatic_number(m).chi == chromatic_number(*g).chi + 1);
            if (clique_number(*g).omega <= 2) CHECK(clique_number(m).omega <= 2);
        }
    }
}
