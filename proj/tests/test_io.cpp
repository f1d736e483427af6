#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "folkman/enumerate.hpp"
#include "folkman/families.hpp"
#include "folkman/io.hpp"
#include "oracles.hpp"

using namespace folkman;

TEST_CASE("graph6 hand-encoded fixtures") {
    // "D??": five vertices, no edges
    Graph empty5 = parse_graph6("D??");
    CHECK(empty5.vertex_count() == 5);
    CHECK(empty5.edge_count() == 0);

    // "Dhc": the labeled C5 with edges 01, 12, 23, 34, 40
    CHECK(parse_graph6("Dhc") == cycle_graph(5));
    CHECK(write_graph6(cycle_graph(5)) == "Dhc");

    // "A_": K2 (single bit 1 -> group 100000 -> byte 95)
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(write_graph6(complete_graph(2)) == "A_");

    // null graph encodes as chr(63)
    CHECK(write_graph6(Graph{}) == "?");
    CHECK(parse_graph6("?").vertex_count() == 0);

    // optional header is stripped
    CHECK(parse_graph6(">>graph6<<Dhc") == cycle_graph(5));
}

TEST_CASE("graph6 writer agrees with the independent encoder") {
    CHECK(oracles::graph6_encode(complete_graph(2)) == "A_");
    CHECK(oracles::graph6_encode(cycle_graph(5)) == "Dhc");
    for (int n = 0; n <= 6; ++n) {
        GraphEnumerator en(n, true);
        while (auto g = en.next()) CHECK(write_graph6(*g) == oracles::graph6_encode(*g));
    }
}

TEST_CASE("graph6 round trip on the dedup corpus") {
    for (int n = 0; n <= 7; ++n) {
        GraphEnumerator en(n, true);
        while (auto g = en.next()) {
            std::string record = write_graph6(*g);
            CHECK(parse_graph6(record) == *g);
        }
    }
}

TEST_CASE("graph6 malformed records") {
    CHECK_THROWS_AS(parse_graph6(""), MalformedInput);
    CHECK_THROWS_AS(parse_graph6("D?"), MalformedInput);      // truncated payload
    CHECK_THROWS_AS(parse_graph6("D???"), MalformedInput);    // extra payload
    CHECK_THROWS_AS(parse_graph6("A\x20"), MalformedInput);   // byte below 63
    CHECK_THROWS_AS(parse_graph6("A\x7f"), MalformedInput);   // byte above 126
    // nonzero padding: n=2 has one data bit, the remaining five must be zero
    CHECK_THROWS_AS(parse_graph6("A^"), MalformedInput);

    // long order forms decode but fall to the size cap (n = 63 and n = 64)
    CHECK_THROWS_AS(parse_graph6("~??~"), SizeCapExceeded);
    CHECK_THROWS_AS(parse_graph6("~~?????@"), SizeCapExceeded);
    CHECK_THROWS_AS(parse_graph6("~?"), MalformedInput);  // truncated order field
}

TEST_CASE("dimacs parsing") {
    std::istringstream in("c a comment\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(parse_dimacs(in) == complete_graph(3));

    std::istringstream self_loop("p edge 2 1\ne 1 1\n");
    CHECK_THROWS_AS(parse_dimacs(self_loop), MalformedInput);

    std::istringstream no_problem("e 1 2\n");
    CHECK_THROWS_AS(parse_dimacs(no_problem), MalformedInput);

    std::istringstream out_of_range("p edge 2 1\ne 1 5\n");
    CHECK_THROWS_AS(parse_dimacs(out_of_range), MalformedInput);
}

TEST_CASE("edge list parsing") {
    std::istringstream in("# comment\n5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    CHECK(parse_edgelist(in) == cycle_graph(5));

    std::istringstream bad("3\n0 3\n");
    CHECK_THROWS_AS(parse_edgelist(bad), MalformedInput);
}

TEST_CASE("graph6 stream, lenient and strict") {
    std::istringstream three("Dhc\nA_\n?\n");
    GraphStream s(three, GraphFormat::graph6);
    CHECK(s.next()->graph == cycle_graph(5));
    CHECK(s.next()->graph == complete_graph(2));
    CHECK(s.next()->graph->vertex_count() == 0);
    CHECK_FALSE(s.next().has_value());
    CHECK(s.records_consumed() == 3);

    std::istringstream empty("");
    GraphStream es(empty, GraphFormat::graph6);
    CHECK_FALSE(es.next().has_value());
    CHECK(es.records_consumed() == 0);

    std::istringstream mixed("Dhc\nD?\n");
    GraphStream lenient(mixed, GraphFormat::graph6, false);
    CHECK(lenient.next()->graph.has_value());
    auto bad = lenient.next();
    REQUIRE(bad.has_value());
    CHECK_FALSE(bad->graph.has_value());
    CHECK(bad->line == 2);
    CHECK_FALSE(bad->error.empty());
    CHECK_FALSE(lenient.next().has_value());

    std::istringstream mixed2("Dhc\nD?\n");
    GraphStream strict(mixed2, GraphFormat::graph6, true);
    CHECK(strict.next()->graph.has_value());
    CHECK_THROWS_AS(strict.next(), MalformedInput);
}

TEST_CASE("writer determinism") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracles::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0x800000);
        Graph h = g;
        CHECK(write_graph6(g) == write_graph6(h));
    }
}
