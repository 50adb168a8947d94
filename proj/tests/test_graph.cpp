#include <doctest.h>

#include "helpers.hpp"
#include "plumb/graph.hpp"

using namespace plumb;
using testutil::fixture;
using testutil::load;

TEST_SUITE("graph") {

TEST_CASE("text parsing reads vertices, edges and comments") {
    PlumbingGraph g = parse_graph_text(
        "# comment\n"
        "vertices:\n"
        "1:-2\n"
        "2:-3  # trailing comment\n"
        "edges:\n"
        "1-2\n");
    CHECK(g.n() == 2);
    CHECK(g.euler == std::vector<long>{-2, -3});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_graph_text("vertices:\n1:-2\n2:x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    // "1--2" parses as an edge towards a vertex named -2, which validation rejects
    CHECK_THROWS_AS(parse_graph_text("vertices:\n1:-2\n2:-2\nedges:\n1--2\n"), GraphError);
}

TEST_CASE("validation rejects malformed trees") {
    // duplicate edge, also reversed
    CHECK_THROWS_AS(make_graph({{1, -2}, {2, -2}}, {{1, 2}, {2, 1}}), GraphError);
    // self loop
    CHECK_THROWS_AS(make_graph({{1, -2}}, {{1, 1}}), GraphError);
    // duplicate id
    CHECK_THROWS_AS(make_graph({{1, -2}, {1, -3}}, {}), GraphError);
    // cycle (n edges on n vertices)
    CHECK_THROWS_AS(make_graph({{1, -2}, {2, -2}, {3, -2}}, {{1, 2}, {2, 3}, {3, 1}}),
                    GraphError);
    // disconnected
    CHECK_THROWS_AS(make_graph({{1, -2}, {2, -2}, {3, -2}, {4, -2}}, {{1, 2}, {3, 4}}),
                    GraphError);
}

TEST_CASE("serialize/parse round-trips every fixture") {
    for (const char* f : {"g1.graph", "ga2.graph", "star.graph", "gme6.graph", "gex2.graph",
                          "gfig1.graph", "gfig2.graph", "gfig2_16.graph", "gfig2_12.graph",
                          "seqpair_a.graph", "seqpair_b.graph", "corrupt_nonelliptic.graph"}) {
        PlumbingGraph g = load(f);
        PlumbingGraph h = parse_graph_text(serialize_text(g));
        CHECK(h.ids == g.ids);
        CHECK(h.euler == g.euler);
        CHECK(h.edges == g.edges);
    }
}

TEST_CASE("json input matches the text form of the same graph") {
    PlumbingGraph a = load("gex2.graph");
    PlumbingGraph b = load("gex2.json");
    CHECK(a.ids == b.ids);
    CHECK(a.euler == b.euler);
    CHECK(a.edges == b.edges);
}

TEST_CASE("valencies, nodes and ends") {
    PlumbingGraph g = load("gme6.graph");
    CHECK(g.nodes() == std::vector<int>{2, 4});
    CHECK(g.ends() == std::vector<int>{1, 3, 5, 6});
    int degsum = 0;
    for (int id : g.ids) degsum += g.valency(id);
    CHECK(degsum == 2 * (g.n() - 1));

    // the central -3 vertex of the ten-vertex graph has four neighbours
    PlumbingGraph e2 = load("gex2.graph");
    CHECK(e2.valency(7) == 4);
}

TEST_CASE("induced subgraphs keep order and reject disconnected selections") {
    PlumbingGraph g = load("gex2.graph");
    PlumbingGraph sub = induced_subgraph(g, {1, 2, 3, 4, 5, 6});
    CHECK(sub.ids == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(sub.edges.size() == 5);
    CHECK_THROWS_AS(induced_subgraph(g, {1, 3, 5}), GraphError);
    CHECK_THROWS_AS(induced_subgraph(g, {1, 99}), GraphError);
}

}  // TEST_SUITE
