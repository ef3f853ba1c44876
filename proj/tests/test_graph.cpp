#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <sstream>

#include "rtgraph/graph.hpp"

using rtg::DegreeSequence;
using rtg::Graph;

TEST_CASE("from_edge_list builds canonical simple graphs") {
    const Graph k2 = Graph::from_edge_list(2, {{1, 2}});
    REQUIRE(k2.vertex_count() == 2);
    REQUIRE(k2.edge_count() == 1);

    const Graph k3 = Graph::from_edge_list(3, {{1, 2}, {2, 3}, {1, 3}});
    REQUIRE(k3 == rtg::complete_graph(3));
    REQUIRE(k3 == rtg::cycle_graph(3)); // K_3 = C_3

    // normalization: (2,1) stores as (1,2)
    REQUIRE(Graph::from_edge_list(2, {{2, 1}}) == k2);

    REQUIRE_THROWS_AS(Graph::from_edge_list(4, {{1, 1}}), rtg::SelfLoopError);
    REQUIRE_THROWS_AS(Graph::from_edge_list(2, {{1, 3}}), rtg::OutOfRangeError);
    REQUIRE_THROWS_AS(Graph::from_edge_list(3, {{1, 2}, {2, 1}}), rtg::DuplicateEdgeError);
}

TEST_CASE("generators") {
    REQUIRE(rtg::complete_graph(2).edge_count() == 1);
    REQUIRE(rtg::cycle_graph(3).vertex_count() == 3);
    REQUIRE(rtg::cycle_graph(3).edge_count() == 3);
    REQUIRE(rtg::complete_bipartite_graph(3, 3).vertex_count() == 6);
    REQUIRE(rtg::complete_bipartite_graph(3, 3).edge_count() == 9);
    REQUIRE(rtg::petersen_graph().vertex_count() == 10);
    REQUIRE(rtg::petersen_graph().edge_count() == 15);
    REQUIRE(rtg::hypercube_graph(3).vertex_count() == 8);
    REQUIRE(rtg::hypercube_graph(3).edge_count() == 12);

    REQUIRE_THROWS_AS(rtg::complete_graph(1), rtg::ParameterTooSmallError);
    REQUIRE_THROWS_AS(rtg::cycle_graph(2), rtg::ParameterTooSmallError);
    REQUIRE_THROWS_AS(rtg::complete_bipartite_graph(0, 3), rtg::ParameterTooSmallError);
    REQUIRE_THROWS_AS(rtg::hypercube_graph(0), rtg::ParameterTooSmallError);
}

TEST_CASE("degree sequences") {
    REQUIRE(rtg::complete_graph(2).degree_sequence() == DegreeSequence{1, 1});
    REQUIRE(rtg::cycle_graph(4).degree_sequence() == DegreeSequence{2, 2, 2, 2});
    // star K_{1,3}: center first
    REQUIRE(rtg::complete_bipartite_graph(1, 3).degree_sequence() == DegreeSequence{3, 1, 1, 1});
}

TEST_CASE("degree sum equals 2m for every generator") {
    for (const Graph& g :
         {rtg::complete_graph(5), rtg::cycle_graph(7), rtg::complete_bipartite_graph(2, 4),
          rtg::petersen_graph(), rtg::hypercube_graph(4)}) {
        const DegreeSequence d = g.degree_sequence();
        REQUIRE(std::accumulate(d.begin(), d.end(), 0) == 2 * g.edge_count());
    }
}

TEST_CASE("regularity predicate") {
    for (int n = 2; n <= 6; ++n) {
        REQUIRE(rtg::complete_graph(n).is_regular() == n - 1);
    }
    REQUIRE(rtg::cycle_graph(5).is_regular() == 2);
    REQUIRE(rtg::complete_bipartite_graph(4, 4).is_regular() == 4);
    REQUIRE(!rtg::complete_bipartite_graph(1, 3).is_regular().has_value());
    REQUIRE(rtg::petersen_graph().is_regular() == 3);
}

TEST_CASE("connectivity is decided by graph search") {
    REQUIRE(rtg::cycle_graph(5).is_connected());
    REQUIRE(rtg::complete_graph(2).is_connected());
    REQUIRE(!Graph::from_edge_list(2, {}).is_connected());
    // 2K_2
    REQUIRE(!Graph::from_edge_list(4, {{1, 2}, {3, 4}}).is_connected());
}

TEST_CASE("edge-list serialization round trip") {
    const Graph g = rtg::petersen_graph();
    REQUIRE(Graph::parse_string(g.to_edge_list_string()) == g);

    const std::string text = "# a comment\n3 2\n1 2\n# another\n2 3\n";
    const Graph path = Graph::parse_string(text);
    REQUIRE(path.vertex_count() == 3);
    REQUIRE(path.edge_count() == 2);

    REQUIRE(rtg::complete_graph(3).to_edge_list_string() == "3 3\n1 2\n1 3\n2 3\n");
}

TEST_CASE("parse rejects malformed input") {
    REQUIRE_THROWS_AS(Graph::parse_string(""), rtg::ParseError);
    REQUIRE_THROWS_AS(Graph::parse_string("x y\n"), rtg::ParseError);
    REQUIRE_THROWS_AS(Graph::parse_string("3 2\n1 2\n"), rtg::ParseError);      // missing edge
    REQUIRE_THROWS_AS(Graph::parse_string("2 1\n1 two\n"), rtg::ParseError);    // bad token
    REQUIRE_THROWS_AS(Graph::parse_string("2 1\n1 5\n"), rtg::OutOfRangeError); // bad endpoint
}

TEST_CASE("structural recognizers") {
    REQUIRE(rtg::is_complete(rtg::complete_graph(4)));
    REQUIRE(!rtg::is_complete(rtg::cycle_graph(4)));

    auto norm = [](std::optional<std::pair<int, int>> p) {
        if (p && p->first > p->second) std::swap(p->first, p->second);
        return p;
    };
    REQUIRE(norm(rtg::complete_bipartite_parts(rtg::complete_bipartite_graph(2, 3))) ==
            std::make_pair(2, 3));
    REQUIRE(norm(rtg::complete_bipartite_parts(rtg::complete_bipartite_graph(1, 3))) ==
            std::make_pair(1, 3));
    // C_4 is K_{2,2} in disguise: recognition is isomorphism-robust
    REQUIRE(norm(rtg::complete_bipartite_parts(rtg::cycle_graph(4))) == std::make_pair(2, 2));
    REQUIRE(!rtg::complete_bipartite_parts(rtg::cycle_graph(5)).has_value()); // odd cycle
    REQUIRE(!rtg::complete_bipartite_parts(rtg::cycle_graph(6)).has_value()); // bipartite, not complete
    REQUIRE(!rtg::complete_bipartite_parts(rtg::petersen_graph()).has_value());
}
