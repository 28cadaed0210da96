#include <doctest.h>

#include <random>
#include <sstream>

#include "nutgraph/autgroup.hpp"
#include "nutgraph/codec.hpp"
#include "nutgraph/kernel.hpp"
#include "nutgraph/named_graphs.hpp"
#include "oracles.hpp"

using namespace nut;

TEST_SUITE("codec") {
  TEST_CASE("graph6 frozen codes") {
    CHECK(to_graph6(named::complete(5)) == "D~{");
    CHECK(to_graph6(Graph::empty(5)) == "D??");
    CHECK(to_graph6(named::petersen()) == "IheA@GUAo");
    CHECK(to_graph6(named::g288_nut()) == "I~~EGKF@w");
    CHECK(from_graph6("D~{") == named::complete(5));
  }

  TEST_CASE("graph6 round trip") {
    std::mt19937_64 rng(17);
    for (int n : {0, 1, 2, 5, 6, 7, 12, 30, 62, 63, 64, 100, 300}) {
      Graph g = oracle::random_graph(n, 0.3, rng);
      std::string s = to_graph6(g);
      CHECK(from_graph6(s) == g);
      CHECK(to_graph6(from_graph6(s)) == s);
    }
  }

  TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(from_graph6(""), FormatError);
    CHECK_THROWS_AS(from_graph6("D~"), FormatError);   // too short
    CHECK_THROWS_AS(from_graph6("D~|"), FormatError);  // nonzero padding bits
    CHECK_THROWS_AS(from_graph6("D~{{"), FormatError); // too long
    CHECK_THROWS_AS(from_graph6("D~ {"), FormatError);
  }

  TEST_CASE("sparse6 input") {
    // The example from the format description: 7 vertices, 8 edges.
    Graph g = from_sparse6(":Fa@x^");
    CHECK(g.order() == 7);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {5, 6}});
    CHECK(decode_graph_line(">>sparse6<<:Fa@x^\n") == g);
    CHECK(decode_graph_line(">>graph6<<D~{  ") == named::complete(5));
  }

  TEST_CASE("decoded g288 graph re-certifies") {
    Graph g = decode_graph_line(to_graph6(named::g288_nut()));
    CHECK(nut_certificate(g).is_nut);
    CHECK(search_automorphisms(g).order == 288);
  }

  TEST_CASE("stream and edge list") {
    std::istringstream in("D~{\n\nD??\n:Fa@x^\n");
    auto gs = read_graph_lines(in);
    REQUIRE(gs.size() == 3);
    CHECK(gs[1] == Graph::empty(5));

    Graph p = named::petersen();
    std::istringstream el(to_edge_list(p));
    CHECK(read_edge_list(el) == p);
    std::istringstream commented("# a triangle\n3\n0 1 # first\n1 2\n0 2\n");
    CHECK(read_edge_list(commented) == named::complete(3));
    std::istringstream bad("3\n0 5\n");
    CHECK_THROWS(read_edge_list(bad));
  }
}
