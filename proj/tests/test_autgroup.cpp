#include <doctest.h>

#include <random>

#include "nutgraph/autgroup.hpp"
#include "nutgraph/codec.hpp"
#include "nutgraph/constructions.hpp"
#include "nutgraph/named_graphs.hpp"
#include "oracles.hpp"

using namespace nut;

TEST_SUITE("autgroup") {
  TEST_CASE("automorphism group orders") {
    CHECK(automorphism_group(named::complete(4)).order() == 24);
    CHECK(automorphism_group(named::frucht()).order() == 1);
    CHECK(automorphism_group(named::petersen()).order() == 120);
    CHECK(automorphism_group(named::g288_regular()).order() == 288);
    CHECK(automorphism_group(named::g288_nut()).order() == 288);
    CHECK(automorphism_group(triangle_multiplier(named::cycle(4)).graph).order() == 128);
    CHECK(automorphism_group(Graph::empty(0)).order() == 1);
    CHECK(automorphism_group(Graph::empty(6)).order() == 720);
  }

  TEST_CASE("generators are automorphisms") {
    for (const Graph& g : {named::petersen(), named::g288_nut(), named::complete_bipartite(3, 4),
                           triangle_multiplier(named::complete(5)).graph}) {
      auto s = search_automorphisms(g);
      for (const auto& p : s.generators) CHECK(is_automorphism(g, p));
      CHECK(s.group(g.order()).order() == s.order);
    }
    CHECK_FALSE(is_automorphism(named::path(3), parse_cycles("(1,2)", 3)));
  }

  TEST_CASE("colours restrict the group") {
    Graph c6 = named::cycle(6);
    std::vector<int> col{1, 0, 0, 0, 0, 0};
    CHECK(search_automorphisms(c6, &col).order == 2);
  }

  TEST_CASE("refinement") {
    Graph p = named::petersen();
    OrderedPartition unit{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}};
    CHECK(refine_partition(p, unit) == unit);
    auto star = refine_partition(named::star(3), {{0, 1, 2, 3}});
    CHECK(star == OrderedPartition{{1, 2, 3}, {0}});

    auto m = triangle_multiplier(named::cycle(4));
    std::vector<Vertex> all(m.graph.order());
    std::iota(all.begin(), all.end(), 0);
    auto cells = refine_partition(m.graph, {all});
    REQUIRE(cells.size() == 2);
    for (const auto& cell : cells)
      for (Vertex v : cell) CHECK(m.tags[v].role == m.tags[cell[0]].role);
  }

  TEST_CASE("canonical codes") {
    std::mt19937_64 rng(2);
    Graph p = named::petersen();
    CHECK(canonical_form(oracle::random_relabel(p, rng)) == canonical_form(oracle::random_relabel(p, rng)));
    CHECK_FALSE(are_isomorphic(named::cycle(6), disjoint_union(named::cycle(3), named::cycle(3))));
    CHECK_FALSE(are_isomorphic(named::complete_bipartite(3, 3), named::cycle(6)));
    for (int rep = 0; rep < 30; ++rep) {
      Graph g = oracle::random_graph(12, 0.35, rng);
      CHECK(are_isomorphic(g, oracle::random_relabel(g, rng)));
      auto c = canonical_form(g);
      CHECK(g.relabeled(c.labeling) == from_graph6(c.code));
    }
  }

  TEST_CASE("order-7 nut graphs are pairwise non-isomorphic") {
    std::vector<Graph> nuts{from_graph6("F@U^w"), from_graph6("F@]~_"), from_graph6("F`Q@w")};
    for (size_t a = 0; a < nuts.size(); ++a)
      for (size_t b = a + 1; b < nuts.size(); ++b) CHECK_FALSE(are_isomorphic(nuts[a], nuts[b]));
  }

  TEST_CASE("orbits on transitive inputs") {
    for (const Graph& g : {named::petersen(), named::cycle(9), named::complete_bipartite(4, 4)})
      CHECK(automorphism_group(g).orbits().size() == 1);
    CHECK(automorphism_group(named::star(4)).orbits().size() == 2);
  }

  TEST_CASE("cancellation") {
    std::atomic<bool> stop{true};
    CancelToken t;
    t.flag = &stop;
    CHECK_THROWS_AS(search_automorphisms(named::petersen(), nullptr, &t), SearchCancelled);
  }

  TEST_CASE("brute-force agreement, n <= 6") {
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : oracle::class_representatives(n)) CHECK(search_automorphisms(g).order == oracle::aut_order(g));
  }
}
