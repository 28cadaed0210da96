#include <doctest.h>

#include <random>

#include "nutgraph/autgroup.hpp"
#include "nutgraph/enumeration.hpp"
#include "nutgraph/kernel.hpp"
#include "oracles.hpp"

using namespace nut;

// Smaller-scale versions of the acceptance oracle checks.
TEST_SUITE("oracles") {
  TEST_CASE("oracle self-checks") {
    CHECK(oracle::aut_order(Graph::empty(4)) == 24);
    CHECK(oracle::nullity(Graph::empty(3)) == 3);
    CHECK(oracle::labelled_filter(4).all == 11);
    CHECK(oracle::labelled_filter(4).connected == 6);
  }

  TEST_CASE("nullity vs rational elimination, all graphs n <= 6") {
    for (int n = 1; n <= 6; ++n)
      for_each_graph(n, false, [](const Graph& g) { CHECK(nullspace(g).nullity == oracle::nullity(g)); });
  }

  TEST_CASE("automorphism orders on random 7-vertex graphs") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 40; ++rep) {
      Graph g = oracle::random_graph(7, 0.2 + 0.015 * rep, rng);
      CHECK(search_automorphisms(g).order == oracle::aut_order(g));
    }
  }

  TEST_CASE("enumeration vs labelled filter, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
      auto c = oracle::labelled_filter(n);
      CHECK(enumerate_graphs(n, false).size() == c.all);
      CHECK(enumerate_graphs(n, true).size() == c.connected);
    }
  }

  TEST_CASE("canonical codes vs brute-force isomorphism, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
      auto reps = oracle::class_representatives(n);
      std::mt19937_64 rng(n);
      for (size_t a = 0; a < reps.size(); ++a)
        for (size_t b = a; b < reps.size(); ++b) {
          Graph x = reps[a], y = oracle::random_relabel(reps[b], rng);
          CHECK((canonical_form(x) == canonical_form(y)) == oracle::brute_isomorphic(x, y));
        }
    }
  }
}
