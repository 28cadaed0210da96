#include <doctest.h>

#include <set>

#include "nutgraph/codec.hpp"
#include "nutgraph/enumeration.hpp"
#include "nutgraph/kernel.hpp"
#include "nutgraph/named_graphs.hpp"

using namespace nut;

namespace {

std::vector<std::string> codes(const std::vector<Graph>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(canonical_form(g).code);
  return out;
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("class counts") {
    // OEIS A000088 / A001349
    const std::uint64_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
    const std::uint64_t conn[] = {1, 1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
      CHECK(enumerate_graphs(n, false).size() == all[n]);
      CHECK(enumerate_graphs(n, true).size() == conn[n]);
    }
  }

  TEST_CASE("streaming and collecting agree") {
    std::set<std::string> seen;
    std::uint64_t visits = 0;
    for_each_graph(7, true, [&](const Graph& g) {
      ++visits;
      seen.insert(canonical_form(g).code);
    });
    CHECK(visits == 853);
    CHECK(seen.size() == 853);
    CHECK(count_graphs(7, false, [](const Graph& g) { return g.size() == 10; }) == 148);
  }

  TEST_CASE("output does not depend on jobs") {
    EnumerationOptions one, four;
    four.jobs = 4;
    CHECK(codes(enumerate_graphs(7, false, one)) == codes(enumerate_graphs(7, false, four)));
    CHECK(codes(enumerate_regular(10, 4, one)) == codes(enumerate_regular(10, 4, four)));
  }

  TEST_CASE("regular graphs") {
    auto k5 = enumerate_regular(5, 4);
    REQUIRE(k5.size() == 1);
    CHECK(are_isomorphic(k5[0], named::complete(5)));
    CHECK(enumerate_regular(9, 4).size() == 16);
    CHECK(enumerate_regular(10, 4).size() == 59);
    CHECK_THROWS_AS(enumerate_regular(7, 3), EnumerationError);
    CHECK(enumerate_regular(6, 4).size() == 1);
    const int cubic[] = {1, 2, 5, 19};
    for (int k = 0; k < 4; ++k) CHECK(enumerate_regular(4 + 2 * k, 3).size() == cubic[k]);
    CHECK(enumerate_regular(8, 2).size() == 1);
  }

  TEST_CASE("regular enumeration matches a filter") {
    std::set<std::string> filtered;
    for (const auto& g : enumerate_graphs(9, true)) {
      auto p = degree_profile(g);
      if (p.regular && p.max_degree == 4) filtered.insert(canonical_form(g).code);
    }
    auto direct = codes(enumerate_regular(9, 4));
    CHECK(std::set<std::string>(direct.begin(), direct.end()) == filtered);
  }

  TEST_CASE("ceilings") {
    CHECK_THROWS_AS(enumerate_graphs(11, false), EnumerationError);
    EnumerationOptions o;
    o.ceiling = 11;
    CHECK_NOTHROW(count_graphs(3, false, [](const Graph&) { return true; }, o));
    CHECK_THROWS_AS(enumerate_regular(15, 4), EnumerationError);
  }

  TEST_CASE("nut census") {
    auto c = census_nuts(8, {}, true);
    REQUIRE(c.size() == 8);
    for (int n = 1; n <= 6; ++n) CHECK(c[n - 1].count == 0);
    CHECK(c[6].count == 3);
    CHECK(c[7].count == 13);
    CHECK(c[6].witnesses == std::vector<std::string>{"F@U^w", "F@]~_", "F`Q@w"});
    for (const auto& r : c)
      for (const auto& w : r.witnesses) CHECK(nut_certificate(from_graph6(w)).is_nut);
  }

  TEST_CASE("regular nut graphs have degree at least 3") {
    for (int n = 7; n <= 8; ++n)
      for (const auto& g : enumerate_graphs(n, true)) {
        auto p = degree_profile(g);
        if (p.regular && nut_certificate(g).is_nut) CHECK(p.min_degree >= 3);
      }
  }

  TEST_CASE("minimal orders for small groups") {
    PermGroup z2g(2, {parse_cycles("(1,2)", 2)});
    PermGroup klein(4, {parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4)});
    auto r = minimal_order_for_group(klein, MinimalityPredicate::nut, 8);
    REQUIRE(r.min_order);
    CHECK(*r.min_order == 7);
    for (const auto& g : r.witnesses) CHECK(nut_certificate(g).is_nut);

    PermGroup s3(3, {parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)});
    CHECK(minimal_order_for_group(s3, MinimalityPredicate::nut, 8).min_order == 7);
    auto z2 = minimal_order_for_group(z2g, MinimalityPredicate::nut, 8);
    CHECK(z2.min_order == 8);

    auto open = minimal_order_for_group(PermGroup::trivial(1), MinimalityPredicate::nut, 8);
    CHECK_FALSE(open.min_order);
    CHECK(open.searched_up_to == 8);

    auto reg = minimal_order_for_group(z2g, MinimalityPredicate::regular, 10, 4);
    CHECK(reg.min_order == 9);
    CHECK(reg.candidate_count == 3);
  }
}
