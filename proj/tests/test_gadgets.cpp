#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "nutgraph/codec.hpp"
#include "nutgraph/gadgets.hpp"
#include "nutgraph/kernel.hpp"

using namespace nut;

namespace {

std::vector<std::string> gadget_codes(const std::vector<GadgetRecord>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(to_graph6(r.gadget));
  return out;
}

}  // namespace

TEST_SUITE("gadgets") {
  TEST_CASE("spec names") {
    CHECK(GadgetSpec{GadgetKind::q0, 0}.name() == "q0");
    CHECK(GadgetSpec{GadgetKind::proto, 12}.name() == "proto(12)");
    CHECK(GadgetSpec::parse("proto(16)") == GadgetSpec{GadgetKind::proto, 16});
    CHECK_THROWS(GadgetSpec::parse("proto(x)"));
  }

  TEST_CASE("proto degree profiles") {
    CHECK(first_proto_order(8) == 12);
    CHECK(first_proto_order(12) == 15);
    CHECK(proto_degrees(8, 12) == std::vector<int>{4, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3});
    CHECK(proto_degrees(8, 8).empty());
    CHECK(proto_degrees(8, 9) == std::vector<int>{1, 1, 1, 1, 1, 1, 0, 0, 0});
  }

  TEST_CASE("derive Q from P") {
    Graph p = from_graph6("KQ?@iYOaIIdS");
    auto q = derive_Q_from_P(p, 8);
    CHECK(q.q.order() == 13);
    CHECK(q.apex == 12);
    CHECK(q.q.degree(q.apex) == 6);
    int sum = 0;
    for (Vertex v = 0; v < 13; ++v) {
      sum += q.q.degree(v);
      if (v != q.apex) CHECK(q.q.degree(v) == 8);
    }
    CHECK(sum == 8 * 13 - 2);
    // a 12-vertex cubic graph has the wrong complement profile
    CHECK_THROWS_AS(derive_Q_from_P(from_graph6("KhCWKCBAH?w@"), 8), GadgetError);
  }

  TEST_CASE("q0 search") {
    auto hits = search_q0(8);
    REQUIRE_FALSE(hits.empty());
    for (const auto& r : hits) {
      std::string why;
      CHECK_MESSAGE(verify_gadget(r, &why), why);
      auto g = automorphism_group(r.gadget);
      CHECK(g.order() == 2);
      CHECK(g.stabilizer(r.roots[0]).order() == 1);
      CHECK(g.stabilizer(r.roots[1]).order() == 1);
      CHECK(g.orbit_of(r.roots[0]) != g.orbit_of(r.roots[1]));
    }
    CHECK(gadget_codes(hits) == gadget_codes(read_gadget_library(gadget_data_dir() / "q0.txt")));
    CHECK(to_graph6(default_q0().gadget) == "G@YR|{");
    CHECK(default_q0().roots == std::vector<Vertex>{0, 2});
    CHECK(search_q0(7).empty());
  }

  TEST_CASE("proto search is deterministic") {
    auto a = search_proto(8, 3, 1);
    ProtoSearchOptions par;
    par.jobs = 3;
    auto b = search_proto(8, 3, 1, par);
    REQUIRE(a.size() == 3);
    CHECK(gadget_codes(a) == gadget_codes(b));
    CHECK(gadget_codes(a) == gadget_codes(pinned_protos(8)));
    std::set<std::string> distinct;
    for (const auto& r : a) {
      std::string why;
      CHECK_MESSAGE(verify_gadget(r, &why), why);
      CHECK(r.gadget.order() == 13);
      CHECK(r.gadget.degree(r.roots[0]) == 6);
      CHECK(automorphism_group(r.gadget).order() == 1);
      distinct.insert(canonical_form(r.gadget).code);
    }
    CHECK(distinct.size() == 3);
  }

  TEST_CASE("proto search failure reports statistics") {
    ProtoSearchOptions tiny;
    tiny.attempts_per_order = 1;
    tiny.orders = 1;
    tiny.checks_per_attempt = 1;
    CHECK_THROWS_AS(search_proto(8, 50, 1, tiny), GadgetSearchFailed);
  }

  TEST_CASE("pinned libraries verify") {
    for (int d : {8, 12, 16, 20, 24}) {
      auto rs = pinned_protos(d);
      CHECK(rs.size() >= static_cast<size_t>(d == 8 || d == 12 ? 3 : 4));
      for (const auto& r : rs) {
        std::string why;
        CHECK_MESSAGE(verify_gadget(r, &why), why);
        CHECK(r.spec == GadgetSpec{GadgetKind::proto, d});
      }
    }
  }

  TEST_CASE("verify rejects broken records") {
    auto r = pinned_protos(8)[0];
    auto bad = r;
    bad.roots = {0};
    CHECK_FALSE(verify_gadget(bad));
    bad = r;
    bad.spec.d = 12;
    CHECK_FALSE(verify_gadget(bad));
    auto q = default_q0();
    q.roots = {q.roots[1], q.roots[1]};
    CHECK_FALSE(verify_gadget(q));
  }

  TEST_CASE("library format round trip") {
    auto rs = pinned_protos(8);
    rs.push_back(default_q0());
    std::string text;
    for (const auto& r : rs) text += format_gadget(r);
    auto back = parse_gadgets(text);
    REQUIRE(back.size() == rs.size());
    for (size_t k = 0; k < rs.size(); ++k) {
      CHECK(back[k].gadget == rs[k].gadget);
      CHECK(back[k].roots == rs[k].roots);
      CHECK(back[k].spec == rs[k].spec);
      CHECK(back[k].provenance == rs[k].provenance);
      CHECK(back[k].proto.has_value() == rs[k].proto.has_value());
    }
    CHECK_THROWS(parse_gadgets("kind=q0 roots=0,2 order=8 provenance=x\n"));

    auto file = std::filesystem::temp_directory_path() / "nutgraph-test-lib.txt";
    std::filesystem::remove(file);
    append_gadget_library(file, {rs[0]});
    append_gadget_library(file, {rs[1]});
    CHECK(read_gadget_library(file).size() == 2);
    std::filesystem::remove(file);
  }
}
