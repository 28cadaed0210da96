// nutg: command-line front end for the nutgraph library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nutgraph/autgroup.hpp"
#include "nutgraph/codec.hpp"
#include "nutgraph/constructions.hpp"
#include "nutgraph/enumeration.hpp"
#include "nutgraph/gadgets.hpp"
#include "nutgraph/kernel.hpp"

using namespace nut;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Edge lists start with a line holding a single integer; anything else is
// treated as graph6/sparse6, one graph per line.
std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
  const std::string text = slurp(path);
  std::string fmt = format;
  if (fmt == "auto") {
    std::istringstream probe(text);
    std::string line;
    fmt = "g6";
    while (std::getline(probe, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (line.find_first_not_of("0123456789 \t\r") == std::string::npos) fmt = "edges";
      break;
    }
  }
  std::istringstream in(text);
  if (fmt == "edges") return {read_edge_list(in)};
  return read_graph_lines(in);
}

Graph read_one(const std::string& path, const std::string& format, const char* flag) {
  auto gs = read_graphs(path, format);
  if (gs.size() != 1)
    throw std::runtime_error(std::string(flag) + ": expected exactly one graph in " + path + ", found " +
                             std::to_string(gs.size()));
  return gs.front();
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string kernel_text(const NutCertificate& c) {
  std::string out;
  if (!c.kernel_vector) return out;
  for (const BigInt& x : *c.kernel_vector) out += (out.empty() ? "" : " ") + x.get_str();
  return out;
}

std::string gens_text(const std::vector<Permutation>& gens) {
  std::string out;
  for (const Permutation& p : gens) out += (out.empty() ? "" : ";") + p.cycles();
  return out.empty() ? "()" : out;
}

PermGroup group_from(const std::string& gens, int points) {
  if (points < 1) throw std::runtime_error("--points must be positive");
  if (gens.empty() || gens == "()") return PermGroup::trivial(points);
  return PermGroup(points, parse_generator_list(gens, points));
}

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("--out: cannot write " + out_path);
    out << text;
  }
}

MinimalityPredicate parse_predicate(const std::string& s) {
  if (s == "nut") return MinimalityPredicate::nut;
  if (s == "regular") return MinimalityPredicate::regular;
  if (s == "regular-nut") return MinimalityPredicate::regular_nut;
  throw std::runtime_error("--predicate: expected nut, regular or regular-nut");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, certify and search for nut graphs with prescribed automorphism groups"};
  app.require_subcommand(1);
  int status = 0;

  std::string in, format = "auto", out, gens, gadget_file, kind = "proto", predicate = "nut", filter = "nut";
  int sigma = 0, d = 0, jobs = 1, max_n = 9, points = 0, count = 0, max_order = 8, degree = 4, n = 0, orders = 4;
  std::uint64_t seed = 0, attempts = 4000;
  bool witnesses = false, connected = false, stretch = false;

  auto* verify = app.add_subcommand("verify", "Certify every graph in a file (nut or not)");
  verify->add_option("--in", in, "graph6/sparse6 lines or an edge list")->required()->check(CLI::ExistingFile);
  verify->add_option("--format", format, "auto, g6 or edges")->check(CLI::IsMember({"auto", "g6", "edges"}));
  verify->callback([&] {
    const auto graphs = read_graphs(in, format);
    for (size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i];
      const NutCertificate c = nut_certificate(g);
      std::cout << "graph=" << i << "\norder=" << g.order() << "\nsize=" << g.size()
                << "\nconnected=" << yes(is_connected(g)) << "\nnullity=" << c.nullity << "\nfull=" << yes(c.full())
                << "\nis_nut=" << yes(c.is_nut) << "\nfailure=" << c.failure_text() << "\n";
      if (c.kernel_vector) std::cout << "kernel=" << kernel_text(c) << "\n";
      if (!c.is_nut) status = 1;
    }
  });

  auto* aut = app.add_subcommand("aut", "Automorphism group and canonical form");
  aut->add_option("--in", in)->required()->check(CLI::ExistingFile);
  aut->add_option("--format", format)->check(CLI::IsMember({"auto", "g6", "edges"}));
  aut->callback([&] {
    const auto graphs = read_graphs(in, format);
    for (size_t i = 0; i < graphs.size(); ++i) {
      const AutomorphismSearch s = search_automorphisms(graphs[i]);
      const PermGroup grp = s.group(graphs[i].order());
      std::cout << "graph=" << i << "\naut_order=" << s.order.get_str() << "\ngenerators=" << gens_text(s.generators)
                << "\norbits=";
      bool first = true;
      for (const auto& o : grp.orbits()) {
        std::cout << (first ? "" : " ") << "{";
        for (size_t k = 0; k < o.size(); ++k) std::cout << (k ? "," : "") << o[k];
        std::cout << "}";
        first = false;
      }
      std::cout << "\ncanonical=" << to_graph6(graphs[i].relabeled(s.labeling)) << "\n";
    }
  });

  auto* mult = app.add_subcommand("multiplier", "Triangle multiplier M3(H) with the |Aut| law check");
  mult->add_option("--H", in, "connected 2t-regular graph")->required()->check(CLI::ExistingFile);
  mult->add_option("--format", format)->check(CLI::IsMember({"auto", "g6", "edges"}));
  mult->callback([&] {
    const Graph h = read_one(in, format, "--H");
    const MultiplierResult m = triangle_multiplier(h);
    const NutCertificate c = nut_certificate(m.graph);
    const BigInt aut_m = search_automorphisms(m.graph).order;
    BigInt per = 1;
    for (int k = 1; k <= m.t; ++k) per *= 2 * k;  // 2^t t!
    BigInt expected = search_automorphisms(h).order;
    for (int i = 0; i < m.kappa; ++i) expected *= per;
    std::cout << "M3=" << to_graph6(m.graph) << "\nt=" << m.t << "\nkappa=" << m.kappa << "\norder=" << m.graph.order()
              << "\nis_nut=" << yes(c.is_nut) << "\nnullity=" << c.nullity << "\naut_order=" << aut_m.get_str()
              << "\nexpected_aut_order=" << expected.get_str() << "\nlaw_holds=" << yes(aut_m == expected) << "\n";
    if (!c.is_nut || aut_m != expected) status = 1;
  });

  auto* thm1 = app.add_subcommand("construct-thm1", "Theorem-1 pipeline on a 4-regular H");
  thm1->add_option("--H", in)->required()->check(CLI::ExistingFile);
  thm1->add_option("--format", format)->check(CLI::IsMember({"auto", "g6", "edges"}));
  thm1->add_option("--sigma", sigma, "subdivision parameter")->check(CLI::NonNegativeNumber);
  thm1->add_option("--q0", gadget_file, "gadget library file (default: pinned q0)")->check(CLI::ExistingFile);
  thm1->add_option("--gens", gens, "input group on V(H), 1-based cycles; default Aut(H)");
  thm1->add_option("--out", out, "also write the report here");
  thm1->callback([&] {
    const Graph h = read_one(in, format, "--H");
    const GadgetRecord q0 = gadget_file.empty() ? default_q0() : read_gadget_library(gadget_file).at(0);
    std::optional<PermGroup> grp;
    if (!gens.empty()) grp = group_from(gens, h.order());
    const PipelineReport r = build_thm1(h, q0, sigma, grp);
    const ExtraAutomorphismCheck x = check_extra_automorphisms(r);
    emit(serialize_report(r) + "extra_in_multiplier=" + yes(x.all_in_multiplier) +
             "\nextra_eliminated=" + yes(x.none_extend) + "\n",
         out);
    if (!r.ok() || !x.all_in_multiplier || !x.none_extend) status = 1;
  });

  auto* thm2 = app.add_subcommand("construct-thm2", "Theorem-2 pipeline on a (d/2)-regular H");
  thm2->add_option("--H", in)->required()->check(CLI::ExistingFile);
  thm2->add_option("--format", format)->check(CLI::IsMember({"auto", "g6", "edges"}));
  thm2->add_option("--d", d, "target degree: 8, 12, 16, 20 or 24")->required();
  thm2->add_option("--gadgets", gadget_file, "gadget library (default: pinned proto-d<d>)")->check(CLI::ExistingFile);
  thm2->add_option("--gens", gens, "input group on V(H), 1-based cycles; default Aut(H)");
  thm2->add_option("--out", out);
  thm2->callback([&] {
    const Graph h = read_one(in, format, "--H");
    const auto gadgets = gadget_file.empty() ? pinned_protos(d) : read_gadget_library(gadget_file);
    std::optional<PermGroup> grp;
    if (!gens.empty()) grp = group_from(gens, h.order());
    const PipelineReport r = build_thm2(h, d, gadgets, grp);
    emit(serialize_report(r), out);
    if (!r.ok()) status = 1;
  });

  auto* vrep = app.add_subcommand("verify-report", "Rebuild and re-certify a stored pipeline report");
  vrep->add_option("--in", in)->required()->check(CLI::ExistingFile);
  vrep->callback([&] {
    std::string why;
    const bool good = verify_report(parse_report(slurp(in)), &why);
    std::cout << "verified=" << yes(good) << "\n";
    if (!good) {
      std::cout << "reason=" << why << "\n";
      status = 1;
    }
  });

  auto* search = app.add_subcommand("search-gadgets", "Find q0 or proto gadgets");
  search->add_option("--kind", kind, "q0 or proto")->check(CLI::IsMember({"q0", "proto"}));
  search->add_option("--max-order", max_order, "q0: largest order scanned")->check(CLI::Range(7, 10));
  search->add_option("--d", d, "proto: target degree");
  search->add_option("--count", count, "proto: number of gadgets (default: schedule width)");
  auto* seed_opt = search->add_option("--seed", seed, "proto: RNG seed (required)");
  search->add_option("--attempts", attempts, "proto: attempts per order");
  search->add_option("--orders", orders, "proto: admissible orders to scan");
  search->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  search->add_option("--out", out, "append the records to this library file");
  search->callback([&] {
    std::vector<GadgetRecord> found;
    if (kind == "q0") {
      EnumerationOptions o;
      o.jobs = jobs;
      found = search_q0(max_order, o);
    } else {
      if (seed_opt->count() == 0) throw CLI::RequiredError("--seed");
      if (d == 0) throw CLI::RequiredError("--d");
      ProtoSearchOptions o;
      o.attempts_per_order = attempts;
      o.orders = orders;
      o.jobs = jobs;
      ProtoSearchStats st;
      found = search_proto(d, count ? count : schedule_width(d), seed, o, &st);
      std::cerr << st.summary() << "\n";
    }
    for (const auto& r : found) std::cout << format_gadget(r);
    if (!out.empty()) append_gadget_library(out, found);
  });

  auto* census = app.add_subcommand("census", "Per-order class counts");
  census->add_option("--max-n", max_n)->check(CLI::Range(1, 14));
  census->add_option("--filter", filter, "all, connected, regular or nut")
      ->check(CLI::IsMember({"all", "connected", "regular", "nut"}));
  census->add_option("--degree", degree, "regular filter degree");
  census->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  census->add_flag("--witnesses", witnesses, "print graph6 of each nut graph");
  census->callback([&] {
    EnumerationOptions o;
    o.jobs = jobs;
    if (filter == "nut") {
      for (const CensusResult& r : census_nuts(max_n, o, witnesses)) {
        std::cout << "n=" << r.n << " filter=nut count=" << r.count << "\n";
        for (const auto& w : r.witnesses) std::cout << w << "\n";
      }
      return;
    }
    for (int k = 1; k <= max_n; ++k) {
      std::uint64_t c = 0;
      if (filter == "regular") {
        if (degree >= k || (k * degree) % 2) {
          c = 0;
        } else {
          c = enumerate_regular(k, degree, o).size();
        }
        std::cout << "n=" << k << " filter=regular(" << degree << ") count=" << c << "\n";
      } else {
        c = count_graphs(k, filter == "connected", [](const Graph&) { return true; }, o);
        std::cout << "n=" << k << " filter=" << filter << " count=" << c << "\n";
      }
    }
  });

  auto* enumerate = app.add_subcommand("enumerate", "Emit one graph6 line per isomorphism class");
  enumerate->add_option("--n", n)->required()->check(CLI::Range(1, 14));
  enumerate->add_flag("--connected", connected);
  enumerate->add_option("--regular", degree, "only connected d-regular graphs");
  enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  enumerate->callback([&] {
    EnumerationOptions o;
    o.jobs = jobs;
    const bool regular = enumerate->get_option("--regular")->count() > 0;
    const auto gs = regular ? enumerate_regular(n, degree, o) : enumerate_graphs(n, connected, o);
    for (const Graph& g : gs) std::cout << canonical_form(g).code << "\n";
  });

  auto* minimal = app.add_subcommand("minimal", "Smallest order realising a group");
  minimal->add_option("--gens", gens, "target group, 1-based cycles; \"()\" for the trivial group")->required();
  minimal->add_option("--points", points, "degree of the permutation representation")->required();
  minimal->add_option("--predicate", predicate, "nut, regular or regular-nut");
  minimal->add_option("--degree", degree, "degree for the regular predicates");
  minimal->add_option("--max-n", max_n)->check(CLI::Range(1, 14));
  minimal->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  minimal->add_flag("--stretch", stretch, "allow order-11 exhaustion for the nut predicate (hours)");
  minimal->callback([&] {
    const MinimalityPredicate pred = parse_predicate(predicate);
    if (pred == MinimalityPredicate::nut && max_n > kDefaultGraphCeiling && !stretch)
      throw std::runtime_error("--max-n above " + std::to_string(kDefaultGraphCeiling) + " needs --stretch");
    EnumerationOptions o;
    o.jobs = jobs;
    o.ceiling = stretch ? 11 : kDefaultGraphCeiling;
    const PermGroup target = group_from(gens, points);
    const MinimalityResult r = minimal_order_for_group(target, pred, max_n, degree, o);
    std::cout << "group_order=" << target.order().get_str() << "\npredicate=" << predicate << "\n";
    if (pred != MinimalityPredicate::nut) std::cout << "degree=" << degree << "\n";
    std::cout << "searched_up_to=" << r.searched_up_to << "\n";
    if (!r.min_order) {
      std::cout << "verdict=open\n";
      return;
    }
    std::cout << "verdict=found\nmin_order=" << *r.min_order << "\ncandidates=" << r.candidate_count << "\n";
    for (const Graph& g : r.witnesses) std::cout << "witness=" << canonical_form(g).code << "\n";
  });

  auto* gorder = app.add_subcommand("group-order", "Order of a permutation group (Schreier-Sims)");
  gorder->add_option("--gens", gens, "1-based cycles separated by ';'")->required();
  gorder->add_option("--degree", points, "number of points")->required();
  gorder->callback([&] {
    const PermGroup g = group_from(gens, points);
    std::cout << g.order().get_str() << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
